#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "liechar/field.hpp"
#include "liechar/polynomial.hpp"

namespace liechar {

constexpr int kMaxDim = 4;

/// Square matrix of size n <= 4 over a Field, row-major in the leading
/// n x n block of a fixed 4 x 4 array (unused entries stay zero).
struct Mat {
  std::array<Elem, 16> a{};
  Elem& at(int i, int j) { return a[static_cast<std::size_t>(i * kMaxDim + j)]; }
  Elem at(int i, int j) const { return a[static_cast<std::size_t>(i * kMaxDim + j)]; }
  bool operator==(const Mat&) const = default;
};

/// Matrix arithmetic bound to one field and one size.
class MatOps {
 public:
  MatOps(const Field& field, int n);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  /// q^(n^2), the number of codes.
  std::uint64_t code_count() const { return code_count_; }

  Mat identity() const;
  Mat scalar(Elem c) const;
  Mat diag(const std::vector<Elem>& d) const;
  Mat mul(const Mat& x, const Mat& y) const;
  Mat add(const Mat& x, const Mat& y) const;
  Mat sub(const Mat& x, const Mat& y) const;
  Mat scale(const Mat& x, Elem c) const;
  Elem det(const Mat& x) const;
  int rank(const Mat& x) const;
  /// Throws PreconditionError if x is singular.
  Mat inverse(const Mat& x) const;
  Mat power(const Mat& x, std::uint64_t e) const;
  /// Multiplicative order of an invertible matrix.
  std::uint64_t order(const Mat& x) const;

  /// det(tI - x), monic of degree n, from sums of principal minors.
  Poly char_poly(const Mat& x) const;
  /// p(x) by Horner's rule.
  Mat eval_poly(const Poly& p, const Mat& x) const;

  /// Base-q code with entry (0,0) most significant, so code order is the
  /// row-major lexicographic order of entries.
  std::uint64_t encode(const Mat& x) const;
  Mat decode(std::uint64_t code) const;

  /// Parses "a,b;c,d" (rows separated by ';'), entries as field codes.
  Mat parse(const std::string& text) const;
  std::string to_string(const Mat& x) const;
  /// Row-major list of entry codes.
  std::vector<int> entries(const Mat& x) const;

 private:
  Field field_;
  int n_;
  std::uint64_t code_count_;
};

/// Basis of the solution space of a homogeneous linear system, rows of A
/// holding coefficient vectors; returns a basis of {v : A v = 0}.
std::vector<std::vector<Elem>> nullspace(const Field& f, std::vector<std::vector<Elem>> rows, int cols);

}  // namespace liechar
