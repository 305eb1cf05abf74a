#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace liechar {

using Elem = std::uint8_t;

/// F_q with q = p^k <= 32. Elements are integer codes sum c_i p^i for the
/// polynomial basis 1, x, ..., x^{k-1}; code 0 is zero and code 1 is one.
/// The modulus is the monic irreducible of degree k with the least code
/// sum c_i p^i over its lower coefficients.
class Field {
 public:
  /// Throws PreconditionError for composite p and GuardExceeded for q > 32.
  static Field make(int p, int k = 1);
  /// Splits a prime power q into (p, k).
  static Field for_order(int q);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  /// Modulus coefficients, constant term first, leading 1 last.
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[a]; }
  /// Throws PreconditionError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// The image of the integer n under Z -> F_p -> F_q.
  Elem from_int(long n) const;

  /// Least code generating the multiplicative group.
  Elem primitive() const { return primitive_; }
  /// Discrete log to base primitive(); throws on zero.
  int log(Elem a) const;
  Elem exp(int e) const;
  /// Multiplicative order of a nonzero element.
  int order(Elem a) const;

  std::string to_string(Elem a) const;

 private:
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b; }

  int p_ = 2, k_ = 1, q_ = 2;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  std::vector<int> log_;
  std::vector<Elem> exp_;
  Elem primitive_ = 1;
};

bool is_prime(int n);

/// Irreducibility over F_p of a monic polynomial (constant term first) by
/// trial division against every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

}  // namespace liechar
