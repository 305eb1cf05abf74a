#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "liechar/matrix.hpp"

namespace liechar {

enum class GroupKind { GL, SL };

std::string to_string(GroupKind k);
GroupKind parse_group_kind(const std::string& s);

constexpr std::uint64_t kOrderGuard = 30'000'000;

/// GL_n(q) or SL_n(q) with 2 <= n <= 4 and q <= 32.
struct GroupSpec {
  GroupKind kind = GroupKind::GL;
  int n = 2;
  int q = 2;

  /// Validates ranges and the order guard |G| <= 3e7.
  static GroupSpec make(GroupKind kind, int n, int q);
  /// prod_{i<n} (q^n - q^i), divided by q - 1 for SL.
  std::uint64_t order() const;
  std::string label() const;
};

/// |GL_n(q)| with no guard.
std::uint64_t gl_order(int n, std::uint64_t q);

struct ClassInfo {
  Mat rep;                 ///< least element of the class in code order
  std::uint64_t rep_code = 0;
  std::uint64_t size = 0;
  std::uint64_t centralizer_order = 0;
  std::uint64_t element_order = 0;
  int supp = 0;
  bool p_regular = false;  ///< element order coprime to p
};

/// Conjugacy classes of a built group. The identity class comes first, the
/// rest are sorted by representative code. Classes are identified by the
/// characteristic polynomial plus the ranks of f(g)^j for each irreducible
/// factor f (a complete invariant in GL); in SL each such GL class splits
/// into gcd(d, q - 1) classes, d the gcd of all Jordan block sizes, told
/// apart by the determinant of a conjugator to a fixed base element.
class ClassTable {
 public:
  static std::shared_ptr<const ClassTable> build(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  const Field& field() const { return ops_.field(); }
  const MatOps& ops() const { return ops_; }
  std::uint64_t order() const { return order_; }
  std::size_t size() const { return classes_.size(); }
  const ClassInfo& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  /// Index of the class of g^-1.
  int inverse_class(int i) const { return inverse_[static_cast<std::size_t>(i)]; }

  /// Throws PreconditionError if g is not in the group.
  int class_of(const Mat& g) const;
  bool contains(const Mat& g) const;

  /// True when every element is stored (|G| <= 4e6).
  bool has_elements() const { return !elements_.empty(); }
  const std::vector<Mat>& elements() const;
  /// Class index of elements()[i].
  const std::vector<std::int16_t>& element_classes() const;
  /// All members of one class.
  std::vector<Mat> class_members(int c) const;

 private:
  ClassTable(const GroupSpec& spec, const Field& field);
  std::uint64_t gl_key(const Mat& g) const;
  int sl_label(const Mat& g, const Mat& base, int split) const;
  int lookup(const Mat& g) const;

  GroupSpec spec_;
  MatOps ops_;
  std::uint64_t order_ = 0;
  std::vector<ClassInfo> classes_;
  std::vector<int> inverse_;
  std::vector<Mat> elements_;
  std::vector<std::int16_t> element_class_;
  std::vector<std::int16_t> dense_;  ///< class per code, -1 outside G; empty when too large

  struct KeyInfo {
    Mat base;
    int split = 1;
    std::vector<int> class_by_label;
  };
  std::unordered_map<std::uint64_t, KeyInfo> by_key_;

  std::vector<std::uint64_t> element_codes_;

  mutable std::mutex factor_mu_;
  mutable std::unordered_map<std::uint64_t, std::vector<PolyFactor>> factor_cache_;
  std::vector<PolyFactor> factors(const Poly& cp) const;
};

/// N[i][j][k] = #{x in C_i : x^-1 z_k in C_j} with z_k the k-th
/// representative. Stored densely.
class StructureConstants {
 public:
  /// Guard: |G| * #classes <= 5e8 and stored elements.
  static StructureConstants compute(const ClassTable& t);

  std::size_t classes() const { return c_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return n_[(i * c_ + j) * c_ + k]; }

 private:
  std::size_t c_ = 0;
  std::vector<std::uint32_t> n_;
};

/// M[j][k] = N_{j c k}: the one column needed to convolve by class c.
std::vector<std::vector<std::uint64_t>> structure_column(const ClassTable& t, int c);

/// n minus the largest eigenspace dimension over the algebraic closure:
/// n - max_f (n - rank f(g)) / deg f over irreducible factors f of the
/// characteristic polynomial.
int supp(const MatOps& ops, const Mat& g);

/// Ranks of f(g)^j for j = 1..e, per irreducible factor f of multiplicity e.
std::vector<std::pair<PolyFactor, std::vector<int>>> rank_profile(const MatOps& ops, const Mat& g,
                                                                  const std::vector<PolyFactor>& factors);

/// Block-scalar element diag(h_1 I, ..., h_r I) of SL_n(q) with centralizer
/// GL_{n_1} x ... x GL_{n_r}. zeta is the least element of order
/// N = n_r prod_{i<r}(n_i + 1), zeta_d = zeta^(N/d), h_i =
/// zeta_{(n_1+1)...(n_i+1)} for i < r and h_r = zeta, so the first r - 1
/// blocks contribute determinant zeta^-n_r. Needs ascending
/// sizes, r >= 2, n_r >= 2 and N | q - 1.
Mat levi_witness_sl(const MatOps& ops, const std::vector<int>& sizes);

/// Order of the centralizer in GL_n(q) by enumerating the centralizer
/// algebra {X : Xg = gX} and counting invertible members. Guard:
/// q^dim <= 3e7.
std::uint64_t centralizer_order_bruteforce(const MatOps& ops, const Mat& g);

/// Calls visit on every invertible X with Xg = gX (same guard).
void visit_centralizer(const MatOps& ops, const Mat& g, const std::function<void(const Mat&)>& visit);

/// diag(mu, ..., mu, lambda). Needs mu != lambda, both nonzero; the SL
/// variant also needs mu^(n-1) lambda = 1.
Mat central_homology(const MatOps& ops, Elem mu, Elem lambda, bool special);

}  // namespace liechar
