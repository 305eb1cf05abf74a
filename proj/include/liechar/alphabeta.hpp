#pragma once

#include <optional>
#include <vector>

#include "liechar/classgeom.hpp"
#include "liechar/common.hpp"

namespace liechar {

struct AlphaResult {
  Rational value{0};
  JordanType witness;  ///< all-trivial for a torus
  LeviShape levi;
  bool torus = false;
};

/// Max of dim u^L / dim u^G over nontrivial unipotent classes of the Levi,
/// swept in product order of enumerate_partitions (first maximum wins).
/// Guard: ambient natural dimension <= 14.
AlphaResult alpha_classical(const LeviShape& shape);

/// Every Levi shape of the ambient group, GL factors listed as a weakly
/// decreasing tuple. Proper Levis only unless include_group is set. In type
/// D a classical factor of dimension 2 is skipped: SO_2 is a torus and that
/// shape repeats the one with an extra GL_1.
std::vector<LeviShape> enumerate_levi_shapes(const GroupFamily& ambient, bool include_group = false);

struct BetaResult {
  Rational value{0};
  std::vector<std::vector<int>> witness;  ///< m x n, row i a padded partition of n_i
};

/// Ratio sum_i(n_i^2 - sum_j a_ij^2) / (n^2 - sum_j (sum_i a_ij)^2) for one
/// matrix. Throws PreconditionError when the denominator vanishes.
Rational beta_ratio(const std::vector<std::vector<int>>& a);

/// Exhaustive maximum over per-row partitions. All sizes 1 gives 0 with an
/// empty witness. Guard: sum(sizes) <= 14.
BetaResult beta_bruteforce(const std::vector<int>& sizes);

/// (n1 - 1)/(n1 + n2 - t), t = 2 when n1 == n2 else 1. Needs n1 >= n2 >= 1, n1 >= 2.
Rational beta_closed_m2(int n1, int n2);

/// The two-factor equality classification in Jordan form: u1 = u2 when the
/// sizes agree; a transvection against the identity when n1 > n2; or, when
/// n1 = n2 + 1, u2 obtained from u1 by shortening one block by one.
bool beta_equality_case(const Partition& u1, const Partition& u2);

struct Sandwich {
  Rational lower{0};
  Rational upper{0};
  Rational value{0};
  bool holds = false;
};

/// (n_max - 1)/(n - t) <= beta <= n_max/n with t the multiplicity of the
/// largest size. All sizes 1 is a vacuous pass.
Sandwich check_sandwich(const std::vector<int>& sizes);

struct RatioBound {
  Rational alpha{0};
  Rational bound{0};  ///< (1 + dim L / dim G) / 2
  Rational slack{0};
  bool holds = false;
};

RatioBound check_ratio_bound(const LeviShape& shape);

/// h(a) = (A^2 - sum a_i^2)/A with A = |a|; 0 for the empty partition.
Rational h_value(const Partition& a);

/// Componentwise sum of part lists (the shorter padded with zeros).
Partition add_partitions(const Partition& a, const Partition& b);

struct FBound {
  int r = 0;
  BigInt q0 = 0;
  BigInt weyl_order;      ///< W(r)
  int a_order = 0;        ///< B(r)
  int dim = 0;            ///< d(r)
  BigRational general;    ///< W^2 B ((q0+1)/(q0-1))^{(d-r)/2}
  std::optional<BigInt> closed;  ///< 2^{2r + ceil(sqrt(2r)) + 3} (r!)^2 when r >= 9, q0 >= r^2 + 1
};

/// W, d and B are maxima over simple types of rank r, exceptional types
/// included. Square-root exponents are rounded up.
FBound f_bound(int r, const BigInt& q0);

struct SuppConstants {
  Rational c{0};
  Rational r_prime{0};
};

/// c and r' for SL_{r+1}, Sp_{2r}, Spin_{2r}, Spin_{2r+1}; GL maps to SL.
SuppConstants supp_constants(const GroupFamily& g);

/// ceil(sqrt(x)) for x >= 0.
int ceil_sqrt(int x);

}  // namespace liechar
