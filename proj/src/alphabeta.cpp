#include "liechar/alphabeta.hpp"

#include <algorithm>
#include <numeric>

namespace liechar {

namespace {

constexpr int kAlphaGuard = 14;
constexpr int kBetaGuard = 14;

// Advances a mixed-radix counter, last digit fastest. Returns false on wrap.
bool advance(std::vector<std::size_t>& idx, const std::vector<std::size_t>& radix) {
  for (std::size_t k = idx.size(); k-- > 0;) {
    if (++idx[k] < radix[k]) return true;
    idx[k] = 0;
  }
  return false;
}

}  // namespace

AlphaResult alpha_classical(const LeviShape& shape) {
  if (shape.ambient.natural_dim > kAlphaGuard)
    throw GuardExceeded("alpha_classical requires ambient natural dimension <= 14");
  AlphaResult out;
  out.levi = shape;
  std::vector<std::vector<Partition>> choices;
  for (int s : shape.gl_factors) choices.push_back(enumerate_partitions(s));
  choices.push_back(unipotent_jordan_types(shape.classical_family(), shape.classical_factor));

  std::vector<std::size_t> idx(choices.size(), 0), radix;
  for (const auto& c : choices) radix.push_back(c.size());

  auto make_type = [&](const std::vector<std::size_t>& at) {
    JordanType j;
    for (std::size_t k = 0; k + 1 < choices.size(); ++k) j.gl_parts.push_back(choices[k][at[k]]);
    j.classical_part = choices.back()[at.back()];
    return j;
  };

  bool found = false;
  do {
    JordanType j = make_type(idx);
    if (j.is_trivial()) continue;
    const auto dims = dim_class_in_levi(shape, j);
    const Rational ratio(dims.in_levi, dims.in_group);
    if (!found || ratio > out.value) {
      out.value = ratio;
      out.witness = std::move(j);
      found = true;
    }
  } while (advance(idx, radix));

  if (!found) {
    out.torus = true;
    out.value = 0;
    // Each factor has a single class, so index 0 is the identity.
    std::fill(idx.begin(), idx.end(), 0);
    out.witness = make_type(idx);
  }
  return out;
}

std::vector<LeviShape> enumerate_levi_shapes(const GroupFamily& ambient, bool include_group) {
  std::vector<LeviShape> out;
  const int n = ambient.natural_dim;
  if (ambient.family == Family::GL || ambient.family == Family::SL) {
    for (const auto& p : enumerate_partitions(n)) {
      if (!include_group && p.length() == 1) continue;
      out.push_back(LeviShape::make(ambient, p.parts(), 0));
    }
    return out;
  }
  if (include_group) out.push_back(LeviShape::make(ambient, {}, n));
  for (int k = 1; 2 * k <= n; ++k) {
    const int rest = n - 2 * k;
    if (ambient.family == Family::SOEven && rest == 2) continue;
    for (const auto& p : enumerate_partitions(k)) out.push_back(LeviShape::make(ambient, p.parts(), rest));
  }
  return out;
}

Rational beta_ratio(const std::vector<std::vector<int>>& a) {
  if (a.empty()) throw PreconditionError("beta_ratio needs at least one row");
  const std::size_t cols = std::max_element(a.begin(), a.end(), [](const auto& x, const auto& y) {
                             return x.size() < y.size();
                           })->size();
  std::int64_t num = 0, n = 0;
  std::vector<std::int64_t> colsum(cols, 0);
  for (const auto& row : a) {
    std::int64_t ni = 0, sq = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 0) throw PreconditionError("beta_ratio entries must be nonnegative");
      ni += row[j];
      sq += static_cast<std::int64_t>(row[j]) * row[j];
      colsum[j] += row[j];
    }
    num += ni * ni - sq;
    n += ni;
  }
  std::int64_t den = n * n;
  for (auto c : colsum) den -= c * c;
  if (den == 0) throw PreconditionError("beta_ratio denominator vanishes");
  return Rational(num, den);
}

BetaResult beta_bruteforce(const std::vector<int>& sizes) {
  if (sizes.empty()) throw PreconditionError("beta needs at least one size");
  for (int s : sizes)
    if (s < 1) throw PreconditionError("beta sizes must be positive");
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (n > kBetaGuard) throw GuardExceeded("beta_bruteforce requires sum of sizes <= 14");

  BetaResult out;
  if (std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 1; })) return out;

  std::vector<std::vector<std::vector<int>>> rows;
  for (int s : sizes) {
    std::vector<std::vector<int>> padded;
    for (const auto& p : enumerate_partitions(s)) {
      auto v = p.parts();
      v.resize(static_cast<std::size_t>(n), 0);
      padded.push_back(std::move(v));
    }
    rows.push_back(std::move(padded));
  }
  std::vector<std::size_t> idx(rows.size(), 0), radix;
  for (const auto& r : rows) radix.push_back(r.size());

  bool found = false;
  std::vector<std::vector<int>> a(rows.size());
  do {
    bool nontrivial = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      a[i] = rows[i][idx[i]];
      nontrivial = nontrivial || a[i][1] > 0;
    }
    if (!nontrivial) continue;
    const Rational v = beta_ratio(a);
    if (!found || v > out.value) {
      out.value = v;
      out.witness = a;
      found = true;
    }
  } while (advance(idx, radix));
  return out;
}

Rational beta_closed_m2(int n1, int n2) {
  if (n2 < 1 || n1 < n2 || n1 < 2) throw PreconditionError("beta_closed_m2 needs n1 >= n2 >= 1 and n1 >= 2");
  const int t = (n1 == n2) ? 2 : 1;
  return Rational(n1 - 1, n1 + n2 - t);
}

bool beta_equality_case(const Partition& u1, const Partition& u2) {
  const int n1 = u1.size(), n2 = u2.size();
  if (u1.is_trivial() && u2.is_trivial()) return false;
  if (n1 == n2) return u1 == u2;
  if (n1 < n2) return false;
  if (u2.is_trivial() && u1.largest() == 2 && u1.multiplicity(2) == 1) return true;
  if (n1 != n2 + 1) return false;
  // u2 must equal u1 with one block shortened by one.
  const auto& p = u1.parts();
  for (std::size_t j = 0; j < p.size(); ++j) {
    auto v = p;
    --v[j];
    if (j + 1 < v.size() && v[j] < v[j + 1]) continue;
    if (Partition::from_unsorted(v) == u2) return true;
  }
  return false;
}

Sandwich check_sandwich(const std::vector<int>& sizes) {
  Sandwich out;
  const auto beta = beta_bruteforce(sizes);
  out.value = beta.value;
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  const int top = *std::max_element(sizes.begin(), sizes.end());
  if (top == 1) {
    out.holds = true;
    return out;
  }
  const int t = static_cast<int>(std::count(sizes.begin(), sizes.end(), top));
  out.lower = Rational(top - 1, n - t);
  out.upper = Rational(top, n);
  out.holds = out.lower <= out.value && out.value <= out.upper;
  return out;
}

RatioBound check_ratio_bound(const LeviShape& shape) {
  RatioBound out;
  out.alpha = alpha_classical(shape).value;
  out.bound = (Rational(1) + Rational(shape.dim(), shape.ambient.dim())) / 2;
  out.slack = out.bound - out.alpha;
  out.holds = out.alpha <= out.bound;
  return out;
}

Rational h_value(const Partition& a) {
  const std::int64_t A = a.size();
  if (A == 0) return Rational(0);
  std::int64_t sq = 0;
  for (int x : a.parts()) sq += static_cast<std::int64_t>(x) * x;
  return Rational(A * A - sq, A);
}

Partition add_partitions(const Partition& a, const Partition& b) {
  std::vector<int> v(static_cast<std::size_t>(std::max(a.length(), b.length())), 0);
  for (std::size_t i = 0; i < a.parts().size(); ++i) v[i] += a.parts()[i];
  for (std::size_t i = 0; i < b.parts().size(); ++i) v[i] += b.parts()[i];
  return Partition(std::move(v));
}

int ceil_sqrt(int x) {
  if (x < 0) throw PreconditionError("ceil_sqrt of a negative number");
  int k = 0;
  while (k * k < x) ++k;
  return k;
}

namespace {

struct ExceptionalRank {
  int rank;
  std::int64_t weyl;
  int dim;
  int max_a;
};

// G2, F4, E6, E7, E8: Weyl group order, dimension, largest component group.
constexpr ExceptionalRank kExceptional[] = {
    {2, 12, 14, 6}, {4, 1152, 52, 24}, {6, 51840, 78, 6}, {7, 2903040, 133, 6}, {8, 696729600, 248, 120},
};

BigInt factorial(int r) {
  BigInt f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}

}  // namespace

FBound f_bound(int r, const BigInt& q0) {
  if (r < 1) throw PreconditionError("f_bound needs r >= 1");
  if (q0 < 2) throw PreconditionError("f_bound needs q0 >= 2");
  FBound out;
  out.r = r;
  out.q0 = q0;
  out.weyl_order = std::max((BigInt(1) << r) * factorial(r), factorial(r + 1));
  out.dim = std::max(2 * r * r + r, r * (r + 2));
  out.a_order = 1 << ceil_sqrt(2 * r + 1);
  for (const auto& e : kExceptional) {
    if (e.rank != r) continue;
    out.weyl_order = std::max(out.weyl_order, BigInt(e.weyl));
    out.dim = std::max(out.dim, e.dim);
    out.a_order = std::max(out.a_order, e.max_a);
  }
  if ((out.dim - r) % 2) throw CheckFailure("f_bound exponent is not integral");
  const BigRational base(BigInt(q0 + 1), BigInt(q0 - 1));
  BigRational power = 1;
  for (int i = 0; i < (out.dim - r) / 2; ++i) power *= base;
  out.general = BigRational(out.weyl_order * out.weyl_order * out.a_order) * power;
  if (r >= 9 && q0 >= BigInt(r) * r + 1) {
    const BigInt f = factorial(r);
    out.closed = (BigInt(1) << (2 * r + ceil_sqrt(2 * r) + 3)) * f * f;
  }
  return out;
}

SuppConstants supp_constants(const GroupFamily& g) {
  const int r = g.rank();
  SuppConstants out;
  switch (g.family) {
    case Family::GL:
    case Family::SL:
      out.c = Rational(r + 1, 2 * r + 4);
      out.r_prime = Rational(r * (2 * r + 4), r + 1);
      break;
    case Family::Sp:
      out.c = Rational(r, 4 * r + 2);
      out.r_prime = Rational(4 * r + 2);
      break;
    case Family::SOEven:
      out.c = Rational(r, 4 * r - 2);
      out.r_prime = Rational(4 * r - 2);
      break;
    case Family::SOOdd:
      out.c = Rational(1, 4);
      out.r_prime = Rational(4 * r);
      break;
  }
  if (out.c * out.r_prime != Rational(r)) throw CheckFailure("c * r' != r for " + g.label());
  return out;
}

}  // namespace liechar
