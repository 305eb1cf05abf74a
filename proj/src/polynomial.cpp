#include "liechar/polynomial.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "liechar/common.hpp"

namespace liechar {

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  poly_trim(r);
  return r;
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  poly_trim(r);
  return r;
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  poly_trim(r);
  return r;
}

Poly poly_scale(const Field& f, const Poly& a, Elem c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  poly_trim(r);
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.empty()) throw PreconditionError("polynomial division by zero");
  Poly rem = a;
  poly_trim(rem);
  const int db = poly_degree(b);
  if (poly_degree(rem) < db) return {Poly{}, rem};
  Poly quo(rem.size() - b.size() + 1, 0);
  const Elem lead_inv = f.inv(b.back());
  while (poly_degree(rem) >= db) {
    const std::size_t shift = rem.size() - b.size();
    const Elem c = f.mul(rem.back(), lead_inv);
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b[i]));
    poly_trim(rem);
  }
  poly_trim(quo);
  return {quo, rem};
}

Poly poly_mod(const Field& f, const Poly& a, const Poly& m) { return poly_divmod(f, a, m).second; }

Poly poly_monic(const Field& f, const Poly& a) {
  if (a.empty()) return a;
  return poly_scale(f, a, f.inv(a.back()));
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

Poly poly_derivative(const Field& f, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = f.mul(f.from_int(static_cast<long>(i)), a[i]);
  poly_trim(r);
  return r;
}

Poly poly_powmod(const Field& f, const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result{1};
  result = poly_mod(f, result, m);
  Poly b = poly_mod(f, base, m);
  while (e) {
    if (e & 1) result = poly_mod(f, poly_mul(f, result, b), m);
    e >>= 1;
    if (e) b = poly_mod(f, poly_mul(f, b, b), m);
  }
  return result;
}

Elem poly_eval(const Field& f, const Poly& a, Elem x) {
  Elem r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

std::string poly_to_string(const Field& f, const Poly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = a[i] == 1;
    if (i == 0 || !unit) os << (f.k() > 1 && i > 0 ? "(" + f.to_string(a[i]) + ")" : f.to_string(a[i]));
    if (i > 0) os << (i == 1 ? "x" : "x^" + std::to_string(i));
  }
  return os.str();
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

namespace {

bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

Poly pth_root(const Field& f, const Poly& a) {
  const auto p = static_cast<std::size_t>(f.p());
  const std::uint64_t root_exp = static_cast<std::uint64_t>(f.q() / f.p());
  Poly r((a.size() + p - 1) / p, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (i % p) throw CheckFailure("p-th root of a polynomial with a non-p-power term");
    r[i / p] = f.pow(a[i], root_exp);
  }
  poly_trim(r);
  return r;
}

void squarefree(const Field& f, const Poly& a, int scale, std::vector<std::pair<Poly, int>>& out) {
  Poly c = poly_gcd(f, a, poly_derivative(f, a));
  Poly w = poly_divmod(f, a, c).first;
  int i = 1;
  while (!is_one(w)) {
    Poly y = poly_gcd(f, w, c);
    Poly fac = poly_divmod(f, w, y).first;
    if (!is_one(fac)) out.emplace_back(poly_monic(f, fac), i * scale);
    w = std::move(y);
    c = poly_divmod(f, c, w).first;
    ++i;
  }
  if (!is_one(c)) squarefree(f, poly_monic(f, pth_root(f, c)), scale * f.p(), out);
}

void equal_degree(const Field& f, const Poly& g, int d, std::mt19937& rng, std::vector<Poly>& out) {
  const int n = poly_degree(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  std::uint64_t qd = 1;
  for (int i = 0; i < d; ++i) qd *= static_cast<std::uint64_t>(f.q());
  std::uniform_int_distribution<int> coeff(0, f.q() - 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& x : a) x = static_cast<Elem>(coeff(rng));
    poly_trim(a);
    if (poly_degree(a) < 1) continue;
    Poly b;
    if (f.p() != 2) {
      b = poly_sub(f, poly_powmod(f, a, (qd - 1) / 2, g), Poly{1});
    } else {
      // Absolute trace a + a^2 + ... + a^(2^(k d - 1)) into F_2.
      Poly t = a, term = a;
      for (int i = 1; i < f.k() * d; ++i) {
        term = poly_mod(f, poly_mul(f, term, term), g);
        t = poly_add(f, t, term);
      }
      b = t;
    }
    Poly h = poly_gcd(f, b, g);
    const int dh = poly_degree(h);
    if (dh > 0 && dh < n) {
      equal_degree(f, h, d, rng, out);
      equal_degree(f, poly_monic(f, poly_divmod(f, g, h).first), d, rng, out);
      return;
    }
  }
  throw CheckFailure("equal-degree factorization did not split");
}

}  // namespace

std::vector<PolyFactor> factor_poly(const Field& f, const Poly& input) {
  Poly a = input;
  poly_trim(a);
  if (a.empty()) throw PreconditionError("cannot factor the zero polynomial");
  a = poly_monic(f, a);
  std::vector<PolyFactor> out;
  if (poly_degree(a) == 0) return out;

  std::vector<std::pair<Poly, int>> sqf;
  squarefree(f, a, 1, sqf);
  std::mt19937 rng(0x5eedu);
  const Poly x{0, 1};
  for (const auto& [part, mult] : sqf) {
    Poly rest = part;
    Poly h = poly_mod(f, x, rest);
    for (int d = 1; 2 * d <= poly_degree(rest); ++d) {
      h = poly_powmod(f, h, static_cast<std::uint64_t>(f.q()), rest);
      Poly g = poly_gcd(f, poly_sub(f, h, x), rest);
      if (!is_one(g)) {
        std::vector<Poly> pieces;
        equal_degree(f, g, d, rng, pieces);
        for (auto& pc : pieces) out.push_back({poly_monic(f, pc), mult});
        rest = poly_divmod(f, rest, g).first;
        h = poly_mod(f, h, rest);
      }
    }
    if (poly_degree(rest) > 0) out.push_back({poly_monic(f, rest), mult});
  }
  // Merge equal factors coming from different squarefree layers.
  std::sort(out.begin(), out.end(), [](const PolyFactor& l, const PolyFactor& r) { return poly_less(l.factor, r.factor); });
  std::vector<PolyFactor> merged;
  for (auto& pf : out) {
    if (!merged.empty() && merged.back().factor == pf.factor)
      merged.back().multiplicity += pf.multiplicity;
    else
      merged.push_back(std::move(pf));
  }
  return merged;
}

}  // namespace liechar
