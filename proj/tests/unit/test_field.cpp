#include <map>

#include "doctest.h"
#include "liechar/common.hpp"
#include "liechar/field.hpp"
#include "liechar/polynomial.hpp"

using namespace liechar;

namespace {

const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32};

// Monic polynomials over F_p of a given degree, constant term first.
std::vector<std::vector<int>> monic(int p, int deg) {
  std::vector<std::vector<int>> out;
  int total = 1;
  for (int i = 0; i < deg; ++i) total *= p;
  for (int c = 0; c < total; ++c) {
    std::vector<int> poly(static_cast<std::size_t>(deg + 1), 0);
    int x = c;
    for (int i = 0; i < deg; ++i) {
      poly[static_cast<std::size_t>(i)] = x % p;
      x /= p;
    }
    poly[static_cast<std::size_t>(deg)] = 1;
    out.push_back(poly);
  }
  return out;
}

std::vector<int> mul_mod_p(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

// Irreducible when no product of two monic factors of positive degree matches.
bool irreducible_by_products(const std::vector<int>& poly, int p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  for (int d = 1; d < deg; ++d)
    for (const auto& a : monic(p, d))
      for (const auto& b : monic(p, deg - d))
        if (mul_mod_p(a, b, p) == poly) return false;
  return true;
}

}  // namespace

TEST_CASE("field axioms by exhaustion") {
  for (int q : kOrders) {
    const Field f = Field::for_order(q);
    CHECK(f.q() == q);
    for (int a = 0; a < q; ++a) {
      const auto ea = static_cast<Elem>(a);
      CHECK(f.add(ea, 0) == ea);
      CHECK(f.mul(ea, 1) == ea);
      CHECK(f.add(ea, f.neg(ea)) == 0);
      if (a) CHECK(f.mul(ea, f.inv(ea)) == 1);
      for (int b = 0; b < q; ++b) {
        const auto eb = static_cast<Elem>(b);
        CHECK(f.add(ea, eb) == f.add(eb, ea));
        CHECK(f.mul(ea, eb) == f.mul(eb, ea));
        if (a && b) CHECK(f.mul(ea, eb) != 0);
      }
    }
    for (int a = 0; a < q; a += 3)
      for (int b = 0; b < q; b += 2)
        for (int c = 0; c < q; ++c) {
          const auto ea = static_cast<Elem>(a), eb = static_cast<Elem>(b), ec = static_cast<Elem>(c);
          CHECK(f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec)));
          CHECK(f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)));
        }
  }
}

TEST_CASE("modulus is irreducible and the primitive element generates") {
  for (int q : kOrders) {
    const Field f = Field::for_order(q);
    if (f.k() > 1) CHECK(irreducible_by_products(f.modulus(), f.p()));
    CHECK(f.order(f.primitive()) == q - 1);
    for (int a = 1; a < q; ++a) {
      CHECK(f.exp(f.log(static_cast<Elem>(a))) == a);
      CHECK(f.pow(static_cast<Elem>(a), static_cast<std::uint64_t>(q - 1)) == 1);
      CHECK((q - 1) % f.order(static_cast<Elem>(a)) == 0);
    }
    // Frobenius is additive.
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        CHECK(f.pow(f.add(static_cast<Elem>(a), static_cast<Elem>(b)), static_cast<std::uint64_t>(f.p())) ==
              f.add(f.pow(static_cast<Elem>(a), static_cast<std::uint64_t>(f.p())),
                    f.pow(static_cast<Elem>(b), static_cast<std::uint64_t>(f.p()))));
  }
}

TEST_CASE("is_irreducible_mod_p matches the product oracle") {
  for (int p : {2, 3, 5})
    for (int deg = 1; deg <= (p == 2 ? 6 : 4); ++deg)
      for (const auto& poly : monic(p, deg)) CHECK(is_irreducible_mod_p(poly, p) == irreducible_by_products(poly, p));
}

TEST_CASE("field guards") {
  CHECK_THROWS_AS(Field::for_order(6), PreconditionError);
  CHECK_THROWS_AS(Field::for_order(64), GuardExceeded);
  CHECK_THROWS_AS(Field::for_order(5).inv(0), PreconditionError);
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(27));
}

TEST_CASE("factor_poly agrees with trial division") {
  for (int q : {2, 3, 4, 5, 9}) {
    const Field f = Field::for_order(q);
    // Every monic of degree <= 4 (q <= 3) or <= 3 otherwise, plus products.
    const int maxdeg = q <= 3 ? 4 : 3;
    std::vector<Poly> irreducibles;
    std::vector<Poly> all;
    for (int deg = 1; deg <= maxdeg; ++deg) {
      std::uint64_t total = 1;
      for (int i = 0; i < deg; ++i) total *= static_cast<std::uint64_t>(q);
      for (std::uint64_t c = 0; c < total; ++c) {
        Poly poly(static_cast<std::size_t>(deg + 1), 0);
        std::uint64_t x = c;
        for (int i = 0; i < deg; ++i) {
          poly[static_cast<std::size_t>(i)] = static_cast<Elem>(x % static_cast<std::uint64_t>(q));
          x /= static_cast<std::uint64_t>(q);
        }
        poly.back() = 1;
        all.push_back(poly);
      }
    }
    // Trial division: a monic is irreducible when no smaller irreducible divides it.
    for (const auto& poly : all) {
      bool irr = true;
      for (const auto& d : irreducibles)
        if (2 * poly_degree(d) <= poly_degree(poly) && poly_mod(f, poly, d).empty()) {
          irr = false;
          break;
        }
      if (irr) irreducibles.push_back(poly);
    }
    for (const auto& poly : all) {
      std::map<Poly, int> expected;
      Poly rest = poly;
      for (const auto& d : irreducibles)
        while (poly_degree(rest) >= poly_degree(d) && poly_mod(f, rest, d).empty()) {
          rest = poly_divmod(f, rest, d).first;
          ++expected[d];
        }
      CHECK(poly_degree(rest) == 0);
      std::map<Poly, int> got;
      Poly product{1};
      for (const auto& pf : factor_poly(f, poly)) {
        got[pf.factor] += pf.multiplicity;
        for (int i = 0; i < pf.multiplicity; ++i) product = poly_mul(f, product, pf.factor);
      }
      CHECK(got == expected);
      CHECK(product == poly);
    }
  }
}

TEST_CASE("polynomial gcd and powmod") {
  const Field f = Field::for_order(7);
  const Poly a = poly_mul(f, {1, 1}, {2, 1});  // (x+1)(x+2)
  const Poly b = poly_mul(f, {1, 1}, {3, 1});  // (x+1)(x+3)
  CHECK(poly_gcd(f, a, b) == Poly{1, 1});
  // x^7 = x mod any polynomial over F_7 that splits into distinct linear factors.
  CHECK(poly_powmod(f, {0, 1}, 7, a) == poly_mod(f, {0, 1}, a));
  CHECK(poly_eval(f, a, 6) == 0);
}
