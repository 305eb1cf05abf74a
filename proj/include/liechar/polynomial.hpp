#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "liechar/field.hpp"

namespace liechar {

/// Polynomial over a Field, constant term first, no trailing zeros. The
/// zero polynomial is the empty vector.
using Poly = std::vector<Elem>;

void poly_trim(Poly& a);
int poly_degree(const Poly& a);  ///< -1 for zero
Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_scale(const Field& f, const Poly& a, Elem c);
/// Quotient and remainder; throws PreconditionError on a zero divisor.
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);
Poly poly_mod(const Field& f, const Poly& a, const Poly& m);
Poly poly_monic(const Field& f, const Poly& a);
/// Monic gcd (zero when both inputs are zero).
Poly poly_gcd(const Field& f, Poly a, Poly b);
Poly poly_derivative(const Field& f, const Poly& a);
/// base^e mod m.
Poly poly_powmod(const Field& f, const Poly& base, std::uint64_t e, const Poly& m);
Elem poly_eval(const Field& f, const Poly& a, Elem x);
std::string poly_to_string(const Field& f, const Poly& a);

struct PolyFactor {
  Poly factor;  ///< monic irreducible
  int multiplicity = 1;
  bool operator==(const PolyFactor&) const = default;
};

/// Monic irreducible factorization of a nonzero polynomial: squarefree
/// decomposition (derivative gcd with p-th roots), distinct-degree splitting,
/// then Cantor-Zassenhaus equal-degree splitting from a fixed seed. The
/// leading coefficient is dropped. Factors are sorted by degree, then by
/// coefficients from the top down.
std::vector<PolyFactor> factor_poly(const Field& f, const Poly& a);

/// Ordering used by factor_poly.
bool poly_less(const Poly& a, const Poly& b);

}  // namespace liechar
