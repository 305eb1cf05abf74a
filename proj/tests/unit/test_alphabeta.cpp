#include <functional>

#include "doctest.h"
#include "liechar/alphabeta.hpp"
#include "liechar/classgeom.hpp"
#include "liechar/common.hpp"
#include "liechar/partitions.hpp"

using namespace liechar;

namespace {

// dim of the unipotent class with Jordan type p in GL_n: n^2 - sum (p'_i)^2.
int gl_class_dim(const Partition& p) {
  int s = 0;
  const Partition conj = p.conjugate();
  for (int c : conj.parts()) s += c * c;
  return p.size() * p.size() - s;
}

// max over nontrivial (u_1, ..., u_m) of sum dim u_i^{GL_{n_i}} / dim (u_1 + ... + u_m)^{GL_n}.
Rational alpha_gl_oracle(const std::vector<int>& sizes) {
  Rational best(0);
  std::vector<Partition> pick(sizes.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == sizes.size()) {
      std::vector<int> merged;
      int local = 0;
      for (const auto& p : pick) {
        merged.insert(merged.end(), p.parts().begin(), p.parts().end());
        local += gl_class_dim(p);
      }
      const int global = gl_class_dim(Partition::from_unsorted(merged));
      if (global > 0) best = std::max(best, Rational(local, global));
      return;
    }
    for (const auto& p : enumerate_partitions(sizes[i])) {
      pick[i] = p;
      rec(i + 1);
    }
  };
  rec(0);
  return best;
}

}  // namespace

TEST_CASE("beta on small shapes") {
  CHECK(beta_bruteforce({3, 2}).value == Rational(1, 2));
  CHECK(beta_bruteforce({2, 2}).value == Rational(1, 2));
  CHECK(beta_bruteforce({2, 1}).value == Rational(1, 2));
  CHECK(beta_bruteforce({3, 3, 3}).value == Rational(1, 3));
  CHECK(beta_bruteforce({1, 1, 1}).value == Rational(0));
  CHECK(beta_bruteforce({1, 1, 1}).witness.empty());
  CHECK(beta_ratio({{2, 1, 0, 0, 0}, {2, 0, 0, 0, 0}}) == Rational(1, 2));
  CHECK_THROWS_AS(beta_ratio({{1, 0}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(beta_bruteforce({8, 7}), GuardExceeded);
}

TEST_CASE("beta matches an alpha oracle built from Jordan types") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& shape : enumerate_levi_shapes(GroupFamily::make(Family::GL, n))) {
      INFO(shape.label());
      const Rational oracle = alpha_gl_oracle(shape.gl_factors);
      CHECK(beta_bruteforce(shape.gl_factors).value == oracle);
      CHECK(alpha_classical(shape).value == oracle);
    }
}

TEST_CASE("two-block closed form and equality cases") {
  for (int n1 = 2; n1 <= 8; ++n1)
    for (int n2 = 1; n2 <= n1 && n1 + n2 <= 14; ++n2) {
      const auto b = beta_bruteforce({n1, n2});
      CHECK(b.value == beta_closed_m2(n1, n2));
      CHECK(beta_ratio(b.witness) == b.value);
    }
  CHECK(beta_equality_case(Partition({2, 1}), Partition({2, 1})));
  CHECK(beta_equality_case(Partition({2, 1, 1}), Partition({1, 1})));
  CHECK(beta_equality_case(Partition({3}), Partition({2})));
  CHECK_FALSE(beta_equality_case(Partition({3}), Partition({1, 1})));
}

TEST_CASE("sandwich and ratio bound") {
  const auto s = check_sandwich({3, 2});
  CHECK(s.lower == Rational(1, 2));
  CHECK(s.upper == Rational(3, 5));
  CHECK(s.holds);
  const auto rb = check_ratio_bound(LeviShape::make(GroupFamily::make(Family::GL, 3), {2, 1}));
  CHECK(rb.alpha == Rational(1, 2));
  CHECK(rb.bound == Rational(7, 9));
  CHECK(rb.holds);
}

TEST_CASE("h values and superadditivity") {
  CHECK(h_value(Partition()) == Rational(0));
  CHECK(h_value(Partition({1, 1})) == Rational(1));
  CHECK(h_value(Partition({2, 1})) == Rational(4, 3));
  CHECK(add_partitions(Partition({2, 1}), Partition({3})) == Partition({5, 1}));
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (const auto& p : enumerate_partitions(a))
        for (const auto& q : enumerate_partitions(b)) CHECK(h_value(p) + h_value(q) <= h_value(add_partitions(p, q)));
}

TEST_CASE("explicit constant f") {
  const auto f9 = f_bound(9, 82);
  CHECK(f9.weyl_order == 185794560);
  CHECK(f9.dim == 171);
  REQUIRE(f9.closed.has_value());
  // 2^(18 + 5 + 3) (9!)^2
  CHECK(*f9.closed == BigInt(67108864) * BigInt(362880) * BigInt(362880));
  CHECK(f9.general <= BigRational(*f9.closed));
  CHECK_FALSE(f_bound(2, 5).closed.has_value());
  CHECK(ceil_sqrt(18) == 5);
  CHECK(ceil_sqrt(16) == 4);
}

TEST_CASE("supp constants") {
  const auto sl = supp_constants(GroupFamily::make(Family::SL, 4));
  const auto gl = supp_constants(GroupFamily::make(Family::GL, 4));
  CHECK(sl.c == gl.c);
  CHECK(sl.r_prime == gl.r_prime);
  CHECK(sl.r_prime > Rational(0));
}
