#include <cmath>
#include <map>

#include "doctest.h"
#include "liechar/common.hpp"
#include "liechar/spectra.hpp"
#include "liechar/walks.hpp"

using namespace liechar;

namespace {

std::shared_ptr<const ClassTable> build(GroupKind k, int n, int q) { return ClassTable::build(GroupSpec::make(k, n, q)); }

int first_generating_class(const ClassTable& t) {
  for (std::size_t c = 1; c < t.size(); ++c)
    if (class_generates(t, structure_column(t, static_cast<int>(c)))) return static_cast<int>(c);
  return -1;
}

}  // namespace

TEST_CASE("exact walk agrees with element-level convolution") {
  const auto t = build(GroupKind::SL, 2, 5);
  const auto& ops = t->ops();
  const auto& els = t->elements();
  const int c = first_generating_class(*t);
  REQUIRE(c > 0);
  const auto members = t->class_members(c);
  std::map<std::uint64_t, BigRational> dist{{ops.encode(ops.identity()), BigRational(1)}};
  const ClassWalk walk(t, c);
  WalkState s = walk.start();
  for (int step = 1; step <= 4; ++step) {
    std::map<std::uint64_t, BigRational> next;
    const BigRational w(BigInt(1), BigInt(members.size()));
    for (const auto& [code, p] : dist)
      for (const auto& y : members) next[ops.encode(ops.mul(ops.decode(code), y))] += p * w;
    dist = std::move(next);
    s = walk.step(s);
    CHECK(s.t == step);
    BigRational total = 0;
    for (const auto& x : els) {
      const auto it = dist.find(ops.encode(x));
      const BigRational expected = it == dist.end() ? BigRational(0) : it->second;
      CHECK(s.probs[static_cast<std::size_t>(t->class_of(x))] == expected);
      total += expected;
    }
    CHECK(total == 1);
  }
}

TEST_CASE("exact walk agrees with the character formula") {
  const auto t = build(GroupKind::GL, 2, 3);
  const auto ct = character_table(t);
  const int c = first_generating_class(*t);
  REQUIRE(c > 0);
  const ClassWalk walk(t, c);
  WalkState s = walk.start();
  for (int step = 1; step <= 5; ++step) {
    s = walk.step(s);
    const auto f = frobenius_walk(ct, static_cast<std::size_t>(c), step);
    for (std::size_t k = 0; k < t->size(); ++k) CHECK(std::abs(static_cast<double>(s.probs[k]) - f[k]) < 1e-12);
  }
}

TEST_CASE("norms and mixing report") {
  const auto t = build(GroupKind::SL, 2, 5);
  const ClassWalk walk(t, first_generating_class(*t));
  const auto n0 = norms(walk.start(), *t);
  CHECK(n0.l1 == BigRational(BigInt(2 * (t->order() - 1)), BigInt(t->order())));
  CHECK(n0.linf == BigRational(t->order() - 1));
  const auto rep = mixing_time(t, first_generating_class(*t));
  REQUIRE(rep.t_l1.has_value());
  REQUIRE(rep.t_linf.has_value());
  CHECK(*rep.t_l1 <= *rep.t_linf);
  CHECK(rep.rows.front().support_size == 1);
  CHECK(rep.rows[1].support_size == rep.class_size);
  if (rep.cover) CHECK(static_cast<double>(*rep.cover) >= rep.cover_lower - 1e-12);
  CHECK(static_cast<double>(*rep.t_l1) >= rep.lower_bound - 1e-12);
  CHECK_THROWS_AS(mixing_time(t, 0), PreconditionError);
}

TEST_CASE("covering numbers of SL_2(5)") {
  const auto t = build(GroupKind::SL, 2, 5);
  for (std::size_t c = 1; c < t->size(); ++c) {
    const auto column = structure_column(*t, static_cast<int>(c));
    if (!class_generates(*t, column)) {
      CHECK_THROWS_AS(covering_number(*t, static_cast<int>(c)), PreconditionError);
      continue;
    }
    const auto cn = covering_number(*t, static_cast<int>(c));
    if (!cn) continue;
    const auto seq = power_supports(*t, column);
    for (int i = 1; i < *cn; ++i)
      CHECK_FALSE(std::all_of(seq[static_cast<std::size_t>(i)].begin(), seq[static_cast<std::size_t>(i)].end(),
                              [](bool b) { return b; }));
    CHECK(std::pow(static_cast<double>((*t)[c].size), *cn) >= static_cast<double>(t->order()));
  }
}

TEST_CASE("bound catalog") {
  const auto sl2 = GroupFamily::make(Family::SL, 2);
  const auto torus = LeviShape::make(sl2, {1, 1});
  const auto cat = bound_catalog(sl2, torus, 1, 5);
  CHECK(cat.coxeter == 2);
  std::map<std::string, Rational> v;
  for (const auto& e : cat.entries) v[e.name] = e.value;
  CHECK(v.at("mixing_levi") == Rational(5));
  CHECK(v.at("mixing_linear") == Rational(3));
  CHECK(v.at("diameter_linear") == Rational(6));
  CHECK(v.at("sl_mixing_any") == Rational(7));
  CHECK(v.count("mixing_supp") == 1);
  const auto gl = bound_catalog(GroupFamily::make(Family::GL, 3), std::nullopt, 0, 4);
  CHECK(gl.ambient.family == Family::SL);
  CHECK(gl.coxeter == 3);
  for (const auto& e : gl.entries) CHECK(e.name.rfind("mixing_supp", 0) != 0);
}
