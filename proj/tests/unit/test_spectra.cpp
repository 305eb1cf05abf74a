#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "liechar/common.hpp"
#include "liechar/spectra.hpp"

using namespace liechar;

namespace {

std::shared_ptr<const ClassTable> build(GroupKind k, int n, int q) { return ClassTable::build(GroupSpec::make(k, n, q)); }

}  // namespace

TEST_CASE("character tables satisfy both orthogonality relations") {
  for (const auto& t : {build(GroupKind::GL, 2, 3), build(GroupKind::SL, 2, 5), build(GroupKind::SL, 2, 7),
                        build(GroupKind::GL, 3, 2)}) {
    INFO(t->spec().label());
    const auto ct = character_table(t);
    const std::size_t c = t->size();
    REQUIRE(ct.size() == c);
    const double g = static_cast<double>(t->order());
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        Complex s = 0;
        for (std::size_t k = 0; k < c; ++k) s += static_cast<double>((*t)[k].size) * ct.values[i][k] * std::conj(ct.values[j][k]);
        CHECK(std::abs(s / g - (i == j ? 1.0 : 0.0)) < 1e-9);
      }
    for (std::size_t k = 0; k < c; ++k) {
      Complex s = 0;
      for (std::size_t i = 0; i < c; ++i) s += ct.values[i][k] * std::conj(ct.values[i][k]);
      CHECK(std::abs(s - static_cast<double>((*t)[k].centralizer_order)) < 1e-8 * g);
    }
    std::uint64_t sq = 0;
    for (std::size_t i = 0; i < c; ++i) {
      CHECK(std::abs(ct.values[i][0] - static_cast<double>(ct.degrees[i])) < 1e-9);
      CHECK(t->order() % ct.degrees[i] == 0);
      sq += ct.degrees[i] * ct.degrees[i];
    }
    CHECK(sq == t->order());
    for (std::size_t k = 0; k < c; ++k) CHECK(std::abs(ct.values[0][k] - 1.0) < 1e-12);
  }
}

TEST_CASE("GL_2(q) degrees match the generic degree list") {
  for (int q : {3, 4, 5}) {
    const auto ct = character_table(build(GroupKind::GL, 2, q));
    auto expected = expand_degrees(generic_gl2_degrees(static_cast<std::uint64_t>(q)));
    auto got = ct.degrees;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("the table is independent of the seed") {
  const auto t = build(GroupKind::SL, 2, 5);
  const auto a = character_table(t, 1u), b = character_table(t, 99u);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.degrees[i] == b.degrees[i]);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a.values[i][k] - b.values[i][k]) < 1e-9);
  }
}

TEST_CASE("Steinberg character and the unipotent degree") {
  const auto ct = character_table(build(GroupKind::GL, 2, 5));
  const auto st = steinberg_index(ct);
  CHECK(ct.degrees[st] == 5);
  const auto rep = steinberg_check(ct);
  CHECK(rep.ok);
  CHECK(rep.classes_checked > 0);
  const auto ct3 = character_table(build(GroupKind::GL, 3, 3));
  CHECK(ct3.degrees[steinberg_index(ct3)] == 27);
  const auto ud = unipotent_degree_check(ct3);
  CHECK(ud.expected == 12);
  CHECK(ud.found);
}

TEST_CASE("zeta sums") {
  const auto z = zeta({1, 1, 2}, 1.0);
  CHECK(z.value == doctest::Approx(2.5));
  CHECK(z.minus_one == doctest::Approx(1.5));
  CHECK(zeta({1, 3}, 2.0).value == doctest::Approx(1.0 + 1.0 / 9.0));
}

TEST_CASE("coset averages over a Levi") {
  const auto t = build(GroupKind::GL, 2, 5);
  const auto ct = character_table(t);
  const auto& ops = t->ops();
  const Mat g = ops.diag({2, 3});
  CHECK(in_standard_levi(ops, g, {1, 1}));
  CHECK(centralizer_in_levi(*t, g, {1, 1}));
  CHECK(centralizer_order_in_group(*t, g) == 16);
  CHECK(unipotent_radical(ops, {1, 1}).size() == 5);
  const auto rep = hc_coset_check(ct, g, {1, 1});
  CHECK(rep.ok);
  CHECK(rep.characters == ct.size());
  CHECK_THROWS_AS(hc_coset_average(ct, 0, ops.scalar(2), {1, 1}), PreconditionError);
}

TEST_CASE("character audit on a regular split element") {
  const auto t = build(GroupKind::GL, 2, 5);
  const auto ct = character_table(t);
  const auto audit = main1_bound_audit(ct, t->ops().diag({2, 3}), {1, 1});
  CHECK(audit.alpha == doctest::Approx(0.0));
  CHECK(audit.effective_f > 0);
  CHECK(audit.within_f_bound);
}
