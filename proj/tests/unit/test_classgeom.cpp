#include "doctest.h"
#include "liechar/alphabeta.hpp"
#include "liechar/classgeom.hpp"
#include "liechar/common.hpp"
#include "liechar/partitions.hpp"

using namespace liechar;

namespace {

int sum_conj_squares(const Partition& p) {
  int s = 0;
  const Partition conj = p.conjugate();
  for (int c : conj.parts()) s += c * c;
  return s;
}

int odd_parts(const Partition& p) {
  int k = 0;
  for (int x : p.parts()) k += x % 2;
  return k;
}

}  // namespace

TEST_CASE("group dimensions and Coxeter numbers") {
  CHECK(dim_group(Family::GL, 5) == 25);
  CHECK(dim_group(Family::SL, 5) == 24);
  CHECK(dim_group(Family::Sp, 6) == 21);
  CHECK(dim_group(Family::SOOdd, 7) == 21);
  CHECK(dim_group(Family::SOEven, 8) == 28);
  CHECK(coxeter_number(GroupFamily::make(Family::SL, 5)) == 5);
  CHECK(coxeter_number(GroupFamily::make(Family::GL, 5)) == 5);
  CHECK(coxeter_number(GroupFamily::make(Family::Sp, 8)) == 8);
  CHECK(coxeter_number(GroupFamily::make(Family::SOOdd, 9)) == 8);
  CHECK(coxeter_number(GroupFamily::make(Family::SOEven, 10)) == 8);
  CHECK_THROWS_AS(GroupFamily::make(Family::Sp, 5), PreconditionError);
  CHECK(parse_family("so", 9) == Family::SOOdd);
  CHECK(parse_family("D") == Family::SOEven);
}

TEST_CASE("unipotent centralizer dimensions against the conjugate-partition formulas") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : unipotent_jordan_types(Family::GL, n)) {
      CHECK(dim_centralizer_unipotent(Family::GL, p) == sum_conj_squares(p));
      CHECK(dim_class(Family::SL, p) == dim_class(Family::GL, p));
    }
    if (n % 2 == 0)
      for (const auto& p : unipotent_jordan_types(Family::Sp, n)) {
        CHECK(admissible_jordan_type(Family::Sp, p));
        CHECK(2 * dim_centralizer_unipotent(Family::Sp, p) == sum_conj_squares(p) + odd_parts(p));
      }
    const Family so = n % 2 ? Family::SOOdd : Family::SOEven;
    for (const auto& p : unipotent_jordan_types(so, n)) {
      CHECK(admissible_jordan_type(so, p));
      CHECK(2 * dim_centralizer_unipotent(so, p) == sum_conj_squares(p) - odd_parts(p));
    }
  }
}

TEST_CASE("regular and minimal classes") {
  for (int r = 2; r <= 6; ++r) {
    CHECK(dim_centralizer_unipotent(Family::Sp, Partition({2 * r})) == r);
    CHECK(dim_centralizer_unipotent(Family::SOOdd, Partition({2 * r + 1})) == r);
    CHECK(dim_centralizer_unipotent(Family::SOEven, Partition({2 * r - 1, 1})) == r);
    std::vector<int> transvection(static_cast<std::size_t>(2 * r - 1), 1);
    transvection[0] = 2;
    CHECK(dim_class(Family::Sp, Partition(transvection)) == 2 * r);
  }
  CHECK_THROWS_AS(dim_centralizer_unipotent(Family::Sp, Partition({3, 1})), PreconditionError);
  CHECK_FALSE(admissible_jordan_type(Family::SOOdd, Partition({2, 1})));
}

TEST_CASE("Jordan type counts of small classical groups") {
  // Sp_4: (4), (2,2), (2,1,1), (1^4). SO_7: (7), (5,1,1), (3,3,1), (3,2,2), (3,1^4), (2,2,1^3), (1^7).
  CHECK(unipotent_jordan_types(Family::Sp, 4).size() == 4);
  CHECK(unipotent_jordan_types(Family::SOOdd, 7).size() == 7);
  CHECK(unipotent_jordan_types(Family::GL, 0).size() == 1);
}

TEST_CASE("Levi shapes and class dimensions in a Levi") {
  const auto gl = GroupFamily::make(Family::GL, 5);
  const auto shape = LeviShape::make(gl, {3, 2});
  CHECK(shape.dim() == 13);
  CHECK_FALSE(shape.is_torus());
  JordanType j{{Partition({2, 1}), Partition({2})}, Partition()};
  validate_jordan_type(shape, j);
  CHECK(ambient_jordan_type(shape, j) == Partition({2, 2, 1}));
  const auto d = dim_class_in_levi(shape, j);
  CHECK(d.in_levi == 4 + 2);
  CHECK(d.in_group == 25 - 9 - 4);
  CHECK(LeviShape::make(gl, {1, 1, 1, 1, 1}).is_torus());
  CHECK_THROWS_AS(LeviShape::make(gl, {3, 3}), PreconditionError);

  const auto sp = GroupFamily::make(Family::Sp, 8);
  const auto ssp = LeviShape::make(sp, {2}, 4);
  CHECK(ssp.dim() == 4 + 10);
  JordanType js{{Partition({2})}, Partition({1, 1, 1, 1})};
  CHECK(ambient_jordan_type(ssp, js) == Partition({2, 2, 1, 1, 1, 1}));
  // Number of GL Levi shapes of GL_n is p(n) - 1 (proper ones).
  for (int n = 2; n <= 9; ++n)
    CHECK(enumerate_levi_shapes(GroupFamily::make(Family::GL, n)).size() == partition_count(n) - 1);
}

TEST_CASE("support bound dominates the class dimension in type A") {
  for (int n = 2; n <= 9; ++n) {
    const auto g = GroupFamily::make(Family::GL, n);
    for (const auto& p : enumerate_partitions(n)) {
      const auto sb = support_upper_bound(g, p);
      CHECK(sb.support == n - p.length());
      CHECK(dim_class(Family::GL, p) <= sb.bound);
    }
  }
}
