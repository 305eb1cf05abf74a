#include "doctest.h"
#include "liechar/common.hpp"
#include "liechar/exceptdata.hpp"

using namespace liechar;

TEST_CASE("table sizes and lookups") {
  CHECK(exceptional_alpha_table(ExceptionalGroup::G2).size() == 2);
  CHECK(alpha_exceptional(ExceptionalGroup::G2, "A1").alpha == Rational(1, 3));
  CHECK(alpha_exceptional(ExceptionalGroup::G2, "~A1").alpha == Rational(1, 4));
  CHECK(alpha_exceptional(ExceptionalGroup::E8, "E7").alpha == Rational(17, 29));
  CHECK(alpha_exceptional(ExceptionalGroup::E7, "D6").alpha == Rational(5, 9));
  CHECK_THROWS_AS(alpha_exceptional(ExceptionalGroup::G2, "B2"), PreconditionError);
  CHECK(parse_exceptional("e8") == ExceptionalGroup::E8);
  CHECK(to_string(ExceptionalGroup::F4) == "F4");
}

TEST_CASE("every table is internally consistent") {
  for (auto g : {ExceptionalGroup::G2, ExceptionalGroup::F4, ExceptionalGroup::E6, ExceptionalGroup::E7,
                 ExceptionalGroup::E8}) {
    CHECK(exceptional_table_bounds_consistent(g));
    for (const auto& e : exceptional_alpha_table(g)) {
      CHECK(e.alpha > Rational(0));
      CHECK(e.alpha < Rational(1));
      CHECK(&alpha_exceptional(g, e.levi_label) == &e);
    }
  }
}

TEST_CASE("D6 rows recompute with the SO_12 formula") {
  const auto rep = verify_e7_d6();
  CHECK(rep.ok);
  CHECK(rep.mismatches.empty());
  CHECK(rep.rows == e7_d6_rows().size());
  CHECK(rep.max_ratio == Rational(5, 9));
  CHECK(rep.table_value == Rational(5, 9));
  for (const auto& row : e7_d6_rows()) {
    CHECK(row.jordan.size() == 12);
    CHECK(row.dim_uL <= row.dim_uG);
  }
}
