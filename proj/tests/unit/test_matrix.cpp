#include <random>

#include "doctest.h"
#include "liechar/common.hpp"
#include "liechar/matrix.hpp"

using namespace liechar;

namespace {

// Determinant by cofactor expansion along the first row.
Elem cofactor_det(const Field& f, const std::vector<std::vector<Elem>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Elem det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Elem>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Elem> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Elem term = f.mul(m[0][c], cofactor_det(f, minor));
    det = c % 2 ? f.sub(det, term) : f.add(det, term);
  }
  return det;
}

}  // namespace

TEST_CASE("determinant, inverse and characteristic polynomial") {
  std::mt19937 rng(3);
  for (int q : {2, 3, 4, 5, 8, 9}) {
    const Field f = Field::for_order(q);
    for (int n = 1; n <= 4; ++n) {
      const MatOps ops(f, n);
      std::uniform_int_distribution<std::uint64_t> pick(0, ops.code_count() - 1);
      for (int trial = 0; trial < 60; ++trial) {
        const Mat x = ops.decode(pick(rng)), y = ops.decode(pick(rng));
        CHECK(ops.encode(x) < ops.code_count());
        CHECK(ops.decode(ops.encode(x)) == x);
        std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)].push_back(x.at(i, j));
        CHECK(ops.det(x) == cofactor_det(f, rows));
        CHECK(ops.det(ops.mul(x, y)) == f.mul(ops.det(x), ops.det(y)));
        CHECK((ops.det(x) != 0) == (ops.rank(x) == n));
        if (ops.det(x) != 0) {
          CHECK(ops.mul(x, ops.inverse(x)) == ops.identity());
          CHECK(ops.power(x, ops.order(x)) == ops.identity());
        } else {
          CHECK_THROWS_AS(ops.inverse(x), PreconditionError);
        }
        // Cayley-Hamilton.
        const Poly cp = ops.char_poly(x);
        CHECK(static_cast<int>(cp.size()) == n + 1);
        CHECK(ops.eval_poly(cp, x) == ops.scale(ops.identity(), 0));
        CHECK(cp[0] == (n % 2 ? f.neg(ops.det(x)) : ops.det(x)));
      }
    }
  }
}

TEST_CASE("parse and print round trip") {
  const MatOps ops(Field::for_order(5), 3);
  const Mat x = ops.parse("1,2,3;0,4,1;2,2,0");
  CHECK(ops.to_string(x) == "1,2,3;0,4,1;2,2,0");
  CHECK(ops.entries(x) == std::vector<int>{1, 2, 3, 0, 4, 1, 2, 2, 0});
  CHECK_THROWS(ops.parse("1,2;3,4"));
}

TEST_CASE("nullspace dimension is cols minus rank") {
  const Field f = Field::for_order(3);
  const std::vector<std::vector<Elem>> rows = {{1, 2, 0, 1}, {2, 1, 0, 2}, {0, 0, 1, 1}};
  const auto basis = nullspace(f, rows, 4);
  CHECK(basis.size() == 2);
  for (const auto& v : basis)
    for (const auto& r : rows) {
      Elem s = 0;
      for (std::size_t i = 0; i < 4; ++i) s = f.add(s, f.mul(r[i], v[i]));
      CHECK(s == 0);
    }
}
