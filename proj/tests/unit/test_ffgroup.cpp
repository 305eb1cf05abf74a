#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "liechar/common.hpp"
#include "liechar/ffgroup.hpp"

using namespace liechar;

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::shared_ptr<const ClassTable> build(GroupKind k, int n, int q) { return ClassTable::build(GroupSpec::make(k, n, q)); }

}  // namespace

TEST_CASE("group orders") {
  CHECK(GroupSpec::make(GroupKind::GL, 2, 3).order() == 48);
  CHECK(GroupSpec::make(GroupKind::SL, 2, 5).order() == 120);
  CHECK(GroupSpec::make(GroupKind::GL, 3, 3).order() == 11232);
  CHECK(GroupSpec::make(GroupKind::GL, 4, 2).order() == 20160);
  CHECK(gl_order(3, 5) == 1488000);
  CHECK_THROWS_AS(GroupSpec::make(GroupKind::GL, 4, 7), GuardExceeded);
  CHECK_THROWS_AS(GroupSpec::make(GroupKind::GL, 2, 6), PreconditionError);
}

TEST_CASE("class counts match known values") {
  struct Case {
    GroupKind k;
    int n, q;
    std::size_t classes;
  };
  const Case cases[] = {
      {GroupKind::GL, 2, 2, 3},  {GroupKind::GL, 2, 3, 8},  {GroupKind::GL, 2, 4, 15}, {GroupKind::GL, 2, 5, 24},
      {GroupKind::GL, 2, 7, 48}, {GroupKind::SL, 2, 3, 7},  {GroupKind::SL, 2, 4, 5},  {GroupKind::SL, 2, 5, 9},
      {GroupKind::SL, 2, 7, 11}, {GroupKind::SL, 2, 9, 13}, {GroupKind::GL, 3, 2, 6},  {GroupKind::GL, 3, 3, 24},
      {GroupKind::SL, 3, 3, 12}, {GroupKind::GL, 4, 2, 14},
  };
  for (const auto& c : cases) {
    const auto t = build(c.k, c.n, c.q);
    INFO(t->spec().label());
    CHECK(t->size() == c.classes);
    std::uint64_t total = 0;
    for (const auto& ci : t->classes()) {
      total += ci.size;
      CHECK(t->order() % ci.size == 0);
      CHECK(ci.size * ci.centralizer_order == t->order());
      CHECK(t->class_of(ci.rep) == &ci - t->classes().data());
    }
    CHECK(total == t->order());
    CHECK(t->ops().encode(t->classes()[0].rep) == t->ops().encode(t->ops().identity()));
  }
}

TEST_CASE("class partition matches a union-find conjugation orbit oracle") {
  const std::pair<GroupKind, std::pair<int, int>> groups[] = {
      {GroupKind::SL, {2, 3}}, {GroupKind::SL, {2, 4}}, {GroupKind::SL, {2, 5}},
      {GroupKind::SL, {2, 7}}, {GroupKind::SL, {2, 9}}, {GroupKind::GL, {2, 3}},
  };
  for (const auto& [kind, nq] : groups) {
    const auto t = build(kind, nq.first, nq.second);
    INFO(t->spec().label());
    const auto& els = t->elements();
    const auto& ops = t->ops();
    std::map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < els.size(); ++i) index[ops.encode(els[i])] = i;
    UnionFind uf(els.size());
    for (const auto& g : els) {
      const Mat gi = ops.inverse(g);
      for (std::size_t i = 0; i < els.size(); ++i) uf.unite(i, index.at(ops.encode(ops.mul(ops.mul(g, els[i]), gi))));
    }
    std::map<std::size_t, int> root_class;
    for (std::size_t i = 0; i < els.size(); ++i) {
      const int c = t->element_classes()[i];
      auto [it, fresh] = root_class.emplace(uf.find(i), c);
      CHECK(it->second == c);
    }
    CHECK(root_class.size() == t->size());
  }
}

TEST_CASE("centralizer orders by brute force over group elements") {
  for (const auto& t : {build(GroupKind::GL, 2, 3), build(GroupKind::SL, 2, 5), build(GroupKind::GL, 3, 2)}) {
    const auto& ops = t->ops();
    for (const auto& ci : t->classes()) {
      std::uint64_t count = 0;
      for (const auto& g : t->elements())
        if (ops.mul(g, ci.rep) == ops.mul(ci.rep, g)) ++count;
      CHECK(count == ci.centralizer_order);
      if (t->spec().kind == GroupKind::GL) CHECK(centralizer_order_bruteforce(ops, ci.rep) == count);
      CHECK(ops.order(ci.rep) == ci.element_order);
      CHECK(t->class_members(static_cast<int>(&ci - t->classes().data())).size() == ci.size);
    }
  }
}

TEST_CASE("inverse classes and structure-constant mass conservation") {
  for (const auto& t : {build(GroupKind::GL, 2, 3), build(GroupKind::SL, 2, 5), build(GroupKind::SL, 2, 7)}) {
    const auto sc = StructureConstants::compute(*t);
    const std::size_t c = t->size();
    for (std::size_t i = 0; i < c; ++i) {
      CHECK(t->class_of(t->ops().inverse((*t)[i].rep)) == t->inverse_class(static_cast<int>(i)));
      for (std::size_t j = 0; j < c; ++j) {
        std::uint64_t mass = 0;
        for (std::size_t k = 0; k < c; ++k) mass += sc(i, j, k) * (*t)[k].size;
        CHECK(mass == (*t)[i].size * (*t)[j].size);
      }
    }
    const auto col = structure_column(*t, 1);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t k = 0; k < c; ++k) CHECK(col[j][k] == sc(j, 1, k));
  }
}

TEST_CASE("supp over F_9 eigenspaces for x^2 + 1 in GL_2(3)") {
  const MatOps ops3(Field::for_order(3), 2);
  const Mat g = ops3.parse("0,2;1,0");
  CHECK(ops3.char_poly(g) == Poly{1, 0, 1});
  // Over F_9 (constants are codes 0..2) x^2 + 1 has two roots, each with a
  // one-dimensional eigenspace.
  const Field f9 = Field::for_order(9);
  const MatOps ops9(f9, 2);
  Mat g9;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g9.at(i, j) = g.at(i, j);
  int roots = 0, largest = 0;
  for (int l = 0; l < 9; ++l) {
    const auto e = static_cast<Elem>(l);
    if (f9.add(f9.mul(e, e), 1) != 0) continue;
    ++roots;
    largest = std::max(largest, 2 - ops9.rank(ops9.sub(g9, ops9.scalar(e))));
  }
  CHECK(roots == 2);
  CHECK(largest == 1);
  CHECK(supp(ops3, g) == 2 - largest);
}

TEST_CASE("supp on diagonal and unipotent elements") {
  const MatOps ops(Field::for_order(7), 4);
  CHECK(supp(ops, ops.identity()) == 0);
  CHECK(supp(ops, ops.diag({1, 2, 3, 4})) == 3);
  CHECK(supp(ops, ops.diag({2, 2, 2, 5})) == 1);
  CHECK(supp(ops, ops.parse("1,1,0,0;0,1,0,0;0,0,1,0;0,0,0,1")) == 1);
  CHECK(supp(ops, central_homology(ops, 2, 1, false)) == 1);
}

TEST_CASE("supp is conjugation invariant") {
  const auto t = build(GroupKind::GL, 3, 3);
  std::mt19937 rng(7);
  const auto& els = t->elements();
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const Mat g = els[pick(rng)], h = els[pick(rng)];
    CHECK(supp(t->ops(), g) == supp(t->ops(), t->ops().mul(t->ops().mul(h, g), t->ops().inverse(h))));
  }
}

TEST_CASE("Levi witness in SL_n(q)") {
  const MatOps ops(Field::for_order(5), 3);
  const Mat s = levi_witness_sl(ops, {1, 2});
  CHECK(s == ops.diag({4, 2, 2}));
  CHECK(ops.det(s) == 1);
  CHECK(centralizer_order_bruteforce(ops, s) == 4u * 480u);
  const MatOps ops7(Field::for_order(7), 4);
  const Mat s7 = levi_witness_sl(ops7, {2, 2});
  CHECK(ops7.det(s7) == 1);
  CHECK(centralizer_order_bruteforce(ops7, s7) == gl_order(2, 7) * gl_order(2, 7));
  CHECK_THROWS_AS(levi_witness_sl(MatOps(Field::for_order(4), 3), {1, 2}), PreconditionError);
  CHECK_THROWS_AS(levi_witness_sl(ops, {2, 1}), PreconditionError);
}

TEST_CASE("central homology") {
  const MatOps ops(Field::for_order(3), 3);
  const Mat y = central_homology(ops, 2, 1, true);
  CHECK(y == ops.diag({2, 2, 1}));
  CHECK(ops.det(y) == 1);
  CHECK_THROWS_AS(central_homology(ops, 2, 2, false), PreconditionError);
  CHECK_THROWS_AS(central_homology(ops, 2, 2, true), PreconditionError);
}
