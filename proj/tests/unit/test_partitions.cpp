#include <functional>
#include <set>

#include "doctest.h"
#include "liechar/common.hpp"
#include "liechar/partitions.hpp"

using namespace liechar;

namespace {

// p(n) with parts at most k, by the two-term recurrence.
std::uint64_t count_bounded(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return count_bounded(n - k, k) + count_bounded(n, k - 1);
}

}  // namespace

TEST_CASE("partition_count agrees with the bounded-part recurrence") {
  for (int n = 0; n <= 30; ++n) CHECK(partition_count(n) == count_bounded(n, n));
  CHECK(partition_count(100) == 190569292ULL);
}

TEST_CASE("enumeration size, order and uniqueness") {
  for (int n = 1; n <= 14; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(all.size() == partition_count(n));
    CHECK(all.front() == Partition({n}));
    CHECK(all.back().is_trivial());
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i] < all[i - 1]);
    std::set<Partition> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
  }
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) CHECK(enumerate_partitions(n, k).size() == count_bounded(n, k));
}

TEST_CASE("conjugation is an involution and reverses dominance") {
  for (int n = 1; n <= 9; ++n) {
    const auto all = enumerate_partitions(n);
    for (const auto& p : all) {
      CHECK(p.conjugate().conjugate() == p);
      CHECK(p.conjugate().size() == n);
      CHECK(p.conjugate().length() == p.largest());
    }
    for (const auto& p : all)
      for (const auto& q : all) CHECK(dominance_leq(p, q) == dominance_leq(q.conjugate(), p.conjugate()));
  }
}

TEST_CASE("multiplicities and construction") {
  const Partition p = Partition::from_multiplicities({{3, 2}, {1, 6}});
  CHECK(p.parts() == std::vector<int>{3, 3, 1, 1, 1, 1, 1, 1});
  CHECK(p.size() == 12);
  CHECK(p.multiplicity(3) == 2);
  CHECK(p.multiplicity(2) == 0);
  CHECK(Partition::from_unsorted({1, 0, 4, 2}) == Partition({4, 2, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), PreconditionError);
  CHECK_THROWS_AS(Partition({2, 0}), PreconditionError);
  CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({2, 1})), PreconditionError);
  CHECK(richardson_blocks(Partition({3, 1})) == std::vector<int>{2, 1, 1});
}
