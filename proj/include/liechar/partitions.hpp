#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace liechar {

/// An integer partition stored as its weakly decreasing list of positive
/// parts, with the multiplicity view m_i = #{j : parts[j] = i} kept
/// alongside. Zero parts are never stored.
class Partition {
 public:
  Partition() = default;

  /// Throws PreconditionError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Builds the partition with m[i] parts equal to i. Zero counts are ignored.
  static Partition from_multiplicities(const std::map<int, int>& m);

  /// Sorts arbitrary positive parts into a partition; zeros are dropped.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  const std::map<int, int>& multiplicities() const { return mult_; }
  int multiplicity(int part) const;

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// True for (1^n), the Jordan type of the identity.
  bool is_trivial() const { return largest() <= 1; }

  /// Transpose of the Young diagram.
  Partition conjugate() const;

  std::string to_string() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

 private:
  std::vector<int> parts_;
  std::map<int, int> mult_;
  int size_ = 0;
};

/// Dominance order: every prefix sum of p is at most the matching prefix
/// sum of q. Throws PreconditionError when p and q partition different n.
bool dominance_leq(const Partition& p, const Partition& q);

/// All partitions of n in reverse-lexicographic order, (n) first and
/// (1^n) last. Guard: 1 <= n <= 40.
std::vector<Partition> enumerate_partitions(int n);

/// Partitions of n whose parts never exceed max_part, same order.
std::vector<Partition> enumerate_partitions(int n, int max_part);

/// Parabolic block sizes of the Richardson class: the conjugate parts.
std::vector<int> richardson_blocks(const Partition& p);

/// p(n) by Euler's pentagonal recurrence, 0 <= n <= 400.
std::uint64_t partition_count(int n);

}  // namespace liechar
