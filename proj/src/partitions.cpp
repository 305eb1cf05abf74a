#include "liechar/partitions.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "liechar/common.hpp"

namespace liechar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw PreconditionError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("partition parts must be weakly decreasing");
    ++mult_[parts_[i]];
    size_ += parts_[i];
  }
}

Partition Partition::from_multiplicities(const std::map<int, int>& m) {
  std::vector<int> parts;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (it->second < 0) throw PreconditionError("negative multiplicity");
    parts.insert(parts.end(), it->second, it->first);
  }
  return Partition(std::move(parts));
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  auto it = mult_.find(part);
  return it == mult_.end() ? 0 : it->second;
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(largest()), 0);
  for (int part : parts_)
    for (int k = 0; k < part; ++k) ++out[static_cast<std::size_t>(k)];
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw PreconditionError("dominance order compares partitions of the same integer");
  int sp = 0, sq = 0;
  const auto len = std::max(p.length(), q.length());
  for (int i = 0; i < len; ++i) {
    sp += i < p.length() ? p.parts()[static_cast<std::size_t>(i)] : 0;
    sq += i < q.length() ? q.parts()[static_cast<std::size_t>(i)] : 0;
    if (sp > sq) return false;
  }
  return true;
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int max_part) {
  if (n < 1 || n > 40) throw GuardExceeded("partition enumeration requires 1 <= n <= 40");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(n, max_part, prefix, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int n) { return enumerate_partitions(n, n); }

std::vector<int> richardson_blocks(const Partition& p) { return p.conjugate().parts(); }

std::uint64_t partition_count(int n) {
  if (n < 0 || n > 400) throw GuardExceeded("partition_count requires 0 <= n <= 400");
  std::vector<boost::multiprecision::cpp_int> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    boost::multiprecision::cpp_int acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) acc += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  if (p[static_cast<std::size_t>(n)] > std::numeric_limits<std::uint64_t>::max())
    throw GuardExceeded("p(n) exceeds 64 bits");
  return static_cast<std::uint64_t>(p[static_cast<std::size_t>(n)]);
}

}  // namespace liechar
