#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liechar/classgeom.hpp"
#include "liechar/common.hpp"
#include "liechar/ffgroup.hpp"

namespace liechar {

/// Distribution of the class walk after t steps. probs[k] is the
/// probability of each single element of class k, so
/// sum_k sizes[k] * probs[k] = 1.
struct WalkState {
  std::vector<BigRational> probs;
  int t = 0;
};

/// The walk x -> x y with y uniform in one class. Holds the column
/// M[j][k] = N_{j c k} of the structure constants.
class ClassWalk {
 public:
  /// Throws PreconditionError unless the class generates G (when required).
  ClassWalk(std::shared_ptr<const ClassTable> table, int cls, bool require_generating = true);

  const ClassTable& table() const { return *table_; }
  int cls() const { return cls_; }
  const std::vector<std::vector<std::uint64_t>>& column() const { return column_; }

  WalkState start() const;
  /// P^{t+1}(k) = sum_j P^t(j) N_{jck} / |C_c|.
  WalkState step(const WalkState& s) const;

 private:
  std::shared_ptr<const ClassTable> table_;
  int cls_ = 0;
  std::vector<std::vector<std::uint64_t>> column_;
};

struct Norms {
  BigRational l1;    ///< sum_k |C_k| |P(k) - 1/|G||
  BigRational linf;  ///< |G| max_k |P(k) - 1/|G||
  double l1_value = 0;
  double linf_value = 0;
};

Norms norms(const WalkState& s, const ClassTable& t);

/// Classes in the support of C^t for t = 0, 1, ..., until the sequence
/// repeats (at most |classes| + 2 terms past the first full cover).
std::vector<std::vector<bool>> power_supports(const ClassTable& t, const std::vector<std::vector<std::uint64_t>>& column);

/// True when the subgroup generated by the class is all of G.
bool class_generates(const ClassTable& t, const std::vector<std::vector<std::uint64_t>>& column);

/// Least t >= 1 with C^t = G, or nothing when no power covers G.
std::optional<int> covering_number(const ClassTable& t, int cls);

struct WalkRow {
  int t = 0;
  double l1 = 0;
  double linf = 0;
  std::uint64_t support_size = 0;  ///< |C^t|
};

struct MixingReport {
  std::string group;
  int cls = 0;
  std::uint64_t class_size = 0;
  std::vector<WalkRow> rows;
  std::optional<int> t_l1;     ///< least t with l1 < 1/e
  std::optional<int> t_linf;   ///< least t with linf < 1/e
  std::optional<int> cover;    ///< least t with C^t = G
  double lower_bound = 0;      ///< (log|G| + log(1 - 1/e)) / log|C|
  int subset_bound = 1;        ///< N + 1 for the largest N with |C^N| < |G|(1 - 1/e)
  double cover_lower = 0;      ///< log|G| / log|C|
};

/// Runs the exact walk for t = 0..tmax (stopping early once both norms are
/// below 1/e and C^t = G).
MixingReport mixing_time(std::shared_ptr<const ClassTable> table, int cls, int tmax = 40);

struct BoundEntry {
  std::string name;
  std::string statement;  ///< what the value bounds
  Rational value{0};
  bool applicable = false;
  std::string proviso;
};

struct BoundCatalog {
  GroupFamily ambient;
  int coxeter = 0;
  std::vector<BoundEntry> entries;
};

/// Numeric mixing and covering bounds for a classical ambient group. The
/// Levi shape and supp(y) are optional (0 / nullopt skips the entries that
/// need them). q only feeds the characteristic proviso.
BoundCatalog bound_catalog(const GroupFamily& ambient, const std::optional<LeviShape>& shape, int supp_y, int q);

}  // namespace liechar
