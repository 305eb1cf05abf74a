#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "liechar/common.hpp"
#include "liechar/partitions.hpp"

namespace liechar {

enum class ExceptionalGroup { G2, F4, E6, E7, E8 };

std::string to_string(ExceptionalGroup g);
ExceptionalGroup parse_exceptional(std::string_view name);

/// One alpha entry for an exceptional group. Labels are ASCII: "~" marks a
/// short-root subsystem, a leading ">" means "has a simple factor of this
/// type", "'" distinguishes the second A5 in E7. Upper-bound entries carry
/// is_upper_bound.
struct ExceptionalAlphaEntry {
  ExceptionalGroup group = ExceptionalGroup::G2;
  std::string levi_label;
  Rational alpha{0};
  bool is_upper_bound = false;
};

/// All entries of one group, in table order.
const std::vector<ExceptionalAlphaEntry>& exceptional_alpha_table(ExceptionalGroup g);

/// Lookup by label. Accepts the ASCII form, the forms with or without the
/// leading ">", the Unicode prime and triangle, and "rest". Throws
/// PreconditionError for an unknown label.
const ExceptionalAlphaEntry& alpha_exceptional(ExceptionalGroup g, std::string_view label);

/// Exact entries never fall below an upper-bound entry of the same group,
/// and the upper-bound entries are non-increasing in table order.
bool exceptional_table_bounds_consistent(ExceptionalGroup g);

/// A unipotent class of the D6 Levi of E7.
struct E7D6Row {
  Partition jordan;      ///< Jordan form on the 12-dimensional module
  int variant = 0;       ///< 1 for the second class of a very even form
  std::string e7_label;  ///< class in E7
  int dim_uL = 0;
  int dim_uG = 0;
};

const std::vector<E7D6Row>& e7_d6_rows();

struct E7D6Report {
  std::size_t rows = 0;
  std::vector<std::string> mismatches;  ///< rows whose dim_uL does not recompute
  Rational max_ratio{0};
  std::size_t argmax = 0;
  Rational table_value{0};
  bool ok = false;
};

/// Recomputes every dim_uL with the SO_12 formula, takes the maximum ratio
/// and compares it to the E7/D6 table entry.
E7D6Report verify_e7_d6();

}  // namespace liechar
