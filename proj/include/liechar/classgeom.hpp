#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liechar/partitions.hpp"

namespace liechar {

/// Classical group types. SOOdd/SOEven stand for B and D; Spin and SO
/// share every dimension computed here.
enum class Family { GL, SL, Sp, SOOdd, SOEven };

std::string to_string(Family f);
/// Accepts GL, SL, Sp, SO_odd/B, SO_even/D (case-insensitive). Plain "SO"
/// is resolved by the parity of natural_dim.
Family parse_family(std::string_view name, int natural_dim = 0);

/// Dimension of the classical group of the given type acting on a natural
/// module of the given dimension. Valid for any size, including the small
/// factors (Sp_2, SO_3, SO_2, SO_1, ...) that show up inside Levis.
int dim_group(Family f, int natural_dim);

/// An ambient simple (or GL) classical group, validated against the ranges
/// GL/SL n >= 2, Sp n even >= 4, SO odd >= 7, SO even >= 8.
struct GroupFamily {
  Family family = Family::GL;
  int natural_dim = 2;

  static GroupFamily make(Family f, int natural_dim);

  int rank() const;
  int dim() const { return dim_group(family, natural_dim); }
  std::string label() const;
};

int dim_group(const GroupFamily& g);

/// dim G / rank - 1; type A uses the SL dimension (GL is treated as SL).
int coxeter_number(const GroupFamily& g);

/// Good-characteristic class constraint: Sp needs odd parts with even
/// multiplicity, SO needs even parts with even multiplicity.
bool admissible_jordan_type(Family f, const Partition& p);

/// All Jordan types of unipotent classes on a natural module of dimension n
/// (n == 0 yields the single empty partition).
std::vector<Partition> unipotent_jordan_types(Family f, int natural_dim);

/// Centralizer dimension of a unipotent element with Jordan type p.
/// GL/SL: sum i m_i^2 + 2 sum_{i<j} i m_i m_j; Sp adds and SO subtracts
/// the odd-part count before halving. Throws PreconditionError on a parity
/// violation and CheckFailure on a non-integral half.
int dim_centralizer_unipotent(Family f, const Partition& p);

/// dim G - dim C_G(u). For SL this equals the GL value.
int dim_class(Family f, const Partition& p);

/// A Levi subgroup GL_{n1} x ... x GL_{nm} (x a classical factor of the
/// ambient type for Sp/SO). classical_factor is the natural-module
/// dimension of that residual factor.
struct LeviShape {
  GroupFamily ambient;
  std::vector<int> gl_factors;
  int classical_factor = 0;

  /// Validates sum(gl_factors) (doubled for Sp/SO) + classical_factor.
  static LeviShape make(const GroupFamily& ambient, std::vector<int> gl_factors, int classical_factor = 0);

  /// Type of the classical factor (Sp stays Sp; B/D stay B/D).
  Family classical_family() const;

  /// Algebraic-group dimension of the Levi: sum n_i^2 + dim(classical
  /// factor), minus one for an SL ambient.
  int dim() const;

  /// True when no factor carries a nontrivial unipotent element.
  bool is_torus() const;

  std::string label() const;
};

/// One partition per GL factor plus one for the classical factor.
struct JordanType {
  std::vector<Partition> gl_parts;
  Partition classical_part;

  bool is_trivial() const;
  std::string to_string() const;
};

/// Throws PreconditionError if j does not fit the factors of shape.
void validate_jordan_type(const LeviShape& shape, const JordanType& j);

/// Jordan type in the ambient natural module: GL factor multiplicities
/// merge directly for GL/SL and enter doubled for Sp/SO.
Partition ambient_jordan_type(const LeviShape& shape, const JordanType& j);

struct LeviClassDims {
  int in_levi = 0;
  int in_group = 0;
};

LeviClassDims dim_class_in_levi(const LeviShape& shape, const JordanType& j);

struct SupportBound {
  int support = 0;  ///< n - number of Jordan blocks = dim [V, u]
  int bound = 0;    ///< s(2n - s) for type A, s(4r - s + 1)/2 otherwise
};

SupportBound support_upper_bound(const GroupFamily& g, const Partition& p);

}  // namespace liechar
