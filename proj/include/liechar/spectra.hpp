#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "liechar/ffgroup.hpp"

namespace liechar {

using Complex = std::complex<double>;

constexpr std::uint32_t kDefaultSeed = 20240601u;

/// Irreducible characters (rows) by classes (columns) of a ClassTable,
/// computed numerically. Row 0 is the trivial character; the remaining rows
/// are sorted by degree and then by rounded values.
struct CharTable {
  std::shared_ptr<const ClassTable> classes;
  std::vector<std::vector<Complex>> values;
  std::vector<std::uint64_t> degrees;
  double row_residual = 0;     ///< max |<chi_i, chi_j> - delta_ij|
  double column_residual = 0;  ///< max |sum_chi chi(g_k) conj(chi(g_l)) - delta_kl |C(g_k)||, relative
  double degree_residual = 0;  ///< max distance of a computed degree from its rounding
  int attempts = 0;

  std::size_t size() const { return values.size(); }
};

/// Burnside's method: the class-sum matrices (A_j)_{ik} = N_{ijk},
/// conjugated by diag(sqrt|C_k|), are normal and commute. A random
/// Hermitian combination is diagonalised; retries (at most 5, new random
/// weights from the seeded generator) happen when eigenvalues cluster or the
/// result fails the checks. Guard: at most 400 classes.
CharTable character_table(std::shared_ptr<const ClassTable> t, const StructureConstants& sc,
                          std::uint32_t seed = kDefaultSeed);

/// Convenience: builds structure constants first.
CharTable character_table(std::shared_ptr<const ClassTable> t, std::uint32_t seed = kDefaultSeed);

/// Degree multiset of GL_2(q) as (degree, multiplicity) pairs.
std::vector<std::pair<std::uint64_t, std::uint64_t>> generic_gl2_degrees(std::uint64_t q);

/// Degrees expanded from (degree, multiplicity) pairs.
std::vector<std::uint64_t> expand_degrees(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& m);

struct ZetaValue {
  double s = 0;
  double value = 0;
  double minus_one = 0;
};

/// sum over characters of chi(1)^-s, summed smallest terms first.
ZetaValue zeta(const std::vector<std::uint64_t>& degrees, double s);

/// Standard block-upper-triangular unipotent radical for the given block
/// sizes: identity diagonal blocks, free entries above them.
std::vector<Mat> unipotent_radical(const MatOps& ops, const std::vector<int>& blocks);

/// Standard Levi (block diagonal) membership.
bool in_standard_levi(const MatOps& ops, const Mat& g, const std::vector<int>& blocks);

/// True when every element of C_G(g) is block diagonal. Enumerates the
/// centralizer algebra (guard q^dim <= 3e7).
bool centralizer_in_levi(const ClassTable& t, const Mat& g, const std::vector<int>& blocks);

/// |C_G(g)| by enumerating the centralizer algebra and keeping group members.
std::uint64_t centralizer_order_in_group(const ClassTable& t, const Mat& g);

/// (1/|U|) sum_{x in gU} chi(x). Throws PreconditionError unless g lies in
/// the standard Levi and C_G(g) is inside it.
Complex hc_coset_average(const CharTable& ct, std::size_t chi, const Mat& g, const std::vector<int>& blocks);

struct CosetReport {
  std::size_t characters = 0;
  double max_residual = 0;
  bool ok = false;
};

/// hc_coset_average against chi(g) for every character.
CosetReport hc_coset_check(const CharTable& ct, const Mat& g, const std::vector<int>& blocks, double tol = 1e-8);

/// Index of the Steinberg character: the character of degree q^{n(n-1)/2};
/// when several share that degree, the one whose restriction to the upper
/// triangular Borel subgroup contains the trivial character exactly once.
std::size_t steinberg_index(const CharTable& ct);

struct SteinbergReport {
  std::size_t index = 0;
  std::size_t classes_checked = 0;
  double max_residual = 0;
  bool ok = false;
};

/// |St(g)| = |C_G(g)|_p for every p-regular class.
SteinbergReport steinberg_check(const CharTable& ct, double tol = 1e-6);

struct UnipotentDegreeReport {
  std::uint64_t expected = 0;  ///< (q^n - q)/(q - 1)
  bool found = false;
};

UnipotentDegreeReport unipotent_degree_check(const CharTable& ct);

struct Main1Audit {
  double alpha = 0;
  double effective_f = 0;  ///< max over nontrivial chi of |chi(g)| / chi(1)^alpha
  std::size_t argmax = 0;
  std::string f_bound;     ///< general f(r, q) value as an exact rational string
  double f_bound_value = 0;
  bool within_f_bound = false;
};

/// Requires C_G(g) to equal the standard Levi of the block shape.
Main1Audit main1_bound_audit(const CharTable& ct, const Mat& g, const std::vector<int>& blocks);

/// P^t(z_k) = (1/|G|) sum_chi chi(1)^{1-t} chi(y)^t conj(chi(z_k)) for the
/// walk driven by class c, one value per class (per element, not per class mass).
std::vector<double> frobenius_walk(const CharTable& ct, std::size_t c, int t);

}  // namespace liechar
