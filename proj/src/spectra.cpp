#include "liechar/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "liechar/alphabeta.hpp"
#include "liechar/classgeom.hpp"
#include "liechar/common.hpp"
#include "liechar/parallel.hpp"

namespace liechar {

namespace {

constexpr std::size_t kMaxClasses = 400;
constexpr int kMaxAttempts = 5;
constexpr double kOrthTol = 1e-8;
constexpr double kDegreeTol = 1e-6;

using CMatrix = Eigen::MatrixXcd;

double round_to(double x, double step) { return std::round(x / step) * step; }

struct Attempt {
  std::vector<std::vector<Complex>> values;
  std::vector<double> raw_degrees;
  double min_gap = 0;
};

// One random Hermitian combination of the normalised class-sum matrices.
Attempt diagonalise(const ClassTable& t, const StructureConstants& sc, std::mt19937& rng) {
  const std::size_t c = t.size();
  const double order = static_cast<double>(t.order());
  std::vector<double> sq(c);
  for (std::size_t k = 0; k < c; ++k) sq[k] = std::sqrt(static_cast<double>(t[k].size));

  std::uniform_real_distribution<double> weight(-1.0, 1.0);
  std::vector<double> cw(c), dw(c);
  for (std::size_t j = 0; j < c; ++j) {
    cw[j] = weight(rng);
    dw[j] = weight(rng);
  }

  // B_j = D^-1 A_j D / |C_j|, (A_j)_{ik} = N_{ijk}; H = sum c_j (B_j + B_j^T) + i d_j (B_j - B_j^T).
  CMatrix h = CMatrix::Zero(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c));
  parallel_for(c, [&](std::size_t i) {
    for (std::size_t k = 0; k < c; ++k) {
      Complex acc = 0;
      for (std::size_t j = 0; j < c; ++j) {
        const double cj = static_cast<double>(t[j].size);
        const double bik = static_cast<double>(sc(i, j, k)) * sq[k] / (sq[i] * cj);
        const double bki = static_cast<double>(sc(k, j, i)) * sq[i] / (sq[k] * cj);
        acc += Complex(cw[j] * (bik + bki), dw[j] * (bik - bki));
      }
      h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = acc;
    }
  });

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw CheckFailure("eigen solver failed");
  const auto& evals = solver.eigenvalues();
  Attempt out;
  out.min_gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index e = 1; e < evals.size(); ++e) out.min_gap = std::min(out.min_gap, evals[e] - evals[e - 1]);

  const auto& vecs = solver.eigenvectors();
  for (std::size_t e = 0; e < c; ++e) {
    std::vector<Complex> w(c);
    for (std::size_t k = 0; k < c; ++k) w[k] = vecs(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(e)) * sq[k];
    const Complex w0 = w[0];
    if (std::abs(w0) < 1e-12) throw CheckFailure("eigenvector vanishes at the identity class");
    double norm = 0;
    for (std::size_t k = 0; k < c; ++k) {
      w[k] /= w0;
      norm += std::norm(w[k]) / static_cast<double>(t[k].size);
    }
    const double deg = std::sqrt(order / norm);
    std::vector<Complex> chi(c);
    for (std::size_t k = 0; k < c; ++k) chi[k] = deg * w[k] / static_cast<double>(t[k].size);
    out.values.push_back(std::move(chi));
    out.raw_degrees.push_back(deg);
  }
  return out;
}

bool row_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double ar = round_to(a[k].real(), 1e-6), br = round_to(b[k].real(), 1e-6);
    if (ar != br) return ar < br;
    const double ai = round_to(a[k].imag(), 1e-6), bi = round_to(b[k].imag(), 1e-6);
    if (ai != bi) return ai < bi;
  }
  return false;
}

void fill_residuals(CharTable& ct) {
  const ClassTable& t = *ct.classes;
  const std::size_t c = t.size();
  const double order = static_cast<double>(t.order());
  double row = 0;
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = a; b < c; ++b) {
      Complex s = 0;
      for (std::size_t k = 0; k < c; ++k)
        s += static_cast<double>(t[k].size) * ct.values[a][k] * std::conj(ct.values[b][k]);
      s /= order;
      row = std::max(row, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  double col = 0;
  for (std::size_t k = 0; k < c; ++k)
    for (std::size_t l = k; l < c; ++l) {
      Complex s = 0;
      for (std::size_t a = 0; a < c; ++a) s += ct.values[a][k] * std::conj(ct.values[a][l]);
      const double cent = static_cast<double>(t[k].centralizer_order);
      col = std::max(col, std::abs(s - (k == l ? cent : 0.0)) / cent);
    }
  ct.row_residual = row;
  ct.column_residual = col;
}

bool is_block_diagonal(const Mat& g, const std::vector<int>& blocks) {
  std::vector<int> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b) block_of.insert(block_of.end(), static_cast<std::size_t>(blocks[b]), static_cast<int>(b));
  const int n = static_cast<int>(block_of.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (block_of[static_cast<std::size_t>(i)] != block_of[static_cast<std::size_t>(j)] && g.at(i, j)) return false;
  return true;
}

void check_blocks(const MatOps& ops, const std::vector<int>& blocks) {
  if (blocks.empty()) throw PreconditionError("levi blocks must be nonempty");
  for (int b : blocks)
    if (b < 1) throw PreconditionError("levi blocks must be positive");
  if (std::accumulate(blocks.begin(), blocks.end(), 0) != ops.n()) throw PreconditionError("levi blocks must sum to n");
}

std::uint64_t p_part(std::uint64_t x, std::uint64_t p) {
  std::uint64_t out = 1;
  while (x % p == 0) {
    x /= p;
    out *= p;
  }
  return out;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

CharTable character_table(std::shared_ptr<const ClassTable> t, const StructureConstants& sc, std::uint32_t seed) {
  const std::size_t c = t->size();
  if (c > kMaxClasses) throw GuardExceeded("character tables are limited to 400 classes");
  if (sc.classes() != c) throw PreconditionError("structure constants do not match the class table");
  std::mt19937 rng(seed);
  std::string last_error = "no attempt made";
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    Attempt a = diagonalise(*t, sc, rng);
    if (c > 1 && a.min_gap < 1e-6) {
      last_error = "eigenvalues cluster (gap " + std::to_string(a.min_gap) + ")";
      continue;
    }
    CharTable ct;
    ct.classes = t;
    ct.attempts = attempt;
    std::vector<std::size_t> idx(c);
    std::iota(idx.begin(), idx.end(), 0);
    double dres = 0;
    std::vector<std::uint64_t> deg(c);
    for (std::size_t e = 0; e < c; ++e) {
      const double r = std::round(a.raw_degrees[e]);
      dres = std::max(dres, std::abs(a.raw_degrees[e] - r));
      deg[e] = static_cast<std::uint64_t>(r);
    }
    auto is_trivial = [&](std::size_t e) {
      for (const auto& v : a.values[e])
        if (std::abs(v - 1.0) > 1e-6) return false;
      return true;
    };
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      const bool tx = is_trivial(x), ty = is_trivial(y);
      if (tx != ty) return tx;
      if (deg[x] != deg[y]) return deg[x] < deg[y];
      return row_less(a.values[x], a.values[y]);
    });
    for (std::size_t e : idx) {
      ct.values.push_back(a.values[e]);
      ct.degrees.push_back(deg[e]);
    }
    ct.degree_residual = dres;
    fill_residuals(ct);
    std::uint64_t sumsq = 0;
    for (auto d : ct.degrees) sumsq += d * d;
    bool divides = true;
    for (auto d : ct.degrees) divides = divides && d > 0 && t->order() % d == 0;
    if (dres < kDegreeTol && ct.row_residual < kOrthTol && ct.column_residual < kOrthTol && sumsq == t->order() &&
        divides && is_trivial(idx[0]))
      return ct;
    std::ostringstream msg;
    msg << "checks failed (degree residual " << dres << ", row residual " << ct.row_residual << ", column residual "
        << ct.column_residual << ", sum of squares " << sumsq << ")";
    last_error = msg.str();
  }
  throw CheckFailure("character table of " + t->spec().label() + " unresolved after 5 attempts: " + last_error);
}

CharTable character_table(std::shared_ptr<const ClassTable> t, std::uint32_t seed) {
  const StructureConstants sc = StructureConstants::compute(*t);
  return character_table(std::move(t), sc, seed);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> generic_gl2_degrees(std::uint64_t q) {
  if (q < 3) throw PreconditionError("generic GL_2 degrees need q >= 3");
  return {{1, q - 1}, {q - 1, q * (q - 1) / 2}, {q, q - 1}, {q + 1, (q - 1) * (q - 2) / 2}};
}

std::vector<std::uint64_t> expand_degrees(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& m) {
  std::vector<std::uint64_t> out;
  for (const auto& [d, k] : m) out.insert(out.end(), k, d);
  std::sort(out.begin(), out.end());
  return out;
}

ZetaValue zeta(const std::vector<std::uint64_t>& degrees, double s) {
  if (!(s > 0)) throw PreconditionError("zeta needs s > 0");
  std::vector<double> terms;
  terms.reserve(degrees.size());
  for (auto d : degrees) {
    if (d == 0) throw PreconditionError("degrees must be positive");
    terms.push_back(std::pow(static_cast<double>(d), -s));
  }
  std::sort(terms.begin(), terms.end());
  // Smallest terms first; the last term is a trivial character's 1.
  double rest = 0;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) rest += terms[i];
  const double one = terms.empty() ? 0.0 : terms.back();
  return {s, rest + one, rest + one - 1.0};
}

std::vector<Mat> unipotent_radical(const MatOps& ops, const std::vector<int>& blocks) {
  check_blocks(ops, blocks);
  std::vector<int> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b) block_of.insert(block_of.end(), static_cast<std::size_t>(blocks[b]), static_cast<int>(b));
  const int n = ops.n();
  std::vector<std::pair<int, int>> free;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (block_of[static_cast<std::size_t>(i)] < block_of[static_cast<std::size_t>(j)]) free.emplace_back(i, j);
  const int q = ops.field().q();
  std::vector<Mat> out;
  std::vector<int> digits(free.size(), 0);
  for (;;) {
    Mat u = ops.identity();
    for (std::size_t f = 0; f < free.size(); ++f) u.at(free[f].first, free[f].second) = static_cast<Elem>(digits[f]);
    out.push_back(u);
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return out;
}

bool in_standard_levi(const MatOps& ops, const Mat& g, const std::vector<int>& blocks) {
  check_blocks(ops, blocks);
  return is_block_diagonal(g, blocks);
}

bool centralizer_in_levi(const ClassTable& t, const Mat& g, const std::vector<int>& blocks) {
  check_blocks(t.ops(), blocks);
  bool inside = true;
  visit_centralizer(t.ops(), g, [&](const Mat& x) {
    if (inside && t.contains(x) && !is_block_diagonal(x, blocks)) inside = false;
  });
  return inside;
}

std::uint64_t centralizer_order_in_group(const ClassTable& t, const Mat& g) {
  std::uint64_t count = 0;
  visit_centralizer(t.ops(), g, [&](const Mat& x) {
    if (t.contains(x)) ++count;
  });
  return count;
}

Complex hc_coset_average(const CharTable& ct, std::size_t chi, const Mat& g, const std::vector<int>& blocks) {
  const ClassTable& t = *ct.classes;
  if (chi >= ct.size()) throw PreconditionError("character index out of range");
  if (!t.contains(g)) throw PreconditionError("g is not in " + t.spec().label());
  if (!in_standard_levi(t.ops(), g, blocks)) throw PreconditionError("g is not in the standard Levi");
  if (!centralizer_in_levi(t, g, blocks)) throw PreconditionError("C_G(g) is not contained in the Levi");
  const auto radical = unipotent_radical(t.ops(), blocks);
  Complex sum = 0;
  for (const auto& u : radical) sum += ct.values[chi][static_cast<std::size_t>(t.class_of(t.ops().mul(g, u)))];
  return sum / static_cast<double>(radical.size());
}

CosetReport hc_coset_check(const CharTable& ct, const Mat& g, const std::vector<int>& blocks, double tol) {
  const ClassTable& t = *ct.classes;
  if (!t.contains(g)) throw PreconditionError("g is not in " + t.spec().label());
  if (!in_standard_levi(t.ops(), g, blocks)) throw PreconditionError("g is not in the standard Levi");
  if (!centralizer_in_levi(t, g, blocks)) throw PreconditionError("C_G(g) is not contained in the Levi");
  const auto radical = unipotent_radical(t.ops(), blocks);
  std::vector<std::size_t> coset_classes;
  coset_classes.reserve(radical.size());
  for (const auto& u : radical) coset_classes.push_back(static_cast<std::size_t>(t.class_of(t.ops().mul(g, u))));
  const auto gk = static_cast<std::size_t>(t.class_of(g));
  CosetReport rep;
  for (std::size_t chi = 0; chi < ct.size(); ++chi) {
    Complex sum = 0;
    for (auto k : coset_classes) sum += ct.values[chi][k];
    sum /= static_cast<double>(radical.size());
    rep.max_residual = std::max(rep.max_residual, std::abs(sum - ct.values[chi][gk]));
    ++rep.characters;
  }
  rep.ok = rep.max_residual < tol;
  return rep;
}

std::size_t steinberg_index(const CharTable& ct) {
  const ClassTable& t = *ct.classes;
  const int n = t.spec().n;
  const auto target = ipow(static_cast<std::uint64_t>(t.spec().q), n * (n - 1) / 2);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < ct.size(); ++i)
    if (ct.degrees[i] == target) candidates.push_back(i);
  if (candidates.empty()) throw CheckFailure("no character of Steinberg degree");
  if (candidates.size() == 1) return candidates[0];

  // Borel subgroup: upper triangular members of G.
  const int q = t.spec().q;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) slots.emplace_back(i, j);
  std::vector<std::uint64_t> class_count(t.size(), 0);
  std::uint64_t borel = 0;
  std::vector<int> digits(slots.size(), 0);
  for (;;) {
    Mat b;
    for (std::size_t s = 0; s < slots.size(); ++s) b.at(slots[s].first, slots[s].second) = static_cast<Elem>(digits[s]);
    if (t.contains(b)) {
      ++class_count[static_cast<std::size_t>(t.class_of(b))];
      ++borel;
    }
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  std::vector<std::size_t> unique;
  for (auto i : candidates) {
    Complex s = 0;
    for (std::size_t k = 0; k < t.size(); ++k) s += static_cast<double>(class_count[k]) * ct.values[i][k];
    s /= static_cast<double>(borel);
    if (std::abs(s - 1.0) < 1e-6) unique.push_back(i);
  }
  if (unique.size() != 1) throw CheckFailure("Steinberg character is not uniquely identified");
  return unique[0];
}

SteinbergReport steinberg_check(const CharTable& ct, double tol) {
  const ClassTable& t = *ct.classes;
  SteinbergReport rep;
  rep.index = steinberg_index(ct);
  const auto p = static_cast<std::uint64_t>(t.field().p());
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!t[k].p_regular) continue;
    const double expected = static_cast<double>(p_part(t[k].centralizer_order, p));
    rep.max_residual = std::max(rep.max_residual, std::abs(std::abs(ct.values[rep.index][k]) - expected) / expected);
    ++rep.classes_checked;
  }
  rep.ok = rep.classes_checked > 0 && rep.max_residual < tol;
  return rep;
}

UnipotentDegreeReport unipotent_degree_check(const CharTable& ct) {
  const auto& spec = ct.classes->spec();
  if (spec.kind != GroupKind::GL) throw PreconditionError("the unipotent degree check needs GL_n(q)");
  const auto q = static_cast<std::uint64_t>(spec.q);
  UnipotentDegreeReport rep;
  rep.expected = (ipow(q, spec.n) - q) / (q - 1);
  rep.found = std::find(ct.degrees.begin(), ct.degrees.end(), rep.expected) != ct.degrees.end();
  return rep;
}

Main1Audit main1_bound_audit(const CharTable& ct, const Mat& g, const std::vector<int>& blocks) {
  const ClassTable& t = *ct.classes;
  const auto& spec = t.spec();
  if (!t.contains(g)) throw PreconditionError("g is not in " + spec.label());
  if (!in_standard_levi(t.ops(), g, blocks)) throw PreconditionError("g is not in the standard Levi");
  if (!centralizer_in_levi(t, g, blocks)) throw PreconditionError("C_G(g) is not contained in the Levi");
  std::uint64_t levi_order = 1;
  for (int b : blocks) levi_order *= gl_order(b, static_cast<std::uint64_t>(spec.q));
  if (spec.kind == GroupKind::SL) levi_order /= static_cast<std::uint64_t>(spec.q - 1);
  if (centralizer_order_in_group(t, g) != levi_order) throw PreconditionError("C_G(g) is not the full standard Levi");

  const Family fam = spec.kind == GroupKind::GL ? Family::GL : Family::SL;
  const auto ambient = GroupFamily::make(fam, spec.n);
  std::vector<int> sorted = blocks;
  std::sort(sorted.rbegin(), sorted.rend());
  Main1Audit rep;
  const Rational alpha = sorted.size() == 1 ? Rational(1) : alpha_classical(LeviShape::make(ambient, sorted)).value;
  rep.alpha = to_double(alpha);
  const auto gk = static_cast<std::size_t>(t.class_of(g));
  for (std::size_t i = 1; i < ct.size(); ++i) {
    const double v = std::abs(ct.values[i][gk]) / std::pow(static_cast<double>(ct.degrees[i]), rep.alpha);
    if (v > rep.effective_f) {
      rep.effective_f = v;
      rep.argmax = i;
    }
  }
  const FBound fb = f_bound(ambient.rank(), BigInt(spec.q));
  rep.f_bound = fb.general.str();
  rep.f_bound_value = static_cast<double>(fb.general);
  rep.within_f_bound = rep.effective_f <= rep.f_bound_value;
  return rep;
}

std::vector<double> frobenius_walk(const CharTable& ct, std::size_t c, int t) {
  const ClassTable& tab = *ct.classes;
  if (c >= tab.size()) throw PreconditionError("class index out of range");
  if (t < 0) throw PreconditionError("step count must be nonnegative");
  std::vector<double> out(tab.size(), 0);
  for (std::size_t k = 0; k < tab.size(); ++k) {
    Complex s = 0;
    for (std::size_t i = 0; i < ct.size(); ++i) {
      const double d = static_cast<double>(ct.degrees[i]);
      Complex power = 1;
      for (int step = 0; step < t; ++step) power *= ct.values[i][c];
      s += std::pow(d, 1.0 - t) * power * std::conj(ct.values[i][k]);
    }
    out[k] = s.real() / static_cast<double>(tab.order());
  }
  return out;
}

}  // namespace liechar
