#include "liechar/walks.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "liechar/alphabeta.hpp"

namespace liechar {

namespace {

// 1/e truncated to 40 digits; the true value lies in [low, low + 1e-40).
const BigRational& inv_e_low() {
  static const BigRational v(BigInt("3678794411714423215955237701614608674458"), BigInt("10000000000000000000000000000000000000000"));
  return v;
}

const BigRational& inv_e_high() {
  static const BigRational v = inv_e_low() + BigRational(BigInt(1), BigInt("10000000000000000000000000000000000000000"));
  return v;
}

// x < 1/e, decided exactly unless x falls inside the 1e-40 bracket.
bool below_inv_e(const BigRational& x) {
  if (x < inv_e_low()) return true;
  if (x >= inv_e_high()) return false;
  throw CheckFailure("distance within 1e-40 of 1/e; threshold undecided");
}

int smallest_prime_factor(int q) {
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) return p;
  return q;
}

Rational ceil_rational(const Rational& r) {
  const auto n = r.numerator(), d = r.denominator();
  return Rational(n >= 0 ? (n + d - 1) / d : n / d);
}

}  // namespace

ClassWalk::ClassWalk(std::shared_ptr<const ClassTable> table, int cls, bool require_generating)
    : table_(std::move(table)), cls_(cls) {
  if (cls < 0 || static_cast<std::size_t>(cls) >= table_->size()) throw PreconditionError("class index out of range");
  column_ = structure_column(*table_, cls);
  if (require_generating && !class_generates(*table_, column_)) throw PreconditionError("class does not generate " + table_->spec().label());
}

WalkState ClassWalk::start() const {
  WalkState s;
  s.probs.assign(table_->size(), BigRational(0));
  s.probs[0] = 1;
  return s;
}

WalkState ClassWalk::step(const WalkState& s) const {
  const std::size_t c = table_->size();
  const BigRational inv_size(BigInt(1), BigInt((*table_)[static_cast<std::size_t>(cls_)].size));
  WalkState out;
  out.t = s.t + 1;
  out.probs.assign(c, BigRational(0));
  for (std::size_t j = 0; j < c; ++j) {
    if (s.probs[j] == 0) continue;
    for (std::size_t k = 0; k < c; ++k)
      if (column_[j][k]) out.probs[k] += s.probs[j] * column_[j][k];
  }
  for (auto& p : out.probs) p *= inv_size;
  return out;
}

Norms norms(const WalkState& s, const ClassTable& t) {
  const BigRational u(BigInt(1), BigInt(t.order()));
  Norms n;
  BigRational worst = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    BigRational d = s.probs[k] - u;
    if (d < 0) d = -d;
    n.l1 += d * t[k].size;
    if (d > worst) worst = d;
  }
  n.linf = worst * t.order();
  n.l1_value = static_cast<double>(n.l1);
  n.linf_value = static_cast<double>(n.linf);
  return n;
}

std::vector<std::vector<bool>> power_supports(const ClassTable& t, const std::vector<std::vector<std::uint64_t>>& column) {
  const std::size_t c = t.size();
  std::vector<std::vector<bool>> seq;
  std::set<std::vector<bool>> seen;
  std::vector<bool> cur(c, false);
  cur[0] = true;
  while (seen.insert(cur).second) {
    seq.push_back(cur);
    std::vector<bool> next(c, false);
    for (std::size_t j = 0; j < c; ++j) {
      if (!cur[j]) continue;
      for (std::size_t k = 0; k < c; ++k)
        if (column[j][k]) next[k] = true;
    }
    cur = std::move(next);
  }
  seq.push_back(cur);  // first repeated term closes the cycle
  return seq;
}

bool class_generates(const ClassTable& t, const std::vector<std::vector<std::uint64_t>>& column) {
  const auto seq = power_supports(t, column);
  std::vector<bool> all(t.size(), false);
  for (std::size_t i = 1; i < seq.size(); ++i)
    for (std::size_t k = 0; k < t.size(); ++k)
      if (seq[i][k]) all[k] = true;
  return std::all_of(all.begin(), all.end(), [](bool b) { return b; });
}

std::optional<int> covering_number(const ClassTable& t, int cls) {
  if (cls < 0 || static_cast<std::size_t>(cls) >= t.size()) throw PreconditionError("class index out of range");
  const auto column = structure_column(t, cls);
  if (!class_generates(t, column)) throw PreconditionError("class does not generate " + t.spec().label());
  const auto seq = power_supports(t, column);
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (std::all_of(seq[i].begin(), seq[i].end(), [](bool b) { return b; })) return static_cast<int>(i);
  return std::nullopt;
}

MixingReport mixing_time(std::shared_ptr<const ClassTable> table, int cls, int tmax) {
  if (tmax < 1) throw PreconditionError("tmax must be positive");
  const ClassWalk walk(table, cls);
  const ClassTable& t = *table;
  MixingReport rep;
  rep.group = t.spec().label();
  rep.cls = cls;
  rep.class_size = t[static_cast<std::size_t>(cls)].size;
  const double log_g = std::log(static_cast<double>(t.order()));
  const double log_c = std::log(static_cast<double>(rep.class_size));
  rep.lower_bound = (log_g + std::log(1.0 - std::exp(-1.0))) / log_c;
  rep.cover_lower = log_g / log_c;
  const long double threshold = static_cast<long double>(t.order()) * (1.0L - std::exp(-1.0L));

  WalkState s = walk.start();
  for (int step = 0; step <= tmax; ++step) {
    if (step) s = walk.step(s);
    const Norms nm = norms(s, t);
    WalkRow row;
    row.t = step;
    row.l1 = nm.l1_value;
    row.linf = nm.linf_value;
    for (std::size_t k = 0; k < t.size(); ++k)
      if (s.probs[k] != 0) row.support_size += t[k].size;
    rep.rows.push_back(row);
    if (!rep.t_l1 && below_inv_e(nm.l1)) rep.t_l1 = step;
    if (!rep.t_linf && below_inv_e(nm.linf)) rep.t_linf = step;
    if (step >= 1 && !rep.cover && row.support_size == t.order()) rep.cover = step;
    if (step >= 1 && static_cast<long double>(row.support_size) < threshold) rep.subset_bound = std::max(rep.subset_bound, step + 1);
    if (rep.t_l1 && rep.t_linf && rep.cover) break;
  }
  return rep;
}

BoundCatalog bound_catalog(const GroupFamily& ambient_in, const std::optional<LeviShape>& shape_in, int supp_y, int q) {
  // Bounds concern the quasisimple group; GL is treated as SL.
  const GroupFamily ambient =
      ambient_in.family == Family::GL ? GroupFamily::make(Family::SL, ambient_in.natural_dim) : ambient_in;
  BoundCatalog cat;
  cat.ambient = ambient;
  const int h = coxeter_number(ambient);
  cat.coxeter = h;
  const int r = ambient.rank();
  const int dim = ambient.dim();
  const int p = q > 1 ? smallest_prime_factor(q) : 0;
  const bool good = ambient.family == Family::SL || p != 2;
  const std::string large_q = good ? "large q" : "large q; characteristic 2 is bad for this type";
  const Rational two_h = Rational(2) + Rational(2, h);
  const bool is_sl = ambient.family == Family::SL;
  const int n = ambient.natural_dim;

  if (shape_in) {
    LeviShape shape = *shape_in;
    if (shape.ambient.family == Family::GL) shape = LeviShape::make(ambient, shape.gl_factors, shape.classical_factor);
    const int codim = dim - shape.dim();
    if (codim > 0) {
      const Rational ratio(dim, codim);
      cat.entries.push_back({"cover_threshold", "C^t = G almost uniformly pointwise once t exceeds", (two_h * 2) * ratio,
                             true, large_q});
      cat.entries.push_back({"mixing_levi", "T(G,y) <=", ceil_rational(two_h * ratio), true, large_q + "; C_G(y) <= L"});
    }
  }
  cat.entries.push_back({"diameter_linear", "diam(G, y^G) <=", Rational(2 * r + 4), true, large_q + "; C_G(y) <= L"});
  cat.entries.push_back({"mixing_linear", "T(G,y) <=", Rational(r + 2), true, large_q + "; C_G(y) <= L"});
  cat.entries.push_back({"sl_cover_any", "C^t = G almost uniformly pointwise once t exceeds", Rational(4 * n + 4), is_sl,
                         "large q; any non-central x in SL_n"});
  cat.entries.push_back({"sl_mixing_any", "T(G,x) <=", Rational(2 * n + 3), is_sl, "large q; any non-central x in SL_n"});
  cat.entries.push_back({"sl_cover_unipotent", "C^t = G almost uniformly pointwise once t exceeds", Rational(2 * n), is_sl,
                         "large q; nontrivial unipotent u in SL_n"});
  cat.entries.push_back({"sl_mixing_unipotent", "T(G,u) <=", Rational(n), is_sl, "large q; nontrivial unipotent u in SL_n"});
  if (supp_y > 0) {
    const bool in_scope = (is_sl && n >= 2) || (ambient.family == Family::Sp && n >= 4) ||
                          ((ambient.family == Family::SOOdd || ambient.family == Family::SOEven) && n >= 7);
    const SuppConstants sc = supp_constants(ambient);
    cat.entries.push_back({"mixing_supp", "T(G,g) <=", ceil_rational(two_h * sc.r_prime / supp_y), in_scope,
                           large_q + "; C_G(y) a split Levi, y the semisimple part of g"});
    cat.entries.push_back({"mixing_supp_lower", "T(G,y) asymptotically at least", sc.r_prime / (2 * supp_y), in_scope,
                           "asymptotic in |G|"});
  }
  return cat;
}

}  // namespace liechar
