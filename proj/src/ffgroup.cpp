#include "liechar/ffgroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

#include "liechar/common.hpp"
#include "liechar/parallel.hpp"
#include "liechar/partitions.hpp"

namespace liechar {

std::string to_string(GroupKind k) { return k == GroupKind::GL ? "GL" : "SL"; }

GroupKind parse_group_kind(const std::string& s) {
  std::string u;
  for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (u == "GL") return GroupKind::GL;
  if (u == "SL") return GroupKind::SL;
  throw PreconditionError("group kind must be GL or SL, got '" + s + "'");
}

std::uint64_t gl_order(int n, std::uint64_t q) {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  std::uint64_t order = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= (qn - qi);
    qi *= q;
  }
  return order;
}

GroupSpec GroupSpec::make(GroupKind kind, int n, int q) {
  if (n < 2 || n > 4) throw PreconditionError("matrix groups need 2 <= n <= 4");
  Field::for_order(q);  // validates q
  GroupSpec s{kind, n, q};
  if (s.order() > kOrderGuard) throw GuardExceeded(s.label() + " has order above 3e7");
  return s;
}

std::uint64_t GroupSpec::order() const {
  const auto o = gl_order(n, static_cast<std::uint64_t>(q));
  return kind == GroupKind::GL ? o : o / static_cast<std::uint64_t>(q - 1);
}

std::string GroupSpec::label() const { return to_string(kind) + "_" + std::to_string(n) + "(" + std::to_string(q) + ")"; }

namespace {

constexpr std::uint64_t kElementStoreLimit = 4'000'000;
constexpr std::uint64_t kDenseLimit = 1ull << 25;
constexpr std::uint64_t kStructureWorkGuard = 500'000'000;

std::uint64_t poly_code(const Poly& p, int q) {
  std::uint64_t c = 0;
  for (std::size_t i = p.size(); i-- > 0;) c = c * static_cast<std::uint64_t>(q) + p[i];
  return c * 8 + p.size();
}

// Jordan block partition attached to one factor from its rank profile.
Partition block_partition(int n, int deg, const std::vector<int>& ranks) {
  std::vector<int> conj;
  int prev_kernel = 0;
  for (int r : ranks) {
    const int kernel = n - r;
    const int cols = (kernel - prev_kernel) / deg;
    if (cols <= 0) break;
    conj.push_back(cols);
    prev_kernel = kernel;
  }
  return Partition(conj).conjugate();
}

int igcd(int a, int b) { return std::gcd(a, b); }

}  // namespace

std::vector<std::pair<PolyFactor, std::vector<int>>> rank_profile(const MatOps& ops, const Mat& g,
                                                                  const std::vector<PolyFactor>& factors) {
  std::vector<std::pair<PolyFactor, std::vector<int>>> out;
  for (const auto& pf : factors) {
    const Mat fg = ops.eval_poly(pf.factor, g);
    Mat power = fg;
    std::vector<int> ranks;
    for (int j = 1; j <= pf.multiplicity; ++j) {
      if (j > 1) power = ops.mul(power, fg);
      ranks.push_back(ops.rank(power));
    }
    out.emplace_back(pf, std::move(ranks));
  }
  return out;
}

int supp(const MatOps& ops, const Mat& g) {
  const int n = ops.n();
  int best = 0;
  for (const auto& pf : factor_poly(ops.field(), ops.char_poly(g))) {
    const int kernel = n - ops.rank(ops.eval_poly(pf.factor, g));
    best = std::max(best, kernel / poly_degree(pf.factor));
  }
  return n - best;
}

ClassTable::ClassTable(const GroupSpec& spec, const Field& field) : spec_(spec), ops_(field, spec.n) {}

std::vector<PolyFactor> ClassTable::factors(const Poly& cp) const {
  const auto code = poly_code(cp, spec_.q);
  std::lock_guard<std::mutex> lock(factor_mu_);
  auto it = factor_cache_.find(code);
  if (it == factor_cache_.end()) it = factor_cache_.emplace(code, factor_poly(ops_.field(), cp)).first;
  return it->second;
}

std::uint64_t ClassTable::gl_key(const Mat& g) const {
  const Poly cp = ops_.char_poly(g);
  std::uint64_t key = poly_code(cp, spec_.q);
  for (const auto& [pf, ranks] : rank_profile(ops_, g, factors(cp)))
    for (int r : ranks) key = key * 8 + static_cast<std::uint64_t>(r);
  return key;
}

int ClassTable::sl_label(const Mat& g, const Mat& base, int split) const {
  const int n = spec_.n;
  const Field& f = ops_.field();
  // Unknown X (n x n, row-major index i*n+j) with X base - g X = 0.
  std::vector<std::vector<Elem>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Elem> row(static_cast<std::size_t>(n * n), 0);
      for (int k = 0; k < n; ++k) {
        auto& a = row[static_cast<std::size_t>(i * n + k)];
        a = f.add(a, base.at(k, j));
        auto& b = row[static_cast<std::size_t>(k * n + j)];
        b = f.sub(b, g.at(i, k));
      }
      rows.push_back(std::move(row));
    }
  const auto basis = nullspace(f, rows, n * n);
  thread_local std::mt19937 rng(0xC1A55u);
  std::uniform_int_distribution<int> coeff(0, f.q() - 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Mat x;
    for (const auto& v : basis) {
      const Elem c = static_cast<Elem>(coeff(rng));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x.at(i, j) = f.add(x.at(i, j), f.mul(c, v[static_cast<std::size_t>(i * n + j)]));
    }
    const Elem d = ops_.det(x);
    if (d) return f.log(d) % split;
  }
  throw CheckFailure("no invertible conjugator found for an SL class split");
}

std::shared_ptr<const ClassTable> ClassTable::build(const GroupSpec& spec) {
  const Field field = Field::for_order(spec.q);
  std::shared_ptr<ClassTable> t(new ClassTable(spec, field));
  const MatOps& ops = t->ops_;
  const int n = spec.n;
  const int q = spec.q;
  t->order_ = spec.order();

  const bool store = t->order_ <= kElementStoreLimit;
  const bool dense = ops.code_count() <= kDenseLimit;
  if (store) {
    t->elements_.reserve(t->order_);
    t->element_class_.reserve(t->order_);
    t->element_codes_.reserve(t->order_);
  }
  if (dense) t->dense_.assign(ops.code_count(), -1);

  struct Temp {
    Mat rep;
    std::uint64_t code;
    std::uint64_t size;
  };
  std::vector<Temp> temp;
  Mat g;  // odometer over codes in increasing order
  const int last = n * n - 1;
  for (std::uint64_t code = 0; code < ops.code_count(); ++code) {
    if (code) {
      for (int pos = last; pos >= 0; --pos) {
        Elem& e = g.at(pos / n, pos % n);
        if (++e < q) break;
        e = 0;
      }
    }
    const Elem d = ops.det(g);
    if (spec.kind == GroupKind::GL ? d == 0 : d != 1) continue;
    const Poly cp = ops.char_poly(g);
    const auto profile = rank_profile(ops, g, t->factors(cp));
    std::uint64_t key = poly_code(cp, q);
    for (const auto& [pf, ranks] : profile)
      for (int r : ranks) key = key * 8 + static_cast<std::uint64_t>(r);

    auto it = t->by_key_.find(key);
    if (it == t->by_key_.end()) {
      KeyInfo info;
      info.base = g;
      if (spec.kind == GroupKind::SL) {
        int gg = 0;
        for (const auto& [pf, ranks] : profile) {
          const Partition blocks = block_partition(n, poly_degree(pf.factor), ranks);
          for (int part : blocks.parts()) gg = igcd(gg, part);
        }
        info.split = igcd(gg, q - 1);
      }
      info.class_by_label.assign(static_cast<std::size_t>(info.split), -1);
      it = t->by_key_.emplace(key, std::move(info)).first;
    }
    KeyInfo& info = it->second;
    const int label = info.split > 1 ? t->sl_label(g, info.base, info.split) : 0;
    int& cls = info.class_by_label[static_cast<std::size_t>(label)];
    if (cls < 0) {
      if (temp.size() >= 32000) throw GuardExceeded("more than 32000 classes");
      cls = static_cast<int>(temp.size());
      temp.push_back({g, code, 0});
    }
    ++temp[static_cast<std::size_t>(cls)].size;
    if (store) {
      t->elements_.push_back(g);
      t->element_codes_.push_back(code);
      t->element_class_.push_back(static_cast<std::int16_t>(cls));
    }
    if (dense) t->dense_[code] = static_cast<std::int16_t>(cls);
  }

  // Identity first, then by representative code.
  const std::uint64_t id_code = ops.encode(ops.identity());
  std::vector<int> perm(temp.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto& x = temp[static_cast<std::size_t>(a)];
    const auto& y = temp[static_cast<std::size_t>(b)];
    const bool xi = x.code == id_code, yi = y.code == id_code;
    if (xi != yi) return xi;
    return x.code < y.code;
  });
  std::vector<int> remap(temp.size());
  for (std::size_t i = 0; i < perm.size(); ++i) remap[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  for (auto& c : t->element_class_) c = static_cast<std::int16_t>(remap[static_cast<std::size_t>(c)]);
  for (auto& c : t->dense_)
    if (c >= 0) c = static_cast<std::int16_t>(remap[static_cast<std::size_t>(c)]);
  for (auto& [key, info] : t->by_key_)
    for (auto& c : info.class_by_label)
      if (c >= 0) c = remap[static_cast<std::size_t>(c)];

  std::uint64_t total = 0;
  for (int idx : perm) {
    const auto& tc = temp[static_cast<std::size_t>(idx)];
    ClassInfo ci;
    ci.rep = tc.rep;
    ci.rep_code = tc.code;
    ci.size = tc.size;
    if (t->order_ % tc.size) throw CheckFailure("class size does not divide the group order");
    ci.centralizer_order = t->order_ / tc.size;
    ci.element_order = ops.order(tc.rep);
    ci.supp = supp(ops, tc.rep);
    ci.p_regular = ci.element_order % static_cast<std::uint64_t>(field.p()) != 0;
    total += tc.size;
    t->classes_.push_back(ci);
  }
  if (total != t->order_) throw CheckFailure("class equation failed for " + spec.label());

  for (const auto& ci : t->classes_) t->inverse_.push_back(t->class_of(ops.inverse(ci.rep)));
  return t;
}

bool ClassTable::contains(const Mat& g) const {
  for (int i = 0; i < kMaxDim; ++i)
    for (int j = 0; j < kMaxDim; ++j)
      if ((i >= spec_.n || j >= spec_.n) && g.at(i, j)) return false;
  for (int i = 0; i < spec_.n; ++i)
    for (int j = 0; j < spec_.n; ++j)
      if (g.at(i, j) >= spec_.q) return false;
  const Elem d = ops_.det(g);
  return spec_.kind == GroupKind::GL ? d != 0 : d == 1;
}

int ClassTable::lookup(const Mat& g) const {
  if (!dense_.empty()) return dense_[ops_.encode(g)];
  if (!element_codes_.empty()) {
    const auto code = ops_.encode(g);
    auto it = std::lower_bound(element_codes_.begin(), element_codes_.end(), code);
    return element_class_[static_cast<std::size_t>(it - element_codes_.begin())];
  }
  const auto it = by_key_.find(gl_key(g));
  if (it == by_key_.end()) throw CheckFailure("element with an unknown class invariant");
  const auto& info = it->second;
  const int label = info.split > 1 ? sl_label(g, info.base, info.split) : 0;
  return info.class_by_label[static_cast<std::size_t>(label)];
}

int ClassTable::class_of(const Mat& g) const {
  if (!contains(g)) throw PreconditionError("matrix " + ops_.to_string(g) + " is not in " + spec_.label());
  return lookup(g);
}

const std::vector<Mat>& ClassTable::elements() const {
  if (elements_.empty()) throw GuardExceeded("elements are not stored for groups above 4e6");
  return elements_;
}

const std::vector<std::int16_t>& ClassTable::element_classes() const {
  if (elements_.empty()) throw GuardExceeded("elements are not stored for groups above 4e6");
  return element_class_;
}

std::vector<Mat> ClassTable::class_members(int c) const {
  const auto& el = elements();
  std::vector<Mat> out;
  for (std::size_t i = 0; i < el.size(); ++i)
    if (element_class_[i] == c) out.push_back(el[i]);
  return out;
}

StructureConstants StructureConstants::compute(const ClassTable& t) {
  const std::size_t c = t.size();
  if (t.order() * c > kStructureWorkGuard) throw GuardExceeded("structure constants above the work guard");
  const auto& el = t.elements();
  const auto& cls = t.element_classes();
  StructureConstants sc;
  sc.c_ = c;
  sc.n_.assign(c * c * c, 0);
  const MatOps& ops = t.ops();
  parallel_for(c, [&](std::size_t k) {
    const Mat& z = t[k].rep;
    for (std::size_t e = 0; e < el.size(); ++e) {
      // x = w^-1 lies in the inverse class of w; x^-1 z = w z.
      const auto i = static_cast<std::size_t>(t.inverse_class(cls[e]));
      const auto j = static_cast<std::size_t>(t.class_of(ops.mul(el[e], z)));
      ++sc.n_[(i * c + j) * c + k];
    }
  });
  return sc;
}

std::vector<std::vector<std::uint64_t>> structure_column(const ClassTable& t, int cidx) {
  const std::size_t c = t.size();
  const MatOps& ops = t.ops();
  std::vector<Mat> members = t.class_members(cidx);
  std::vector<Mat> inverses;
  inverses.reserve(members.size());
  for (const auto& y : members) inverses.push_back(ops.inverse(y));
  std::vector<std::vector<std::uint64_t>> m(c, std::vector<std::uint64_t>(c, 0));
  for (std::size_t k = 0; k < c; ++k) {
    const Mat& z = t[k].rep;
    for (const auto& yi : inverses) ++m[static_cast<std::size_t>(t.class_of(ops.mul(z, yi)))][k];
  }
  return m;
}

Mat levi_witness_sl(const MatOps& ops, const std::vector<int>& sizes) {
  const Field& f = ops.field();
  const int r = static_cast<int>(sizes.size());
  if (r < 2) throw PreconditionError("levi_witness_sl needs at least two blocks");
  for (int i = 0; i < r; ++i) {
    if (sizes[static_cast<std::size_t>(i)] < 1) throw PreconditionError("block sizes must be positive");
    if (i && sizes[static_cast<std::size_t>(i)] < sizes[static_cast<std::size_t>(i - 1)])
      throw PreconditionError("block sizes must be ascending");
  }
  if (sizes.back() < 2) throw PreconditionError("the largest block must have size >= 2");
  if (std::accumulate(sizes.begin(), sizes.end(), 0) != ops.n()) throw PreconditionError("block sizes must sum to n");
  long big_n = sizes.back();
  for (int i = 0; i + 1 < r; ++i) big_n *= sizes[static_cast<std::size_t>(i)] + 1;
  if ((f.q() - 1) % big_n) throw PreconditionError("N = " + std::to_string(big_n) + " does not divide q - 1");
  Elem zeta = 0;
  for (int a = 1; a < f.q(); ++a)
    if (f.order(static_cast<Elem>(a)) == big_n) {
      zeta = static_cast<Elem>(a);
      break;
    }
  auto zeta_d = [&](long d) { return f.pow(zeta, static_cast<std::uint64_t>(big_n / d)); };
  std::vector<Elem> diag;
  long prefix = 1;
  for (int i = 0; i < r; ++i) {
    const int ni = sizes[static_cast<std::size_t>(i)];
    Elem h;
    if (i + 1 < r) {
      prefix *= ni + 1;
      h = zeta_d(prefix);
    } else {
      h = zeta;
    }
    diag.insert(diag.end(), static_cast<std::size_t>(ni), h);
  }
  Mat s = ops.diag(diag);
  if (ops.det(s) != 1) throw CheckFailure("levi witness has determinant != 1");
  return s;
}

void visit_centralizer(const MatOps& ops, const Mat& g, const std::function<void(const Mat&)>& visit) {
  const Field& f = ops.field();
  const int n = ops.n();
  std::vector<std::vector<Elem>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Elem> row(static_cast<std::size_t>(n * n), 0);
      for (int k = 0; k < n; ++k) {
        auto& a = row[static_cast<std::size_t>(i * n + k)];
        a = f.add(a, g.at(k, j));
        auto& b = row[static_cast<std::size_t>(k * n + j)];
        b = f.sub(b, g.at(i, k));
      }
      rows.push_back(std::move(row));
    }
  const auto basis = nullspace(f, rows, n * n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    total *= static_cast<std::uint64_t>(f.q());
    if (total > 30'000'000) throw GuardExceeded("centralizer algebra above 3e7 elements");
  }
  std::vector<int> digits(basis.size(), 0);
  for (std::uint64_t it = 0; it < total; ++it) {
    Mat x;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Elem c = static_cast<Elem>(digits[b]);
      if (!c) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x.at(i, j) = f.add(x.at(i, j), f.mul(c, basis[b][static_cast<std::size_t>(i * n + j)]));
    }
    if (ops.det(x)) visit(x);
    for (std::size_t b = 0; b < digits.size(); ++b) {
      if (++digits[b] < f.q()) break;
      digits[b] = 0;
    }
  }
}

std::uint64_t centralizer_order_bruteforce(const MatOps& ops, const Mat& g) {
  std::uint64_t count = 0;
  visit_centralizer(ops, g, [&](const Mat&) { ++count; });
  return count;
}

Mat central_homology(const MatOps& ops, Elem mu, Elem lambda, bool special) {
  const Field& f = ops.field();
  if (mu == 0 || lambda == 0) throw PreconditionError("homology eigenvalues must be nonzero");
  if (mu >= f.q() || lambda >= f.q()) throw PreconditionError("homology eigenvalues must be field codes");
  if (mu == lambda) throw PreconditionError("homology needs mu != lambda");
  if (special && f.mul(f.pow(mu, static_cast<std::uint64_t>(ops.n() - 1)), lambda) != 1)
    throw PreconditionError("SL homology needs mu^(n-1) lambda = 1");
  std::vector<Elem> d(static_cast<std::size_t>(ops.n()), mu);
  d.back() = lambda;
  return ops.diag(d);
}

}  // namespace liechar
