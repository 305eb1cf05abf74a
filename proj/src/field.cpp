#include "liechar/field.hpp"

#include <sstream>

#include "liechar/common.hpp"

namespace liechar {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

int mod(long a, int p) {
  const long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of a by a monic b over F_p, coefficient vectors constant first.
std::vector<int> poly_rem_mod_p(std::vector<int> a, const std::vector<int>& b, int p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - static_cast<long>(lead) * b[i], p);
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> monic_from_code(int code, int degree, int p) {
  std::vector<int> f(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[static_cast<std::size_t>(i)] = code % p;
    code /= p;
  }
  f[static_cast<std::size_t>(degree)] = 1;
  return f;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1 || poly.back() != 1) throw PreconditionError("irreducibility test expects a monic polynomial of degree >= 1");
  for (int d = 1; 2 * d <= deg; ++d)
    for (int code = 0; code < ipow(p, d); ++code)
      if (poly_rem_mod_p(poly, monic_from_code(code, d, p), p).empty()) return false;
  return true;
}

Field Field::make(int p, int k) {
  if (!is_prime(p)) throw PreconditionError("field characteristic must be prime, got " + std::to_string(p));
  if (k < 1) throw PreconditionError("extension degree must be >= 1");
  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 32) throw GuardExceeded("field order above 32");
  }
  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<int>(q);
  for (int code = 0; code < ipow(p, k); ++code) {
    auto m = monic_from_code(code, k, p);
    if (is_irreducible_mod_p(m, p)) {
      f.modulus_ = std::move(m);
      break;
    }
  }
  const int Q = f.q_;
  auto digits = [&](int a) {
    std::vector<int> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      v[static_cast<std::size_t>(i)] = a % p;
      a /= p;
    }
    return v;
  };
  auto code_of = [&](const std::vector<int>& v) {
    int c = 0;
    for (int i = k - 1; i >= 0; --i) c = c * p + (i < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i)] : 0);
    return c;
  };
  const std::size_t QQ = static_cast<std::size_t>(Q) * static_cast<std::size_t>(Q);
  f.add_.assign(QQ, 0);
  f.mul_.assign(QQ, 0);
  f.neg_.assign(static_cast<std::size_t>(Q), 0);
  f.inv_.assign(static_cast<std::size_t>(Q), 0);
  for (int a = 0; a < Q; ++a) {
    const auto da = digits(a);
    std::vector<int> na(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) na[i] = mod(-da[i], p);
    f.neg_[static_cast<std::size_t>(a)] = static_cast<Elem>(code_of(na));
    for (int b = 0; b < Q; ++b) {
      const auto db = digits(b);
      std::vector<int> s(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) s[i] = mod(da[i] + db[i], p);
      std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              mod(prod[static_cast<std::size_t>(i + j)] + static_cast<long>(da[static_cast<std::size_t>(i)]) * db[static_cast<std::size_t>(j)], p);
      const auto r = poly_rem_mod_p(prod, f.modulus_, p);
      f.add_[f.idx(static_cast<Elem>(a), static_cast<Elem>(b))] = static_cast<Elem>(code_of(s));
      f.mul_[f.idx(static_cast<Elem>(a), static_cast<Elem>(b))] = static_cast<Elem>(code_of(r));
    }
  }
  for (int a = 1; a < Q; ++a)
    for (int b = 1; b < Q; ++b)
      if (f.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 1) f.inv_[static_cast<std::size_t>(a)] = static_cast<Elem>(b);

  for (int g = 1; g < Q; ++g) {
    int ord = 1;
    Elem x = static_cast<Elem>(g);
    while (x != 1) {
      x = f.mul(x, static_cast<Elem>(g));
      ++ord;
    }
    if (ord == Q - 1) {
      f.primitive_ = static_cast<Elem>(g);
      break;
    }
  }
  f.log_.assign(static_cast<std::size_t>(Q), -1);
  f.exp_.assign(static_cast<std::size_t>(Q - 1), 1);
  Elem x = 1;
  for (int e = 0; e < Q - 1; ++e) {
    f.exp_[static_cast<std::size_t>(e)] = x;
    f.log_[x] = e;
    x = f.mul(x, f.primitive_);
  }
  return f;
}

Field Field::for_order(int q) {
  if (q < 2) throw PreconditionError("field order must be >= 2");
  if (q > 32) throw GuardExceeded("field order above 32");
  int p = 2;
  while (q % p) ++p;
  int k = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw PreconditionError(std::to_string(q) + " is not a prime power");
  return make(p, k);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % static_cast<std::uint64_t>(q_ - 1))) %
                                       static_cast<std::uint64_t>(q_ - 1))];
}

Elem Field::from_int(long n) const { return static_cast<Elem>(mod(n, p_)); }

int Field::log(Elem a) const {
  if (a == 0) throw PreconditionError("log of zero");
  return log_[a];
}

Elem Field::exp(int e) const { return exp_[static_cast<std::size_t>(mod(e, q_ - 1))]; }

int Field::order(Elem a) const {
  const int l = log(a);
  int g = q_ - 1, x = l;
  while (x) {
    const int t = g % x;
    g = x;
    x = t;
  }
  return (q_ - 1) / g;
}

std::string Field::to_string(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  std::ostringstream os;
  bool first = true;
  int c = a;
  for (int i = 0; i < k_; ++i) {
    const int d = c % p_;
    c /= p_;
    if (!d) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || d != 1) os << d;
    if (i > 0) os << (i == 1 ? "x" : "x^" + std::to_string(i));
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace liechar
