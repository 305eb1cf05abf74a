#include "liechar/matrix.hpp"

#include <sstream>

#include "liechar/common.hpp"

namespace liechar {

MatOps::MatOps(const Field& field, int n) : field_(field), n_(n), code_count_(1) {
  if (n < 1 || n > kMaxDim) throw PreconditionError("matrix size must be between 1 and 4");
  for (int i = 0; i < n * n; ++i) code_count_ *= static_cast<std::uint64_t>(field.q());
}

Mat MatOps::identity() const { return scalar(1); }

Mat MatOps::scalar(Elem c) const {
  Mat m;
  for (int i = 0; i < n_; ++i) m.at(i, i) = c;
  return m;
}

Mat MatOps::diag(const std::vector<Elem>& d) const {
  if (static_cast<int>(d.size()) != n_) throw PreconditionError("diagonal has the wrong length");
  Mat m;
  for (int i = 0; i < n_; ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

Mat MatOps::mul(const Mat& x, const Mat& y) const {
  Mat r;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Elem s = 0;
      for (int k = 0; k < n_; ++k) s = field_.add(s, field_.mul(x.at(i, k), y.at(k, j)));
      r.at(i, j) = s;
    }
  return r;
}

Mat MatOps::add(const Mat& x, const Mat& y) const {
  Mat r;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = field_.add(x.at(i, j), y.at(i, j));
  return r;
}

Mat MatOps::sub(const Mat& x, const Mat& y) const {
  Mat r;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = field_.sub(x.at(i, j), y.at(i, j));
  return r;
}

Mat MatOps::scale(const Mat& x, Elem c) const {
  Mat r;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = field_.mul(x.at(i, j), c);
  return r;
}

namespace {

// Reduced row echelon form, pivoting in the first cols columns but applying
// row operations to whole rows. Returns the rank; det_out receives the
// determinant for square input.
int reduce(const Field& f, std::vector<std::vector<Elem>>& rows, int cols, Elem* det_out) {
  const int m = static_cast<int>(rows.size());
  int rank = 0;
  Elem det = 1;
  for (int c = 0; c < cols && rank < m; ++c) {
    int piv = -1;
    for (int r = rank; r < m; ++r)
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
        piv = r;
        break;
      }
    if (piv < 0) {
      det = 0;
      continue;
    }
    if (piv != rank) {
      std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(rank)]);
      det = f.neg(det);
    }
    auto& prow = rows[static_cast<std::size_t>(rank)];
    const Elem pv = prow[static_cast<std::size_t>(c)];
    det = f.mul(det, pv);
    const Elem pinv = f.inv(pv);
    for (auto& e : prow) e = f.mul(e, pinv);
    for (int r = 0; r < m; ++r) {
      if (r == rank) continue;
      auto& row = rows[static_cast<std::size_t>(r)];
      const Elem factor = row[static_cast<std::size_t>(c)];
      if (!factor) continue;
      for (std::size_t k = 0; k < row.size(); ++k) row[k] = f.sub(row[k], f.mul(factor, prow[k]));
    }
    ++rank;
  }
  if (det_out) *det_out = (rank == m && m == cols) ? det : 0;
  return rank;
}

std::vector<std::vector<Elem>> to_rows(const Mat& x, int n) {
  std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x.at(i, j);
  return rows;
}

// Determinant of a small matrix by Gaussian elimination without copies.
Elem small_det(const Field& f, std::array<std::array<Elem, kMaxDim>, kMaxDim> m, int n) {
  Elem det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(c)]);
      det = f.neg(det);
    }
    const Elem pv = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    det = f.mul(det, pv);
    const Elem pinv = f.inv(pv);
    for (int r = c + 1; r < n; ++r) {
      const Elem factor = f.mul(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], pinv);
      if (!factor) continue;
      for (int k = c; k < n; ++k)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
            f.sub(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)],
                  f.mul(factor, m[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)]));
    }
  }
  return det;
}

}  // namespace

Elem MatOps::det(const Mat& x) const {
  std::array<std::array<Elem, kMaxDim>, kMaxDim> m{};
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x.at(i, j);
  return small_det(field_, m, n_);
}

int MatOps::rank(const Mat& x) const {
  auto rows = to_rows(x, n_);
  return reduce(field_, rows, n_, nullptr);
}

Mat MatOps::inverse(const Mat& x) const {
  std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(n_), std::vector<Elem>(static_cast<std::size_t>(2 * n_), 0));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x.at(i, j);
    rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n_ + i)] = 1;
  }
  // Eliminate on the left block only.
  const int r = reduce(field_, rows, n_, nullptr);
  if (r < n_) throw PreconditionError("matrix is singular");
  Mat inv;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) inv.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n_ + j)];
  return inv;
}

Mat MatOps::power(const Mat& x, std::uint64_t e) const {
  Mat result = identity(), b = x;
  while (e) {
    if (e & 1) result = mul(result, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return result;
}

std::uint64_t MatOps::order(const Mat& x) const {
  const Mat id = identity();
  Mat y = x;
  std::uint64_t k = 1;
  while (!(y == id)) {
    y = mul(y, x);
    if (++k > code_count_) throw PreconditionError("matrix has no finite order (singular)");
  }
  return k;
}

Poly MatOps::char_poly(const Mat& x) const {
  Poly p(static_cast<std::size_t>(n_) + 1, 0);
  p[static_cast<std::size_t>(n_)] = 1;
  for (unsigned mask = 1; mask < (1u << n_); ++mask) {
    std::array<int, kMaxDim> idx{};
    int k = 0;
    for (int i = 0; i < n_; ++i)
      if (mask & (1u << i)) idx[static_cast<std::size_t>(k++)] = i;
    std::array<std::array<Elem, kMaxDim>, kMaxDim> m{};
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            x.at(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    const Elem minor = small_det(field_, m, k);
    auto& coeff = p[static_cast<std::size_t>(n_ - k)];
    coeff = (k % 2) ? field_.sub(coeff, minor) : field_.add(coeff, minor);
  }
  return p;
}

Mat MatOps::eval_poly(const Poly& p, const Mat& x) const {
  Mat r;
  for (std::size_t i = p.size(); i-- > 0;) r = add(mul(r, x), scalar(p[i]));
  return r;
}

std::uint64_t MatOps::encode(const Mat& x) const {
  std::uint64_t c = 0;
  const auto q = static_cast<std::uint64_t>(field_.q());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) c = c * q + x.at(i, j);
  return c;
}

Mat MatOps::decode(std::uint64_t code) const {
  if (code >= code_count_) throw PreconditionError("matrix code out of range");
  Mat m;
  const auto q = static_cast<std::uint64_t>(field_.q());
  for (int i = n_; i-- > 0;)
    for (int j = n_; j-- > 0;) {
      m.at(i, j) = static_cast<Elem>(code % q);
      code /= q;
    }
  return m;
}

Mat MatOps::parse(const std::string& text) const {
  Mat m;
  std::vector<std::vector<long>> rows(1);
  std::string num;
  auto flush = [&] {
    if (num.empty()) throw PreconditionError("empty matrix entry in '" + text + "'");
    rows.back().push_back(std::stol(num));
    num.clear();
  };
  for (char c : text) {
    if (c == ' ') continue;
    if (c == ',') {
      flush();
    } else if (c == ';') {
      flush();
      rows.emplace_back();
    } else if ((c >= '0' && c <= '9') || c == '-') {
      num.push_back(c);
    } else {
      throw PreconditionError("bad character in matrix '" + text + "'");
    }
  }
  flush();
  if (static_cast<int>(rows.size()) != n_) throw PreconditionError("matrix must have " + std::to_string(n_) + " rows");
  for (int i = 0; i < n_; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(r.size()) != n_) throw PreconditionError("matrix rows must have " + std::to_string(n_) + " entries");
    for (int j = 0; j < n_; ++j) {
      const long v = r[static_cast<std::size_t>(j)];
      if (v < 0 || v >= field_.q()) throw PreconditionError("matrix entries must be field codes in [0, q)");
      m.at(i, j) = static_cast<Elem>(v);
    }
  }
  return m;
}

std::string MatOps::to_string(const Mat& x) const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    if (i) os << ';';
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << static_cast<int>(x.at(i, j));
  }
  return os.str();
}

std::vector<int> MatOps::entries(const Mat& x) const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.push_back(x.at(i, j));
  return out;
}

std::vector<std::vector<Elem>> nullspace(const Field& f, std::vector<std::vector<Elem>> rows, int cols) {
  const int rank = reduce(f, rows, cols, nullptr);
  // Reduced row echelon form: locate pivot columns.
  std::vector<int> pivot_col;
  for (int r = 0; r < rank; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    for (int c = 0; c < cols; ++c)
      if (row[static_cast<std::size_t>(c)]) {
        pivot_col.push_back(c);
        break;
      }
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Elem>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Elem> v(static_cast<std::size_t>(cols), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (int r = 0; r < rank; ++r)
      v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
          f.neg(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(free)]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace liechar
