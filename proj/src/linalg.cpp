#include "linalg.hpp"

#include <algorithm>

namespace ytw {

SpMat::SpMat(const Field& f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  rows_data_.resize(rows);
}

SpMat SpMat::identity(const Field& f, int n) {
  SpMat m(f, n, n);
  for (int i = 0; i < n; ++i) m.rows_data_[i].emplace_back(i, f.one());
  return m;
}

SpMat SpMat::single(const Field& f, int rows, int cols, int i, int j, const Scalar& v) {
  SpMat m(f, rows, cols);
  m.add_entry(i, j, v);
  return m;
}

int SpMat::nnz() const {
  int n = 0;
  for (const auto& r : rows_data_) n += static_cast<int>(r.size());
  return n;
}

bool SpMat::is_zero() const { return nnz() == 0; }

void SpMat::add_entry(int i, int j, const Scalar& v) {
  if (v.is_zero()) return;
  auto& r = rows_data_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (it->second.is_zero()) r.erase(it);
  } else {
    r.insert(it, {j, v});
  }
}

Scalar SpMat::get(int i, int j) const {
  const auto& r = rows_data_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != r.end() && it->first == j) return it->second;
  return field_.zero();
}

SpMat SpMat::operator-() const {
  SpMat m = *this;
  for (auto& r : m.rows_data_)
    for (auto& [j, v] : r) v = -v;
  return m;
}

void SpMat::add_scaled(const SpMat& o, const Scalar& c) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("matrix shape mismatch");
  if (c.is_zero()) return;
  std::vector<std::pair<int, Scalar>> merged;
  for (int i = 0; i < rows_; ++i) {
    const auto& a = rows_data_[i];
    const auto& b = o.rows_data_[i];
    if (b.empty()) continue;
    merged.clear();
    merged.reserve(a.size() + b.size());
    size_t x = 0, y = 0;
    while (x < a.size() || y < b.size()) {
      if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
        merged.push_back(a[x++]);
      } else if (x == a.size() || b[y].first < a[x].first) {
        merged.emplace_back(b[y].first, b[y].second * c);
        ++y;
      } else {
        Scalar v = a[x].second;
        v.addmul(c, b[y].second);
        if (!v.is_zero()) merged.emplace_back(a[x].first, v);
        ++x;
        ++y;
      }
    }
    rows_data_[i] = merged;
  }
}

SpMat operator+(const SpMat& a, const SpMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw math_error("matrix shape mismatch");
  SpMat m = a;
  for (int i = 0; i < b.rows_; ++i)
    for (const auto& [j, v] : b.rows_data_[i]) m.add_entry(i, j, v);
  return m;
}

SpMat operator-(const SpMat& a, const SpMat& b) { return a + (-b); }

SpMat operator*(const SpMat& a, const SpMat& b) {
  if (a.cols_ != b.rows_) throw math_error("matrix shape mismatch in product");
  SpMat m(a.field_, a.rows_, b.cols_);
  std::vector<Scalar> acc(b.cols_, a.field_.zero());
  std::vector<int> touched;
  std::vector<char> seen(b.cols_, 0);
  for (int i = 0; i < a.rows_; ++i) {
    touched.clear();
    for (const auto& [k, av] : a.rows_data_[i]) {
      for (const auto& [j, bv] : b.rows_data_[k]) {
        if (!seen[j]) {
          seen[j] = 1;
          acc[j] = a.field_.zero();
          touched.push_back(j);
        }
        acc[j].addmul(av, bv);
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& out = m.rows_data_[i];
    for (int j : touched) {
      if (!acc[j].is_zero()) out.emplace_back(j, acc[j]);
      seen[j] = 0;
    }
  }
  return m;
}

SpMat SpMat::operator*(const Scalar& c) const {
  SpMat m(field_, rows_, cols_);
  if (c.is_zero()) return m;
  m = *this;
  for (auto& r : m.rows_data_)
    for (auto& [j, v] : r) v *= c;
  return m;
}

SpMat SpMat::kron(const SpMat& b) const {
  SpMat m(field_, rows_ * b.rows_, cols_ * b.cols_);
  for (int i1 = 0; i1 < rows_; ++i1) {
    if (rows_data_[i1].empty()) continue;
    for (int i2 = 0; i2 < b.rows_; ++i2) {
      auto& out = m.rows_data_[i1 * b.rows_ + i2];
      for (const auto& [j1, v1] : rows_data_[i1])
        for (const auto& [j2, v2] : b.rows_data_[i2]) out.emplace_back(j1 * b.cols_ + j2, v1 * v2);
      std::sort(out.begin(), out.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
  }
  return m;
}

SpMat SpMat::transpose() const {
  SpMat m(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : rows_data_[i]) m.rows_data_[j].emplace_back(i, v);
  return m;
}

DenseVec SpMat::apply(const DenseVec& x) const {
  DenseVec y(rows_, field_.zero());
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : rows_data_[i]) y[i].addmul(v, x[j]);
  return y;
}

void SpMat::apply_accum(DenseVec& y, const Scalar& c, const DenseVec& x) const {
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : rows_data_[i]) {
      Scalar t = v;
      t *= c;
      y[i].addmul(t, x[j]);
    }
}

bool operator==(const SpMat& a, const SpMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return (a - b).is_zero();
}

SpMat commutator(const SpMat& a, const SpMat& b) { return a * b - b * a; }

DenseVec dense_zero(const Field& f, int n) { return DenseVec(n, f.zero()); }

bool is_zero_vec(const DenseVec& v) {
  for (const Scalar& c : v)
    if (!c.is_zero()) return false;
  return true;
}

DenseVec scale_vec(const DenseVec& v, const Scalar& c) {
  DenseVec w = v;
  for (Scalar& x : w) x *= c;
  return w;
}

std::vector<int> rref(std::vector<DenseVec>& m, const Field& f) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    Scalar inv = m[r][c].inv();
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar factor = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  (void)f;
  return pivots;
}

int rank_of(std::vector<DenseVec> m, const Field& f) {
  return static_cast<int>(rref(m, f).size());
}

std::vector<DenseVec> kernel_basis(std::vector<DenseVec> rows, int cols, const Field& f) {
  std::vector<int> pivots = rref(rows, f);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<DenseVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    DenseVec v = dense_zero(f, cols);
    v[c] = f.one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<DenseVec> coordinates_in_span(const std::vector<DenseVec>& basis,
                                            const DenseVec& target, const Field& f) {
  if (basis.empty()) return is_zero_vec(target) ? std::optional<DenseVec>(DenseVec{}) : std::nullopt;
  int dim = static_cast<int>(target.size());
  int k = static_cast<int>(basis.size());
  // Rows of the augmented system: columns are basis vectors, RHS is target.
  std::vector<DenseVec> m(dim, dense_zero(f, k + 1));
  for (int i = 0; i < dim; ++i) {
    for (int b = 0; b < k; ++b) m[i][b] = basis[b][i];
    m[i][k] = target[i];
  }
  std::vector<int> pivots = rref(m, f);
  for (int c : pivots)
    if (c == k) return std::nullopt;  // inconsistent
  DenseVec x = dense_zero(f, k);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][k];
  return x;
}

bool SpanBuilder::add(DenseVec v) {
  DenseVec red = v;
  for (size_t b = 0; b < basis_.size(); ++b) {
    const Scalar& lead = red[pivots_[b]];
    if (lead.is_zero()) continue;
    Scalar factor = lead;
    for (int j = 0; j < dim_; ++j) red[j] -= factor * basis_[b][j];
  }
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (!red[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  Scalar inv = red[pivot].inv();
  for (int j = 0; j < dim_; ++j) red[j] *= inv;
  // Keep earlier rows reduced against the new one.
  for (size_t b = 0; b < basis_.size(); ++b) {
    Scalar factor = basis_[b][pivot];
    if (factor.is_zero()) continue;
    for (int j = 0; j < dim_; ++j) basis_[b][j] -= factor * red[j];
  }
  basis_.push_back(std::move(red));
  pivots_.push_back(pivot);
  originals_.push_back(std::move(v));
  return true;
}

}  // namespace ytw
