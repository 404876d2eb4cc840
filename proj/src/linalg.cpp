#include "qfl/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfl {

Vec zero_vec(int n) { return Vec(n); }

Vec unit_vec(int n, int i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); i++) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); i++) r[i] -= b[i];
  return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
  if (c.is_zero()) return;
  for (size_t i = 0; i < y.size(); i++)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; i++) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(int(rows.size()), cols);
  for (int r = 0; r < int(rows.size()); r++) {
    if (int(rows[r].size()) != cols) throw std::invalid_argument("row length mismatch");
    for (int c = 0; c < cols; c++) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; c++) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; r++) v[r] = at(r, c);
  return v;
}

Vec Matrix::apply(const Vec& x) const {
  if (int(x.size()) != cols_) throw std::invalid_argument("dimension mismatch in apply");
  Vec y(rows_);
  for (int r = 0; r < rows_; r++) {
    Scalar acc;
    for (int c = 0; c < cols_; c++)
      if (!at(r, c).is_zero() && !x[c].is_zero()) acc += at(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
  Matrix m(rows_, o.cols_);
  for (int r = 0; r < rows_; r++)
    for (int k = 0; k < cols_; k++) {
      const Scalar& v = at(r, k);
      if (v.is_zero()) continue;
      for (int c = 0; c < o.cols_; c++)
        if (!o.at(k, c).is_zero()) m.at(r, c) += v * o.at(k, c);
    }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (int r = 0; r < rows_; r++)
    for (int c = 0; c < cols_; c++) m.at(c, r) = at(r, c);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

RrefResult rref(const Matrix& input) {
  RrefResult res;
  res.mat = input;
  Matrix& m = res.mat;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); col++) {
    int p = -1;
    for (int r = lead; r < m.rows(); r++)
      if (!m.at(r, col).is_zero()) { p = r; break; }
    if (p < 0) continue;
    if (p != lead)
      for (int c = 0; c < m.cols(); c++) std::swap(m.at(p, c), m.at(lead, c));
    Scalar piv = m.at(lead, col).inv();
    for (int c = col; c < m.cols(); c++)
      if (!m.at(lead, c).is_zero()) m.at(lead, c) *= piv;
    for (int r = 0; r < m.rows(); r++) {
      if (r == lead) continue;
      Scalar f = m.at(r, col);
      if (f.is_zero()) continue;
      for (int c = col; c < m.cols(); c++)
        if (!m.at(lead, c).is_zero()) m.at(r, c) -= f * m.at(lead, c);
    }
    res.pivots.push_back(col);
    lead++;
  }
  res.rank = lead;
  return res;
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix invert(const Matrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; r++) {
    for (int c = 0; c < n; c++) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar(1);
  }
  auto rr = rref(aug);
  if (rr.rank != n || rr.pivots.back() >= n) throw std::invalid_argument("singular matrix");
  Matrix inv(n, n);
  for (int r = 0; r < n; r++)
    for (int c = 0; c < n; c++) inv.at(r, c) = rr.mat.at(r, n + c);
  return inv;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  auto r = rref(Matrix::from_rows(vectors, ambient));
  Matrix b(r.rank, ambient);
  for (int i = 0; i < r.rank; i++)
    for (int c = 0; c < ambient; c++) b.at(i, c) = r.mat.at(i, c);
  s.basis_ = b;
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  return s;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (int(v.size()) != ambient_) throw std::invalid_argument("ambient mismatch");
  Vec rem(v);
  Vec coords(dim());
  for (int i = 0; i < dim(); i++) {
    int pc = -1;
    for (int c = 0; c < ambient_; c++)
      if (!basis_.at(i, c).is_zero()) { pc = c; break; }
    if (pc < 0) continue;
    const Scalar f = rem[pc];  // pivot coefficient is 1
    if (f.is_zero()) continue;
    coords[i] = f;
    for (int c = 0; c < ambient_; c++)
      if (!basis_.at(i, c).is_zero()) rem[c] -= f * basis_.at(i, c);
  }
  if (!is_zero_vec(rem)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); i++)
    if (!contains(other.basis_vec(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  std::vector<Vec> rows;
  for (int i = 0; i < dim(); i++) rows.push_back(basis_vec(i));
  for (int i = 0; i < other.dim(); i++) rows.push_back(other.basis_vec(i));
  return span(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  // v in both spans: v = a A = b B; kernel of [A^T | -B^T] yields (a, b).
  int p = dim(), q = other.dim();
  if (p == 0 || q == 0) return Subspace(ambient_);
  Matrix m(ambient_, p + q);
  for (int c = 0; c < p; c++)
    for (int r = 0; r < ambient_; r++) m.at(r, c) = basis_.at(c, r);
  for (int c = 0; c < q; c++)
    for (int r = 0; r < ambient_; r++) m.at(r, p + c) = -other.basis_.at(c, r);
  Subspace ker = nullspace(m);
  std::vector<Vec> rows;
  for (int i = 0; i < ker.dim(); i++) {
    Vec coef = ker.basis_vec(i);
    Vec v(ambient_);
    for (int j = 0; j < p; j++) axpy(v, coef[j], basis_vec(j));
    rows.push_back(v);
  }
  return span(ambient_, rows);
}

Subspace nullspace(const Matrix& m) {
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < m.cols(); c++) {
    if (is_pivot[c]) continue;
    Vec v(m.cols());
    v[c] = Scalar(1);
    for (int i = 0; i < r.rank; i++) v[r.pivots[i]] = -r.mat.at(i, c);
    basis.push_back(v);
  }
  return Subspace::span(m.cols(), basis);
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& b) {
  if (int(b.size()) != m.rows()) throw std::invalid_argument("rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); r++) {
    for (int c = 0; c < m.cols(); c++) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto r = rref(aug);
  for (int i = 0; i < r.rank; i++)
    if (r.pivots[i] == m.cols()) return std::nullopt;
  AffineSolution sol;
  sol.particular = Vec(m.cols());
  for (int i = 0; i < r.rank; i++) sol.particular[r.pivots[i]] = r.mat.at(i, m.cols());
  sol.homogeneous = nullspace(m);
  return sol;
}

void SparseRref::reduce(std::vector<Entry>& row) const {
  // repeatedly cancel the leading entry against an existing pivot row
  size_t start = 0;
  while (start < row.size()) {
    int col = row[start].first;
    int pr = pivot_row_[col];
    if (pr < 0) return;
    Scalar f = row[start].second;
    // row -= f * rows_[pr]; merge of two sorted sparse vectors
    std::vector<Entry> merged;
    merged.reserve(row.size() + rows_[pr].size());
    size_t i = start, j = 0;
    const auto& p = rows_[pr];
    while (i < row.size() || j < p.size()) {
      if (j >= p.size() || (i < row.size() && row[i].first < p[j].first)) {
        merged.push_back(row[i++]);
      } else if (i >= row.size() || p[j].first < row[i].first) {
        Scalar v = -(f * p[j].second);
        if (!v.is_zero()) merged.push_back({p[j].first, v});
        j++;
      } else {
        Scalar v = row[i].second - f * p[j].second;
        if (!v.is_zero()) merged.push_back({row[i].first, v});
        i++;
        j++;
      }
    }
    row.erase(row.begin(), row.begin() + start);
    row.assign(merged.begin(), merged.end());
    start = 0;
  }
}

bool SparseRref::add_row(std::vector<Entry> row) {
  row.erase(std::remove_if(row.begin(), row.end(),
                           [](const Entry& e) { return e.second.is_zero(); }),
            row.end());
  std::sort(row.begin(), row.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  // combine duplicate columns
  std::vector<Entry> packed;
  for (auto& e : row) {
    if (!packed.empty() && packed.back().first == e.first)
      packed.back().second += e.second;
    else
      packed.push_back(e);
  }
  packed.erase(std::remove_if(packed.begin(), packed.end(),
                              [](const Entry& e) { return e.second.is_zero(); }),
               packed.end());
  reduce(packed);
  if (packed.empty()) return false;

  Scalar lead = packed[0].second.inv();
  for (auto& e : packed) e.second *= lead;
  int col = packed[0].first;

  // back-eliminate the new pivot column from existing rows
  for (size_t ri = 0; ri < rows_.size(); ri++) {
    auto& r = rows_[ri];
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const Entry& e, int c) { return e.first < c; });
    if (it == r.end() || it->first != col) continue;
    Scalar f = it->second;
    std::vector<Entry> merged;
    merged.reserve(r.size() + packed.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < packed.size()) {
      if (j >= packed.size() || (i < r.size() && r[i].first < packed[j].first)) {
        merged.push_back(r[i++]);
      } else if (i >= r.size() || packed[j].first < r[i].first) {
        Scalar v = -(f * packed[j].second);
        if (!v.is_zero()) merged.push_back({packed[j].first, v});
        j++;
      } else {
        Scalar v = r[i].second - f * packed[j].second;
        if (!v.is_zero()) merged.push_back({r[i].first, v});
        i++;
        j++;
      }
    }
    r = std::move(merged);
  }

  pivot_row_[col] = int(rows_.size());
  rows_.push_back(std::move(packed));
  pivots_.push_back(col);
  return true;
}

Subspace SparseRref::kernel() const {
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots_) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < cols_; c++) {
    if (is_pivot[c]) continue;
    Vec v(cols_);
    v[c] = Scalar(1);
    for (size_t i = 0; i < rows_.size(); i++) {
      for (const auto& e : rows_[i]) {
        if (e.first == c) {
          v[pivots_[i]] = -e.second;
          break;
        }
        if (e.first > c) break;
      }
    }
    basis.push_back(v);
  }
  return Subspace::span(cols_, basis);
}

Matrix SparseRref::to_matrix() const {
  Matrix m(int(rows_.size()), cols_);
  for (size_t i = 0; i < rows_.size(); i++)
    for (const auto& e : rows_[i]) m.at(int(i), e.first) = e.second;
  return m;
}

}  // namespace qfl
