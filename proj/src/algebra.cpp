#include "qfl/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfl {

AlgebraInstance::AlgebraInstance(int dim, Field field)
    : n_(dim), field_(field), prod_(size_t(dim) * dim) {
  labels_.reserve(dim);
  for (int i = 1; i <= dim; i++) labels_.push_back("e" + std::to_string(i));
}

void AlgebraInstance::set_labels(std::vector<std::string> labels) {
  if (int(labels.size()) != n_) throw std::invalid_argument("label count mismatch");
  labels_ = std::move(labels);
}

void AlgebraInstance::add_product(int i, int j, int k, const Scalar& c) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_ || k < 0 || k >= n_)
    throw std::out_of_range("structure constant index out of range");
  if (c.is_zero()) return;
  auto& v = prod_[size_t(i) * n_ + j];
  auto it = std::lower_bound(v.begin(), v.end(), k,
                             [](const auto& e, int kk) { return e.first < kk; });
  if (it != v.end() && it->first == k) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  } else {
    v.insert(it, {k, c});
  }
  leibniz_checked_ = false;
}

void AlgebraInstance::set_product(int i, int j, SparseVec value) {
  std::sort(value.begin(), value.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  value.erase(std::remove_if(value.begin(), value.end(),
                             [](const auto& e) { return e.second.is_zero(); }),
              value.end());
  prod_[size_t(i) * n_ + j] = std::move(value);
  leibniz_checked_ = false;
}

std::vector<std::pair<int, int>> AlgebraInstance::nonzero_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; i++)
    for (int j = 0; j < n_; j++)
      if (has_product(i, j)) out.push_back({i, j});
  return out;
}

Vec AlgebraInstance::sparse_to_vec(const SparseVec& v) const {
  Vec out(n_);
  for (const auto& [k, c] : v) out[k] = c;
  return out;
}

Vec AlgebraInstance::multiply(const Vec& x, const Vec& y) const {
  if (int(x.size()) != n_ || int(y.size()) != n_)
    throw std::invalid_argument("dimension mismatch in multiply");
  Vec out(n_);
  for (int i = 0; i < n_; i++) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n_; j++) {
      if (y[j].is_zero()) continue;
      const auto& pv = product(i, j);
      if (pv.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, coef] : pv) out[k] += c * coef;
    }
  }
  return out;
}

Vec AlgebraInstance::multiply_basis(int i, const Vec& y) const {
  Vec out(n_);
  for (int j = 0; j < n_; j++) {
    if (y[j].is_zero()) continue;
    for (const auto& [k, coef] : product(i, j)) out[k] += y[j] * coef;
  }
  return out;
}

Vec AlgebraInstance::multiply_basis_right(const Vec& x, int j) const {
  Vec out(n_);
  for (int i = 0; i < n_; i++) {
    if (x[i].is_zero()) continue;
    for (const auto& [k, coef] : product(i, j)) out[k] += x[i] * coef;
  }
  return out;
}

Matrix AlgebraInstance::right_mult_matrix(const Vec& x) const {
  Matrix m(n_, n_);
  for (int v = 0; v < n_; v++) {
    Vec img = multiply(unit_vec(n_, v), x);
    for (int r = 0; r < n_; r++) m.at(r, v) = img[r];
  }
  return m;
}

Matrix AlgebraInstance::left_mult_matrix(const Vec& x) const {
  Matrix m(n_, n_);
  for (int v = 0; v < n_; v++) {
    Vec img = multiply(x, unit_vec(n_, v));
    for (int r = 0; r < n_; r++) m.at(r, v) = img[r];
  }
  return m;
}

Vec leibniz_identity(const AlgebraInstance& a, const Vec& x, const Vec& y, const Vec& z) {
  Vec r = a.multiply(x, a.multiply(y, z));
  Vec s = a.multiply(a.multiply(x, y), z);
  Vec t = a.multiply(a.multiply(x, z), y);
  for (size_t i = 0; i < r.size(); i++) r[i] = r[i] - s[i] + t[i];
  return r;
}

LeibnizReport leibniz_residual(const AlgebraInstance& a, size_t max_violations) {
  LeibnizReport rep;
  const int n = a.dim();
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) {
      const bool pij = a.has_product(i, j);
      for (int k = 0; k < n; k++) {
        rep.triples_checked++;
        // LI(i,j,k) can only be nonzero if one of the inner products is
        if (!pij && !a.has_product(j, k) && !a.has_product(i, k)) continue;
        Vec li(n);
        bool any = false;
        if (a.has_product(j, k))
          for (const auto& [t, c] : a.product(j, k))
            for (const auto& [m, d] : a.product(i, t)) { li[m] += c * d; any = true; }
        if (pij)
          for (const auto& [t, c] : a.product(i, j))
            for (const auto& [m, d] : a.product(t, k)) { li[m] -= c * d; any = true; }
        if (a.has_product(i, k))
          for (const auto& [t, c] : a.product(i, k))
            for (const auto& [m, d] : a.product(t, j)) { li[m] += c * d; any = true; }
        if (!any) continue;
        if (!is_zero_vec(li)) {
          rep.ok = false;
          if (rep.violations.size() < max_violations)
            rep.violations.push_back({i, j, k, li});
        }
      }
    }
  }
  return rep;
}

void require_leibniz(AlgebraInstance& a, const std::string& what) {
  auto rep = leibniz_residual(a);
  if (!rep.ok) {
    const auto& v = rep.violations.front();
    throw std::runtime_error(what + ": Leibniz identity fails at basis triple (" +
                             std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," +
                             std::to_string(v.k + 1) + ")");
  }
  a.set_leibniz_checked(true);
}

Subspace product_subspace(const AlgebraInstance& a, const Subspace& s1, const Subspace& s2) {
  if (s1.ambient() != a.dim() || s2.ambient() != a.dim())
    throw std::invalid_argument("ambient mismatch in product_subspace");
  std::vector<Vec> gens;
  for (int i = 0; i < s1.dim(); i++)
    for (int j = 0; j < s2.dim(); j++) {
      Vec p = a.multiply(s1.basis_vec(i), s2.basis_vec(j));
      if (!is_zero_vec(p)) gens.push_back(std::move(p));
    }
  return Subspace::span(a.dim(), gens);
}

std::vector<Subspace> lower_central_series(const AlgebraInstance& a) {
  std::vector<Subspace> terms{Subspace::full(a.dim())};
  for (;;) {
    Subspace next = product_subspace(a, terms.back(), terms.front());
    if (next == terms.back()) break;
    terms.push_back(next);
    if (next.dim() == 0) break;
  }
  return terms;
}

std::vector<Subspace> derived_series(const AlgebraInstance& a) {
  std::vector<Subspace> terms{Subspace::full(a.dim())};
  for (;;) {
    Subspace next = product_subspace(a, terms.back(), terms.back());
    if (next == terms.back()) break;
    terms.push_back(next);
    if (next.dim() == 0) break;
  }
  return terms;
}

SeriesProfile series(const AlgebraInstance& a) {
  SeriesProfile p;
  auto lc = lower_central_series(a);
  auto ds = derived_series(a);
  for (const auto& s : lc) p.lower_central.push_back(s.dim());
  for (const auto& s : ds) p.derived.push_back(s.dim());
  p.nilpotent = lc.back().dim() == 0;
  p.solvable = ds.back().dim() == 0;
  return p;
}

bool is_nilpotent(const AlgebraInstance& a) { return lower_central_series(a).back().dim() == 0; }

bool is_solvable(const AlgebraInstance& a) { return derived_series(a).back().dim() == 0; }

namespace {

Subspace stacked_kernel(const AlgebraInstance& a, bool right_side) {
  // right annihilator: [e_i, v] = 0 for all i; rows indexed by (i, k)
  const int n = a.dim();
  Matrix m(n * n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      const auto& pv = right_side ? a.product(i, j) : a.product(j, i);
      for (const auto& [k, c] : pv) m.at(i * n + k, j) += c;
    }
  return nullspace(m);
}

}  // namespace

Subspace right_annihilator(const AlgebraInstance& a) { return stacked_kernel(a, true); }

Subspace left_annihilator(const AlgebraInstance& a) { return stacked_kernel(a, false); }

Subspace center(const AlgebraInstance& a) {
  return right_annihilator(a).intersect(left_annihilator(a));
}

std::vector<int> characteristic_sequence(const AlgebraInstance& a, const Vec& x) {
  const int n = a.dim();
  auto lc = lower_central_series(a);
  const Subspace& l2 = lc.size() > 1 ? lc[1] : Subspace(n);
  if (l2.contains(x)) throw std::invalid_argument("characteristic sequence needs x outside L^2");
  Matrix r = a.right_mult_matrix(x);
  // kernel dimensions of powers; nilpotency check included
  std::vector<int> kdim{0};
  Matrix p = Matrix::identity(n);
  for (int k = 1; k <= n; k++) {
    p = p * r;
    kdim.push_back(n - rank(p));
    if (kdim.back() == n) break;
  }
  if (kdim.back() != n) throw std::invalid_argument("characteristic sequence needs R_x nilpotent");
  // blocks of size >= k: kdim[k] - kdim[k-1]
  std::vector<int> seq;
  for (size_t k = 1; k < kdim.size(); k++) {
    int ge_k = kdim[k] - kdim[k - 1];
    int ge_k1 = k + 1 < kdim.size() ? kdim[k + 1] - kdim[k] : 0;
    for (int t = 0; t < ge_k - ge_k1; t++) seq.push_back(int(k));
  }
  std::sort(seq.rbegin(), seq.rend());
  return seq;
}

GradingResult natural_grading(const AlgebraInstance& a) {
  const int n = a.dim();
  auto lc = lower_central_series(a);
  if (lc.back().dim() != 0) throw std::invalid_argument("natural grading needs a nilpotent algebra");
  const int depth = int(lc.size()) - 1;  // L^{depth+1} = 0

  GradingResult res;
  res.layer_of_basis.assign(n, 1);
  for (int i = 0; i < n; i++) {
    int layer = 1;
    for (int k = 1; k < int(lc.size()); k++)
      if (lc[k].contains(unit_vec(n, i))) layer = k + 1;
    res.layer_of_basis[i] = layer;
  }
  res.layer_dims.assign(depth, 0);
  for (int i = 0; i < n; i++) res.layer_dims[res.layer_of_basis[i] - 1]++;
  for (int k = 0; k < depth; k++) {
    int expect = lc[k].dim() - lc[k + 1].dim();
    if (res.layer_dims[k] != expect)
      throw std::invalid_argument("basis is not adapted to the lower central series");
  }

  // gr(L): keep the layer(i)+layer(j) component of each product, drop deeper
  AlgebraInstance gr(n, a.field());
  gr.set_labels(a.labels());
  bool equal = true;
  for (auto [i, j] : a.nonzero_pairs()) {
    int target = res.layer_of_basis[i] + res.layer_of_basis[j];
    SparseVec kept;
    for (const auto& [k, c] : a.product(i, j)) {
      if (res.layer_of_basis[k] == target)
        kept.push_back({k, c});
      else if (res.layer_of_basis[k] < target)
        throw std::runtime_error("product escapes its gradation layer");
      else
        equal = false;
    }
    gr.set_product(i, j, kept);
  }
  res.graded = std::move(gr);
  res.equals_input = equal;
  return res;
}

AlgebraInstance apply_basis_change(const AlgebraInstance& a, const Matrix& p) {
  const int n = a.dim();
  if (p.rows() != n || p.cols() != n) throw std::invalid_argument("basis change shape mismatch");
  // coordinates of an old-basis vector w in the new basis: (p^T)^{-1} w
  Matrix q = invert(p.transpose());

  AlgebraInstance out(n, a.field());
  out.set_labels(a.labels());
  for (int i = 0; i < n; i++) {
    Vec fi = p.row(i);
    for (int j = 0; j < n; j++) {
      Vec w = a.multiply(fi, p.row(j));
      if (is_zero_vec(w)) continue;
      Vec u = q.apply(w);
      SparseVec sv;
      for (int k = 0; k < n; k++)
        if (!u[k].is_zero()) sv.push_back({k, u[k]});
      out.set_product(i, j, std::move(sv));
    }
  }
  out.set_leibniz_checked(a.leibniz_checked());
  return out;
}

}  // namespace qfl
