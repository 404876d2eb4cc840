#include "qfl/extensions.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfl {

namespace {

/// Affine form c + sum coeff_m t_m in the free parameters of a solution.
struct AffineForm {
  Scalar c;
  std::vector<std::pair<int, Scalar>> lin;  // sorted by parameter index
};

AffineForm affine_of_unknown(const ExtensionSolution& s, int idx) {
  AffineForm f;
  f.c = s.particular[idx];
  for (int m = 0; m < s.homogeneous.dim(); m++) {
    Scalar w = s.homogeneous.basis().at(m, idx);
    if (!w.is_zero()) f.lin.push_back({m, w});
  }
  return f;
}

void add_scaled(QuadPoly& p, const Scalar& w, const AffineForm& f) {
  if (w.is_zero()) return;
  p.constant += w * f.c;
  for (const auto& [m, v] : f.lin) {
    auto& slot = p.linear[m];
    slot += w * v;
    if (slot.is_zero()) p.linear.erase(m);
  }
}

void add_scaled_product(QuadPoly& p, const Scalar& w, const AffineForm& a, const AffineForm& b) {
  if (w.is_zero()) return;
  p.constant += w * a.c * b.c;
  auto add_lin = [&](int m, const Scalar& v) {
    auto& slot = p.linear[m];
    slot += v;
    if (slot.is_zero()) p.linear.erase(m);
  };
  if (!b.c.is_zero())
    for (const auto& [m, v] : a.lin) add_lin(m, w * v * b.c);
  if (!a.c.is_zero())
    for (const auto& [m, v] : b.lin) add_lin(m, w * v * a.c);
  for (const auto& [m1, v1] : a.lin)
    for (const auto& [m2, v2] : b.lin) {
      auto key = std::minmax(m1, m2);
      auto& slot = p.quadratic[{key.first, key.second}];
      slot += w * v1 * v2;
      if (slot.is_zero()) p.quadratic.erase({key.first, key.second});
    }
}

}  // namespace

Scalar QuadPoly::eval(const Vec& t) const {
  Scalar r = constant;
  for (const auto& [m, v] : linear) r += v * t[m];
  for (const auto& [mm, v] : quadratic) r += v * t[mm.first] * t[mm.second];
  return r;
}

std::string QuadPoly::str() const {
  std::string s = constant.is_zero() ? "" : constant.str();
  auto join = [&](const std::string& term) {
    if (s.empty()) s = term;
    else s += " + " + term;
  };
  for (const auto& [m, v] : linear) join(v.str() + "*t" + std::to_string(m));
  for (const auto& [mm, v] : quadratic)
    join(v.str() + "*t" + std::to_string(mm.first) + "*t" + std::to_string(mm.second));
  return s.empty() ? "0" : s;
}

bool is_derivation(const AlgebraInstance& a, const Matrix& d) {
  const int n = a.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (int i = 0; i < n; i++) {
    Vec di = d.col(i);
    for (int j = 0; j < n; j++) {
      Vec lhs = d.apply(a.sparse_to_vec(a.product(i, j)));
      Vec rhs = a.multiply(di, unit_vec(n, j)) + a.multiply(unit_vec(n, i), d.col(j));
      if (!is_zero_vec(lhs - rhs)) return false;
    }
  }
  return true;
}

bool is_nilpotent_matrix(const Matrix& d) {
  const int n = d.rows();
  Matrix p = d;
  for (int k = 1; k <= n; k++) {
    if (p.is_zero()) return true;
    p = p * d;
  }
  return p.is_zero();
}

ExtensionProblem ExtensionProblem::make(AlgebraInstance nilradical, Matrix right_action,
                                        std::vector<int> annr_seed, bool require_non_nilpotent) {
  if (right_action.rows() != nilradical.dim() || right_action.cols() != nilradical.dim())
    throw std::invalid_argument("right action shape mismatch");
  if (!is_derivation(nilradical, right_action))
    throw std::invalid_argument("right action is not a derivation of the nilradical");
  if (require_non_nilpotent && is_nilpotent_matrix(right_action))
    throw std::invalid_argument("right action is nilpotent; extension would not be solvable non-nilpotent");
  ExtensionProblem p;
  p.nilradical = std::move(nilradical);
  p.right_action = std::move(right_action);
  p.annr_seed = std::move(annr_seed);
  p.require_non_nilpotent = require_non_nilpotent;
  return p;
}

ExtensionSystem completion_system(const ExtensionProblem& p) {
  const AlgebraInstance& N = p.nilradical;
  const int n = N.dim();
  const int nu = p.unknowns();
  const Matrix& D = p.right_action;
  std::vector<Vec> rows;
  Vec rhs;
  auto row_block = [&](int count) {
    size_t base = rows.size();
    for (int k = 0; k < count; k++) rows.push_back(Vec(nu));
    rhs.resize(rows.size());
    return base;
  };
  auto lidx = [&](int i, int t) { return i * n + t; };
  const int qbase = n * n;

  // (e_i, x, e_j):  [e_i, l_j] = [D e_i, e_j] - D([e_i, e_j])
  for (int i = 0; i < n; i++) {
    Vec dei = D.col(i);
    for (int j = 0; j < n; j++) {
      size_t base = row_block(n);
      for (int t = 0; t < n; t++)
        for (const auto& [k, c] : N.product(i, t)) rows[base + k][lidx(j, t)] += c;
      Vec known = N.multiply(dei, unit_vec(n, j)) - D.apply(N.sparse_to_vec(N.product(i, j)));
      for (int k = 0; k < n; k++) rhs[base + k] = known[k];
    }
  }

  // (x, e_i, e_j):  sum_t c[i][j][t] l_t - [l_i, e_j] + [l_j, e_i] = 0
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      size_t base = row_block(n);
      for (const auto& [t, c] : N.product(i, j))
        for (int k = 0; k < n; k++) rows[base + k][lidx(t, k)] += c;
      for (int t = 0; t < n; t++) {
        for (const auto& [k, c] : N.product(t, j)) rows[base + k][lidx(i, t)] -= c;
        for (const auto& [k, c] : N.product(t, i)) rows[base + k][lidx(j, t)] += c;
      }
    }

  // (x, e_i, x):  sum_t (D e_i)_t l_t - D l_i + [q, e_i] = 0
  for (int i = 0; i < n; i++) {
    size_t base = row_block(n);
    Vec dei = D.col(i);
    for (int t = 0; t < n; t++) {
      if (!dei[t].is_zero())
        for (int k = 0; k < n; k++) rows[base + k][lidx(t, k)] += dei[t];
      for (int k = 0; k < n; k++)
        if (!D.at(k, t).is_zero()) rows[base + k][lidx(i, t)] -= D.at(k, t);
      for (const auto& [k, c] : N.product(t, i)) rows[base + k][qbase + t] += c;
    }
  }

  // (e_i, x, x):  [e_i, q] = 0
  for (int i = 0; i < n; i++) {
    size_t base = row_block(n);
    for (int t = 0; t < n; t++)
      for (const auto& [k, c] : N.product(i, t)) rows[base + k][qbase + t] += c;
  }

  // Ann_r seed: [x, e_i] = 0
  for (int i : p.annr_seed) {
    size_t base = row_block(n);
    for (int t = 0; t < n; t++) rows[base + t][lidx(i, t)] = Scalar(1);
  }

  ExtensionSystem sys;
  sys.lhs = Matrix::from_rows(rows, nu);
  sys.rhs = rhs;
  return sys;
}

Scalar ExtensionSolution::value(int idx, const Vec& t) const {
  Scalar r = particular[idx];
  for (int m = 0; m < homogeneous.dim(); m++) {
    Scalar w = homogeneous.basis().at(m, idx);
    if (!w.is_zero()) r += w * t[m];
  }
  return r;
}

ExtensionSolution solve_extension(const ExtensionProblem& p) {
  auto sys = completion_system(p);
  auto sol = solve_affine(sys.lhs, sys.rhs);
  ExtensionSolution out;
  if (!sol) return out;
  out.consistent = true;
  out.particular = std::move(sol->particular);
  out.homogeneous = std::move(sol->homogeneous);
  return out;
}

std::vector<QuadraticResidual> quadratic_residuals(const ExtensionProblem& p,
                                                   const ExtensionSolution& s) {
  if (!s.consistent) throw std::invalid_argument("quadratic stage needs a consistent linear stage");
  const AlgebraInstance& N = p.nilradical;
  const int n = N.dim();
  const Matrix& D = p.right_action;
  const int qbase = n * n;

  std::vector<AffineForm> l(n * n + n);
  for (int idx = 0; idx < n * n + n; idx++) l[idx] = affine_of_unknown(s, idx);

  std::vector<QuadraticResidual> out;
  auto emit = ([&](const std::string& name, std::vector<QuadPoly>& comps) {
    for (int k = 0; k < n; k++)
      if (!comps[k].is_zero()) out.push_back({name, k, std::move(comps[k])});
  });

  // LI(x,x,e_i) = [x, l_i] - [q, e_i] + D l_i
  for (int i = 0; i < n; i++) {
    std::vector<QuadPoly> comps(n);
    for (int t = 0; t < n; t++) {
      // [x, l_i] = sum_t (l_i)_t l_t
      for (int k = 0; k < n; k++) {
        const AffineForm& lt_k = l[t * n + k];
        if (lt_k.c.is_zero() && lt_k.lin.empty()) continue;
        add_scaled_product(comps[k], Scalar(1), l[i * n + t], lt_k);
      }
      for (const auto& [k, c] : N.product(t, i)) add_scaled(comps[k], -c, l[qbase + t]);
      for (int k = 0; k < n; k++)
        if (!D.at(k, t).is_zero()) add_scaled(comps[k], D.at(k, t), l[i * n + t]);
    }
    emit("LI(x,x,e" + std::to_string(i + 1) + ")", comps);
  }

  // LI(x,x,x) = [x, q] = sum_t q_t l_t
  {
    std::vector<QuadPoly> comps(n);
    for (int t = 0; t < n; t++)
      for (int k = 0; k < n; k++) {
        const AffineForm& lt_k = l[t * n + k];
        if (lt_k.c.is_zero() && lt_k.lin.empty()) continue;
        add_scaled_product(comps[k], Scalar(1), l[qbase + t], lt_k);
      }
    emit("LI(x,x,x)", comps);
  }
  return out;
}

AlgebraInstance realize_extension(const ExtensionProblem& p, const ExtensionSolution& s,
                                  const Vec& t) {
  const AlgebraInstance& N = p.nilradical;
  const int n = N.dim();
  AlgebraInstance a(n + 1, N.field());
  for (auto [i, j] : N.nonzero_pairs())
    for (const auto& [k, c] : N.product(i, j)) a.add_product(i, j, k, c);
  for (int i = 0; i < n; i++)
    for (int k = 0; k < n; k++) {
      if (!p.right_action.at(k, i).is_zero()) a.add_product(i, n, k, p.right_action.at(k, i));
      Scalar v = s.value(i * n + k, t);
      if (!v.is_zero()) a.add_product(n, i, k, v);
    }
  for (int k = 0; k < n; k++) {
    Scalar v = s.value(n * n + k, t);
    if (!v.is_zero()) a.add_product(n, n, k, v);
  }
  auto labels = a.labels();
  labels.back() = "x";
  a.set_labels(labels);
  return a;
}

AlgebraInstance restrict_to_ideal(const AlgebraInstance& r, const Subspace& n_sub) {
  const int m = n_sub.dim();
  AlgebraInstance a(m, r.field());
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++) {
      Vec p = r.multiply(n_sub.basis_vec(i), n_sub.basis_vec(j));
      if (is_zero_vec(p)) continue;
      auto coords = n_sub.coordinates(p);
      if (!coords) throw std::invalid_argument("subspace is not a subalgebra");
      SparseVec sv;
      for (int k = 0; k < m; k++)
        if (!(*coords)[k].is_zero()) sv.push_back({k, (*coords)[k]});
      a.set_product(i, j, std::move(sv));
    }
  return a;
}

std::string ExtensionCertificate::describe() const {
  std::string s;
  auto flag = [&](const char* name, bool v) {
    if (!s.empty()) s += ", ";
    s += name;
    s += v ? "=yes" : "=NO";
  };
  flag("ideal", ideal);
  flag("codim1", codim1);
  flag("restriction_nilpotent", restriction_nilpotent);
  flag("solvable", solvable);
  flag("non_nilpotent", non_nilpotent);
  flag("right_action_derivation", right_action_derivation);
  flag("right_action_non_nilpotent", right_action_non_nilpotent);
  return s;
}

ExtensionCertificate verify_solvable_extension(const AlgebraInstance& r, const Subspace& n_sub) {
  ExtensionCertificate cert;
  const int n = r.dim();
  if (n_sub.ambient() != n) throw std::invalid_argument("ambient mismatch");
  cert.codim1 = n_sub.dim() == n - 1;

  Subspace full = Subspace::full(n);
  cert.ideal = n_sub.contains(product_subspace(r, n_sub, full)) &&
               n_sub.contains(product_subspace(r, full, n_sub));
  if (!cert.ideal) return cert;

  // restriction of the bracket to the ideal, in n_sub coordinates
  AlgebraInstance sub = restrict_to_ideal(r, n_sub);
  cert.restriction_nilpotent = is_nilpotent(sub);

  auto prof = series(r);
  cert.solvable = prof.solvable;
  cert.non_nilpotent = !prof.nilpotent;

  // complement representative: first basis vector outside n_sub
  int xi = -1;
  for (int i = 0; i < n; i++)
    if (!n_sub.contains(unit_vec(n, i))) { xi = i; break; }
  if (xi < 0) return cert;
  Vec x = unit_vec(n, xi);

  Matrix d(n_sub.dim(), n_sub.dim());
  for (int i = 0; i < n_sub.dim(); i++) {
    Vec img = r.multiply(n_sub.basis_vec(i), x);
    auto coords = n_sub.coordinates(img);
    if (!coords) return cert;  // not invariant; ideal check would have failed
    for (int k = 0; k < n_sub.dim(); k++) d.at(k, i) = (*coords)[k];
  }
  cert.right_action_derivation = is_derivation(sub, d);
  cert.right_action_non_nilpotent = !is_nilpotent_matrix(d);
  return cert;
}

}  // namespace qfl
