#ifndef QFL_ALGEBRA_HPP
#define QFL_ALGEBRA_HPP

#include "qfl/linalg.hpp"

#include <string>
#include <vector>

namespace qfl {

enum class Field { Q, Qi };

/// Sparse product value: sorted list of (basis index, coefficient).
using SparseVec = std::vector<std::pair<int, Scalar>>;

/// Finite-dimensional algebra given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k over Q or Q(i). Omitted products are
/// zero. Indices are 0-based internally, 1-based in JSON and labels.
class AlgebraInstance {
public:
  AlgebraInstance() = default;
  AlgebraInstance(int dim, Field field = Field::Q);

  int dim() const { return n_; }
  Field field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Define [e_i, e_j] += c e_k (0-based). Zero coefficients are dropped.
  void add_product(int i, int j, int k, const Scalar& c);
  void set_product(int i, int j, SparseVec value);
  const SparseVec& product(int i, int j) const { return prod_[size_t(i) * n_ + j]; }
  bool has_product(int i, int j) const { return !product(i, j).empty(); }
  /// All (i, j) with a nonzero product, in row-major order.
  std::vector<std::pair<int, int>> nonzero_pairs() const;

  bool leibniz_checked() const { return leibniz_checked_; }
  void set_leibniz_checked(bool v) { leibniz_checked_ = v; }

  /// Bilinear extension of the structure constants.
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec multiply_basis(int i, const Vec& y) const;  // [e_i, y]
  Vec multiply_basis_right(const Vec& x, int j) const;  // [x, e_j]
  Vec sparse_to_vec(const SparseVec& v) const;

  /// Matrix of right multiplication R_x : v -> [v, x].
  Matrix right_mult_matrix(const Vec& x) const;
  Matrix left_mult_matrix(const Vec& x) const;  // v -> [x, v]

private:
  int n_ = 0;
  Field field_ = Field::Q;
  std::vector<std::string> labels_;
  std::vector<SparseVec> prod_;  // dense n*n grid of sparse values
  bool leibniz_checked_ = false;
};

/// LI(x,y,z) = [x,[y,z]] - [[x,y],z] + [[x,z],y].
Vec leibniz_identity(const AlgebraInstance& a, const Vec& x, const Vec& y, const Vec& z);

struct LeibnizViolation {
  int i, j, k;   // basis triple, 0-based
  Vec residual;
};

struct LeibnizReport {
  bool ok = true;
  long long triples_checked = 0;
  std::vector<LeibnizViolation> violations;  // capped
};

/// Evaluates LI on all basis triples; ok iff every residual is exactly zero.
LeibnizReport leibniz_residual(const AlgebraInstance& a, size_t max_violations = 16);

/// Marks the algebra checked, or throws std::runtime_error when LI fails.
void require_leibniz(AlgebraInstance& a, const std::string& what);

/// Span of [v, w] over basis vectors v of s1, w of s2.
Subspace product_subspace(const AlgebraInstance& a, const Subspace& s1, const Subspace& s2);

struct SeriesProfile {
  std::vector<int> lower_central;  // dim L^1, dim L^2, ... until stabilization
  std::vector<int> derived;        // dim L^[1], dim L^[2], ...
  bool nilpotent = false;
  bool solvable = false;
};

SeriesProfile series(const AlgebraInstance& a);
bool is_nilpotent(const AlgebraInstance& a);
bool is_solvable(const AlgebraInstance& a);

/// Terms of the lower central series as subspaces, L^1 = L first,
/// ending with the stabilized term (zero iff nilpotent).
std::vector<Subspace> lower_central_series(const AlgebraInstance& a);
std::vector<Subspace> derived_series(const AlgebraInstance& a);

Subspace right_annihilator(const AlgebraInstance& a);
Subspace left_annihilator(const AlgebraInstance& a);
Subspace center(const AlgebraInstance& a);

/// Non-increasing Jordan block sizes of the nilpotent operator R_x,
/// from kernel dimensions of its powers. Requires x outside L^2 and
/// R_x nilpotent; throws std::invalid_argument otherwise.
std::vector<int> characteristic_sequence(const AlgebraInstance& a, const Vec& x);

struct GradingResult {
  std::vector<int> layer_dims;        // dim L^i / L^{i+1}
  std::vector<int> layer_of_basis;    // gradation layer of each basis vector
  AlgebraInstance graded;             // gr(L) under the canonical identification
  bool equals_input = false;
};

/// Associated graded algebra of a nilpotent algebra, using the canonical
/// section that sorts basis vectors into gradation layers. Requires the
/// basis to be adapted to the lower central series.
GradingResult natural_grading(const AlgebraInstance& a);

/// Change of basis: row i of p holds the new basis vector f_i in old
/// coordinates. Throws on singular p.
AlgebraInstance apply_basis_change(const AlgebraInstance& a, const Matrix& p);

}  // namespace qfl

#endif
