#ifndef QFL_LINALG_HPP
#define QFL_LINALG_HPP

#include "qfl/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qfl {

using Vec = std::vector<Scalar>;

Vec zero_vec(int n);
Vec unit_vec(int n, int i);
bool is_zero_vec(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
void axpy(Vec& y, const Scalar& c, const Vec& x);  // y += c*x

/// Dense matrix over Scalar, row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;
  Vec apply(const Vec& x) const;        // M x
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  bool is_zero() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Matrix mat;
  int rank = 0;
  std::vector<int> pivots;  // pivot column per nonzero row
};

/// Unique reduced row-echelon form; pivot search takes the first row with a
/// nonzero entry in column order, so equal row spaces yield equal matrices.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Inverse of a square matrix; throws std::invalid_argument when singular.
Matrix invert(const Matrix& m);

/// Row space of a matrix kept in canonical RREF; doubles as a subspace of
/// the ambient coordinate space.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace span(int ambient, const std::vector<Vec>& vectors);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vec(int i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the RREF basis, if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  int ambient_ = 0;
  Matrix basis_;  // dim x ambient, canonical RREF, no zero rows
};

/// Kernel {v : M v = 0} as a subspace of Q^cols.
Subspace nullspace(const Matrix& m);

struct AffineSolution {
  Vec particular;
  Subspace homogeneous;
};

/// Full solution set of M x = b, or nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& b);

/// Incremental row-space accumulator on sparse rows; used for the large
/// derivation / extension systems where most rows are short. Maintains the
/// canonical RREF of everything inserted so far.
class SparseRref {
public:
  using Entry = std::pair<int, Scalar>;  // (column, coefficient)
  explicit SparseRref(int cols) : cols_(cols), pivot_row_(cols, -1) {}

  /// Returns true if the row increased the rank.
  bool add_row(std::vector<Entry> row);

  int cols() const { return cols_; }
  int rank() const { return int(rows_.size()); }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Nullspace of the accumulated row set (standard free-column basis),
  /// as a canonical-RREF subspace of Q^cols.
  Subspace kernel() const;

  /// Dense copy of the accumulated RREF.
  Matrix to_matrix() const;

private:
  int cols_;
  std::vector<std::vector<Entry>> rows_;  // sorted by column, leading coeff 1
  std::vector<int> pivots_;               // pivot column of rows_[i]
  std::vector<int> pivot_row_;            // column -> row index or -1
  void reduce(std::vector<Entry>& row) const;
};

}  // namespace qfl

#endif
