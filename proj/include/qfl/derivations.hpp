#ifndef QFL_DERIVATIONS_HPP
#define QFL_DERIVATIONS_HPP

#include "qfl/algebra.hpp"
#include "qfl/catalog.hpp"

#include <string>
#include <vector>

namespace qfl {

/// Der(L) as a subspace of the n x n matrix space (row-major coordinates).
struct DerivationSpace {
  int n = 0;
  Subspace space;  // ambient n*n
  int dim() const { return space.dim(); }
  Matrix basis_matrix(int i) const;
  bool contains(const Matrix& d) const;
};

/// Exact solution space of D([u,v]) = [Du, v] + [u, Dv] over all basis pairs.
DerivationSpace derivation_space(const AlgebraInstance& a);

bool is_nilpotent_derivation(const Matrix& d);

/// Rank of the projection of Der(L) onto selected matrix entries
/// (row, col pairs, 0-based).
int projection_rank(const DerivationSpace& der, const std::vector<std::pair<int, int>>& coords);

/// Diagonal coordinates used for the nil-independence count: (1,1) and
/// (n-1,n-1) entries for the L family, (1,1) and (3,3) for the G family.
std::vector<std::pair<int, int>> diag_coords(FamilyTag tag, int n);

/// Rank of Der(L) projected onto the family's diagonal coordinates; equals
/// the maximal number of nil-independent derivations for these families.
int nil_independent_rank(const AlgebraInstance& a, const std::vector<std::pair<int, int>>& coords);

/// Parametric derivation family of L(alpha,beta,gamma) / G(alpha,beta,gamma):
/// 2n-1 raw parameters (a_1..a_n, b_2..b_n) subject to a linear constraint
/// list. Supports instantiation on rational grids and predicts dim Der as
/// (2n-1) - rank(constraints).
class ParametricDerivations {
public:
  ParametricDerivations(FamilyTag tag, int n, const Scalar& alpha, const Scalar& beta,
                        const Scalar& gamma);

  int raw_params() const { return 2 * n_ - 1; }
  int expected_dim() const;           // raw params minus constraint rank
  const Matrix& constraints() const { return constraints_; }

  /// Matrix of the derivation for a raw parameter vector; the vector must
  /// satisfy the constraint list (checked).
  Matrix instantiate(const Vec& raw) const;

  /// Completes a partial assignment of the free parameters to a raw vector
  /// satisfying the constraints (free parameters in pivot-complement order).
  Vec raw_from_free(const Vec& free_values) const;
  int free_count() const;

private:
  FamilyTag tag_;
  int n_;
  Scalar alpha_, beta_, gamma_;
  Matrix constraints_;      // rows: linear forms over the 2n-1 raw parameters
  RrefResult constraints_rref_;
};

struct ParametricReport {
  bool inclusion_ok = true;      // every grid instance lies in Der(L)
  bool dim_matches = true;       // dim Der == free-parameter count
  int der_dim = 0;
  int expected_dim = 0;
  std::string witness;           // first violation, if any
  bool ok() const { return inclusion_ok && dim_matches; }
};

/// Checks the published parametric form against the computed derivation
/// space on a small rational grid per free parameter.
ParametricReport check_parametric_form(const AlgebraInstance& a, const ParametricDerivations& fam,
                                       const std::vector<Scalar>& grid);

}  // namespace qfl

#endif
