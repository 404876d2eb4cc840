#ifndef QFL_EXTENSIONS_HPP
#define QFL_EXTENSIONS_HPP

#include "qfl/algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace qfl {

/// Codimension-1 extension data: nilradical N plus the fixed right action
/// D = R_x|N of the adjoined element x. The unknowns are the left products
/// [x, e_i] and the square [x, x], both sought inside N.
struct ExtensionProblem {
  AlgebraInstance nilradical;
  Matrix right_action;               // n x n, [e_i, x] = D e_i (column i)
  std::vector<int> annr_seed;        // 0-based i with [x, e_i] forced to zero
  bool require_non_nilpotent = true; // reject nilpotent D at construction

  /// Validates D in Der(N) (and non-nilpotency when requested); throws
  /// std::invalid_argument on failure.
  static ExtensionProblem make(AlgebraInstance nilradical, Matrix right_action,
                               std::vector<int> annr_seed = {},
                               bool require_non_nilpotent = true);

  int unknowns() const { return nilradical.dim() * (nilradical.dim() + 1); }
};

/// Unknown layout: coordinate t of [x, e_i] at index i*n + t, coordinate t
/// of [x, x] at index n*n + t.
struct ExtensionSystem {
  Matrix lhs;
  Vec rhs;
};

/// Stacks every Leibniz triple that is linear in the unknowns
/// ((ei,x,ej), (x,ei,ej), (x,ei,x), (ei,x,x)) plus the Ann_r-seed rows.
ExtensionSystem completion_system(const ExtensionProblem& p);

struct ExtensionSolution {
  bool consistent = false;
  Vec particular;        // one solution of the linear stage
  Subspace homogeneous;  // kernel of the linear stage
  /// Value of unknown `idx` under free-parameter assignment `t`.
  Scalar value(int idx, const Vec& t) const;
  int free_params() const { return homogeneous.dim(); }
};

ExtensionSolution solve_extension(const ExtensionProblem& p);

/// Degree-<=2 polynomial in the free parameters of an affine family.
struct QuadPoly {
  Scalar constant;
  std::map<int, Scalar> linear;                    // t_i
  std::map<std::pair<int, int>, Scalar> quadratic; // t_i t_j, i <= j
  bool is_zero() const { return constant.is_zero() && linear.empty() && quadratic.empty(); }
  Scalar eval(const Vec& t) const;
  std::string str() const;
};

struct QuadraticResidual {
  std::string triple;  // source identity, e.g. "LI(x,x,e3)"
  int coordinate;      // basis coordinate of the residual component
  QuadPoly poly;
};

/// Expands LI(x,x,e_i) for all i and LI(x,x,x) over the affine solution
/// family; the returned polynomials vanish exactly on the parameter values
/// that complete the extension to a Leibniz algebra.
std::vector<QuadraticResidual> quadratic_residuals(const ExtensionProblem& p,
                                                   const ExtensionSolution& s);

/// Builds the (n+1)-dimensional algebra from a fully pinned solution.
AlgebraInstance realize_extension(const ExtensionProblem& p, const ExtensionSolution& s,
                                  const Vec& t);

struct ExtensionCertificate {
  bool ideal = false;
  bool codim1 = false;
  bool restriction_nilpotent = false;
  bool solvable = false;
  bool non_nilpotent = false;
  bool right_action_derivation = false;
  bool right_action_non_nilpotent = false;
  bool ok() const {
    return ideal && codim1 && restriction_nilpotent && solvable && non_nilpotent &&
           right_action_derivation && right_action_non_nilpotent;
  }
  std::string describe() const;
};

/// Checks that n_sub is a codimension-1 nilpotent ideal of r, that r is
/// solvable but not nilpotent, and that the right action of a complement
/// representative restricts to a non-nilpotent derivation of n_sub.
ExtensionCertificate verify_solvable_extension(const AlgebraInstance& r, const Subspace& n_sub);

/// Restriction of the algebra to an ideal spanned by basis vectors of the
/// ambient space (n_sub must be coordinate-aligned for this).
AlgebraInstance restrict_to_ideal(const AlgebraInstance& r, const Subspace& n_sub);

bool is_derivation(const AlgebraInstance& a, const Matrix& d);
bool is_nilpotent_matrix(const Matrix& d);

}  // namespace qfl

#endif
