#ifndef QFL_CATALOG_HPP
#define QFL_CATALOG_HPP

#include "qfl/algebra.hpp"

#include <map>
#include <optional>
#include <string>

namespace qfl {

/// Nilpotent quasi-filiform families and their codimension-1 solvable
/// extensions. Nilpotent tags: mu1, mu2 (2-filiform), L and G (the unified
/// 3-parameter families). Solvable tags name the extension family and its
/// index, e.g. R1_1m10 = first extension of L(1,-1,0), H3_110 = third
/// extension of G(1,1,0).
enum class FamilyTag {
  mu1,
  mu2,
  L,
  G,
  R1_1m10,
  R2_1m10,
  R1_100,
  R2_100,
  R3_100,
  R4_100,
  R5_100,
  R6_100,
  H1_110,
  H2_110,
  H3_110,
  H4_110,
  H5_110,
  H6_110,
  H1_121,
  H2_121,
  H3_121,
  H4_121,
  H5_121,
  H6_121,
  H7_121,
};

std::string family_name(FamilyTag t);
std::optional<FamilyTag> family_from_name(const std::string& name);
bool family_is_solvable(FamilyTag t);

struct FamilySpec {
  FamilyTag tag = FamilyTag::mu1;
  int n = 6;  // nilradical dimension; solvable algebras have dim n+1
  Scalar alpha, beta, gamma;
  /// Extra parameters for the solvable families ("a", "c", "a2".., "b4".., "alphan").
  std::map<std::string, Scalar> params;
};

/// Structure-constant table of a nilpotent catalog family; the result is
/// Leibniz-verified before being returned. Throws std::invalid_argument on
/// bad n or parameter domain.
AlgebraInstance build(const FamilySpec& spec);

/// Named family from the classification lists, resolved to its (alpha,
/// beta, gamma) pattern; nullopt components are free parameters.
struct AliasInfo {
  FamilyTag tag;  // L or G
  std::optional<Scalar> alpha, beta, gamma;
};
AliasInfo alias(const std::string& name);
const std::vector<std::string>& alias_names();

/// Reconstructed codimension-1 solvable extension; (n+1)-dimensional, basis
/// e1..en, x. Verified (Leibniz + solvable-extension certificate) before
/// being returned; certification failure throws std::runtime_error.
AlgebraInstance build_solvable(const FamilySpec& spec);

/// Default parameter values a family needs to be buildable (for the
/// parameterized solvable families); merged under explicit params.
FamilySpec with_default_params(FamilySpec spec);

}  // namespace qfl

#endif
