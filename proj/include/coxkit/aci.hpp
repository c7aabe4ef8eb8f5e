#pragma once

#include <string>
#include <vector>

#include "coxkit/actiongroup.hpp"
#include "coxkit/element.hpp"

namespace coxkit {

// Element (w, g) of the semidirect product: g twists by the diagram
// automorphism, so (w,g)(w',g') = (w · g(w'), gg').
struct SemidirectElement {
  GroupElement w;
  int g = 0;  // index into the action group
};

SemidirectElement sd_identity(const CoxeterSystem& sys,
                              const FiniteActionGroup& G);
SemidirectElement sd_mul(const FiniteActionGroup& G,
                         const SemidirectElement& a,
                         const SemidirectElement& b);
SemidirectElement sd_inverse(const FiniteActionGroup& G,
                             const SemidirectElement& a);
bool sd_equal(const SemidirectElement& a, const SemidirectElement& b);
bool sd_is_involution(const FiniteActionGroup& G, const SemidirectElement& a);

// Components whose parabolic subgroup is finite; under a finite action
// group every orbit of components is finite, so these are exactly the
// components that almost-central involutions may touch.
struct OrhoInfo {
  std::vector<int> components;  // indices into components(sys).parts
  std::vector<int> generators;  // union of their vertices, sorted
};

OrhoInfo o_rho(const CoxeterSystem& sys, const FiniteActionGroup& G);

// Nontrivial involutions of G acting as the identity on every
// infinite-type component.
std::vector<int> g_rho(const CoxeterSystem& sys, const FiniteActionGroup& G);

struct AciVerdict {
  bool aci = false;
  // violated clauses when not: "w-clause ..." / "g-clause ..."
  std::vector<std::string> reasons;
};

// Decides whether the involution (w,g) is almost central, i.e. whether its
// centralizer has finite index: true iff support(w) lies in the finite-type
// components and g moves nothing of infinite type. Requires g(w) = w^{-1},
// g^2 = 1 and (w,g) != identity.
AciVerdict is_aci_involution(const CoxeterSystem& sys,
                             const FiniteActionGroup& G,
                             const SemidirectElement& x);

// Description of the subgroup generated by all almost-central involutions:
// the parabolic on the finite-type components, extended by the involutions
// of g_rho.
struct AciReport {
  OrhoInfo orho;
  std::vector<int> grho;
  std::vector<int> wpart_generators;  // simple reflections, = orho.generators
  std::vector<int> gpart_generators;  // = grho
};

AciReport aci_subgroup(const CoxeterSystem& sys, const FiniteActionGroup& G);

// Full enumeration oracle for finite W: lists the semidirect product, finds
// all involutions, closes them under multiplication and compares the result
// with the description above, element for element.
struct BruteForceResult {
  long group_size = 0;
  long involution_count = 0;
  long generated_size = 0;
  bool matches_description = false;
};

BruteForceResult brute_force_aci_finite(const CoxeterSystem& sys,
                                        const FiniteActionGroup& G,
                                        long cap = 10000);

// Counts distinct conjugates y x y^{-1} over the ball of word length
// <= radius, stopping once target is reached. Many distinct conjugates
// mean a small centralizer: the counterpart of a NotACI verdict.
long conjugate_growth(const CoxeterSystem& sys, const FiniteActionGroup& G,
                      const SemidirectElement& x, long target, int radius);

}  // namespace coxkit
