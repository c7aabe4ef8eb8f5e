#pragma once

#include <string>
#include <vector>

#include "coxkit/element.hpp"
#include "coxkit/system.hpp"

namespace coxkit {

// Coxeter label between two generators of the fixed-point subgroup:
// the exact order of the product of the two involutions, an infinite-order
// certificate, or an honest Undecided when the cap runs out.
struct OrbitLabel {
  enum class Kind { Finite, Infinite, Undecided };
  Kind kind = Kind::Undecided;
  long value = 0;  // Finite only
  std::string certificate;

  bool operator==(const OrbitLabel& o) const {
    return kind == o.kind && value == o.value;
  }
};

// Generating data for the subgroup of elements fixed by a diagram
// automorphism tau. Generators are the longest elements of the finite-type
// orbit parabolics; infinite-type orbits contribute nothing and are listed
// separately so they are never silently dropped.
struct FixedPointPresentation {
  std::vector<std::vector<int>> orbits;  // all tau-orbits, sorted by minimum
  std::vector<int> finite_orbits;        // indices into orbits
  std::vector<int> infinite_orbits;
  std::vector<GroupElement> generators;  // parallel to finite_orbits
  // labels[a][b] for a,b indexing finite_orbits; diagonal is 1
  std::vector<std::vector<OrbitLabel>> labels;
};

FixedPointPresentation steinberg_generators(const CoxeterSystem& sys,
                                            const GraphAutomorphism& tau);

// steinberg_generators plus the full label matrix. Non-adjacent orbit pairs
// commute by the full-subgraph property; this is asserted, not assumed.
FixedPointPresentation fixed_system(const CoxeterSystem& sys,
                                    const GraphAutomorphism& tau,
                                    int cap = 200);

// Coxeter system on the fixed-point generators; requires every label to be
// decided (Infinite becomes the infinite bond).
CoxeterSystem fixed_coxeter_system(const FixedPointPresentation& pres);

// True iff tau restricts to the identity on every infinite-type component.
bool finite_index_fixed(const CoxeterSystem& sys,
                        const GraphAutomorphism& tau);

// Product of fixed-point generators: concatenating the reduced expressions
// of the factors should again be reduced, and the support should be exactly
// the union of the orbits. Input indices refer to pres.finite_orbits.
struct CompatibilityReport {
  GroupElement product;
  int s_length = 0;       // length of the product over S
  int sum_lengths = 0;    // sum of the factor lengths
  bool length_additive = false;
  std::vector<int> orbit_union;
  bool support_matches = false;
  bool ok = false;
};

CompatibilityReport reduced_word_compatibility_check(
    const FixedPointPresentation& pres, const std::vector<int>& word);

}  // namespace coxkit
