#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxkit/linalg.hpp"
#include "coxkit/system.hpp"

namespace coxkit {

enum class ComponentKind { Finite, Affine, CompactHyperbolic, OtherInfinite };

std::string kind_str(ComponentKind k);

struct ComponentTag {
  ComponentKind kind = ComponentKind::OtherInfinite;
  std::string name;  // catalog label like "A3", "B~3", "X3(4,3,3)"; empty
                     // for OtherInfinite
  std::string str() const;
  bool operator==(const ComponentTag&) const = default;
};

// Exact Sylvester test: all leading principal minors positive.
bool is_positive_definite(const Mat& g);

// Exact test over every principal minor (necessary for semidefiniteness;
// leading minors alone do not suffice when the form is degenerate).
bool is_positive_semidefinite(const Mat& g);

// Dimension of the radical, n - rank(g).
int radical_dimension(const Mat& g);

// True iff every proper principal sub-form is positive definite; since
// definiteness is inherited by submatrices it is enough to drop one index
// at a time.
bool proper_subforms_positive_definite(const Mat& g);

// Label-preserving graph isomorphism by brute-force backtracking; the
// catalogs involved have rank at most 10.
bool graphs_isomorphic(const CoxeterSystem& a, const CoxeterSystem& b);

// Recognize a connected system against the complete catalogs of finite,
// affine and compact hyperbolic types, cross-checked against the exact
// definiteness tests; any disagreement between the two paths throws
// InternalCheckError.
ComponentTag classify_system(const CoxeterSystem& sys);

// Same, for the sub-system spanned by part (which must be a connected
// component of the full graph).
ComponentTag classify_component(const CoxeterSystem& sys,
                                const std::vector<int>& part);

// Component partition together with tags, parts ordered by smallest member.
std::vector<std::pair<std::vector<int>, ComponentTag>> classify_all(
    const CoxeterSystem& sys);

// True iff the part is infinite but every proper subset spans a finite
// (positive definite) sub-form.  part must be connected.
bool is_minimal_nonfinite(const CoxeterSystem& sys, const std::vector<int>& part);

}  // namespace coxkit
