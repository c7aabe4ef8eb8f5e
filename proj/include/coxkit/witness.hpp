#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxkit/element.hpp"
#include "coxkit/system.hpp"

namespace coxkit {

// One verification row: a concrete system, an optional diagram
// automorphism, a pair of positive roots and either an annihilating
// functional in dual coordinates (affine rows) or a list of simple roots
// spanning the orthogonal space V' (hyperbolic rows). Root membership of
// beta and gamma is certified by the descent walk when the row is verified.
struct WitnessRow {
  std::string name;
  CoxeterSystem system = CoxeterSystem(1);
  std::optional<GraphAutomorphism> tau;
  Vec beta, gamma;
  bool affine = false;
  Vec ann;                  // affine rows: functional over the dual basis
  std::vector<int> vprime;  // hyperbolic rows: simple-root indices
};

enum class ClauseStatus { Pass, Fail, Skipped };

struct ClauseResult {
  std::string clause;  // "a".."e"
  ClauseStatus status = ClauseStatus::Fail;
  std::string detail;
};

struct RowReport {
  std::string name;
  bool ok = false;  // no Fail among the clauses
  std::vector<ClauseResult> clauses;
};

// Affine rows, all exact:
//   (a) <beta,gamma> = -1
//   (b) beta+gamma pairs to zero with every simple root (radical vector)
//   (c) the functional is proportional to <beta,.>, so its kernel is the
//       common orthogonal space of beta and gamma, of codimension 1
//   (d) the functional is not proportional to its tau-image
//   (e) (s_beta s_gamma)^k beta = (2k+1) beta + 2k gamma for k = 1..10,
//       which pins the product's infinite order
// (d) is Skipped when the row carries no automorphism.
RowReport verify_affine_row(const WitnessRow& row);

// Hyperbolic rows, all exact:
//   (a) c = <beta,gamma> < -1
//   (b) every listed simple root is orthogonal to beta and gamma
//   (c) V' has codimension 3
//   (d) {beta, gamma, tau(beta), tau(gamma)} has rank > 2, so the plane
//       spanned by beta and gamma is not tau-invariant
//   (e) eigenvector identities in the quadratic extension by sqrt(c^2-1):
//       both eigenvalues multiply to 1, sum to 4c^2-2, and the explicit
//       eigenvectors are carried onto themselves scaled exactly; c^2-1 > 0
//       certifies the eigenvalues are not on the unit circle
RowReport verify_hyperbolic_row(const WitnessRow& row);

// True iff the planes spanned by the two pairs differ (exact rank test).
// Both pairs must pair strictly below -1.
bool certify_trivial_intersection(const CoxeterSystem& sys, const Vec& beta1,
                                  const Vec& gamma1, const Vec& beta2,
                                  const Vec& gamma2);

// Row file: blocks of key/value lines separated by blank lines.
//   row <name>
//   system <path, relative to the rows file>
//   tau <cycles | ->
//   beta <coords>
//   gamma <coords | word i ... alpha j | highest i ...>
//   ann <coords>            (affine rows)
//   vprime <1-based indices | ->   (hyperbolic rows)
// Coordinates are rationals or sqrt2 / -sqrt2 tokens.
std::vector<WitnessRow> parse_rows(const std::string& text,
                                   const std::string& base_dir);
std::vector<WitnessRow> load_rows(const std::string& path);

}  // namespace coxkit
