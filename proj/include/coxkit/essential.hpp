#pragma once

#include <string>
#include <vector>

#include "coxkit/element.hpp"
#include "coxkit/geom.hpp"

namespace coxkit {

// Exact sign trace of w^n(gamma) over the window n in [-window, window].
// Every entry is +1 or -1; a mixed-sign image would mean gamma left the
// root system, which cannot happen for genuine roots.
struct SignSequence {
  int window = 0;
  std::vector<int> signs;  // index n + window

  int at(int n) const { return signs[static_cast<size_t>(n + window)]; }
};

// gamma must be a root (positive or negative); verified on entry.
SignSequence sign_sequence(const GroupElement& w, const Vec& gamma, int window);

// Orbit classification of a root under powers of w.
//   Periodic        w^period(gamma) == gamma exactly, first such period
//   Odd             limits at +inf and -inf differ
//   EvenNonperiodic limits agree but the orbit never returns
//   Undecided       cap exhausted without a certificate
// Odd / EvenNonperiodic are only reported once both iteration directions
// show strictly monotone coordinate sums for the final stable_steps steps
// after the last sign change; eventual constancy holds in general but has
// no effective bound, so monotone growth stands in as the certificate.
struct RootClass {
  enum class Verdict { Periodic, Odd, EvenNonperiodic, Undecided };
  Verdict verdict = Verdict::Undecided;
  long period = 0;          // Periodic only
  int cap = 0;              // window actually used
  int sign_changes = 0;     // over [-cap, cap]
  int limit_forward = 0;    // +1/-1 once certified
  int limit_backward = 0;
  std::string certificate;  // empty unless Odd / EvenNonperiodic
};

RootClass classify_root(const GroupElement& w, const Vec& gamma, int cap,
                        int stable_steps = 10);

const char* verdict_str(RootClass::Verdict v);

// All positive roots up to the enumeration depth, split by orbit class.
// Undecided roots are carried along explicitly rather than dropped.
struct OddRootReport {
  std::vector<Vec> odd;
  std::vector<Vec> undecided;
};

OddRootReport odd_reflections(const GroupElement& w, int depth, int cap);

// Expression of a simple root inside the reflection closure of the odd
// set: alpha_simple = +/- r(odd[apply[0]]) ... r(odd[apply.back()]) odd[base]
// where r(beta) is the reflection along beta.
struct PinfWitness {
  int simple = 0;
  std::vector<int> apply;
  int base = 0;
};

// Yes iff the bounded mutual-reflection closure of the odd roots reaches
// every simple root. Never certifies the negative direction: refuting
// generation needs the full parabolic-closure theory, which this tool does
// not implement, so anything short of Yes stays Undecided.
struct PinfResult {
  enum class Kind { Yes, Undecided };
  Kind kind = Kind::Undecided;
  std::vector<PinfWitness> witness;  // one per simple root when Yes
  OddRootReport odds;
};

// Requires an irreducible system of infinite type.
PinfResult pinf_generates(const GroupElement& w, int depth, int cap);

// True iff the given roots (one per generator) are linearly independent;
// independence forces the standard parabolic closure of the product of
// their reflections to be the whole group.
bool essential_by_independence(const CoxeterSystem& sys,
                               const std::vector<Vec>& roots);

}  // namespace coxkit
