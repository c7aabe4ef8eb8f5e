#include "coxkit/essential.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "coxkit/classify.hpp"
#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

// +1 for a positive root image, -1 for a negative one
int root_sign(const Vec& v) {
  switch (sign_pattern(v)) {
    case SignPattern::Positive:
      return 1;
    case SignPattern::Negative:
      return -1;
    default:
      throw InternalCheckError("orbit of a root left the root system");
  }
}

void require_root(const CoxeterSystem& sys, const Vec& gamma) {
  Vec pos = gamma;
  int sign = root_sign(gamma);  // throws on zero / mixed
  if (sign < 0)
    for (TrigScalar& x : pos) x = -x;
  (void)certify_root(sys, pos);  // DomainError if not a root
}

// 0 = none, +1 = strictly increasing, -1 = strictly decreasing
int monotone_direction(const std::vector<TrigScalar>& sums, int steps) {
  if (static_cast<int>(sums.size()) < steps + 1) return 0;
  int dir = 0;
  for (size_t i = sums.size() - static_cast<size_t>(steps); i < sums.size();
       ++i) {
    int d = static_cast<int>((sums[i] - sums[i - 1]).sign());
    if (d == 0 || (dir != 0 && d != dir)) return 0;
    dir = d;
  }
  return dir;
}

struct HalfOrbit {
  std::vector<int> signs;        // index n, n = 0..cap
  std::vector<TrigScalar> sums;  // coordinate sums
  long revisit = 0;              // first n >= 1 with w^n(gamma) == gamma
  int last_change = 0;           // largest n with signs[n] != signs[n-1]
};

HalfOrbit iterate(const GroupElement& w, const Vec& gamma, int cap) {
  HalfOrbit h;
  Vec v = gamma;
  h.signs.push_back(root_sign(v));
  h.sums.push_back(coord_sum(v));
  for (int n = 1; n <= cap; ++n) {
    v = w.act(v);
    h.signs.push_back(root_sign(v));
    h.sums.push_back(coord_sum(v));
    if (h.signs[static_cast<size_t>(n)] != h.signs[static_cast<size_t>(n - 1)])
      h.last_change = n;
    if (h.revisit == 0 && v == gamma) h.revisit = n;
  }
  return h;
}

}  // namespace

SignSequence sign_sequence(const GroupElement& w, const Vec& gamma,
                           int window) {
  if (window < 1) throw DomainError("window must be at least 1");
  require_root(w.system(), gamma);
  SignSequence seq;
  seq.window = window;
  seq.signs.assign(2 * static_cast<size_t>(window) + 1, 0);
  Vec v = gamma;
  seq.signs[static_cast<size_t>(window)] = root_sign(v);
  for (int n = 1; n <= window; ++n) {
    v = w.act(v);
    seq.signs[static_cast<size_t>(window + n)] = root_sign(v);
  }
  GroupElement wi = w.inverse();
  v = gamma;
  for (int n = 1; n <= window; ++n) {
    v = wi.act(v);
    seq.signs[static_cast<size_t>(window - n)] = root_sign(v);
  }
  return seq;
}

RootClass classify_root(const GroupElement& w, const Vec& gamma, int cap,
                        int stable_steps) {
  if (cap < 1) throw DomainError("cap must be at least 1");
  if (stable_steps < 1) throw DomainError("stable_steps must be at least 1");
  require_root(w.system(), gamma);

  RootClass rc;
  rc.cap = cap;

  HalfOrbit fwd = iterate(w, gamma, cap);
  if (fwd.revisit > 0) {
    rc.verdict = RootClass::Verdict::Periodic;
    rc.period = fwd.revisit;
    return rc;
  }
  HalfOrbit bwd = iterate(w.inverse(), gamma, cap);
  if (bwd.revisit > 0)
    throw InternalCheckError("orbit returned backward but not forward");

  for (int n = 1; n <= cap; ++n) {
    if (fwd.signs[static_cast<size_t>(n)] !=
        fwd.signs[static_cast<size_t>(n - 1)])
      ++rc.sign_changes;
    if (bwd.signs[static_cast<size_t>(n)] !=
        bwd.signs[static_cast<size_t>(n - 1)])
      ++rc.sign_changes;
  }

  int fdir = monotone_direction(fwd.sums, stable_steps);
  int bdir = monotone_direction(bwd.sums, stable_steps);
  bool f_ok = fdir != 0 && cap - stable_steps >= fwd.last_change;
  bool b_ok = bdir != 0 && cap - stable_steps >= bwd.last_change;
  if (f_ok && b_ok) {
    rc.limit_forward = fwd.signs.back();
    rc.limit_backward = bwd.signs.back();
    rc.verdict = rc.limit_forward != rc.limit_backward
                     ? RootClass::Verdict::Odd
                     : RootClass::Verdict::EvenNonperiodic;
    std::ostringstream os;
    os << "coordinate sums strictly "
       << (fdir > 0 ? "increasing" : "decreasing") << " for the last "
       << stable_steps << " forward steps (last sign change at n="
       << fwd.last_change << ") and strictly "
       << (bdir > 0 ? "increasing" : "decreasing") << " for the last "
       << stable_steps << " backward steps (last sign change at n=-"
       << bwd.last_change << ")";
    rc.certificate = os.str();
  }
  return rc;
}

const char* verdict_str(RootClass::Verdict v) {
  switch (v) {
    case RootClass::Verdict::Periodic:
      return "periodic";
    case RootClass::Verdict::Odd:
      return "odd";
    case RootClass::Verdict::EvenNonperiodic:
      return "even-nonperiodic";
    default:
      return "undecided";
  }
}

OddRootReport odd_reflections(const GroupElement& w, int depth, int cap) {
  OddRootReport report;
  RootEnumeration e = enumerate_roots(w.system(), depth);
  for (const RootEntry& r : e.roots) {
    RootClass rc = classify_root(w, r.coords, cap);
    if (rc.verdict == RootClass::Verdict::Odd)
      report.odd.push_back(r.coords);
    else if (rc.verdict == RootClass::Verdict::Undecided)
      report.undecided.push_back(r.coords);
  }
  return report;
}

PinfResult pinf_generates(const GroupElement& w, int depth, int cap) {
  const CoxeterSystem& sys = w.system();
  if (components(sys).parts.size() != 1)
    throw DomainError("system must be irreducible");
  if (classify_system(sys).kind == ComponentKind::Finite)
    throw NonFiniteTypeError("system must be of infinite type");

  PinfResult result;
  result.odds = odd_reflections(w, depth, cap);
  const std::vector<Vec>& odd = result.odds.odd;
  if (odd.empty()) return result;

  Mat g = gram(sys);
  int n = sys.rank();
  std::vector<Vec> targets;
  for (int s = 0; s < n; ++s)
    targets.push_back(vec_unit(n, s, sys.modulus()));
  struct Prov {
    std::vector<int> apply;
    int base;
  };
  std::map<Vec, Prov, VecLess> closure;
  std::deque<Vec> frontier;
  for (size_t i = 0; i < odd.size(); ++i) {
    if (closure.emplace(odd[i], Prov{{}, static_cast<int>(i)}).second)
      frontier.push_back(odd[i]);
  }
  auto all_found = [&] {
    for (const Vec& t : targets)
      if (!closure.count(t)) return false;
    return true;
  };
  // layered closure under mutual reflection, positive representatives only;
  // stop as soon as every simple root appears, hard-stop on runaway growth
  constexpr size_t kMaxClosure = 200000;
  for (int layer = 0; layer < depth && !frontier.empty() && !all_found() &&
                      closure.size() < kMaxClosure;
       ++layer) {
    std::deque<Vec> next;
    for (const Vec& gamma : frontier) {
      Prov pg = closure.at(gamma);
      for (size_t b = 0; b < odd.size(); ++b) {
        Vec img = reflect(g, odd[b], gamma);
        if (sign_pattern(img) == SignPattern::Negative)
          for (TrigScalar& x : img) x = -x;
        if (closure.count(img)) continue;
        Prov p;
        p.apply.push_back(static_cast<int>(b));
        p.apply.insert(p.apply.end(), pg.apply.begin(), pg.apply.end());
        p.base = pg.base;
        closure.emplace(img, p);
        next.push_back(img);
      }
    }
    frontier.swap(next);
  }

  std::vector<PinfWitness> witness;
  for (int s = 0; s < n; ++s) {
    auto it = closure.find(targets[static_cast<size_t>(s)]);
    if (it == closure.end()) return result;  // Undecided
    PinfWitness pw;
    pw.simple = s;
    pw.apply = it->second.apply;
    pw.base = it->second.base;
    witness.push_back(pw);
  }
  result.kind = PinfResult::Kind::Yes;
  result.witness = std::move(witness);
  return result;
}

bool essential_by_independence(const CoxeterSystem& sys,
                               const std::vector<Vec>& roots) {
  if (static_cast<int>(roots.size()) != sys.rank())
    throw DomainError("need exactly one root per generator");
  for (const Vec& gamma : roots) require_root(sys, gamma);
  return rank_of(roots) == sys.rank();
}

}  // namespace coxkit
