#include "coxkit/fixedpoint.hpp"

#include <algorithm>

#include "coxkit/classify.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/geom.hpp"

namespace coxkit {

namespace {

bool orbit_finite_type(const CoxeterSystem& sys, const std::vector<int>& I) {
  return is_positive_definite(parabolic_restrict(gram(sys), I));
}

}  // namespace

FixedPointPresentation steinberg_generators(const CoxeterSystem& sys,
                                            const GraphAutomorphism& tau) {
  FixedPointPresentation pres;
  pres.orbits = orbits_on_generators(sys, tau);
  for (size_t k = 0; k < pres.orbits.size(); ++k) {
    const std::vector<int>& I = pres.orbits[k];
    if (!orbit_finite_type(sys, I)) {
      pres.infinite_orbits.push_back(static_cast<int>(k));
      continue;
    }
    pres.finite_orbits.push_back(static_cast<int>(k));
    GroupElement w0 = longest_element(sys, I);
    if (!(w0 * w0).is_identity())
      throw InternalCheckError("orbit longest element is not an involution");
    if (apply_automorphism(tau, w0) != w0)
      throw InternalCheckError("orbit longest element is not fixed");
    pres.generators.push_back(std::move(w0));
  }
  return pres;
}

FixedPointPresentation fixed_system(const CoxeterSystem& sys,
                                    const GraphAutomorphism& tau, int cap) {
  FixedPointPresentation pres = steinberg_generators(sys, tau);
  QuotientGraph q = quotient_graph(sys, tau);
  size_t m = pres.finite_orbits.size();
  pres.labels.assign(m, std::vector<OrbitLabel>(m));
  for (size_t a = 0; a < m; ++a) {
    pres.labels[a][a] = OrbitLabel{OrbitLabel::Kind::Finite, 1, ""};
    for (size_t b = a + 1; b < m; ++b) {
      OrderResult r = order_of(pres.generators[a] * pres.generators[b], cap);
      OrbitLabel lab;
      switch (r.kind) {
        case OrderResult::Kind::Finite:
          lab = OrbitLabel{OrbitLabel::Kind::Finite, r.order, ""};
          break;
        case OrderResult::Kind::InfiniteCertified:
          lab = OrbitLabel{OrbitLabel::Kind::Infinite, 0, r.certificate};
          break;
        default:
          lab = OrbitLabel{OrbitLabel::Kind::Undecided, 0, ""};
      }
      // orbits with no connecting bond give commuting involutions, and
      // only those do (the fixed-point graph is a full subgraph of the
      // quotient graph)
      bool adjacent = q.adj[static_cast<size_t>(pres.finite_orbits[a])]
                           [static_cast<size_t>(pres.finite_orbits[b])];
      bool commuting = lab.kind == OrbitLabel::Kind::Finite && lab.value == 2;
      if (adjacent == commuting)
        throw InternalCheckError(
            "fixed-point label disagrees with quotient-graph adjacency");
      pres.labels[a][b] = lab;
      pres.labels[b][a] = lab;
    }
  }
  return pres;
}

CoxeterSystem fixed_coxeter_system(const FixedPointPresentation& pres) {
  int m = static_cast<int>(pres.finite_orbits.size());
  if (pres.labels.empty() && m > 0)
    throw DomainError("presentation carries no labels");
  CoxeterSystem out(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const OrbitLabel& lab = pres.labels[static_cast<size_t>(a)]
                                         [static_cast<size_t>(b)];
      switch (lab.kind) {
        case OrbitLabel::Kind::Finite:
          out.set_label(a, b, BondLabel::finite(lab.value));
          break;
        case OrbitLabel::Kind::Infinite:
          out.set_label(a, b, BondLabel::infinite());
          break;
        default:
          throw DomainError("undecided label in fixed-point presentation");
      }
    }
  return out;
}

bool finite_index_fixed(const CoxeterSystem& sys,
                        const GraphAutomorphism& tau) {
  ComponentDecomposition cd = components(sys);
  for (const std::vector<int>& part : cd.parts) {
    if (classify_component(sys, part).kind == ComponentKind::Finite) continue;
    for (int i : part)
      if (tau(i) != i) return false;
  }
  return true;
}

CompatibilityReport reduced_word_compatibility_check(
    const FixedPointPresentation& pres, const std::vector<int>& word) {
  if (pres.generators.empty())
    throw DomainError("presentation has no generators");
  int m = static_cast<int>(pres.finite_orbits.size());
  for (int i : word)
    if (i < 0 || i >= m) throw DomainError("generator index out of range");

  {
    // the word must be reduced over the fixed-point generators
    CoxeterSystem fixed = fixed_coxeter_system(pres);
    if (GroupElement::from_word(fixed, word).length() !=
        static_cast<int>(word.size()))
      throw DomainError("word is not reduced over the fixed-point generators");
  }

  CompatibilityReport rep{
      GroupElement::identity(pres.generators[0].system())};
  std::vector<int> uni;
  for (int i : word) {
    const GroupElement& g = pres.generators[static_cast<size_t>(i)];
    rep.product = rep.product * g;
    rep.sum_lengths += g.length();
    for (int s : pres.orbits[static_cast<size_t>(pres.finite_orbits
                                                     [static_cast<size_t>(i)])])
      uni.push_back(s);
  }
  std::sort(uni.begin(), uni.end());
  uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
  rep.s_length = rep.product.length();
  rep.length_additive = rep.s_length == rep.sum_lengths;
  rep.orbit_union = uni;
  rep.support_matches = rep.product.support() == uni;
  rep.ok = rep.length_additive && rep.support_matches;
  return rep;
}

}  // namespace coxkit
