#include "coxkit/aci.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "coxkit/classify.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/geom.hpp"

namespace coxkit {

namespace {

using SdKey = std::pair<int, Mat>;

struct SdKeyLess {
  bool operator()(const SdKey& a, const SdKey& b) const {
    if (a.first != b.first) return a.first < b.first;
    return MatLess()(a.second, b.second);
  }
};

Mat permuted(const GraphAutomorphism& tau, const Mat& m) {
  Mat out(m.n, m.a[0].modulus());
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) out.at(tau(i), tau(j)) = m.at(i, j);
  return out;
}

}  // namespace

SemidirectElement sd_identity(const CoxeterSystem& sys,
                              const FiniteActionGroup& G) {
  return SemidirectElement{GroupElement::identity(sys), G.identity_index()};
}

SemidirectElement sd_mul(const FiniteActionGroup& G,
                         const SemidirectElement& a,
                         const SemidirectElement& b) {
  return SemidirectElement{a.w * apply_automorphism(G.at(a.g), b.w),
                           G.mul(a.g, b.g)};
}

SemidirectElement sd_inverse(const FiniteActionGroup& G,
                             const SemidirectElement& a) {
  int gi = G.inv(a.g);
  return SemidirectElement{apply_automorphism(G.at(gi), a.w.inverse()), gi};
}

bool sd_equal(const SemidirectElement& a, const SemidirectElement& b) {
  return a.g == b.g && a.w == b.w;
}

bool sd_is_involution(const FiniteActionGroup& G, const SemidirectElement& a) {
  if (a.g == G.identity_index() && a.w.is_identity()) return false;
  return sd_equal(sd_mul(G, a, a), sd_identity(a.w.system(), G));
}

OrhoInfo o_rho(const CoxeterSystem& sys, const FiniteActionGroup& G) {
  (void)G;  // every orbit of components is finite when G is
  OrhoInfo info;
  ComponentDecomposition cd = components(sys);
  for (size_t k = 0; k < cd.parts.size(); ++k) {
    if (classify_component(sys, cd.parts[k]).kind != ComponentKind::Finite)
      continue;
    info.components.push_back(static_cast<int>(k));
    for (int s : cd.parts[k]) info.generators.push_back(s);
  }
  std::sort(info.generators.begin(), info.generators.end());
  return info;
}

std::vector<int> g_rho(const CoxeterSystem& sys, const FiniteActionGroup& G) {
  ComponentDecomposition cd = components(sys);
  std::vector<std::vector<int>> infinite_parts;
  for (const std::vector<int>& part : cd.parts)
    if (classify_component(sys, part).kind != ComponentKind::Finite)
      infinite_parts.push_back(part);

  std::vector<int> out;
  for (int h = 0; h < G.size(); ++h) {
    if (h == G.identity_index()) continue;
    if (G.mul(h, h) != G.identity_index()) continue;
    bool fixes = true;
    for (const std::vector<int>& part : infinite_parts)
      for (int s : part) fixes = fixes && G.at(h)(s) == s;
    if (fixes) out.push_back(h);
  }
  return out;
}

AciVerdict is_aci_involution(const CoxeterSystem& sys,
                             const FiniteActionGroup& G,
                             const SemidirectElement& x) {
  if (apply_automorphism(G.at(x.g), x.w) != x.w.inverse() ||
      G.mul(x.g, x.g) != G.identity_index() ||
      !sd_is_involution(G, x))
    throw DomainError("element is not an involution");

  OrhoInfo orho = o_rho(sys, G);
  std::vector<int> grho = g_rho(sys, G);

  AciVerdict v;
  std::vector<int> supp = x.w.support();
  bool w_ok = std::includes(orho.generators.begin(), orho.generators.end(),
                            supp.begin(), supp.end());
  bool g_ok = x.g == G.identity_index() ||
              std::binary_search(grho.begin(), grho.end(), x.g);
  if (!w_ok) {
    std::ostringstream os;
    os << "w-clause violated: support of w meets an infinite-type component";
    v.reasons.push_back(os.str());
  }
  if (!g_ok)
    v.reasons.push_back(
        "g-clause violated: g moves a generator of an infinite-type "
        "component");
  v.aci = w_ok && g_ok;
  return v;
}

AciReport aci_subgroup(const CoxeterSystem& sys, const FiniteActionGroup& G) {
  AciReport rep;
  rep.orho = o_rho(sys, G);
  rep.grho = g_rho(sys, G);
  rep.wpart_generators = rep.orho.generators;
  rep.gpart_generators = rep.grho;
  return rep;
}

BruteForceResult brute_force_aci_finite(const CoxeterSystem& sys,
                                        const FiniteActionGroup& G,
                                        long cap) {
  for (const std::vector<int>& part : components(sys).parts)
    if (classify_component(sys, part).kind != ComponentKind::Finite)
      throw NonFiniteTypeError("brute force needs a finite-type system");

  // enumerate W by right multiplication
  std::map<Mat, int, MatLess> windex;
  std::vector<Mat> wmats;
  std::vector<Mat> gens;
  for (int s = 0; s < sys.rank(); ++s) gens.push_back(simple_reflection(sys, s));
  Mat id = Mat::identity(sys.rank(), sys.modulus());
  windex[id] = 0;
  wmats.push_back(id);
  for (size_t head = 0; head < wmats.size(); ++head) {
    for (const Mat& s : gens) {
      Mat p = wmats[head] * s;
      if (windex.count(p)) continue;
      if (static_cast<long>(wmats.size()) >= cap)
        throw DomainError("enumeration cap exceeded");
      windex[p] = static_cast<int>(wmats.size());
      wmats.push_back(p);
    }
  }
  long wsize = static_cast<long>(wmats.size());
  long total = wsize * G.size();
  if (total > cap) throw DomainError("enumeration cap exceeded");

  BruteForceResult res;
  res.group_size = total;

  // pair (w index, g index); multiplication via the permutation action
  auto pair_id = [&](int wi, int gi) { return wi * G.size() + gi; };
  auto mul_pair = [&](int a, int b) {
    int wa = a / G.size(), ga = a % G.size();
    int wb = b / G.size(), gb = b % G.size();
    Mat m = wmats[static_cast<size_t>(wa)] *
            permuted(G.at(ga), wmats[static_cast<size_t>(wb)]);
    return pair_id(windex.at(m), G.mul(ga, gb));
  };

  int e = pair_id(0, G.identity_index());
  std::vector<int> involutions;
  for (int wi = 0; wi < wsize; ++wi)
    for (int gi = 0; gi < G.size(); ++gi) {
      int x = pair_id(wi, gi);
      if (x != e && mul_pair(x, x) == e) involutions.push_back(x);
    }
  res.involution_count = static_cast<long>(involutions.size());

  // closure of the involutions under multiplication
  std::vector<char> seen(static_cast<size_t>(total), 0);
  std::deque<int> work;
  seen[static_cast<size_t>(e)] = 1;
  work.push_back(e);
  long count = 1;
  while (!work.empty()) {
    int a = work.front();
    work.pop_front();
    for (int x : involutions) {
      int p = mul_pair(a, x);
      if (!seen[static_cast<size_t>(p)]) {
        seen[static_cast<size_t>(p)] = 1;
        ++count;
        work.push_back(p);
      }
    }
  }
  res.generated_size = count;

  // compare with the theorem's description: every w is allowed (the system
  // is finite-type) and the g-part must generate exactly <g_rho>
  AciReport rep = aci_subgroup(sys, G);
  std::vector<int> ggen = subgroup_closure(G, rep.grho);
  bool match = rep.orho.generators.size() ==
               static_cast<size_t>(sys.rank());
  long expect = wsize * static_cast<long>(ggen.size());
  match = match && count == expect;
  for (int wi = 0; wi < wsize && match; ++wi)
    for (int gi = 0; gi < G.size() && match; ++gi) {
      bool in_closure = seen[static_cast<size_t>(pair_id(wi, gi))] != 0;
      bool in_desc = std::binary_search(ggen.begin(), ggen.end(), gi);
      match = in_closure == in_desc;
    }
  res.matches_description = match;
  return res;
}

long conjugate_growth(const CoxeterSystem& sys, const FiniteActionGroup& G,
                      const SemidirectElement& x, long target, int radius) {
  struct Entry {
    Mat m, mi;  // element and inverse
    int g, gi;
  };
  Mat id = Mat::identity(sys.rank(), sys.modulus());
  Mat xm = x.w.matrix();

  std::map<SdKey, char, SdKeyLess> seen;
  std::map<SdKey, char, SdKeyLess> conj;
  std::deque<Entry> frontier;

  std::vector<Entry> gens;
  for (int s = 0; s < sys.rank(); ++s) {
    Mat m = simple_reflection(sys, s);
    gens.push_back(Entry{m, m, G.identity_index(), G.identity_index()});
  }
  for (int g = 0; g < G.size(); ++g) {
    if (g == G.identity_index()) continue;
    gens.push_back(Entry{id, id, g, G.inv(g)});
  }

  auto record = [&](const Entry& y) {
    // y x y^{-1} = (w_y rho_{g_y}(w_x) rho_{g_y g_x g_y^{-1}}(w_y^{-1}),
    //               g_y g_x g_y^{-1})
    int g2 = G.mul(G.mul(y.g, x.g), y.gi);
    Mat m = y.m * permuted(G.at(y.g), xm) * permuted(G.at(g2), y.mi);
    conj.emplace(SdKey{g2, std::move(m)}, 1);
  };

  Entry start{id, id, G.identity_index(), G.identity_index()};
  seen.emplace(SdKey{start.g, start.m}, 1);
  record(start);
  frontier.push_back(start);
  for (int layer = 0; layer < radius; ++layer) {
    if (static_cast<long>(conj.size()) >= target || frontier.empty()) break;
    std::deque<Entry> next;
    for (const Entry& y : frontier) {
      for (const Entry& t : gens) {
        Entry z;
        z.m = y.m * permuted(G.at(y.g), t.m);
        z.g = G.mul(y.g, t.g);
        z.mi = permuted(G.at(y.g), t.mi) * y.mi;
        z.gi = G.mul(t.gi, y.gi);
        SdKey key{z.g, z.m};
        if (seen.count(key)) continue;
        seen.emplace(std::move(key), 1);
        record(z);
        next.push_back(std::move(z));
      }
      if (static_cast<long>(conj.size()) >= target) break;
    }
    frontier.swap(next);
  }
  long n = static_cast<long>(conj.size());
  return n > target ? target : n;
}

}  // namespace coxkit
