#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxkit/aci.hpp"
#include "coxkit/system.hpp"

using namespace coxkit;

namespace {

CoxeterSystem path_system(const std::vector<long>& labels) {
  CoxeterSystem sys(static_cast<int>(labels.size()) + 1);
  for (size_t i = 0; i < labels.size(); ++i) {
    int a = static_cast<int>(i), b = a + 1;
    sys.set_label(a, b, labels[i] == 0 ? BondLabel::infinite()
                                       : BondLabel::finite(labels[i]));
  }
  return sys;
}

CoxeterSystem cycle_system(int n) {
  CoxeterSystem sys(n);
  for (int i = 0; i < n; ++i) sys.set_label(i, (i + 1) % n, BondLabel::finite(3));
  return sys;
}

CoxeterSystem two_a2() {
  CoxeterSystem sys(4);
  sys.set_label(0, 1, BondLabel::finite(3));
  sys.set_label(2, 3, BondLabel::finite(3));
  return sys;
}

CoxeterSystem free_square() {  // A1 x A1
  return CoxeterSystem(2);
}

FiniteActionGroup trivial_group(const CoxeterSystem& sys) {
  return FiniteActionGroup::closure(sys, {});
}

}  // namespace

TEST_CASE("action group closure") {
  CoxeterSystem a3 = path_system({3, 3});
  FiniteActionGroup G =
      FiniteActionGroup::closure(a3, {GraphAutomorphism(a3, {2, 1, 0})});
  CHECK(G.size() == 2);
  CHECK(G.element_order(1) == 2);
  CHECK(G.inv(1) == 1);

  CoxeterSystem a2t = cycle_system(3);
  FiniteActionGroup S3 = FiniteActionGroup::closure(
      a2t, {GraphAutomorphism(a2t, {1, 2, 0}), GraphAutomorphism(a2t, {1, 0, 2})});
  CHECK(S3.size() == 6);
  CHECK(S3.index_of(GraphAutomorphism(a2t, {2, 0, 1})) >= 0);

  CHECK(trivial_group(a3).size() == 1);
  CHECK_THROWS_AS(FiniteActionGroup::closure(
                      a2t, {GraphAutomorphism(a2t, {1, 2, 0})}, 2),
                  DomainError);
}

TEST_CASE("centralizers cores and indexes") {
  CoxeterSystem a2t = cycle_system(3);
  FiniteActionGroup S3 = FiniteActionGroup::closure(
      a2t, {GraphAutomorphism(a2t, {1, 2, 0}), GraphAutomorphism(a2t, {1, 0, 2})});
  int t = S3.index_of(GraphAutomorphism(a2t, {1, 0, 2}));
  REQUIRE(t >= 0);
  std::vector<int> z = centralizer(S3, t);
  CHECK(z.size() == 2);

  std::vector<int> h2 = subgroup_closure(S3, {t});
  CHECK(h2.size() == 2);
  CHECK(core(S3, h2) == std::vector<int>{S3.identity_index()});
  CHECK(subgroup_index(S3, h2) == 3);

  int r = S3.index_of(GraphAutomorphism(a2t, {1, 2, 0}));
  std::vector<int> a3sub = subgroup_closure(S3, {r});
  CHECK(a3sub.size() == 3);
  CHECK(subgroup_index(S3, a3sub) == 2);
  CHECK(core(S3, a3sub) == a3sub);  // normal subgroup is its own core

  std::vector<int> all;
  for (int i = 0; i < S3.size(); ++i) all.push_back(i);
  CHECK(subgroup_index(S3, all) == 1);

  CHECK_THROWS_AS((void)subgroup_index(S3, std::vector<int>{t}), DomainError);

  // core properties: normal in G and contained in H
  for (const std::vector<int>& H : {h2, a3sub, all}) {
    std::vector<int> c = core(S3, H);
    CHECK(std::includes(H.begin(), H.end(), c.begin(), c.end()));
    for (int g = 0; g < S3.size(); ++g)
      for (int x : c)
        CHECK(std::binary_search(c.begin(), c.end(),
                                 S3.mul(S3.mul(g, x), S3.inv(g))));
  }
}

TEST_CASE("centralizer of a normal closure equals the core of the centralizer") {
  CoxeterSystem a2t = cycle_system(3);
  FiniteActionGroup S3 = FiniteActionGroup::closure(
      a2t, {GraphAutomorphism(a2t, {1, 2, 0}), GraphAutomorphism(a2t, {1, 0, 2})});

  CoxeterSystem d4t(5);
  for (int i = 0; i < 4; ++i) d4t.set_label(i, 4, BondLabel::finite(3));
  FiniteActionGroup S4 = FiniteActionGroup::closure(
      d4t, {GraphAutomorphism(d4t, {1, 0, 2, 3, 4}),
            GraphAutomorphism(d4t, {1, 2, 3, 0, 4})});
  CHECK(S4.size() == 24);

  CoxeterSystem aa = two_a2();
  FiniteActionGroup D4 = FiniteActionGroup::closure(
      aa, {GraphAutomorphism(aa, {1, 0, 2, 3}),
           GraphAutomorphism(aa, {0, 1, 3, 2}),
           GraphAutomorphism(aa, {2, 3, 0, 1})});
  CHECK(D4.size() == 8);

  std::mt19937 rng(20240817);
  for (const FiniteActionGroup* Gp : {&S3, &S4, &D4}) {
    const FiniteActionGroup& G = *Gp;
    std::uniform_int_distribution<int> pick(0, G.size() - 1);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<int> X{pick(rng)};
      if (trial % 2) X.push_back(pick(rng));
      std::vector<int> lhs = centralizer_of_set(G, normal_closure(G, X));
      std::vector<int> rhs = core(G, centralizer_of_set(G, X));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("semidirect product arithmetic") {
  CoxeterSystem aa = two_a2();
  FiniteActionGroup G = FiniteActionGroup::closure(
      aa, {GraphAutomorphism(aa, {2, 3, 0, 1})});
  REQUIRE(G.size() == 2);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 3), gpick(0, 1);
  auto rand_elem = [&] {
    std::vector<int> word;
    for (int i = 0; i < 5; ++i) word.push_back(letter(rng));
    return SemidirectElement{GroupElement::from_word(aa, word), gpick(rng)};
  };
  for (int t = 0; t < 30; ++t) {
    SemidirectElement a = rand_elem(), b = rand_elem(), c = rand_elem();
    CHECK(sd_equal(sd_mul(G, sd_mul(G, a, b), c),
                   sd_mul(G, a, sd_mul(G, b, c))));
    CHECK(sd_equal(sd_mul(G, a, sd_inverse(G, a)), sd_identity(aa, G)));
  }

  SemidirectElement tau{GroupElement::identity(aa), 1};
  CHECK(sd_is_involution(G, tau));
  CHECK_FALSE(sd_is_involution(G, sd_identity(aa, G)));
  SemidirectElement s1{GroupElement::from_word(aa, {0}), 0};
  CHECK(sd_is_involution(G, s1));
}

TEST_CASE("component and action filters") {
  // one infinite and one finite component
  CoxeterSystem mixed(3);
  mixed.set_label(0, 1, BondLabel::infinite());
  FiniteActionGroup triv = trivial_group(mixed);
  OrhoInfo info = o_rho(mixed, triv);
  CHECK(info.components == std::vector<int>{1});
  CHECK(info.generators == std::vector<int>{2});
  CHECK(g_rho(mixed, triv).empty());

  CoxeterSystem ai = path_system({0});
  FiniteActionGroup swap2 =
      FiniteActionGroup::closure(ai, {GraphAutomorphism(ai, {1, 0})});
  CHECK(g_rho(ai, swap2).empty());       // moves the infinite component
  CHECK(o_rho(ai, swap2).components.empty());

  CoxeterSystem aa = two_a2();
  FiniteActionGroup swap4 = FiniteActionGroup::closure(
      aa, {GraphAutomorphism(aa, {2, 3, 0, 1})});
  CHECK(g_rho(aa, swap4) == std::vector<int>{1});
  CHECK(o_rho(aa, swap4).generators == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("almost central involution verdicts") {
  // finite group: the longest element passes
  CoxeterSystem b2 = path_system({4});
  FiniteActionGroup triv = trivial_group(b2);
  SemidirectElement w0{longest_element(b2, {0, 1}), 0};
  AciVerdict v = is_aci_involution(b2, triv, w0);
  CHECK(v.aci);
  CHECK(v.reasons.empty());

  // swapping the two generators of the infinite dihedral group fails the
  // g-clause
  CoxeterSystem ai = path_system({0});
  FiniteActionGroup swap2 =
      FiniteActionGroup::closure(ai, {GraphAutomorphism(ai, {1, 0})});
  SemidirectElement tau{GroupElement::identity(ai), 1};
  v = is_aci_involution(ai, swap2, tau);
  CHECK_FALSE(v.aci);
  REQUIRE(v.reasons.size() == 1);
  CHECK(v.reasons[0].find("g-clause") == 0);

  // a reflection inside the infinite component fails the w-clause
  FiniteActionGroup triv2 = trivial_group(ai);
  SemidirectElement s1{GroupElement::from_word(ai, {0}), 0};
  v = is_aci_involution(ai, triv2, s1);
  CHECK_FALSE(v.aci);
  REQUIRE(v.reasons.size() == 1);
  CHECK(v.reasons[0].find("w-clause") == 0);

  // non-involutions are rejected outright
  CoxeterSystem a2 = path_system({3});
  FiniteActionGroup ta = trivial_group(a2);
  CHECK_THROWS_AS((void)is_aci_involution(
                      a2, ta, SemidirectElement{
                                  GroupElement::from_word(a2, {0, 1}), 0}),
                  DomainError);
  CHECK_THROWS_AS(
      (void)is_aci_involution(a2, ta, sd_identity(a2, ta)), DomainError);

  // involution with a g-part over a finite system passes both clauses
  CoxeterSystem aa = two_a2();
  FiniteActionGroup swap4 = FiniteActionGroup::closure(
      aa, {GraphAutomorphism(aa, {2, 3, 0, 1})});
  SemidirectElement sw{GroupElement::identity(aa), 1};
  CHECK(is_aci_involution(aa, swap4, sw).aci);
  SemidirectElement mixed{GroupElement::from_word(aa, {0, 2}), 1};
  CHECK(is_aci_involution(aa, swap4, mixed).aci);
}

TEST_CASE("generated subgroup description") {
  // finite system: everything survives
  CoxeterSystem b2 = path_system({4});
  AciReport rep = aci_subgroup(b2, trivial_group(b2));
  CHECK(rep.orho.generators == std::vector<int>{0, 1});
  CHECK(rep.grho.empty());

  // infinite times finite: only the finite factor remains
  CoxeterSystem mixed(3);
  mixed.set_label(0, 1, BondLabel::infinite());
  rep = aci_subgroup(mixed, trivial_group(mixed));
  CHECK(rep.wpart_generators == std::vector<int>{2});

  CoxeterSystem aa = two_a2();
  FiniteActionGroup swap4 = FiniteActionGroup::closure(
      aa, {GraphAutomorphism(aa, {2, 3, 0, 1})});
  rep = aci_subgroup(aa, swap4);
  CHECK(rep.wpart_generators == std::vector<int>{0, 1, 2, 3});
  CHECK(rep.gpart_generators == std::vector<int>{1});
}

TEST_CASE("brute force agrees with the description") {
  // wreath example: (A1 x A1) with the swap, order 8, all involutions
  CoxeterSystem sq = free_square();
  FiniteActionGroup swap2 =
      FiniteActionGroup::closure(sq, {GraphAutomorphism(sq, {1, 0})});
  BruteForceResult bf = brute_force_aci_finite(sq, swap2);
  CHECK(bf.group_size == 8);
  CHECK(bf.generated_size == 8);
  CHECK(bf.matches_description);

  BruteForceResult b2r =
      brute_force_aci_finite(path_system({4}), trivial_group(path_system({4})));
  CHECK(b2r.group_size == 8);
  CHECK(b2r.generated_size == 8);
  CHECK(b2r.matches_description);

  CoxeterSystem aa = two_a2();
  FiniteActionGroup swap4 = FiniteActionGroup::closure(
      aa, {GraphAutomorphism(aa, {2, 3, 0, 1})});
  bf = brute_force_aci_finite(aa, swap4);
  CHECK(bf.group_size == 72);
  CHECK(bf.generated_size == 72);
  CHECK(bf.matches_description);

  // C4-like action group: only its square is an involution, so the
  // generated subgroup keeps index 2
  CoxeterSystem quad(4);
  FiniteActionGroup C4 = FiniteActionGroup::closure(
      quad, {GraphAutomorphism(quad, {1, 2, 3, 0})});
  REQUIRE(C4.size() == 4);
  bf = brute_force_aci_finite(quad, C4);
  CHECK(bf.group_size == 64);
  CHECK(bf.generated_size == 32);
  CHECK(bf.matches_description);

  CHECK_THROWS_AS((void)brute_force_aci_finite(path_system({0}),
                                               trivial_group(path_system({0}))),
                  NonFiniteTypeError);
  CHECK_THROWS_AS(
      (void)brute_force_aci_finite(path_system({3, 3, 3, 3, 3}),
                                   trivial_group(path_system({3, 3, 3, 3, 3})),
                                   100),
      DomainError);
}

TEST_CASE("conjugate growth") {
  // central element of a finite group: exactly one conjugate
  CoxeterSystem b2 = path_system({4});
  FiniteActionGroup triv = trivial_group(b2);
  SemidirectElement w0{longest_element(b2, {0, 1}), 0};
  CHECK(conjugate_growth(b2, triv, w0, 25, 30) == 1);

  // a non-central one picks up a few, bounded by the class size
  SemidirectElement s1{GroupElement::from_word(b2, {0}), 0};
  CHECK(conjugate_growth(b2, triv, s1, 25, 30) == 2);

  // reflections in the infinite dihedral group have unbounded classes
  CoxeterSystem ai = path_system({0});
  CHECK(conjugate_growth(ai, trivial_group(ai),
                         SemidirectElement{GroupElement::from_word(ai, {0}), 0},
                         25, 60) == 25);

  // the swap over the infinite dihedral group too
  FiniteActionGroup swap2 =
      FiniteActionGroup::closure(ai, {GraphAutomorphism(ai, {1, 0})});
  CHECK(conjugate_growth(ai, swap2,
                         SemidirectElement{GroupElement::identity(ai), 1}, 25,
                         60) == 25);
}
