#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <string>

#include "coxkit/classify.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/geom.hpp"
#include "coxkit/witness.hpp"
#include "doctest.h"

using namespace coxkit;

namespace {

std::string data_path(const std::string& rel) {
  return std::string(COX_DATA_DIR) + "/" + rel;
}

const ClauseResult& clause(const RowReport& rep, const std::string& name) {
  for (const auto& c : rep.clauses)
    if (c.clause == name) return c;
  throw std::logic_error("missing clause " + name);
}

std::map<std::string, WitnessRow> by_name(const std::vector<WitnessRow>& rows) {
  std::map<std::string, WitnessRow> out;
  for (const auto& r : rows) out.emplace(r.name, r);
  return out;
}

}  // namespace

TEST_CASE("affine table verifies row by row") {
  auto rows = load_rows(data_path("tables/affine.rows"));
  CHECK(rows.size() == 15);
  for (const auto& row : rows) {
    CAPTURE(row.name);
    CHECK(row.affine);
    RowReport rep = verify_affine_row(row);
    CHECK(rep.ok);
    CHECK(rep.clauses.size() == 5);
    for (const auto& c : rep.clauses) {
      CAPTURE(c.clause);
      CAPTURE(c.detail);
      CHECK(c.status == ClauseStatus::Pass);
    }
  }
  auto named = by_name(rows);
  CHECK(named.count("A~2") == 1);
  CHECK(named.count("C~2") == 1);
  CHECK(named.count("E~7") == 1);
  CHECK(named.at("B~3").system.rank() == 4);
  CHECK(named.at("E~6").system.rank() == 7);
}

TEST_CASE("affine rows fail clause by clause when mutated") {
  auto named = by_name(load_rows(data_path("tables/affine.rows")));
  const WitnessRow& base = named.at("A~2");

  SUBCASE("identity automorphism keeps the functional, d fails") {
    WitnessRow row = base;
    row.tau = GraphAutomorphism::identity(row.system.rank());
    RowReport rep = verify_affine_row(row);
    CHECK_FALSE(rep.ok);
    CHECK(clause(rep, "d").status == ClauseStatus::Fail);
    CHECK(clause(rep, "a").status == ClauseStatus::Pass);
    CHECK(clause(rep, "c").status == ClauseStatus::Pass);
  }
  SUBCASE("missing automorphism skips d") {
    WitnessRow row = base;
    row.tau.reset();
    RowReport rep = verify_affine_row(row);
    CHECK(rep.ok);  // Skipped does not count as failure
    CHECK(clause(rep, "d").status == ClauseStatus::Skipped);
  }
  SUBCASE("wrong companion root breaks a, b and the growth law") {
    WitnessRow row = base;
    int n = row.system.rank();
    row.gamma = vec_unit(n, 1, row.system.modulus());
    RowReport rep = verify_affine_row(row);
    CHECK_FALSE(rep.ok);
    CHECK(clause(rep, "a").status == ClauseStatus::Fail);
    CHECK(clause(rep, "b").status == ClauseStatus::Fail);
    CHECK(clause(rep, "e").status == ClauseStatus::Fail);
  }
  SUBCASE("functional with the wrong kernel fails c") {
    WitnessRow row = base;
    row.ann = vec_unit(row.system.rank(), 0, row.system.modulus());
    RowReport rep = verify_affine_row(row);
    CHECK_FALSE(rep.ok);
    CHECK(clause(rep, "c").status == ClauseStatus::Fail);
    CHECK(clause(rep, "a").status == ClauseStatus::Pass);
  }
  SUBCASE("non-root coordinates are rejected up front") {
    WitnessRow row = base;
    int mod = row.system.modulus();
    row.gamma = Vec{TrigScalar::rational(mpq_class(1, 2), mod),
                    TrigScalar::rational(mpq_class(1, 2), mod),
                    TrigScalar::zero(mod)};
    CHECK_THROWS_AS(verify_affine_row(row), DomainError);
  }
}

TEST_CASE("hyperbolic table verifies row by row") {
  auto rows = load_rows(data_path("tables/hyperbolic.rows"));
  CHECK(rows.size() == 13);
  for (const auto& row : rows) {
    CAPTURE(row.name);
    CHECK_FALSE(row.affine);
    CHECK(classify_system(row.system).kind == ComponentKind::CompactHyperbolic);
    RowReport rep = verify_hyperbolic_row(row);
    CHECK(rep.ok);
    for (const auto& c : rep.clauses) {
      CAPTURE(c.clause);
      CAPTURE(c.detail);
      if (c.clause == "d" && !row.tau)
        CHECK(c.status == ClauseStatus::Skipped);
      else
        CHECK(c.status == ClauseStatus::Pass);
    }
  }
  auto named = by_name(rows);
  CHECK_FALSE(named.at("Y3(3)").tau.has_value());
  CHECK_FALSE(named.at("Y4(4)").tau.has_value());
  CHECK_FALSE(named.at("Y6(6,4)").tau.has_value());
  CHECK(named.at("X1").tau.has_value());
}

TEST_CASE("hyperbolic rows fail clause by clause when mutated") {
  auto named = by_name(load_rows(data_path("tables/hyperbolic.rows")));

  SUBCASE("identity automorphism fixes the plane, d fails") {
    WitnessRow row = named.at("X2(4,3)");
    row.tau = GraphAutomorphism::identity(row.system.rank());
    RowReport rep = verify_hyperbolic_row(row);
    CHECK_FALSE(rep.ok);
    CHECK(clause(rep, "d").status == ClauseStatus::Fail);
    CHECK(clause(rep, "a").status == ClauseStatus::Pass);
    CHECK(clause(rep, "e").status == ClauseStatus::Pass);
  }
  SUBCASE("adjacent simple root kills a and the eigenvalue gap") {
    WitnessRow row = named.at("Y6(5,5)");
    row.gamma = vec_unit(3, 1, row.system.modulus());
    RowReport rep = verify_hyperbolic_row(row);
    CHECK_FALSE(rep.ok);
    CHECK(clause(rep, "a").status == ClauseStatus::Fail);
    CHECK(clause(rep, "e").status == ClauseStatus::Fail);
  }
  SUBCASE("non-orthogonal V' entry fails b and the codimension count") {
    WitnessRow row = named.at("X3(4,3,3)");
    row.vprime = {0};
    RowReport rep = verify_hyperbolic_row(row);
    CHECK_FALSE(rep.ok);
    CHECK(clause(rep, "b").status == ClauseStatus::Fail);
    CHECK(clause(rep, "c").status == ClauseStatus::Fail);
  }
}

TEST_CASE("eigenvalue identities hold on every hyperbolic row") {
  auto rows = load_rows(data_path("tables/hyperbolic.rows"));
  for (const auto& row : rows) {
    CAPTURE(row.name);
    Mat g = gram(row.system);
    TrigScalar c = bilinear(g, row.beta, row.gamma);
    TrigScalar d = c * c - TrigScalar::integer(1, c.modulus());
    CHECK(d.sign() == Sign::Positive);
    TrigScalar tr = c * c * TrigScalar::integer(4, c.modulus()) -
                    TrigScalar::integer(2, c.modulus());
    QuadScalar lp(c * c * TrigScalar::integer(2, c.modulus()) -
                      TrigScalar::integer(1, c.modulus()),
                  -(c + c), d);
    QuadScalar lm = lp.conj();
    CHECK(lp * lm == QuadScalar::from_base(TrigScalar::integer(1, c.modulus()), d));
    CHECK(lp + lm == QuadScalar::from_base(tr, d));
    CHECK(lp.norm() == TrigScalar::integer(1, c.modulus()));
  }
}

TEST_CASE("distinct reflection planes certify a trivial intersection") {
  auto named = by_name(load_rows(data_path("tables/hyperbolic.rows")));
  const WitnessRow& row = named.at("X3(4,3,3)");
  REQUIRE(row.tau.has_value());
  const GraphAutomorphism& tau = *row.tau;
  int n = row.system.rank();
  Vec tb(n, TrigScalar::zero(row.system.modulus()));
  Vec tg(n, TrigScalar::zero(row.system.modulus()));
  for (int i = 0; i < n; ++i) {
    tb[tau(i)] = row.beta[i];
    tg[tau(i)] = row.gamma[i];
  }
  CHECK(certify_trivial_intersection(row.system, row.beta, row.gamma, tb, tg));
  CHECK_FALSE(
      certify_trivial_intersection(row.system, row.beta, row.gamma, row.beta,
                                   row.gamma));
  // simple roots pair at -1/2, the precondition rejects them
  Vec a1 = vec_unit(n, 0, row.system.modulus());
  Vec a3 = vec_unit(n, 2, row.system.modulus());
  CHECK_THROWS_AS(certify_trivial_intersection(row.system, a1, a3, a1, a3),
                  DomainError);
}

TEST_CASE("row files parse strictly") {
  SUBCASE("word and coordinate gammas agree") {
    auto named = by_name(load_rows(data_path("tables/hyperbolic.rows")));
    const WitnessRow& row = named.at("Y6(5,5)");
    // s2 alpha1 = alpha1 + 2cos(pi/5) alpha2
    int mod = row.system.modulus();
    CHECK(row.gamma[0] == TrigScalar::integer(1, mod));
    CHECK(row.gamma[1] == TrigScalar::cospi(1, 5).change_modulus(mod) +
                              TrigScalar::cospi(1, 5).change_modulus(mod));
    CHECK(row.gamma[2] == TrigScalar::zero(mod));
  }
  SUBCASE("sqrt2 requires a modulus divisible by four") {
    std::string text =
        "row bad\nsystem ../systems/a2t.cox\nbeta 1 0 0\ngamma 0 sqrt2 1\n"
        "ann 2 -1 -1\n";
    CHECK_THROWS_AS(parse_rows(text, data_path("tables")), ParseError);
  }
  SUBCASE("row without a system is rejected") {
    CHECK_THROWS_AS(parse_rows("row x\nbeta 1 0\ngamma 0 1\nann 1 0\n", "."),
                    ParseError);
  }
  SUBCASE("unknown keys are rejected") {
    std::string text =
        "row x\nsystem ../systems/a2t.cox\nbeta 1 0 0\ngamma 0 1 1\n"
        "ann 2 -1 -1\nfoo 1\n";
    CHECK_THROWS_AS(parse_rows(text, data_path("tables")), ParseError);
  }
  SUBCASE("coordinate count must match the rank") {
    std::string text =
        "row x\nsystem ../systems/a2t.cox\nbeta 1 0\ngamma 0 1 1\nann 2 -1 -1\n";
    CHECK_THROWS_AS(parse_rows(text, data_path("tables")), ParseError);
  }
  SUBCASE("vprime indices must lie in range") {
    std::string text =
        "row x\nsystem ../systems/y6_55.cox\nbeta 0 0 1\ngamma word 2 alpha 1\n"
        "vprime 7\n";
    CHECK_THROWS_AS(parse_rows(text, data_path("tables")), ParseError);
  }
  SUBCASE("semicolons separate lines") {
    std::string text =
        "row x; system ../systems/a2t.cox; beta 1 0 0; gamma 0 1 1; "
        "ann 2 -1 -1";
    auto rows = parse_rows(text, data_path("tables"));
    CHECK(rows.size() == 1);
    CHECK(verify_affine_row(rows[0]).ok);
  }
}
