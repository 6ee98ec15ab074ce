#include "siegel/ring.hpp"

#include "siegel/diffop.hpp"
#include "siegel/dims.hpp"
#include "siegel/linalg.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace siegel;

namespace {

const GeneratorSet& gens12() {
  static const GeneratorSet g = build_generators(12);
  return g;
}

}  // namespace

TEST_CASE("generator bookkeeping") {
  const auto& g = gens12();
  CHECK(g.prec == 12);
  for (const auto& name : generator_names()) CHECK(g.get(name).prec() == 12);
  CHECK(g.get("E2").weight() == 2);
  CHECK(g.get("chi5a").weight() == 5);
  CHECK(g.get("chi15").weight() == 15);
  CHECK(g.get("delta20b").weight() == 20);
  CHECK_THROWS_AS(g.get("E12"), std::invalid_argument);
  CHECK(g.truncated(6).get("phi10") == g.phi10.truncated(6));
}

TEST_CASE("generators do not depend on the working precision") {
  const auto g8 = build_generators(8);
  const auto& g12 = gens12();
  for (const auto& name : generator_names()) CHECK_MESSAGE(g8.get(name) == g12.get(name).truncated(8), name);
}

TEST_CASE("low-weight products") {
  const auto& g = gens12();
  CHECK(power(g.e2, 5).coeff({2, 1, -1}) == 240);
  CHECK(power(g.e2, 3).coeff({2, 0, -1}) == 216);
  RationalMatrix m;
  for (const auto& f : {power(g.e2, 3), multiply(g.e2, g.e4), g.e6})
    m.push_back({f.coeff({0, 0, 0}), f.coeff({2, 1, -1}), f.coeff({2, 0, -1})});
  CHECK(matrix_rank(m) == 3);
}

TEST_CASE("weight 5 generators") {
  const auto& g = gens12();
  const auto& a = g.chi5a;
  const auto& b = g.chi5b;
  CHECK(a.coeff({2, 0, -1}) == 1);
  CHECK(a.coeff({2, 1, -1}) == 0);
  CHECK(b.coeff({2, 1, -1}) == 1);
  CHECK(b.coeff({2, 0, -1}) == 0);
  CHECK(a.coeff({3, 1, -2}) == -1);
  CHECK(a.coeff({3, 1, -1}) == -1);
  CHECK(a.coeff({3, 0, -2}) == 0);
  CHECK(b.coeff({3, 0, -2}) == -1);
  CHECK(b.coeff({3, 0, -1}) == -1);
  CHECK(b.coeff({3, 1, -2}) == 0);
  CHECK(a.coeff({4, 1, -2}) == -16);
  CHECK(a.coeff({6, 0, -3}) == 81);
  CHECK(b.coeff({8, 4, -4}) == 256);
  CHECK(a.is_cusp());
  CHECK(b.is_cusp());
  CHECK_THROWS_AS(divide_exact(a, b, {2, 1, -1}), NotDivisibleError);
}

TEST_CASE("weight 15 generator") {
  const auto e = build_eisenstein_forms(9);
  const auto [a, b] = chi5_from_phi(build_phi_forms(e));
  const auto r = build_chi15(e.e2.truncated(7), e.e4.truncated(7), e.e6.truncated(7), a, b);
  CHECK(r.chi15.prec() == 5);
  CHECK(r.chi15.coeff({5, 1, -2}) == 1);
  CHECK(r.chi15_companion == r.chi15);
  CHECK(r.delta20a.weight() == 20);
  CHECK(r.delta20a.is_cusp());
  const auto raw = divide_exact(r.delta20a, b, {2, 1, -1});
  CHECK(raw.coeff({5, 1, -2}) == -36 * chi15_relation_scale());

  const auto& g = gens12();
  CHECK(g.chi15.coeff({5, 1, -2}) == 1);
  CHECK(g.chi15.coeff({7, 2, -4}) == 112);
  CHECK(g.chi15.coeff({10, 2, -6}) == 14976);
  CHECK(g.chi15.order() == 5);
  CHECK(g.chi15.is_cusp());
}

TEST_CASE("monomials") {
  const auto m = Monomial::parse("E2^3*E4");
  REQUIRE(m.factors.size() == 2);
  CHECK(m.factors[0] == std::pair<std::string, unsigned>{"E2", 3});
  CHECK(m.to_string() == "E2^3*E4");
  CHECK(m.weight(gens12()) == 10);
  CHECK(Monomial::parse("").factors.empty());
  CHECK(Monomial::parse("1").factors.empty());
  CHECK_THROWS_AS(Monomial::parse("E2^"), std::invalid_argument);
  CHECK_THROWS_AS(Monomial::parse("E2**E4"), std::invalid_argument);
  CHECK_THROWS_AS(Monomial::parse("nosuch").weight(gens12()), std::invalid_argument);
  MonomialEvaluator eval(gens12());
  CHECK(eval("chi5a*chi5b") == multiply(gens12().chi5a, gens12().chi5b));
  CHECK(eval("1") == FourierSeries::one(12));
}

TEST_CASE("relations hold at prec 12") {
  const auto& g = gens12();
  for (const auto& c : verify_chi5_square_relations(g)) CHECK_MESSAGE(c.passed, c.name);
  const auto higher = verify_higher_relations(g);
  CHECK(higher.size() == 3);
  for (const auto& c : higher) CHECK_MESSAGE(c.passed, c.name);
  CHECK(chi15_square_relation().rhs.size() == 45);
  CHECK(parse_rational(chi15_square_relation().lhs_coefficient) ==
        chi15_relation_scale() * chi15_relation_scale());
}

TEST_CASE("perturbations are located") {
  GeneratorSet g = gens12().truncated(8);
  g.chi5a.set({3, 1, -2}, g.chi5a.coeff({3, 1, -2}) + 1);
  const auto checks = verify_chi5_square_relations(g);
  CHECK_FALSE(checks[0].passed);
  REQUIRE(!checks[0].mismatches.empty());
  CHECK(checks[0].mismatches.front().grade() == 5);
  CHECK(checks[1].passed);
}

TEST_CASE("E8 relation is the only weight 8 relation") {
  const auto& g = gens12();
  MonomialEvaluator eval(g);
  std::vector<FourierSeries> forms;
  const auto& rel = e8_relation();
  for (const auto& t : rel.rhs) forms.push_back(eval(t.monomial));
  forms.push_back(eval(rel.lhs));
  const auto null = relation_nullspace(forms);
  REQUIRE(null.size() == 1);
  const Rational s = -null[0].back();
  for (std::size_t i = 0; i < rel.rhs.size(); ++i) CHECK(null[0][i] == s * parse_rational(rel.rhs[i].coefficient));
}

TEST_CASE("monomial families") {
  for (int w = 0; w <= 30; ++w) CHECK(static_cast<std::int64_t>(basis_monomials(w).size()) == genfun_coeff(w));
  for (const auto& e : five_generator_monomials(20)) {
    CHECK(2 * e.e2 + 4 * e.e4 + 5 * e.chi5a + 6 * e.e6 + 5 * e.chi5b == 20);
    CHECK(e.chi15 == 0);
  }
  CHECK(MonomialExponents{1, 0, 1, 0, 1, 1}.to_monomial().to_string() == "E2*chi5a*chi5b*chi15");
}

TEST_CASE("ranks") {
  GeneratorLibrary lib;
  CHECK(monomial_basis(0, lib).rank == 1);
  const auto w10 = monomial_basis(10, lib);
  CHECK(w10.rank == 7);
  CHECK(w10.matches());
  CHECK(monomial_basis(15, lib).rank == 13);
  const auto low = monomial_basis(20, lib, {8, 8});
  CHECK(low.rank == 23);
  CHECK(low.prec == 8);
  const auto w20 = monomial_basis(20, lib, {8, 12});
  CHECK(w20.rank == 28);
  CHECK(w20.prec == 10);
}
