#include "siegel/eisenstein.hpp"
#include "siegel/expansion_io.hpp"

#include <doctest.h>

#include <map>
#include <tuple>

using namespace siegel;

namespace {

Rational coefficient(int k, EtaIndex eta) { return eisenstein_coefficient({k, 1, 6}, eta); }

}  // namespace

TEST_CASE("single coefficients") {
  CHECK(coefficient(2, {2, 1, -1}) == 48);
  CHECK(coefficient(2, {4, 2, -2}) == 192);
  CHECK(coefficient(4, {2, 1, -1}) == make_rational(960, 13));
  CHECK(coefficient(2, {8, 1, -4}) == 336);
  CHECK(eisenstein_sign() * eisenstein_sign() == 1);
}

TEST_CASE("series") {
  const auto e2 = eisenstein_series({2, 1, 6}, 2);
  CHECK(e2.weight() == 2);
  CHECK(e2.terms().size() == 3);
  CHECK(e2.constant_term() == 1);
  CHECK(e2.coeff({2, 1, -1}) == 48);
  CHECK(e2.coeff({2, 0, -1}) == 72);
  const auto e6 = eisenstein_series({6, 1, 6}, 4);
  CHECK(e6.constant_term() == 1);
  CHECK(e6.coeff({2, 0, -1}) == make_rational(7560, 341));
}

TEST_CASE("reference tables") {
  const auto tables = load_fixture_tables(resolve_fixture_dir(std::nullopt));
  int checked = 0;
  for (const auto& t : tables) {
    if (t.name != "generators") continue;
    for (const auto& rec : t.records) {
      int k = 0;
      if (rec.form == "E2") k = 2;
      else if (rec.form == "E4") k = 4;
      else if (rec.form == "E6") k = 6;
      else continue;
      CHECK(rec.rows.size() == 24);
      const auto series = eisenstein_series({k, 1, 6}, 12);
      for (const auto& row : rec.rows) {
        CHECK_MESSAGE(series.coeff(row.eta) == row.coeff, rec.form << " at " << row.eta);
        ++checked;
      }
    }
  }
  CHECK(checked == 72);
}

TEST_CASE("multiples of [2,1,-1]") {
  const std::int64_t expected[] = {48, 192, 192, 480, 0, 768};
  for (std::int64_t n : {1, 2, 3, 4, 6}) CHECK(coefficient(2, n * EtaIndex{2, 1, -1}) == expected[n - 1]);
}

TEST_CASE("coefficients depend only on the quadratic invariants") {
  for (int k : {2, 4}) {
    const auto series = eisenstein_series({k, 1, 6}, 12);
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, Rational> seen;
    for (const auto& eta : enumerate_cone(12)) {
      const auto inv = quad_invariants(eta);
      const auto key = std::tuple(inv.content, inv.discriminant, inv.conductor);
      const auto [it, fresh] = seen.emplace(key, series.coeff(eta));
      if (!fresh) CHECK_MESSAGE(it->second == series.coeff(eta), "k=" << k << " at " << eta);
    }
  }
}

TEST_CASE("weight 2 coefficients are integers") {
  const auto e2 = eisenstein_series({2, 1, 6}, 12);
  for (const auto& [eta, c] : e2.terms()) CHECK(c.get_den() == 1);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS(eisenstein_series({3, 1, 6}, 4));
  CHECK_THROWS(eisenstein_series({0, 1, 6}, 4));
  CHECK_THROWS(eisenstein_coefficient({2, 1, 6}, {1, 0, 0}));
}
