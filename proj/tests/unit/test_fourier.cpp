#include "siegel/fourier.hpp"
#include "siegel/linalg.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace siegel;
using namespace siegel::testing;

TEST_CASE("index space layout") {
  const auto s6 = IndexSpace::for_prec(6);
  const auto s12 = IndexSpace::for_prec(12);
  CHECK(s12->size() == 228);
  CHECK(s6->at(0).is_zero());
  CHECK(IndexSpace::for_prec(12) == s12);
  for (std::size_t i = 0; i < s6->size(); ++i) CHECK(s6->at(i) == s12->at(i));
  CHECK(s12->grade_end(6) == s6->size());
  CHECK(s12->grade_end(1) == 1);
  CHECK(!s12->position({1, 0, 0}));
  CHECK(s12->position({12, 6, -6}));
  for (std::size_t t = 0; t < s6->size(); ++t)
    for (const auto& p : s6->pairs(t)) CHECK(s6->at(p.first) + s6->at(p.second) == s6->at(t));
}

TEST_CASE("coefficient access") {
  FourierSeries f(2, 4);
  f.set({2, 1, -1}, 3);
  CHECK(f.coeff({2, 1, -1}) == 3);
  CHECK(f.coeff({1, 0, 0}) == 0);
  CHECK_THROWS_AS(f.coeff({6, 3, -3}), std::out_of_range);
  CHECK_THROWS_AS(f.set({1, 0, 0}, 1), std::invalid_argument);
  CHECK(f.is_cusp());
  CHECK(f.order() == 2);
  CHECK(FourierSeries(2, 4).is_zero());
  CHECK(!FourierSeries(2, 4).order());
  CHECK(FourierSeries::one(4).constant_term() == 1);
  CHECK_THROWS(f.truncated(6));
  CHECK(f.truncated(2).coeff({2, 1, -1}) == 3);
  const auto terms = f.terms();
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].first == EtaIndex{2, 1, -1});
}

TEST_CASE("multiply agrees with a double loop") {
  for (int prec : {2, 4, 5, 6}) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto f = random_series(2, prec);
      const auto g = random_series(3, prec);
      const auto h = multiply(f, g);
      CHECK(h.weight() == 5);
      CHECK(h.prec() == prec);
      CHECK(same_as(h, brute_product(f, g, prec)));
    }
  }
  const auto f = random_series(1, 6);
  const auto g = random_series(1, 4);
  CHECK(multiply(f, g).prec() == 4);
}

TEST_CASE("ring axioms") {
  for (int trial = 0; trial < 6; ++trial) {
    const int prec = static_cast<int>(uniform(3, 6));
    const auto a = random_series(1, prec);
    const auto b = random_series(1, prec);
    const auto c = random_series(1, prec);
    const auto d = random_series(2, prec);
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    const Rational s = small_rational(), t = small_rational();
    CHECK(multiply(linear_combine({{s, a}, {t, b}}), d) ==
          linear_combine({{s, multiply(a, d)}, {t, multiply(b, d)}}));
    CHECK(multiply(a, FourierSeries::one(prec)).with_weight(1) == a);
    CHECK(power(a, 3) == multiply(a, multiply(a, a)));
    CHECK(power(a, 0) == FourierSeries::one(prec));
    const auto ca = random_series(1, prec, false);
    const auto cb = random_series(1, prec, false);
    CHECK(multiply(ca, cb).is_cusp());
  }
}

TEST_CASE("linear combinations") {
  const auto f = random_series(4, 6);
  const auto g = random_series(4, 4);
  const auto r = linear_combine({{1, f}, {0, g}});
  CHECK(r == f.truncated(4));
  CHECK(scale(2, f) == linear_combine({{1, f}, {1, f}}));
  CHECK_THROWS_AS(linear_combine({{1, f}, {1, random_series(2, 6)}}), std::invalid_argument);
}

TEST_CASE("truncation commutes with products") {
  const auto f = random_series(2, 8);
  const auto g = random_series(2, 8);
  CHECK(multiply(f, g).truncated(5) == multiply(f.truncated(5), g.truncated(5)));
}

TEST_CASE("square roots") {
  SUBCASE("round trip") {
    for (EtaIndex lead : {EtaIndex{2, 1, -1}, EtaIndex{2, 0, -1}, EtaIndex{3, 1, -2}}) {
      for (int sign : {1, -1}) {
        const auto h = random_led_series(3, 8, lead, sign);
        const auto g = multiply(h, h);
        const auto root = sqrt_monic(g, lead, sign);
        CHECK(root.prec() == 8 - lead.grade());
        CHECK(root.weight() == 3);
        CHECK(root == h.truncated(8 - static_cast<int>(lead.grade())));
      }
    }
  }
  SUBCASE("rejects non-squares") {
    FourierSeries g(10, 8);
    g.set({4, 2, -2}, 1);
    g.set({4, 0, -2}, 1);
    CHECK_THROWS_AS(sqrt_monic(g, {2, 1, -1}, 1), NotSquareError);
    FourierSeries low(10, 8);
    low.set({4, 2, -2}, 1);
    low.set({2, 1, -1}, 1);
    CHECK_THROWS_AS(sqrt_monic(low, {2, 1, -1}, 1), NotSquareError);
  }
}

TEST_CASE("exact division") {
  SUBCASE("round trip") {
    for (EtaIndex lead : {EtaIndex{2, 1, -1}, EtaIndex{2, 0, -1}}) {
      const auto b = random_led_series(5, 9, lead);
      const auto h = random_series(4, 9);
      const auto g = multiply(b, h);
      const auto q = divide_exact(g, b, lead);
      CHECK(q.weight() == 4);
      CHECK(q == h.truncated(9 - static_cast<int>(lead.grade())));
    }
  }
  SUBCASE("rejects non-multiples") {
    const auto b = random_led_series(5, 8, {2, 1, -1});
    FourierSeries g(9, 8);
    g.set({4, 0, -2}, 1);
    CHECK_THROWS_AS(divide_exact(g, b, {2, 1, -1}), NotDivisibleError);
    FourierSeries below(9, 8);
    below.set({0, 0, 0}, 1);
    CHECK_THROWS_AS(divide_exact(below, b, {2, 1, -1}), NotDivisibleError);
  }
  SUBCASE("divisor must have a single leading index") {
    auto b = random_led_series(5, 8, {2, 1, -1});
    b.set({2, 0, -1}, 1);
    CHECK_THROWS_AS(divide_exact(multiply(b, b), b, {2, 1, -1}), std::invalid_argument);
  }
}

TEST_CASE("rank and relations") {
  const auto a = random_series(2, 6);
  const auto b = random_series(2, 6);
  const auto c = random_series(2, 6);
  const auto dep = linear_combine({{2, a}, {-3, b}});
  std::vector<FourierSeries> forms{a, b, c, dep};
  CHECK(rank_of_span(forms) == 3);
  std::vector<FourierSeries> permuted{dep, scale(7, c), b, scale(-1, a)};
  CHECK(rank_of_span(permuted) == 3);
  std::vector<FourierSeries> dup{a, b, a};
  CHECK(rank_of_span(dup) == 2);

  const auto null = relation_nullspace(forms);
  REQUIRE(null.size() == 1);
  const auto& v = null[0];
  CHECK(v[3] == 1);
  CHECK(v[0] == -2);
  CHECK(v[1] == 3);
  CHECK(v[2] == 0);

  std::vector<FourierSeries> mixed{a, random_series(4, 6)};
  CHECK_THROWS_AS(rank_of_span(mixed), std::invalid_argument);
}

TEST_CASE("dense linear algebra") {
  RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(matrix_rank(m) == 2);
  const auto ns = right_nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) {
    Rational dot = 0;
    for (std::size_t j = 0; j < 3; ++j) dot += row[j] * ns[0][j];
    CHECK(dot == 0);
  }
  CHECK(right_nullspace({}, 2).size() == 2);
}
