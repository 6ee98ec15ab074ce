#include "siegel/lattice.hpp"

#include "siegel/exactnum.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

using namespace siegel;

namespace {

// Every positive index of grade <= max_grade found by scanning a box that is
// provably large enough: m > 0 forces |y| < x and -x < z < 0.
std::vector<EtaIndex> brute_cone(std::int64_t max_grade) {
  std::vector<EtaIndex> out;
  for (std::int64_t x = 1; x <= max_grade; ++x)
    for (std::int64_t y = -x; y <= x; ++y)
      for (std::int64_t z = -x; z <= 0; ++z)
        if (is_positive({x, y, z})) out.push_back({x, y, z});
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace

TEST_CASE("norm and cone membership") {
  CHECK(norm_m({2, 1, -1}) == 3);
  CHECK(norm_m({2, 0, -1}) == 4);
  CHECK(norm_m({0, 0, 0}) == 0);
  CHECK(norm_m({12, 6, -6}) == 108);
  CHECK(is_positive({2, 1, -1}));
  CHECK_FALSE(is_positive({1, 0, 0}));
  CHECK_FALSE(is_positive({0, 0, 0}));
  for (int i = 0; i < 500; ++i) {
    const EtaIndex e{testing::uniform(-20, 20), testing::uniform(-20, 20), testing::uniform(-20, 20)};
    const std::int64_t n = testing::uniform(-5, 5);
    CHECK(norm_m(n * e) == n * n * norm_m(e));
  }
}

TEST_CASE("layers") {
  CHECK(layer(1).empty());
  CHECK(layer(2) == std::vector<EtaIndex>{{2, 1, -1}, {2, 0, -1}});
  const auto l5 = layer(5);
  CHECK(std::find(l5.begin(), l5.end(), EtaIndex{5, 1, -2}) != l5.end());
}

TEST_CASE("cone enumeration matches a box scan") {
  for (std::int64_t g : {2, 4, 6, 9, 12}) CHECK(enumerate_cone(g) == brute_cone(g));
  CHECK(enumerate_cone(2).size() == 2);
  CHECK(enumerate_cone(12).size() == 227);
  CHECK(enumerate_cone(14).size() == 355);
  CHECK(enumerate_cone(16).size() == 519);
  CHECK(enumerate_cone(20).size() == 994);
  const auto c4 = enumerate_cone(4);
  for (EtaIndex e : {EtaIndex{4, 2, -2}, {4, 0, -2}, {4, 1, -2}, {3, 0, -1}, {3, 1, -1}, {3, 0, -2}, {3, 1, -2}})
    CHECK(std::find(c4.begin(), c4.end(), e) != c4.end());
  const auto c12 = enumerate_cone(12);
  CHECK(std::find(c12.begin(), c12.end(), EtaIndex{12, 6, -6}) != c12.end());
}

TEST_CASE("cone is closed under addition") {
  const auto c = enumerate_cone(6);
  for (const auto& a : c)
    for (const auto& b : c) CHECK(is_positive(a + b));
}

TEST_CASE("decompositions") {
  using P = std::pair<EtaIndex, EtaIndex>;
  const EtaIndex zero{};
  CHECK(decompositions({2, 1, -1}) == std::vector<P>{{zero, {2, 1, -1}}, {{2, 1, -1}, zero}});
  {
    const auto d = decompositions({4, 2, -2});
    CHECK(d.size() == 3);
    CHECK(std::find(d.begin(), d.end(), P{{2, 1, -1}, {2, 1, -1}}) != d.end());
  }
  {
    const auto d = decompositions({5, 1, -2});
    const std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t>>
        got = [&] {
          std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t>> s;
          for (auto& [a, b] : d) s.insert({a.x, a.y, a.z, b.x, b.y, b.z});
          return s;
        }();
    CHECK(got == decltype(got){{0, 0, 0, 5, 1, -2},
                               {5, 1, -2, 0, 0, 0},
                               {2, 0, -1, 3, 1, -1},
                               {3, 1, -1, 2, 0, -1},
                               {2, 1, -1, 3, 0, -1},
                               {3, 0, -1, 2, 1, -1}});
  }
  CHECK_THROWS_AS(decompositions({1, 0, 0}), std::invalid_argument);

  SUBCASE("agrees with a double loop") {
    const auto cone = enumerate_cone(8);
    for (const auto& eta : cone) {
      std::vector<P> brute{{zero, eta}};
      for (const auto& a : cone)
        for (const auto& b : cone)
          if (a + b == eta) brute.push_back({a, b});
      brute.push_back({eta, zero});
      auto got = decompositions(eta);
      const auto less = [](const P& l, const P& r) {
        return std::tuple(l.first.x, l.first.y, l.first.z) < std::tuple(r.first.x, r.first.y, r.first.z);
      };
      std::sort(brute.begin(), brute.end(), less);
      std::sort(got.begin(), got.end(), less);
      CHECK(got == brute);
      for (const auto& [a, b] : got) CHECK(a + b == eta);
    }
  }
}

TEST_CASE("quadratic invariants") {
  CHECK(quad_invariants({2, 1, -1}) == QuadInvariants{1, -3, 1});
  CHECK(quad_invariants({4, 0, -2}) == QuadInvariants{2, -4, 1});
  CHECK(quad_invariants({8, 1, -4}) == QuadInvariants{1, -3, 5});
  CHECK_THROWS_AS(quad_invariants({1, 0, 0}), std::invalid_argument);
  for (const auto& eta : enumerate_cone(12)) {
    const std::int64_t a = std::gcd(std::gcd(eta.x, eta.y), eta.z);
    const std::int64_t n = -norm_m(eta) / (a * a);
    CHECK(norm_m(eta) % (a * a) == 0);
    CHECK(((n % 4) + 4) % 4 <= 1);
    const auto inv = quad_invariants(eta);
    CHECK(inv.content == std::abs(a));
    CHECK(is_fundamental_discriminant(inv.discriminant));
    CHECK(inv.discriminant * inv.conductor * inv.conductor == n);
  }
}
