#pragma once

#include "siegel/fourier.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <tuple>
#include <vector>

namespace siegel::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline Rational small_rational() { return make_rational(uniform(-9, 9), uniform(1, 4)); }

/// Roughly half the coefficients nonzero; constant term optional.
inline FourierSeries random_series(int weight, int prec, bool with_constant = true) {
  FourierSeries f(weight, prec);
  for (std::size_t i = 0; i < f.dense().size(); ++i) {
    if (i == 0 && !with_constant) continue;
    if (uniform(0, 1)) f.dense()[i] = small_rational();
  }
  return f;
}

/// Series with a 1 at lead, nothing else at grade(lead) or below, random above.
inline FourierSeries random_led_series(int weight, int prec, EtaIndex lead, int lead_value = 1) {
  FourierSeries f(weight, prec);
  for (std::size_t i = 0; i < f.dense().size(); ++i) {
    const EtaIndex eta = f.space().at(i);
    if (eta.grade() > lead.grade() && uniform(0, 2) == 0) f.dense()[i] = small_rational();
  }
  f.set(lead, lead_value);
  return f;
}

using Coords = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

inline Coords key(EtaIndex e) { return {e.x, e.y, e.z}; }

/// Product by a plain double loop over every pair of stored indices.
inline std::map<Coords, Rational> brute_product(const FourierSeries& f, const FourierSeries& g, int prec) {
  std::map<Coords, Rational> out;
  for (const auto& a : f.space().indices())
    for (const auto& b : g.space().indices()) {
      const EtaIndex s = a + b;
      if (s.grade() > prec) continue;
      const Rational c = f.coeff(a) * g.coeff(b);
      if (c != 0) out[key(s)] += c;
    }
  return out;
}

inline bool same_as(const FourierSeries& f, const std::map<Coords, Rational>& m) {
  for (const auto& eta : f.space().indices()) {
    const auto it = m.find(key(eta));
    const Rational want = it == m.end() ? Rational(0) : it->second;
    if (f.coeff(eta) != want) return false;
  }
  for (const auto& [k, v] : m)
    if (v != 0 && !f.space().position({std::get<0>(k), std::get<1>(k), std::get<2>(k)})) return false;
  return true;
}

}  // namespace siegel::testing
