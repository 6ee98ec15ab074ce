#include "siegel/eisenstein.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace siegel {

namespace {

bool squarefree(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

Rational pow_int(std::int64_t base, unsigned e) { return rational_pow(Rational(base), e); }

// Local factor at a prime dividing D1.
Rational local_factor_ramified_unit(std::int64_t p, int k, unsigned a_p, int chi) {
  Rational acc = 0;
  for (unsigned t = 0; t <= a_p; ++t) acc += pow_int(p, (2 * k - 3) * t);
  Rational tail = 0;
  for (unsigned t = 0; t < a_p; ++t) tail += pow_int(p, (2 * k - 3) * t + k - 1);
  return acc + (1 + chi) * tail;
}

// Local factor at a prime dividing D2.
Rational local_factor_ramified_ideal(std::int64_t p, int k, unsigned a_p, int chi) {
  Rational acc = 0;
  for (unsigned t = 0; t <= a_p; ++t) acc += pow_int(p, (2 * k - 3) * t);
  Rational tail = 0;
  for (unsigned t = 0; t < a_p; ++t) tail += pow_int(p, (2 * k - 3) * t + k - 2);
  return acc - chi * tail;
}

// Local factor at a prime not dividing D.
Rational local_factor_unramified(std::int64_t p, int k, unsigned a_p, unsigned f_p, int chi) {
  Rational acc = 0;
  for (unsigned t = 0; t <= a_p; ++t) {
    const unsigned top = a_p + f_p - t;
    for (unsigned l = 0; l <= top; ++l) acc += pow_int(p, (2 * k - 3) * l + (k - 1) * t);
    for (unsigned l = 0; l < top; ++l) acc -= chi * pow_int(p, (2 * k - 3) * l + (k - 1) * t + k - 2);
  }
  return acc;
}

}  // namespace

void validate(const EisensteinParams& params) {
  if (params.k < 2 || params.k % 2 != 0)
    throw std::invalid_argument("Eisenstein series need an even weight >= 2, got " + std::to_string(params.k));
  if (params.d1 < 1 || params.d2 < 1 || std::gcd(params.d1, params.d2) != 1 || !squarefree(params.d1) ||
      !squarefree(params.d2))
    throw std::invalid_argument("(D1, D2) must be coprime squarefree positive integers");
}

Rational eisenstein_coefficient_raw(const EisensteinParams& params, EtaIndex eta) {
  validate(params);
  if (!is_positive(eta))
    throw std::invalid_argument("eisenstein_coefficient: index not in the cone: " + to_string(eta));
  const int k = params.k;
  const auto inv = quad_invariants(eta);
  const auto chi = [&](std::int64_t p) { return kronecker_symbol(inv.discriminant, p); };

  Rational c = Rational(4 * k) * generalized_bernoulli(k - 1, inv.discriminant) /
               (bernoulli_number(k) * bernoulli_number(2 * k - 2));
  for (auto p : prime_divisors(params.d1)) {
    c *= (1 - chi(p) * pow_int(p, k - 1)) * (1 - chi(p) * pow_int(p, k - 2));
    c /= pow_int(p, 2 * k - 2) - 1;
  }
  for (auto p : prime_divisors(params.d2)) c /= pow_int(p, k - 1) - 1;

  // F_p = 1 unless p divides a f D.
  for (auto p : prime_divisors(inv.content * inv.conductor * params.d1 * params.d2)) {
    const unsigned a_p = p_valuation(p, inv.content);
    const unsigned f_p = p_valuation(p, inv.conductor);
    if (params.d1 % p == 0) {
      c *= local_factor_ramified_unit(p, k, a_p, chi(p));
    } else if (params.d2 % p == 0) {
      c *= local_factor_ramified_ideal(p, k, a_p, chi(p));
    } else {
      c *= local_factor_unramified(p, k, a_p, f_p, chi(p));
    }
  }
  return c;
}

int eisenstein_sign() {
  static const int sign = [] {
    const Rational raw = eisenstein_coefficient_raw({2, 1, 6}, {2, 1, -1});
    if (raw == 48) return 1;
    if (raw == -48) return -1;
    throw std::logic_error("Eisenstein calibration failed: raw E_2[2,1,-1] = " + format_rational(raw));
  }();
  return sign;
}

Rational eisenstein_coefficient(const EisensteinParams& params, EtaIndex eta) {
  Rational c = eisenstein_coefficient_raw(params, eta);
  if (eisenstein_sign() < 0) c = -c;
  return c;
}

FourierSeries eisenstein_series(const EisensteinParams& params, int max_grade) {
  validate(params);
  if (max_grade < 1) throw std::invalid_argument("eisenstein_series: precision must be positive");
  FourierSeries out(params.k, max_grade);
  auto& c = out.dense();
  c.front() = 1;
  const IndexSpace& space = out.space();
  for (std::size_t i = 1; i < space.size(); ++i) c[i] = eisenstein_coefficient(params, space.at(i));
  return out;
}

}  // namespace siegel
