#pragma once

// Exact rational arithmetic and the number-theoretic special functions used by
// the Eisenstein coefficient formula.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace siegel {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator). GMP keeps mpq_class canonical after every arithmetic op.
using Rational = mpq_class;
using BigInt = mpz_class;

/// num/den in lowest terms. Throws std::domain_error for den = 0.
Rational make_rational(std::int64_t num, std::int64_t den);

/// Parses "num/den" or "num". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always emits "num/den", including den = 1.
std::string format_rational(const Rational& q);

/// Integer power of a (possibly negative-free) base; exponent must be >= 0.
Rational rational_pow(const Rational& base, unsigned exponent);

/// B_m with B_1 = -1/2. Results are memoized; the cache is safe under
/// concurrent callers.
Rational bernoulli_number(unsigned m);

/// B_m(t) = sum_j C(m,j) B_j t^(m-j).
Rational bernoulli_poly_value(unsigned m, const Rational& t);

/// B_{m,chi_d} for the Kronecker character of a negative fundamental
/// discriminant d. Throws std::invalid_argument if d is not such a
/// discriminant or m == 0.
Rational generalized_bernoulli(unsigned m, std::int64_t d);

/// Kronecker symbol (d/n) in {-1, 0, 1}.
int kronecker_symbol(std::int64_t d, std::int64_t n);

bool is_fundamental_discriminant(std::int64_t d);

struct DiscriminantSplit {
  std::int64_t discriminant;  // fundamental, negative
  std::int64_t conductor;     // positive
  bool operator==(const DiscriminantSplit&) const = default;
};

/// Unique (d, f) with n = d f^2 and d fundamental. Requires n < 0 and
/// n = 0, 1 mod 4; throws std::invalid_argument otherwise.
DiscriminantSplit fundamental_discriminant_split(std::int64_t n);

/// ord_p(n). Throws std::domain_error for n == 0 and std::invalid_argument
/// for p < 2.
unsigned p_valuation(std::int64_t p, std::int64_t n);

/// Distinct prime divisors of |n| in increasing order (trial division).
std::vector<std::int64_t> prime_divisors(std::int64_t n);

bool is_prime(std::int64_t n);

}  // namespace siegel
