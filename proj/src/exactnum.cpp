#include "siegel/exactnum.hpp"

#include <mutex>
#include <stdexcept>

namespace siegel {

namespace {

std::int64_t mod_nonneg(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool is_squarefree(std::int64_t n) {
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q{BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  std::string s(text);
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

Rational bernoulli_number(unsigned m) {
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mutex);
  while (cache.size() <= m) {
    const auto n = static_cast<unsigned>(cache.size());
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    Rational acc = 0;
    for (unsigned j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * cache[j];
    cache.push_back(-acc / Rational(n + 1));
  }
  return cache[m];
}

Rational bernoulli_poly_value(unsigned m, const Rational& t) {
  Rational acc = 0;
  Rational tpow = 1;  // t^(m-j), built from j = m downwards
  for (unsigned j = m + 1; j-- > 0;) {
    acc += Rational(binomial(m, j)) * bernoulli_number(j) * tpow;
    tpow *= t;
  }
  return acc;
}

Rational generalized_bernoulli(unsigned m, std::int64_t d) {
  if (m == 0) throw std::invalid_argument("generalized_bernoulli: m must be positive");
  if (d >= 0 || !is_fundamental_discriminant(d))
    throw std::invalid_argument("generalized_bernoulli: not a negative fundamental discriminant: " +
                                std::to_string(d));
  const std::int64_t modulus = -d;
  Rational acc = 0;
  for (std::int64_t a = 1; a <= modulus; ++a) {
    const int chi = kronecker_symbol(d, a);
    if (chi == 0) continue;
    Rational term = bernoulli_poly_value(m, make_rational(a, modulus));
    if (chi > 0) acc += term; else acc -= term;
  }
  return acc * rational_pow(Rational(modulus), m - 1);
}

int kronecker_symbol(std::int64_t d, std::int64_t n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (d < 0) result = -result;
  }
  while (n % 2 == 0) {
    n /= 2;
    if (d % 2 == 0) return 0;
    const std::int64_t r = mod_nonneg(d, 8);
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (d/n) for odd n > 0.
  std::int64_t a = mod_nonneg(d, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0) return false;
  const std::int64_t r = mod_nonneg(d, 4);
  if (r == 1) return d != 1 && is_squarefree(d);
  if (r == 0) {
    const std::int64_t q = d / 4;
    const std::int64_t rq = mod_nonneg(q, 4);
    return (rq == 2 || rq == 3) && is_squarefree(q);
  }
  return false;
}

DiscriminantSplit fundamental_discriminant_split(std::int64_t n) {
  if (n >= 0) throw std::invalid_argument("fundamental_discriminant_split: n must be negative");
  const std::int64_t r = mod_nonneg(n, 4);
  if (r != 0 && r != 1)
    throw std::invalid_argument("fundamental_discriminant_split: " + std::to_string(n) +
                                " is not 0 or 1 mod 4");
  // n = -kernel * root^2 with kernel squarefree.
  std::int64_t rest = -n;
  std::int64_t kernel = 1;
  std::int64_t root = 1;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) kernel *= p;
  }
  kernel *= rest;
  std::int64_t d = -kernel;
  if (mod_nonneg(d, 4) != 1) {
    d *= 4;
    root /= 2;
  }
  return {d, root};
}

unsigned p_valuation(std::int64_t p, std::int64_t n) {
  if (p < 2) throw std::invalid_argument("p_valuation: p must be a prime");
  if (n == 0) throw std::domain_error("p_valuation: valuation of zero is undefined");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  if (n < 0) n = -n;
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace siegel
