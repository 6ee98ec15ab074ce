#pragma once

// Truncated Fourier expansions: exact ring operations on coefficient tables
// indexed by the zero index and the cone points of grade <= prec.

#include "siegel/exactnum.hpp"
#include "siegel/lattice.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace siegel {

/// Zero index followed by enumerate_cone(prec), plus the table of additive
/// decompositions of every member. The space for prec P is a prefix of the
/// space for any larger prec, so positions are stable across precisions.
class IndexSpace {
 public:
  /// Shared, immutable instance for the given precision (built once).
  static std::shared_ptr<const IndexSpace> for_prec(int prec);

  int prec() const { return prec_; }
  std::size_t size() const { return indices_.size(); }
  const std::vector<EtaIndex>& indices() const { return indices_; }
  EtaIndex at(std::size_t pos) const { return indices_[pos]; }
  std::optional<std::size_t> position(EtaIndex eta) const;

  /// Number of indices with grade <= g (g clamped to [0, prec]).
  std::size_t grade_end(int g) const;

  struct Pair {
    std::uint32_t first;
    std::uint32_t second;
  };
  /// All ordered (a, b) positions with a + b = indices()[target].
  std::span<const Pair> pairs(std::size_t target) const {
    return {pairs_.data() + pair_offsets_[target], pairs_.data() + pair_offsets_[target + 1]};
  }

 private:
  explicit IndexSpace(int prec);

  int prec_;
  std::vector<EtaIndex> indices_;
  std::unordered_map<EtaIndex, std::size_t, EtaIndexHash> lookup_;
  std::vector<std::size_t> grade_ends_;
  std::vector<std::size_t> pair_offsets_;
  std::vector<Pair> pairs_;
};

class FourierSeries {
 public:
  /// The zero series of the given weight.
  FourierSeries(int weight, int prec);

  /// Weight-0 series with constant term 1.
  static FourierSeries one(int prec);

  int weight() const { return weight_; }
  int prec() const { return space_->prec(); }
  const IndexSpace& space() const { return *space_; }

  /// Coefficient at eta; zero for indices outside the cone. Throws
  /// std::out_of_range for cone indices beyond the precision.
  Rational coeff(EtaIndex eta) const;
  Rational constant_term() const { return coeffs_.front(); }

  /// Throws std::invalid_argument for non-cone indices, std::out_of_range
  /// beyond the precision.
  void set(EtaIndex eta, Rational value);

  const std::vector<Rational>& dense() const { return coeffs_; }
  std::vector<Rational>& dense() { return coeffs_; }

  bool is_zero() const;
  bool is_cusp() const { return coeffs_.front() == 0; }
  /// Lowest grade carrying a nonzero coefficient, or nullopt for zero.
  std::optional<int> order() const;

  /// Nonzero coefficients in canonical order.
  std::vector<std::pair<EtaIndex, Rational>> terms() const;

  FourierSeries truncated(int prec) const;
  FourierSeries with_weight(int weight) const;

  friend bool operator==(const FourierSeries& a, const FourierSeries& b) {
    return a.weight_ == b.weight_ && a.prec() == b.prec() && a.coeffs_ == b.coeffs_;
  }

 private:
  int weight_;
  std::shared_ptr<const IndexSpace> space_;
  std::vector<Rational> coeffs_;
};

class NotSquareError : public std::runtime_error {
 public:
  NotSquareError(const std::string& what, EtaIndex where)
      : std::runtime_error(what), where_(where) {}
  EtaIndex where() const { return where_; }

 private:
  EtaIndex where_;
};

class NotDivisibleError : public std::runtime_error {
 public:
  NotDivisibleError(const std::string& what, EtaIndex where)
      : std::runtime_error(what), where_(where) {}
  EtaIndex where() const { return where_; }

 private:
  EtaIndex where_;
};

struct Term {
  Rational scalar;
  FourierSeries series;
};

/// Sum of scalar * series; all weights must agree, result prec is the
/// minimum input prec.
FourierSeries linear_combine(std::span<const Term> terms);
FourierSeries linear_combine(std::initializer_list<Term> terms);

FourierSeries scale(const Rational& c, const FourierSeries& f);

/// Convolution product; weight adds, prec is the minimum.
FourierSeries multiply(const FourierSeries& f, const FourierSeries& g);
FourierSeries power(const FourierSeries& f, unsigned n);

/// Convolution evaluated up to out_prec, treating coefficients beyond each
/// input's precision as zero. Only exact when the caller knows the vanishing
/// orders make those coefficients irrelevant.
FourierSeries convolve_to(const FourierSeries& f, const FourierSeries& g, int out_prec);

/// h with h*h = g, h(lead) = sign, h vanishing below grade(lead). Requires
/// g(2 lead) = 1 and g vanishing below grade 2*grade(lead). The result has
/// prec(g) - grade(lead) and weight(g)/2; h*h = g is re-verified through
/// prec(g). Throws NotSquareError on any inconsistency.
FourierSeries sqrt_monic(const FourierSeries& g, EtaIndex lead, int sign);

/// h with b*h = g, where b's lowest-grade slice is b(lead) at the single
/// index lead. The result has prec min(prec g, prec b) - grade(lead) and is
/// re-verified by multiplication. Throws NotDivisibleError otherwise.
FourierSeries divide_exact(const FourierSeries& g, const FourierSeries& b, EtaIndex lead);

/// Rank over Q of the coefficient vectors (shared weight and prec required).
std::size_t rank_of_span(std::span<const FourierSeries> forms);

/// Basis of { c : sum_i c_i forms[i] = 0 } to the shared precision, in
/// reduced echelon form (each vector has a 1 in its own free coordinate).
std::vector<std::vector<Rational>> relation_nullspace(std::span<const FourierSeries> forms);

}  // namespace siegel
