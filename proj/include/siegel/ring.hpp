#pragma once

// Generators of the graded ring M_*(Gamma(1,6)) and the checks that tie them
// to the defining relations and dimensions.
//
// Construction pipeline at target precision P:
//   E_k (P + 4) -> phi_k (P + 4) -> chi5a^2, chi5b^2 (P + 4)
//   -> chi5a, chi5b by formal square roots (P + 2)
//   -> delta20a = {E2, E4, chi5a, E6}_* (P + 2) -> chi15 = delta20a / chi5b (P)
// and everything is truncated to P at the end.

#include "siegel/fourier.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace siegel {

struct PhiForms {
  FourierSeries phi2, phi4, phi6, phi8, phi10;
};

struct EisensteinForms {
  FourierSeries e2, e4, e6, e8, e10;
};

struct GeneratorSet {
  int prec;
  FourierSeries e2, e4, e6, e8, e10;
  FourierSeries phi2, phi4, phi6, phi8, phi10;
  FourierSeries chi5a, chi5b;
  FourierSeries chi15;
  FourierSeries delta20a, delta20b;  // raw brackets, unnormalized

  /// Lookup by identifier ("E2", "phi10", "chi5a", "delta20b", ...).
  /// Throws std::invalid_argument for unknown names.
  const FourierSeries& get(std::string_view name) const;
  FourierSeries& get(std::string_view name);

  GeneratorSet truncated(int prec) const;
};

/// Every identifier accepted by GeneratorSet::get, in a fixed order.
const std::vector<std::string>& generator_names();

EisensteinForms build_eisenstein_forms(int prec);

/// phi2 = E2, phi4 = -13/288 (E4 - phi2^2), phi6, phi8 = 138811 E8 and the
/// five-term phi10, all at the precision of the inputs.
PhiForms build_phi_forms(const EisensteinForms& e);
PhiForms build_phi_forms(int prec);

/// chi5a^2 = phi10 - phi4 phi6 and chi5b^2 = phi2 phi4^2 + phi4 phi6 + phi10.
std::pair<FourierSeries, FourierSeries> chi5_squares(const PhiForms& phi);

/// Roots with leads [2,0,-1] and [2,1,-1], both with coefficient +1, at
/// prec(phi) - 2.
std::pair<FourierSeries, FourierSeries> chi5_from_phi(const PhiForms& phi);

/// chi5a, chi5b at the requested precision.
std::pair<FourierSeries, FourierSeries> build_chi5(int prec);

struct Chi15Result {
  FourierSeries chi15;            // normalized so C(5,1,-2) = 1
  FourierSeries chi15_companion;  // delta20b / chi5a, same normalization
  FourierSeries delta20a;
  FourierSeries delta20b;
};

/// Inputs share one precision P; the quotients come out at P - 2 and the
/// brackets at P. Throws std::logic_error if either division fails or the
/// quotient vanishes at (5,1,-2).
Chi15Result build_chi15(const FourierSeries& e2, const FourierSeries& e4, const FourierSeries& e6,
                        const FourierSeries& chi5a, const FourierSeries& chi5b);

GeneratorSet build_generators(int prec);

// ---- monomials and relations ------------------------------------------------

/// Product of generator powers, e.g. "E2^3*E4" or "chi5b*chi15". The empty
/// string and "1" denote the unit.
struct Monomial {
  std::vector<std::pair<std::string, unsigned>> factors;

  static Monomial parse(std::string_view text);
  std::string to_string() const;
  int weight(const GeneratorSet& gens) const;
};

/// Evaluates products with memoized powers of each generator.
class MonomialEvaluator {
 public:
  explicit MonomialEvaluator(const GeneratorSet& gens) : gens_(&gens) {}
  FourierSeries operator()(const Monomial& m);
  FourierSeries operator()(std::string_view text) { return (*this)(Monomial::parse(text)); }

 private:
  const FourierSeries& power_of(const std::string& name, unsigned e);

  const GeneratorSet* gens_;
  std::map<std::pair<std::string, unsigned>, FourierSeries> powers_;
};

struct RelationTerm {
  std::string_view coefficient;  // "num/den"
  std::string_view monomial;
};

/// lhs_coefficient * lhs = sum of rhs terms.
struct Relation {
  std::string name;
  std::string lhs;  // monomial
  std::vector<RelationTerm> rhs;
  std::string_view lhs_coefficient = "1/1";
};

/// The chi15^2 identity holds for the bracket quotient normalized so that
/// C(5,1,-2) = 3621888/4433 (the raw coordinate-determinant quotient divided
/// by -36), not for the unit-normalized chi15. Its relation therefore carries
/// the square of this factor on the left.
Rational chi15_relation_scale();

/// The identities: E8 in weight 8, the two weight-10
/// expansions of chi5a^2 and chi5b^2, the chi5b^2 - chi5a^2 quintic, and
/// chi15^2 as a polynomial in E2, E4, E6, chi5a.
const Relation& e8_relation();
const Relation& chi5a_square_relation();
const Relation& chi5b_square_relation();
const Relation& chi5b_quintic_relation();
const Relation& chi15_square_relation();

struct RelationCheck {
  std::string name;
  int prec = 0;
  bool passed = false;
  std::vector<EtaIndex> mismatches;  // canonical order
};

RelationCheck verify_relation(const Relation& relation, const GeneratorSet& gens,
                              MonomialEvaluator* evaluator = nullptr);

/// chi5a^2 and chi5b^2 against their weight-10 expansions.
std::vector<RelationCheck> verify_chi5_square_relations(const GeneratorSet& gens);

/// The chi5b^2 quintic, the chi15^2 identity and the E8 relation.
std::vector<RelationCheck> verify_higher_relations(const GeneratorSet& gens);

// ---- spans and structure ----------------------------------------------------

/// Shares generator sets across precisions; builds on demand, truncating from
/// the closest larger precision already held. Optional hooks let a caller
/// back this with a persistent store.
class GeneratorLibrary {
 public:
  using Loader = std::function<std::optional<GeneratorSet>(int prec)>;
  using Saver = std::function<void(const GeneratorSet&)>;

  GeneratorLibrary() = default;
  GeneratorLibrary(Loader loader, Saver saver) : loader_(std::move(loader)), saver_(std::move(saver)) {}

  const GeneratorSet& at(int prec);

 private:
  Loader loader_;
  Saver saver_;
  std::map<int, std::unique_ptr<GeneratorSet>> sets_;
};

/// Exponents (a, b, c, d, eps, delta) of E2^a E4^b chi5a^c E6^d chi5b^eps chi15^delta.
struct MonomialExponents {
  int e2, e4, chi5a, e6, chi5b, chi15;
  Monomial to_monomial() const;
};

/// Ring-basis monomials of a weight: eps, delta in {0, 1}.
std::vector<MonomialExponents> basis_monomials(int weight);

/// All products of E2, E4, chi5a, chi5b, E6 of a weight (any chi5b power).
std::vector<MonomialExponents> five_generator_monomials(int weight);

struct MonomialBasisReport {
  int weight = 0;
  std::vector<MonomialExponents> monomials;
  std::size_t rank = 0;
  std::int64_t expected = 0;
  int prec = 0;  // precision at which the rank was taken
  bool matches() const { return static_cast<std::int64_t>(rank) == expected; }
};

struct RankOptions {
  int start_prec = 12;
  int max_prec = 16;
};

/// Rank of a family built from generator sets, escalating precision by 2
/// while the rank is below `expected` and still growing.
std::pair<std::size_t, int> stabilized_rank(
    GeneratorLibrary& library, const std::function<std::vector<FourierSeries>(const GeneratorSet&)>& family,
    std::int64_t expected, RankOptions options = {});

MonomialBasisReport monomial_basis(int weight, GeneratorLibrary& library, RankOptions options = {});

struct SpanClaim {
  std::string name;
  std::size_t rank_base = 0;
  std::int64_t expected_base = 0;
  std::size_t rank_extended = 0;
  std::int64_t expected_extended = 0;
  int prec = 0;
  bool passed() const {
    return static_cast<std::int64_t>(rank_base) == expected_base &&
           static_cast<std::int64_t>(rank_extended) == expected_extended;
  }
};

struct StructureReport {
  std::vector<MonomialBasisReport> weights;  // k = 0..k_max
  std::vector<SpanClaim> claims;
  bool passed() const;
};

/// Spans of the Eisenstein-product spaces and their extensions:
/// weight 6 (3), weight 8 (4), weight 10 V (6) + chi5a chi5b (7),
/// weight 15 five-generator products (12) + chi15 (13),
/// weight 20 five-generator products (26) + delta20a, delta20b (28).
std::vector<SpanClaim> span_claims(GeneratorLibrary& library, RankOptions options = {});

StructureReport verify_structure(int k_max, GeneratorLibrary& library, RankOptions options = {});

}  // namespace siegel
