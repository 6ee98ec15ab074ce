#include "siegel/ring.hpp"

#include "siegel/diffop.hpp"
#include "siegel/dims.hpp"
#include "siegel/eisenstein.hpp"

#include <charconv>
#include <stdexcept>

namespace siegel {

namespace {

constexpr EtaIndex kLeadA{2, 0, -1};
constexpr EtaIndex kLeadB{2, 1, -1};
constexpr EtaIndex kChi15Anchor{5, 1, -2};

Rational q(std::string_view text) { return parse_rational(text); }

FourierSeries sq(const FourierSeries& f) { return multiply(f, f); }

}  // namespace

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"E2",   "E4",   "E6",    "E8",    "E10",   "phi2",
                                              "phi4", "phi6", "phi8",  "phi10", "chi5a", "chi5b",
                                              "chi15", "delta20a", "delta20b"};
  return names;
}

const FourierSeries& GeneratorSet::get(std::string_view name) const {
  return const_cast<GeneratorSet*>(this)->get(name);
}

FourierSeries& GeneratorSet::get(std::string_view name) {
  if (name == "E2") return e2;
  if (name == "E4") return e4;
  if (name == "E6") return e6;
  if (name == "E8") return e8;
  if (name == "E10") return e10;
  if (name == "phi2") return phi2;
  if (name == "phi4") return phi4;
  if (name == "phi6") return phi6;
  if (name == "phi8") return phi8;
  if (name == "phi10") return phi10;
  if (name == "chi5a") return chi5a;
  if (name == "chi5b") return chi5b;
  if (name == "chi15") return chi15;
  if (name == "delta20a") return delta20a;
  if (name == "delta20b") return delta20b;
  throw std::invalid_argument("unknown form identifier: " + std::string(name));
}

GeneratorSet GeneratorSet::truncated(int p) const {
  GeneratorSet out = *this;
  out.prec = p;
  for (const auto& name : generator_names()) out.get(name) = get(name).truncated(p);
  return out;
}

EisensteinForms build_eisenstein_forms(int prec) {
  const auto e = [prec](int k) { return eisenstein_series({k, 1, 6}, prec); };
  return {e(2), e(4), e(6), e(8), e(10)};
}

PhiForms build_phi_forms(const EisensteinForms& e) {
  const FourierSeries& phi2 = e.e2;
  const FourierSeries phi2_sq = sq(phi2);
  const FourierSeries phi2_cube = multiply(phi2_sq, phi2);
  FourierSeries phi4 = linear_combine({{q("-13/288"), e.e4}, {q("13/288"), phi2_sq}});
  const FourierSeries phi2_phi4 = multiply(phi2, phi4);
  FourierSeries phi6 = linear_combine(
      {{q("-341/113184"), e.e6}, {q("341/113184"), phi2_cube}, {q("-109/262"), phi2_phi4}});
  FourierSeries phi8 = scale(138811, e.e8);
  FourierSeries phi10 = linear_combine({
      {q("31513745731/416023384089600"), e.e10},
      {q("-31513745731/416023384089600"), multiply(phi2_cube, phi2_sq)},
      {q("52522796831/2889051278400"), multiply(phi2_cube, phi4)},
      {q("21884309761/481508546400"), multiply(phi2_sq, phi6)},
      {q("-829232949/1671904675"), multiply(phi2, sq(phi4))},
      {q("318067693/1671904675"), multiply(phi4, phi6)},
  });
  return {phi2, std::move(phi4), std::move(phi6), std::move(phi8), std::move(phi10)};
}

PhiForms build_phi_forms(int prec) {
  if (prec < 4) throw std::invalid_argument("build_phi_forms: precision must be >= 4");
  return build_phi_forms(build_eisenstein_forms(prec));
}

std::pair<FourierSeries, FourierSeries> chi5_squares(const PhiForms& phi) {
  const FourierSeries phi4_phi6 = multiply(phi.phi4, phi.phi6);
  FourierSeries a2 = linear_combine({{1, phi.phi10}, {-1, phi4_phi6}});
  FourierSeries b2 = linear_combine({{1, multiply(phi.phi2, sq(phi.phi4))}, {1, phi4_phi6}, {1, phi.phi10}});
  return {std::move(a2), std::move(b2)};
}

std::pair<FourierSeries, FourierSeries> chi5_from_phi(const PhiForms& phi) {
  auto [a2, b2] = chi5_squares(phi);
  return {sqrt_monic(a2, kLeadA, 1), sqrt_monic(b2, kLeadB, 1)};
}

std::pair<FourierSeries, FourierSeries> build_chi5(int prec) {
  if (prec < 2) throw std::invalid_argument("build_chi5: precision must be >= 2");
  return chi5_from_phi(build_phi_forms(prec + 2));
}

Chi15Result build_chi15(const FourierSeries& e2, const FourierSeries& e4, const FourierSeries& e6,
                        const FourierSeries& chi5a, const FourierSeries& chi5b) {
  FourierSeries d20a = bracket(e2, e4, chi5a, e6);
  FourierSeries d20b = bracket(e2, e4, chi5b, e6);
  const auto normalized = [](const FourierSeries& raw) {
    if (raw.prec() < kChi15Anchor.x) return raw;
    const Rational anchor = raw.coeff(kChi15Anchor);
    if (anchor == 0) throw std::logic_error("chi15: quotient vanishes at (5,1,-2)");
    return scale(1 / anchor, raw);
  };
  try {
    FourierSeries chi15 = normalized(divide_exact(d20a, chi5b, kLeadB));
    FourierSeries companion = normalized(divide_exact(d20b, chi5a, kLeadA));
    return {std::move(chi15), std::move(companion), std::move(d20a), std::move(d20b)};
  } catch (const NotDivisibleError& err) {
    throw std::logic_error(std::string("chi15 construction failed: ") + err.what());
  }
}

GeneratorSet build_generators(int prec) {
  if (prec < 2) throw std::invalid_argument("build_generators: precision must be >= 2");
  const EisensteinForms e = build_eisenstein_forms(prec + 4);
  const PhiForms phi = build_phi_forms(e);
  auto [chi5a, chi5b] = chi5_from_phi(phi);
  const int mid = prec + 2;
  Chi15Result c15 = build_chi15(e.e2.truncated(mid), e.e4.truncated(mid), e.e6.truncated(mid), chi5a, chi5b);
  const auto t = [prec](const FourierSeries& f) { return f.truncated(prec); };
  return GeneratorSet{prec,        t(e.e2),     t(e.e4),     t(e.e6),     t(e.e8),
                      t(e.e10),    t(phi.phi2), t(phi.phi4), t(phi.phi6), t(phi.phi8),
                      t(phi.phi10), t(chi5a),   t(chi5b),    c15.chi15,   t(c15.delta20a),
                      t(c15.delta20b)};
}

// ---- monomials --------------------------------------------------------------

Monomial Monomial::parse(std::string_view text) {
  Monomial m;
  if (text.empty() || text == "1") return m;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('*', start), text.size());
    const std::string_view factor = text.substr(start, end - start);
    const std::size_t caret = factor.find('^');
    const std::string name(factor.substr(0, caret));
    unsigned exponent = 1;
    if (caret != std::string_view::npos) {
      const std::string_view digits = factor.substr(caret + 1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw std::invalid_argument("bad exponent in monomial: " + std::string(text));
    }
    if (name.empty()) throw std::invalid_argument("empty factor in monomial: " + std::string(text));
    bool known = false;
    for (const auto& g : generator_names()) known = known || g == name;
    if (!known) throw std::invalid_argument("unknown form identifier: " + name);
    m.factors.emplace_back(name, exponent);
    start = end + 1;
  }
  return m;
}

std::string Monomial::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [name, e] : factors) {
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

int Monomial::weight(const GeneratorSet& gens) const {
  int w = 0;
  for (const auto& [name, e] : factors) w += gens.get(name).weight() * static_cast<int>(e);
  return w;
}

const FourierSeries& MonomialEvaluator::power_of(const std::string& name, unsigned e) {
  const auto key = std::pair(name, e);
  if (auto it = powers_.find(key); it != powers_.end()) return it->second;
  FourierSeries value = e == 0   ? FourierSeries::one(gens_->prec)
                        : e == 1 ? gens_->get(name)
                                 : multiply(power_of(name, e - 1), gens_->get(name));
  return powers_.emplace(key, std::move(value)).first->second;
}

FourierSeries MonomialEvaluator::operator()(const Monomial& m) {
  FourierSeries out = FourierSeries::one(gens_->prec);
  for (const auto& [name, e] : m.factors) out = multiply(out, power_of(name, e));
  return out;
}

// ---- relations --------------------------------------------------------------

RelationCheck verify_relation(const Relation& relation, const GeneratorSet& gens, MonomialEvaluator* evaluator) {
  MonomialEvaluator local(gens);
  MonomialEvaluator& eval = evaluator ? *evaluator : local;
  const FourierSeries lhs = scale(q(relation.lhs_coefficient), eval(relation.lhs));
  std::vector<Term> terms;
  for (const auto& t : relation.rhs) terms.push_back({q(t.coefficient), eval(t.monomial)});
  const FourierSeries rhs = linear_combine(terms);

  RelationCheck check{relation.name, gens.prec, true, {}};
  if (lhs.weight() != rhs.weight())
    throw std::logic_error("relation '" + relation.name + "' mixes weights");
  for (std::size_t i = 0; i < lhs.dense().size(); ++i) {
    if (lhs.dense()[i] != rhs.dense()[i]) check.mismatches.push_back(lhs.space().at(i));
  }
  check.passed = check.mismatches.empty();
  return check;
}

std::vector<RelationCheck> verify_chi5_square_relations(const GeneratorSet& gens) {
  MonomialEvaluator eval(gens);
  return {verify_relation(chi5a_square_relation(), gens, &eval),
          verify_relation(chi5b_square_relation(), gens, &eval)};
}

std::vector<RelationCheck> verify_higher_relations(const GeneratorSet& gens) {
  MonomialEvaluator eval(gens);
  return {verify_relation(chi5b_quintic_relation(), gens, &eval),
          verify_relation(chi15_square_relation(), gens, &eval), verify_relation(e8_relation(), gens, &eval)};
}

// ---- spans and structure ----------------------------------------------------

const GeneratorSet& GeneratorLibrary::at(int prec) {
  if (auto it = sets_.find(prec); it != sets_.end()) return *it->second;
  std::optional<GeneratorSet> found;
  if (auto above = sets_.lower_bound(prec); above != sets_.end()) found = above->second->truncated(prec);
  if (!found && loader_) found = loader_(prec);
  if (!found) {
    found = build_generators(prec);
    if (saver_) saver_(*found);
  }
  return *sets_.emplace(prec, std::make_unique<GeneratorSet>(std::move(*found))).first->second;
}

Monomial MonomialExponents::to_monomial() const {
  Monomial m;
  const auto add = [&m](const char* name, int e) {
    if (e > 0) m.factors.emplace_back(name, static_cast<unsigned>(e));
  };
  add("E2", e2);
  add("E4", e4);
  add("chi5a", chi5a);
  add("E6", e6);
  add("chi5b", chi5b);
  add("chi15", chi15);
  return m;
}

namespace {

std::vector<MonomialExponents> enumerate_monomials(int weight, int max_chi5b, int max_chi15) {
  std::vector<MonomialExponents> out;
  if (weight < 0) return out;
  for (int d = 0; d <= max_chi15; ++d)
    for (int eps = 0; eps <= max_chi5b; ++eps)
      for (int a = 0; 2 * a <= weight; ++a)
        for (int b = 0; 4 * b <= weight; ++b)
          for (int c = 0; 5 * c <= weight; ++c)
            for (int e6 = 0; 6 * e6 <= weight; ++e6)
              if (2 * a + 4 * b + 5 * c + 6 * e6 + 5 * eps + 15 * d == weight)
                out.push_back({a, b, c, e6, eps, d});
  return out;
}

std::vector<FourierSeries> evaluate_all(const std::vector<MonomialExponents>& monomials, const GeneratorSet& gens,
                                        int weight) {
  MonomialEvaluator eval(gens);
  std::vector<FourierSeries> out;
  for (const auto& m : monomials) out.push_back(eval(m.to_monomial()).with_weight(weight));
  return out;
}

}  // namespace

std::vector<MonomialExponents> basis_monomials(int weight) { return enumerate_monomials(weight, 1, 1); }

std::vector<MonomialExponents> five_generator_monomials(int weight) {
  return enumerate_monomials(weight, weight / 5, 0);
}

std::pair<std::size_t, int> stabilized_rank(
    GeneratorLibrary& library, const std::function<std::vector<FourierSeries>(const GeneratorSet&)>& family,
    std::int64_t expected, RankOptions options) {
  int prec = options.start_prec;
  std::size_t rank = rank_of_span(family(library.at(prec)));
  // Truncation can only lose rank, so escalate while short and still climbing.
  while (static_cast<std::int64_t>(rank) < expected && prec + 2 <= options.max_prec) {
    const std::size_t next = rank_of_span(family(library.at(prec + 2)));
    prec += 2;
    if (next == rank) break;
    rank = next;
  }
  return {rank, prec};
}

MonomialBasisReport monomial_basis(int weight, GeneratorLibrary& library, RankOptions options) {
  MonomialBasisReport report;
  report.weight = weight;
  report.monomials = basis_monomials(weight);
  report.expected = genfun_coeff(weight);
  if (report.monomials.empty()) {
    report.prec = options.start_prec;
    return report;
  }
  const auto family = [&](const GeneratorSet& g) { return evaluate_all(report.monomials, g, weight); };
  std::tie(report.rank, report.prec) = stabilized_rank(library, family, report.expected, options);
  return report;
}

std::vector<SpanClaim> span_claims(GeneratorLibrary& library, RankOptions options) {
  std::vector<SpanClaim> claims;
  const auto products = [](std::vector<std::string> monomials, int weight) {
    return [monomials = std::move(monomials), weight](const GeneratorSet& g) {
      MonomialEvaluator eval(g);
      std::vector<FourierSeries> out;
      for (const auto& m : monomials) out.push_back(eval(m).with_weight(weight));
      return out;
    };
  };
  const auto add_claim = [&](std::string name, const std::function<std::vector<FourierSeries>(const GeneratorSet&)>& base,
                             std::int64_t expected_base,
                             const std::function<std::vector<FourierSeries>(const GeneratorSet&)>& extended,
                             std::int64_t expected_extended) {
    SpanClaim c;
    c.name = std::move(name);
    c.expected_base = expected_base;
    c.expected_extended = expected_extended;
    int prec_base = 0;
    int prec_ext = 0;
    std::tie(c.rank_base, prec_base) = stabilized_rank(library, base, expected_base, options);
    std::tie(c.rank_extended, prec_ext) = stabilized_rank(library, extended, expected_extended, options);
    c.prec = std::max(prec_base, prec_ext);
    claims.push_back(std::move(c));
  };

  const auto w6 = products({"E2^3", "E2*E4", "E6"}, 6);
  add_claim("weight 6: E2^3, E2 E4, E6", w6, 3, w6, 3);
  {
    // Invertibility of the weight-6 matrix on {0, [2,1,-1], [2,0,-1]}.
    SpanClaim c;
    c.name = "weight 6 on grade <= 2";
    const auto forms = w6(library.at(options.start_prec));
    std::vector<FourierSeries> low;
    for (const auto& f : forms) low.push_back(f.truncated(2));
    c.rank_base = c.rank_extended = rank_of_span(low);
    c.expected_base = c.expected_extended = 3;
    c.prec = 2;
    claims.push_back(std::move(c));
  }
  add_claim("weight 8: Eisenstein products (+ E8)", products({"E2^4", "E2^2*E4", "E2*E6", "E4^2"}, 8), 4,
            products({"E2^4", "E2^2*E4", "E2*E6", "E4^2", "E8"}, 8), 4);
  const std::vector<std::string> v10{"E2^5", "E2^3*E4", "E2^2*E6", "E2*E4^2", "E4*E6", "E10"};
  auto v10_ext = v10;
  v10_ext.push_back("chi5a*chi5b");
  add_claim("weight 10: V (+ chi5a chi5b)", products(v10, 10), 6, products(v10_ext, 10), 7);

  const auto five = [](int weight, std::vector<std::string> extra) {
    return [weight, extra = std::move(extra)](const GeneratorSet& g) {
      auto out = evaluate_all(five_generator_monomials(weight), g, weight);
      for (const auto& name : extra) out.push_back(g.get(name).with_weight(weight));
      return out;
    };
  };
  add_claim("weight 15: five-generator products (+ chi15)", five(15, {}), 12, five(15, {"chi15"}), 13);
  add_claim("weight 20: five-generator products (+ delta20a, delta20b)", five(20, {}), 26,
            five(20, {"delta20a", "delta20b"}), 28);
  return claims;
}

bool StructureReport::passed() const {
  for (const auto& w : weights)
    if (!w.matches()) return false;
  for (const auto& c : claims)
    if (!c.passed()) return false;
  return true;
}

StructureReport verify_structure(int k_max, GeneratorLibrary& library, RankOptions options) {
  if (k_max < 0 || k_max > 30) throw std::invalid_argument("verify_structure: k_max must be in [0, 30]");
  StructureReport report;
  for (int k = 0; k <= k_max; ++k) report.weights.push_back(monomial_basis(k, library, options));
  report.claims = span_claims(library, options);
  return report;
}

}  // namespace siegel
