#include "siegel/fourier.hpp"

#include "siegel/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace siegel {

IndexSpace::IndexSpace(int prec) : prec_(prec) {
  indices_.push_back(EtaIndex{});
  grade_ends_.push_back(1);
  for (int g = 1; g <= prec; ++g) {
    auto slice = layer(g);
    indices_.insert(indices_.end(), slice.begin(), slice.end());
    grade_ends_.push_back(indices_.size());
  }
  lookup_.reserve(indices_.size());
  for (std::size_t i = 0; i < indices_.size(); ++i) lookup_.emplace(indices_[i], i);

  // Grades add, so for first member i only the prefix of grade <= prec - x_i
  // can pair with it.
  std::vector<std::vector<Pair>> per_target(indices_.size());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    const std::size_t limit = grade_end(prec - static_cast<int>(indices_[i].x));
    for (std::size_t j = 0; j < limit; ++j) {
      const auto pos = lookup_.find(indices_[i] + indices_[j]);
      if (pos == lookup_.end()) continue;
      per_target[pos->second].push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
  }
  pair_offsets_.reserve(indices_.size() + 1);
  pair_offsets_.push_back(0);
  for (auto& v : per_target) {
    pairs_.insert(pairs_.end(), v.begin(), v.end());
    pair_offsets_.push_back(pairs_.size());
  }
}

std::shared_ptr<const IndexSpace> IndexSpace::for_prec(int prec) {
  if (prec < 0) throw std::invalid_argument("IndexSpace: negative precision");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const IndexSpace>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[prec];
  if (!slot) slot = std::shared_ptr<const IndexSpace>(new IndexSpace(prec));
  return slot;
}

std::optional<std::size_t> IndexSpace::position(EtaIndex eta) const {
  const auto it = lookup_.find(eta);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t IndexSpace::grade_end(int g) const {
  if (g < 0) return 0;
  return grade_ends_[static_cast<std::size_t>(std::min(g, prec_))];
}

FourierSeries::FourierSeries(int weight, int prec)
    : weight_(weight), space_(IndexSpace::for_prec(prec)), coeffs_(space_->size(), Rational(0)) {}

FourierSeries FourierSeries::one(int prec) {
  FourierSeries f(0, prec);
  f.coeffs_.front() = 1;
  return f;
}

Rational FourierSeries::coeff(EtaIndex eta) const {
  if (!eta.is_zero() && !is_positive(eta)) return 0;
  if (eta.x > prec())
    throw std::out_of_range("coefficient " + to_string(eta) + " beyond precision " +
                            std::to_string(prec()));
  return coeffs_[*space_->position(eta)];
}

void FourierSeries::set(EtaIndex eta, Rational value) {
  if (!eta.is_zero() && !is_positive(eta))
    throw std::invalid_argument("index not in the closed cone: " + to_string(eta));
  if (eta.x > prec())
    throw std::out_of_range("index " + to_string(eta) + " beyond precision " + std::to_string(prec()));
  coeffs_[*space_->position(eta)] = std::move(value);
}

bool FourierSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<int> FourierSeries::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(space_->at(i).x);
  return std::nullopt;
}

std::vector<std::pair<EtaIndex, Rational>> FourierSeries::terms() const {
  std::vector<std::pair<EtaIndex, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(space_->at(i), coeffs_[i]);
  return out;
}

FourierSeries FourierSeries::truncated(int prec) const {
  if (prec > this->prec())
    throw std::invalid_argument("cannot raise precision from " + std::to_string(this->prec()) +
                                " to " + std::to_string(prec));
  FourierSeries out(weight_, prec);
  std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
  return out;
}

FourierSeries FourierSeries::with_weight(int weight) const {
  FourierSeries out = *this;
  out.weight_ = weight;
  return out;
}

FourierSeries linear_combine(std::span<const Term> terms) {
  if (terms.empty()) throw std::invalid_argument("linear_combine: no terms");
  const int weight = terms.front().series.weight();
  int prec = terms.front().series.prec();
  for (const auto& t : terms) {
    if (t.series.weight() != weight)
      throw std::invalid_argument("linear_combine: mixed weights " + std::to_string(weight) + " and " +
                                  std::to_string(t.series.weight()));
    prec = std::min(prec, t.series.prec());
  }
  FourierSeries out(weight, prec);
  auto& acc = out.dense();
  for (const auto& t : terms) {
    if (t.scalar == 0) continue;
    const auto& src = t.series.dense();
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (src[i] != 0) acc[i] += t.scalar * src[i];
  }
  return out;
}

FourierSeries linear_combine(std::initializer_list<Term> terms) {
  return linear_combine(std::span<const Term>(terms.begin(), terms.size()));
}

FourierSeries scale(const Rational& c, const FourierSeries& f) {
  FourierSeries out = f;
  for (auto& v : out.dense()) v *= c;
  return out;
}

FourierSeries convolve_to(const FourierSeries& f, const FourierSeries& g, int out_prec) {
  FourierSeries out(f.weight() + g.weight(), out_prec);
  const IndexSpace& space = out.space();
  const auto& a = f.dense();
  const auto& b = g.dense();
  auto& c = out.dense();
  Rational prod;
  for (std::size_t t = 0; t < space.size(); ++t) {
    Rational& acc = c[t];
    for (const auto& [i, j] : space.pairs(t)) {
      if (i >= a.size() || j >= b.size()) continue;
      if (sgn(a[i]) == 0 || sgn(b[j]) == 0) continue;
      mpq_mul(prod.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), prod.get_mpq_t());
    }
  }
  return out;
}

FourierSeries multiply(const FourierSeries& f, const FourierSeries& g) {
  return convolve_to(f, g, std::min(f.prec(), g.prec()));
}

FourierSeries power(const FourierSeries& f, unsigned n) {
  FourierSeries out = FourierSeries::one(f.prec());
  for (unsigned i = 0; i < n; ++i) out = multiply(out, f);
  return out;
}

namespace {

// First index (canonical order) where the two dense tables differ.
std::optional<EtaIndex> first_mismatch(const FourierSeries& lhs, const FourierSeries& rhs) {
  const std::size_t n = std::min(lhs.dense().size(), rhs.dense().size());
  for (std::size_t i = 0; i < n; ++i)
    if (lhs.dense()[i] != rhs.dense()[i]) return lhs.space().at(i);
  return std::nullopt;
}

}  // namespace

FourierSeries sqrt_monic(const FourierSeries& g, EtaIndex lead, int sign) {
  if (!is_positive(lead)) throw std::invalid_argument("sqrt_monic: lead must be a cone index");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sqrt_monic: sign must be +1 or -1");
  if (g.weight() % 2 != 0) throw NotSquareError("sqrt_monic: odd weight", EtaIndex{});
  const int lead_grade = static_cast<int>(lead.x);
  const int prec = g.prec();
  if (prec < 2 * lead_grade)
    throw std::invalid_argument("sqrt_monic: precision " + std::to_string(prec) +
                                " does not reach the leading square");
  if (auto ord = g.order(); !ord || *ord < 2 * lead_grade) {
    const EtaIndex where = ord ? g.terms().front().first : EtaIndex{};
    throw NotSquareError("sqrt_monic: series does not vanish below grade " +
                             std::to_string(2 * lead_grade),
                         where);
  }
  if (g.coeff(2 * lead) != 1)
    throw NotSquareError("sqrt_monic: coefficient at " + to_string(2 * lead) + " is not 1", 2 * lead);

  FourierSeries h(g.weight() / 2, prec - lead_grade);
  h.set(lead, sign);
  const IndexSpace& target_space = g.space();
  auto& hc = h.dense();
  const Rational two_sign = 2 * sign;
  Rational prod;
  for (int n = lead_grade + 1; n <= prec - lead_grade; ++n) {
    // Grade n + lead_grade of h*h is 2 sign h(eta - lead) + (terms known so far).
    const std::size_t lo = target_space.grade_end(n + lead_grade - 1);
    const std::size_t hi = target_space.grade_end(n + lead_grade);
    for (std::size_t t = lo; t < hi; ++t) {
      const EtaIndex eta = target_space.at(t);
      Rational residual = g.dense()[t];
      for (const auto& [i, j] : target_space.pairs(t)) {
        if (i >= hc.size() || j >= hc.size() || sgn(hc[i]) == 0 || sgn(hc[j]) == 0) continue;
        mpq_mul(prod.get_mpq_t(), hc[i].get_mpq_t(), hc[j].get_mpq_t());
        residual -= prod;
      }
      const EtaIndex shifted = eta - lead;
      if (is_positive(shifted)) {
        h.set(shifted, residual / two_sign);
      } else if (residual != 0) {
        throw NotSquareError("sqrt_monic: inconsistent coefficient at " + to_string(eta), eta);
      }
    }
  }
  if (auto bad = first_mismatch(convolve_to(h, h, prec), g))
    throw NotSquareError("sqrt_monic: h*h differs from g at " + to_string(*bad), *bad);
  return h;
}

FourierSeries divide_exact(const FourierSeries& g, const FourierSeries& b, EtaIndex lead) {
  if (!is_positive(lead)) throw std::invalid_argument("divide_exact: lead must be a cone index");
  const int lead_grade = static_cast<int>(lead.x);
  const int prec = std::min(g.prec(), b.prec());
  if (prec < lead_grade)
    throw std::invalid_argument("divide_exact: precision below the divisor's leading grade");
  const Rational lead_coeff = b.coeff(lead);
  if (lead_coeff == 0) throw std::invalid_argument("divide_exact: divisor vanishes at " + to_string(lead));
  for (const auto& [eta, c] : b.terms()) {
    if (eta.x > lead_grade) break;
    if (eta != lead)
      throw std::invalid_argument("divide_exact: divisor's leading slice is not concentrated at " +
                                  to_string(lead) + " (nonzero at " + to_string(eta) + ")");
  }

  const FourierSeries num = g.truncated(prec);
  if (auto ord = num.order(); ord && *ord < lead_grade) {
    const EtaIndex where = num.terms().front().first;
    throw NotDivisibleError("divide_exact: dividend is nonzero at " + to_string(where) +
                                " below the divisor's leading grade",
                            where);
  }

  FourierSeries h(g.weight() - b.weight(), prec - lead_grade);
  const IndexSpace& target_space = num.space();
  const auto& bc = b.dense();
  auto& hc = h.dense();
  Rational prod;
  for (int n = 0; n <= prec - lead_grade; ++n) {
    const std::size_t lo = target_space.grade_end(n + lead_grade - 1);
    const std::size_t hi = target_space.grade_end(n + lead_grade);
    for (std::size_t t = lo; t < hi; ++t) {
      const EtaIndex eta = target_space.at(t);
      Rational residual = num.dense()[t];
      for (const auto& [i, j] : target_space.pairs(t)) {
        if (j >= hc.size() || sgn(bc[i]) == 0 || sgn(hc[j]) == 0) continue;
        mpq_mul(prod.get_mpq_t(), bc[i].get_mpq_t(), hc[j].get_mpq_t());
        residual -= prod;
      }
      const EtaIndex shifted = eta - lead;
      if (shifted.is_zero() || is_positive(shifted)) {
        h.set(shifted, residual / lead_coeff);
      } else if (residual != 0) {
        throw NotDivisibleError("divide_exact: nonzero remainder at " + to_string(eta), eta);
      }
    }
  }
  if (auto bad = first_mismatch(convolve_to(b.truncated(prec), h, prec), num))
    throw NotDivisibleError("divide_exact: b*h differs from g at " + to_string(*bad), *bad);
  return h;
}

namespace {

RationalMatrix coefficient_matrix(std::span<const FourierSeries> forms) {
  RationalMatrix m;
  if (forms.empty()) return m;
  const int weight = forms.front().weight();
  const int prec = forms.front().prec();
  for (const auto& f : forms) {
    if (f.weight() != weight) throw std::invalid_argument("span: mixed weights");
    if (f.prec() != prec) throw std::invalid_argument("span: mixed precisions");
    m.push_back(f.dense());
  }
  return m;
}

}  // namespace

std::size_t rank_of_span(std::span<const FourierSeries> forms) {
  return matrix_rank(coefficient_matrix(forms));
}

std::vector<std::vector<Rational>> relation_nullspace(std::span<const FourierSeries> forms) {
  const RationalMatrix rows = coefficient_matrix(forms);
  if (rows.empty()) return {};
  // Transpose: one equation per index, one unknown per form.
  RationalMatrix eqs(rows.front().size(), std::vector<Rational>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) eqs[j][i] = rows[i][j];
  return right_nullspace(std::move(eqs), rows.size());
}

}  // namespace siegel
