#include "siegel/cli.hpp"

#include "siegel/dims.hpp"
#include "siegel/ring.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace siegel {

namespace {

struct Perturbation {
  std::string form;
  EtaIndex eta;
};

Perturbation parse_perturbation(const std::string& text) {
  const auto at = text.find('@');
  if (at == std::string::npos) throw std::invalid_argument("perturbation must look like FORM@x,y,z: " + text);
  Perturbation p{text.substr(0, at), {}};
  std::int64_t v[3];
  std::size_t pos = at + 1;
  for (int i = 0; i < 3; ++i) {
    const auto end = i < 2 ? text.find(',', pos) : text.size();
    if (end == std::string::npos) throw std::invalid_argument("perturbation index needs three coordinates: " + text);
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v[i]);
    if (ec != std::errc{} || ptr != text.data() + end) throw std::invalid_argument("bad perturbation index: " + text);
    pos = end + 1;
  }
  p.eta = {v[0], v[1], v[2]};
  if (!is_positive(p.eta)) throw std::invalid_argument("perturbation index outside the cone: " + text);
  return p;
}

void apply_perturbations(GeneratorSet& gens, const std::vector<Perturbation>& perturbations) {
  for (const auto& p : perturbations) {
    FourierSeries& f = gens.get(p.form);
    if (p.eta.grade() <= f.prec()) f.set(p.eta, f.coeff(p.eta) + 1);
  }
}

/// Generator sets backed by the optional on-disk cache. Perturbations are
/// applied after loading and never written back.
class Session {
 public:
  explicit Session(const CommonOptions& common) {
    if (auto dir = resolve_cache_dir(common.cache_dir)) cache_.emplace(*dir);
    for (const auto& p : common.perturb) perturbations_.push_back(parse_perturbation(p));
    for (const auto& p : perturbations_) require_generator(p.form);
    library_ = GeneratorLibrary([this](int prec) { return load(prec); }, nullptr);
  }

  GeneratorLibrary& library() { return library_; }
  const std::optional<ExpansionCache>& cache() const { return cache_; }
  bool perturbed() const { return !perturbations_.empty(); }

 private:
  static void require_generator(const std::string& name) {
    const auto& names = generator_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw std::invalid_argument("unknown generator in perturbation: " + name);
  }

  std::optional<GeneratorSet> load(int prec) {
    std::optional<GeneratorSet> gens;
    if (cache_) gens = cache_->load_generators(prec);
    if (!gens) {
      gens = build_generators(prec);
      if (cache_) cache_->store_generators(*gens);
    }
    apply_perturbations(*gens, perturbations_);
    return gens;
  }

  std::optional<ExpansionCache> cache_;
  std::vector<Perturbation> perturbations_;
  GeneratorLibrary library_;
};

std::string located(const std::vector<EtaIndex>& mismatches) {
  std::ostringstream os;
  const std::size_t shown = std::min<std::size_t>(mismatches.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) os << (i ? " " : "") << mismatches[i];
  if (mismatches.size() > shown) os << " ... (" << mismatches.size() << " total)";
  return os.str();
}

void report_line(std::ostream& os, bool ok, const std::string& name, const std::string& detail) {
  os << (ok ? "PASS " : "FAIL ") << name;
  if (!detail.empty()) os << ": " << detail;
  os << '\n';
}

bool verify_tables(Session& session, const CommonOptions& common, int prec, std::ostream& os) {
  const auto tables = load_fixture_tables(resolve_fixture_dir(common.fixtures));
  const GeneratorSet& gens = session.library().at(prec);
  MonomialEvaluator eval(gens);
  bool all = true;
  for (const auto& table : tables) {
    for (const auto& record : table.records) {
      const FourierSeries f = eval(record.form);
      std::vector<EtaIndex> bad;
      std::size_t checked = 0, skipped = 0;
      for (const auto& row : record.rows) {
        if (row.eta.grade() > prec) { ++skipped; continue; }
        ++checked;
        if (f.coeff(row.eta) != row.coeff) bad.push_back(row.eta);
      }
      if (f.weight() != record.weight) all = false;
      const bool ok = bad.empty() && f.weight() == record.weight;
      all = all && ok;
      std::string detail = std::to_string(checked) + " coefficients";
      if (skipped) detail += ", " + std::to_string(skipped) + " beyond prec";
      if (f.weight() != record.weight) detail += ", weight " + std::to_string(f.weight()) + " expected " +
                                                 std::to_string(record.weight);
      if (!bad.empty()) detail += ", mismatch at " + located(bad);
      report_line(os, ok, table.name + "/" + record.form, detail);
    }
  }
  return all;
}

bool verify_relations(Session& session, int prec, std::ostream& os) {
  const GeneratorSet& gens = session.library().at(prec);
  auto checks = verify_chi5_square_relations(gens);
  for (auto& c : verify_higher_relations(gens)) checks.push_back(std::move(c));
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.passed;
    report_line(os, c.passed, c.name,
                "prec " + std::to_string(c.prec) + (c.passed ? "" : ", mismatch at " + located(c.mismatches)));
  }
  return all;
}

bool verify_structure_suite(Session& session, int prec, std::ostream& os) {
  const RankOptions options{prec, std::max(prec, 16)};
  const StructureReport report = verify_structure(20, session.library(), options);
  for (const auto& w : report.weights)
    report_line(os, w.matches(), "weight " + std::to_string(w.weight),
                "rank " + std::to_string(w.rank) + " expected " + std::to_string(w.expected) + " (" +
                    std::to_string(w.monomials.size()) + " monomials, prec " + std::to_string(w.prec) + ")");
  for (const auto& c : report.claims)
    report_line(os, c.passed(), c.name,
                "rank " + std::to_string(c.rank_base) + "/" + std::to_string(c.expected_base) + " then " +
                    std::to_string(c.rank_extended) + "/" + std::to_string(c.expected_extended) + " at prec " +
                    std::to_string(c.prec));
  return report.passed();
}

bool verify_dims(std::ostream& os) {
  bool all = true;
  const std::pair<int, std::int64_t> table[] = {{5, 2},  {6, 2},  {7, 2},   {8, 3},  {9, 4},
                                                {10, 6}, {15, 13}, {20, 27}, {25, 47}};
  for (const auto& [k, expected] : table) {
    const std::int64_t got = dim_cusp(k, 3);
    all = all && got == expected;
    report_line(os, got == expected, "dim S_" + std::to_string(k) + " p=3",
                std::to_string(got) + " expected " + std::to_string(expected));
  }
  const DimensionReport report = dimension_report(3, 0, 100);
  std::vector<int> bad;
  for (const auto& row : report.rows)
    if (!row.match) bad.push_back(row.k);
  std::string detail = "k = 0..100";
  for (int k : bad) detail += " k=" + std::to_string(k);
  report_line(os, bad.empty(), "generating function vs dim M_k", detail);
  return all && bad.empty();
}

bool mentions(const Monomial& m, std::string_view name) {
  return std::any_of(m.factors.begin(), m.factors.end(), [&](const auto& f) { return f.first == name; });
}

}  // namespace

CommandResult cmd_expand(const CommonOptions& common, const std::string& form, int prec, const std::string& format) {
  CommandResult result;
  if (format != "json" && format != "csv") {
    result.exit_code = kExitUsage;
    result.err = "error: unknown format '" + format + "' (json or csv)\n";
    return result;
  }
  if (prec < 4) {
    result.exit_code = kExitUsage;
    result.err = "error: prec must be at least 4\n";
    return result;
  }
  const Monomial monomial = Monomial::parse(form);
  for (const auto& [name, e] : monomial.factors) {
    const auto& names = generator_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      result.exit_code = kExitUsage;
      result.err = "error: unknown form identifier '" + name + "'\n";
      return result;
    }
  }
  if (mentions(monomial, "chi15") && prec < 5) {
    result.exit_code = kExitUsage;
    result.err = "error: prec too small for chi15: its first coefficient sits at grade 5\n";
    return result;
  }

  Session session(common);
  std::optional<FourierSeries> series;
  const bool use_cache = session.cache() && !session.perturbed();
  if (use_cache) series = session.cache()->load(form, prec);
  if (!series) {
    const GeneratorSet& gens = session.library().at(prec);
    MonomialEvaluator eval(gens);
    series = eval(monomial);
    if (use_cache) session.cache()->store(form, *series);
  }
  const ExpansionRecord record = to_record(form, *series);
  result.out = format == "csv" ? to_csv(record) : to_json(record).dump(2) + "\n";
  return result;
}

CommandResult cmd_verify(const CommonOptions& common, const std::string& suite, int prec) {
  CommandResult result;
  if (prec < 4) {
    result.exit_code = kExitUsage;
    result.err = "error: prec must be at least 4\n";
    return result;
  }
  std::ostringstream os;
  bool ok = false;
  if (suite == "dims") {
    ok = verify_dims(os);
  } else {
    Session session(common);
    if (suite == "tables") ok = verify_tables(session, common, prec, os);
    else if (suite == "relations") ok = verify_relations(session, prec, os);
    else if (suite == "structure") ok = verify_structure_suite(session, prec, os);
    else {
      result.exit_code = kExitUsage;
      result.err = "error: unknown suite '" + suite + "' (tables, relations, structure, dims)\n";
      return result;
    }
  }
  os << (ok ? "OK" : "FAILED") << ' ' << suite << '\n';
  result.out = os.str();
  result.exit_code = ok ? kExitOk : kExitFailed;
  return result;
}

CommandResult cmd_dims(int p, int k_from, int k_to, const std::string& format) {
  CommandResult result;
  if (format != "json" && format != "csv") {
    result.exit_code = kExitUsage;
    result.err = "error: unknown format '" + format + "' (json or csv)\n";
    return result;
  }
  if (k_to < k_from) {
    result.exit_code = kExitUsage;
    result.err = "error: --to must not be below --from\n";
    return result;
  }
  const DimensionReport report = dimension_report(p, k_from, k_to);
  if (format == "csv") {
    std::ostringstream os;
    os << "k,dim_cusp,dim_modular\n";
    for (const auto& row : report.rows) {
      os << row.k << ',' << row.dim_cusp << ',';
      if (row.dim_modular) os << *row.dim_modular;
      os << '\n';
    }
    result.out = os.str();
  } else {
    nlohmann::ordered_json j{{"p", report.p}, {"rows", nlohmann::ordered_json::array()}};
    for (const auto& row : report.rows) {
      nlohmann::ordered_json r{{"k", row.k}, {"dim_cusp", row.dim_cusp}};
      if (row.dim_modular) r["dim_modular"] = *row.dim_modular;
      j["rows"].push_back(std::move(r));
    }
    result.out = j.dump(2) + "\n";
  }
  return result;
}

CommandResult run_cli(int argc, const char* const* argv) {
  CLI::App app{"Fourier expansions and ring checks for Siegel modular forms on Gamma(1,6)", "siegel_ring"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string cache_dir, fixtures;
  app.add_option("--cache-dir", cache_dir, "Expansion cache directory (default: $SIEGEL_RING_CACHE)");
  app.add_option("--fixtures", fixtures, "Golden fixture directory (default: $SIEGEL_RING_FIXTURES or bundled)");
  app.add_option("--perturb", common.perturb, "Add 1 to a generator coefficient first, FORM@x,y,z (testing)");

  std::string form, format = "csv", suite;
  int prec = kDefaultPrec, verify_prec = kDefaultPrec, p = 3, k_from = 0, k_to = 30;

  auto* expand = app.add_subcommand("expand", "Print the expansion of a generator or monomial");
  expand->add_option("--form", form, "Identifier such as E2, chi15 or E2^2*chi5a")->required();
  expand->add_option("--prec", prec, "Largest grade x to include")->capture_default_str();
  expand->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "tables, relations, structure or dims")
      ->required()
      ->check(CLI::IsMember({"tables", "relations", "structure", "dims"}));
  verify->add_option("--prec", verify_prec, "Working precision")->capture_default_str();

  auto* dims = app.add_subcommand("dims", "Dimension table for Gamma(1,2p)");
  std::string dims_format = "csv";
  dims->add_option("--p", p, "Odd prime")->capture_default_str();
  dims->add_option("--from", k_from, "First weight")->capture_default_str();
  dims->add_option("--to", k_to, "Last weight")->capture_default_str();
  dims->add_option("--format", dims_format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  CommandResult result;
  std::ostringstream out, err;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    result.out = out.str();
    result.err = err.str();
    return result;
  }
  if (!cache_dir.empty()) common.cache_dir = cache_dir;
  if (!fixtures.empty()) common.fixtures = fixtures;

  try {
    if (expand->parsed()) return cmd_expand(common, form, prec, format);
    if (verify->parsed()) return cmd_verify(common, suite, verify_prec);
    return cmd_dims(p, k_from, k_to, dims_format);
  } catch (const std::invalid_argument& e) {
    result.exit_code = kExitUsage;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = kExitFailed;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace siegel
