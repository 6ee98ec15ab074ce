#include "siegel/expansion_io.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#ifndef SIEGEL_RING_FIXTURE_DIR
#define SIEGEL_RING_FIXTURE_DIR "data/fixtures"
#endif

namespace siegel {

namespace fs = std::filesystem;

namespace {

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

ExpansionRow make_row(EtaIndex eta, std::int64_t m, Rational coeff) {
  if (m != norm_m(eta))
    throw std::invalid_argument("m column " + std::to_string(m) + " does not match index " + to_string(eta));
  return {eta, m, std::move(coeff)};
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ExpansionRecord to_record(std::string form, const FourierSeries& series) {
  ExpansionRecord r;
  r.form = std::move(form);
  r.weight = series.weight();
  r.prec = series.prec();
  for (auto& [eta, c] : series.terms()) r.rows.push_back({eta, norm_m(eta), c});
  return r;
}

FourierSeries to_series(const ExpansionRecord& record) {
  if (!record.prec) throw std::invalid_argument("record '" + record.form + "' carries no precision");
  FourierSeries out(record.weight, *record.prec);
  for (const auto& row : record.rows) out.set(row.eta, row.coeff);
  return out;
}

std::string to_csv(const ExpansionRecord& record) {
  std::ostringstream os;
  os << "# form=" << record.form << '\n' << "# weight=" << record.weight << '\n';
  if (record.prec) os << "# prec=" << *record.prec << '\n';
  if (!record.source.empty()) os << "# source=" << record.source << '\n';
  os << "x,y,z,m,coeff\n";
  for (const auto& row : record.rows)
    os << row.eta.x << ',' << row.eta.y << ',' << row.eta.z << ',' << row.m << ',' << format_rational(row.coeff)
       << '\n';
  return os.str();
}

ExpansionRecord parse_csv(std::string_view text) {
  ExpansionRecord r;
  bool header_seen = false;
  bool weight_seen = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      const std::size_t eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      const std::string_view key = trim(body.substr(0, eq));
      const std::string_view value = trim(body.substr(eq + 1));
      if (key == "form") r.form = value;
      else if (key == "weight") { r.weight = static_cast<int>(parse_int(value, "weight")); weight_seen = true; }
      else if (key == "prec") r.prec = static_cast<int>(parse_int(value, "prec"));
      else if (key == "source") r.source = value;
      continue;
    }
    if (!header_seen) {
      if (line != "x,y,z,m,coeff") throw std::invalid_argument("expected CSV header x,y,z,m,coeff");
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cells.size() != 5) throw std::invalid_argument("expected 5 columns in row: " + std::string(line));
    const EtaIndex eta{parse_int(cells[0], "x"), parse_int(cells[1], "y"), parse_int(cells[2], "z")};
    r.rows.push_back(make_row(eta, parse_int(cells[3], "m"), parse_rational(cells[4])));
  }
  if (!header_seen) throw std::invalid_argument("missing CSV header");
  if (r.form.empty() || !weight_seen) throw std::invalid_argument("missing form or weight metadata");
  return r;
}

nlohmann::ordered_json to_json(const ExpansionRecord& record) {
  nlohmann::ordered_json j;
  j["form"] = record.form;
  j["weight"] = record.weight;
  if (record.prec) j["prec"] = *record.prec;
  if (!record.source.empty()) j["source"] = record.source;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : record.rows)
    rows.push_back({{"x", row.eta.x}, {"y", row.eta.y}, {"z", row.eta.z}, {"m", row.m},
                    {"coeff", format_rational(row.coeff)}});
  j["rows"] = std::move(rows);
  return j;
}

ExpansionRecord from_json(const nlohmann::ordered_json& j) {
  ExpansionRecord r;
  try {
    r.form = j.at("form").get<std::string>();
    r.weight = j.at("weight").get<int>();
    if (j.contains("prec")) r.prec = j.at("prec").get<int>();
    if (j.contains("source")) r.source = j.at("source").get<std::string>();
    for (const auto& row : j.at("rows")) {
      const EtaIndex eta{row.at("x").get<std::int64_t>(), row.at("y").get<std::int64_t>(),
                         row.at("z").get<std::int64_t>()};
      r.rows.push_back(make_row(eta, row.at("m").get<std::int64_t>(),
                                parse_rational(row.at("coeff").get<std::string>())));
    }
  } catch (const nlohmann::ordered_json::exception& err) {
    throw std::invalid_argument(std::string("malformed expansion record: ") + err.what());
  }
  return r;
}

// ---- cache ------------------------------------------------------------------

ExpansionCache::ExpansionCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::string ExpansionCache::file_stem(std::string_view form) {
  std::string out;
  for (char c : form) {
    if (c == '^') out += "pow";
    else if (c == '*') out += "_x_";
    else out += c;
  }
  return out;
}

std::optional<FourierSeries> ExpansionCache::load(std::string_view form, int prec) const {
  const std::string prefix = file_stem(form) + ".p";
  std::optional<int> best;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind(prefix, 0) != 0 || entry.path().extension() != ".json") continue;
    const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 5);
    int p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) continue;
    if (p >= prec && (!best || p < *best)) best = p;
  }
  if (!best) return std::nullopt;
  const fs::path path = dir_ / (prefix + std::to_string(*best) + ".json");
  const ExpansionRecord record = from_json(nlohmann::ordered_json::parse(read_file(path)));
  if (record.form != form) return std::nullopt;
  return to_series(record).truncated(prec);
}

void ExpansionCache::store(std::string_view form, const FourierSeries& series) const {
  static std::atomic<unsigned> counter{0};
  const std::string stem = file_stem(form) + ".p" + std::to_string(series.prec());
  const fs::path target = dir_ / (stem + ".json");
  const fs::path tmp =
      dir_ / (stem + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter.fetch_add(1)));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << to_json(to_record(std::string(form), series)).dump() << '\n';
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::optional<GeneratorSet> ExpansionCache::load_generators(int prec) const {
  std::vector<FourierSeries> found;
  for (const auto& name : generator_names()) {
    auto s = load(name, prec);
    if (!s) return std::nullopt;
    found.push_back(std::move(*s));
  }
  GeneratorSet g{prec, found[0], found[1], found[2],  found[3],  found[4],  found[5],  found[6], found[7],
                 found[8], found[9], found[10], found[11], found[12], found[13], found[14]};
  return g;
}

void ExpansionCache::store_generators(const GeneratorSet& gens) const {
  for (const auto& name : generator_names()) store(name, gens.get(name));
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("SIEGEL_RING_CACHE"); env && *env) return fs::path(env);
  return std::nullopt;
}

std::vector<FixtureTable> load_fixture_tables(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("fixture directory not found: " + dir.string());
  std::vector<FixtureTable> tables;
  std::vector<fs::path> subdirs;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_directory()) subdirs.push_back(e.path());
  std::sort(subdirs.begin(), subdirs.end());
  for (const auto& sub : subdirs) {
    FixtureTable t{sub.filename().string(), {}};
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(sub))
      if (e.path().extension() == ".csv") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) t.records.push_back(parse_csv(read_file(f)));
    tables.push_back(std::move(t));
  }
  return tables;
}

fs::path resolve_fixture_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("SIEGEL_RING_FIXTURES"); env && *env) return fs::path(env);
  return fs::path(SIEGEL_RING_FIXTURE_DIR);
}

}  // namespace siegel
