#pragma once

// Textual expansion records (CSV / JSON), the on-disk expansion cache, and
// golden fixture loading.

#include "siegel/fourier.hpp"
#include "siegel/ring.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace siegel {

struct ExpansionRow {
  EtaIndex eta;
  std::int64_t m = 0;
  Rational coeff;
  bool operator==(const ExpansionRow&) const = default;
};

struct ExpansionRecord {
  std::string form;
  int weight = 0;
  std::optional<int> prec;  // fixtures carry no precision
  std::string source;       // free text, fixtures only
  std::vector<ExpansionRow> rows;
  bool operator==(const ExpansionRecord&) const = default;
};

/// Nonzero coefficients in canonical order.
ExpansionRecord to_record(std::string form, const FourierSeries& series);

/// Requires a precision and rows inside the closed cone up to it.
FourierSeries to_series(const ExpansionRecord& record);

/// "# key=value" header lines, then "x,y,z,m,coeff" with coeff as num/den.
std::string to_csv(const ExpansionRecord& record);
/// Throws std::invalid_argument on malformed input or an m column that does
/// not match the index.
ExpansionRecord parse_csv(std::string_view text);

nlohmann::ordered_json to_json(const ExpansionRecord& record);
ExpansionRecord from_json(const nlohmann::ordered_json& j);

/// One JSON record per (form, prec) in a directory. Lookups are served by the
/// smallest cached precision >= the request, truncated. Writes go to a
/// temporary file renamed into place, so readers never see partial records.
class ExpansionCache {
 public:
  explicit ExpansionCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<FourierSeries> load(std::string_view form, int prec) const;
  void store(std::string_view form, const FourierSeries& series) const;

  std::optional<GeneratorSet> load_generators(int prec) const;
  void store_generators(const GeneratorSet& gens) const;

  static std::string file_stem(std::string_view form);

 private:
  std::filesystem::path dir_;
};

/// --cache-dir value if given, else $SIEGEL_RING_CACHE, else nothing.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

struct FixtureTable {
  std::string name;  // directory name
  std::vector<ExpansionRecord> records;
};

/// Every */*.csv under dir, grouped by subdirectory, sorted by name.
std::vector<FixtureTable> load_fixture_tables(const std::filesystem::path& dir);

/// --fixtures value if given, else $SIEGEL_RING_FIXTURES, else the directory
/// shipped with the sources.
std::filesystem::path resolve_fixture_dir(const std::optional<std::string>& flag);

}  // namespace siegel
