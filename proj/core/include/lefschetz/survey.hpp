#pragma once

#include "lefschetz/criteria.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <map>
#include <string>
#include <vector>

namespace lefschetz {

// Triples are identified up to coordinate permutation and unit scaling; both
// preserve the verdict.  The orbit representative is the lexicographically
// least member.
std::array<std::int64_t, 3> canonical_alpha(std::int64_t l, const std::array<std::int64_t, 3>& a);

// All triples (lexicographic order), or one representative per orbit.
std::vector<std::array<std::int64_t, 3>> enumerate_alpha(std::int64_t l, bool dedupe);

enum class OutputFormat { Json, Csv };

std::optional<OutputFormat> format_from_string(const std::string& s);

struct SurveyConfig {
  std::vector<std::int64_t> p_list;
  std::vector<std::int64_t> l_list;
  Mode mode = Mode::CrossValidate;
  bool dedupe = true;
  std::string out_path;    // empty: no file written
  OutputFormat format = OutputFormat::Json;
  int workers = 1;
  std::string cache_path;  // empty: no cache
  std::uint64_t seed = 0;  // reserved for randomized suites; surveys are deterministic
};

struct SurveySummary {
  std::int64_t rows = 0;
  std::map<std::string, std::int64_t> rule_counts;
  std::vector<ClassificationRecord> negatives;
  std::int64_t cache_hits = 0;
  bool ok = true;  // false only on internal disagreement
};

// Validates the config (all primes, p != l for every pair), enumerates
// triples, classifies each (reusing cache hits when a cache file is given),
// writes the report atomically (temp file then rename), and prints a
// summary.  Identical configs produce byte-identical output files.
SurveySummary run_survey(const SurveyConfig& config, std::ostream& log);

}  // namespace lefschetz
