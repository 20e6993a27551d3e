#include "lefschetz/survey.hpp"

#include "lefschetz/report.hpp"
#include "lefschetz/version.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace lefschetz;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct TempPath {
  std::string path;
  explicit TempPath(const std::string& name)
      : path("survey_test_" + name + "_" + std::to_string(::getpid())) {}
  ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE_BEGIN("survey");

TEST_CASE("canonical orbit representatives") {
  CHECK(canonical_alpha(7, {2, 4, 1}) == std::array<std::int64_t, 3>{1, 2, 4});
  CHECK(canonical_alpha(7, {3, 6, 5}) == std::array<std::int64_t, 3>{1, 2, 4});
  CHECK(canonical_alpha(7, {1, 1, 5}) == std::array<std::int64_t, 3>{1, 1, 5});
  CHECK(canonical_alpha(7, {6, 6, 2}) == std::array<std::int64_t, 3>{1, 1, 5});
}

TEST_CASE("triple enumeration sizes") {
  CHECK(enumerate_alpha(3, false).size() == 2);
  CHECK(enumerate_alpha(3, true) ==
        std::vector<std::array<std::int64_t, 3>>{{1, 1, 1}});
  CHECK(enumerate_alpha(7, false).size() == 30);
  CHECK(enumerate_alpha(7, true) ==
        std::vector<std::array<std::int64_t, 3>>{{1, 1, 5}, {1, 2, 4}});

  const std::vector<std::pair<std::int64_t, std::size_t>> counts{
      {5, 1}, {11, 2}, {13, 3}, {17, 3}, {19, 4}, {23, 4}, {29, 5}, {31, 6}};
  for (const auto& [l, n] : counts) {
    CHECK(enumerate_alpha(l, true).size() == n);
    CHECK(enumerate_alpha(l, false).size() ==
          static_cast<std::size_t>((l - 1) * (l - 2)));
  }
}

TEST_CASE("every triple reduces to a listed representative") {
  for (std::int64_t l : {7, 13}) {
    const auto reps = enumerate_alpha(l, true);
    for (const auto& a : enumerate_alpha(l, false)) {
      const auto c = canonical_alpha(l, a);
      CHECK(std::find(reps.begin(), reps.end(), c) != reps.end());
    }
  }
}

TEST_CASE("record serialization round-trips") {
  const auto ctx = build_context(2, 7);
  for (const auto& raw : enumerate_alpha(7, true)) {
    const auto rec = classify(raw, ctx, Mode::CrossValidate);
    CHECK(record_from_json(record_to_json(rec)) == rec);
  }
  const auto ss = classify({1, 1, 3}, build_context(3, 5), Mode::Fast);
  CHECK(record_from_json(record_to_json(ss)) == ss);
}

TEST_CASE("json rows carry the schema header fields") {
  const auto rec = classify({1, 2, 4}, build_context(2, 7), Mode::Fast);
  const auto j = record_to_json(rec);
  CHECK(j.at("schema_version").get<int>() == kSchemaVersion);
  CHECK(j.at("engine_version").get<std::string>() == kEngineVersion);
  CHECK(j.at("rule").get<std::string>() == "DIM_ONE_ELLIPTIC");
}

TEST_CASE("csv header mirrors the json keys") {
  const auto rec = classify({1, 2, 4}, build_context(2, 7), Mode::CrossValidate);
  CHECK(csv_header() ==
        "schema_version,engine_version,p,l,f,alpha,h_alpha_size,center_degree,brauer_order,"
        "dimension,verdict,verdict_by_rank,verdict_by_characters,verdict_by_e,rule,agreement,"
        "witnesses");
  const auto row = record_to_csv(rec);
  CHECK(row.find("1;2;4") != std::string::npos);
  CHECK(row.find("DIM_ONE_ELLIPTIC") != std::string::npos);
}

TEST_CASE("survey over (2,7) deduped") {
  TempPath out("basic.jsonl");
  SurveyConfig config;
  config.p_list = {2};
  config.l_list = {7};
  config.dedupe = true;
  config.out_path = out.path;
  std::ostringstream log;
  const auto summary = run_survey(config, log);
  CHECK(summary.rows == 2);
  CHECK(summary.negatives.empty());
  CHECK(summary.rule_counts.at("CASE_AAB") == 1);
  CHECK(summary.rule_counts.at("DIM_ONE_ELLIPTIC") == 1);

  std::ifstream in(out.path);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    const auto rec = record_from_json(nlohmann::ordered_json::parse(line));
    CHECK(rec.verdict);
    ++rows;
  }
  CHECK(rows == 2);
}

TEST_CASE("identical configs give byte-identical files") {
  for (OutputFormat format : {OutputFormat::Json, OutputFormat::Csv}) {
    TempPath out1("det1"), out2("det2");
    SurveyConfig config;
    config.p_list = {2, 3};
    config.l_list = {7, 13};
    config.dedupe = true;
    config.format = format;
    config.workers = 3;
    std::ostringstream log;
    config.out_path = out1.path;
    run_survey(config, log);
    config.out_path = out2.path;
    config.workers = 1;
    run_survey(config, log);
    CHECK(slurp(out1.path) == slurp(out2.path));
  }
}

TEST_CASE("cache round trip reproduces identical output") {
  TempPath out1("c1"), out2("c2"), cache("cache");
  SurveyConfig config;
  config.p_list = {2};
  config.l_list = {13};
  config.dedupe = true;
  config.cache_path = cache.path;
  std::ostringstream log;

  config.out_path = out1.path;
  const auto cold = run_survey(config, log);
  CHECK(cold.cache_hits == 0);

  config.out_path = out2.path;
  const auto warm = run_survey(config, log);
  CHECK(warm.cache_hits == warm.rows);
  CHECK(slurp(out1.path) == slurp(out2.path));

  // cached records equal fresh ones field by field
  const auto ctx = build_context(2, 13);
  std::ifstream in(out2.path);
  std::string line;
  while (std::getline(in, line)) {
    const auto rec = record_from_json(nlohmann::ordered_json::parse(line));
    CHECK(rec == classify(rec.alpha, ctx, config.mode));
  }
}

TEST_CASE("survey config validation") {
  std::ostringstream log;
  SurveyConfig config;
  config.p_list = {2, 7};
  config.l_list = {7};
  CHECK_THROWS_AS(run_survey(config, log), std::invalid_argument);  // p = l pair
  config.p_list = {4};
  CHECK_THROWS_AS(run_survey(config, log), std::invalid_argument);  // non-prime
  config.p_list = {2};
  config.l_list = {9};
  CHECK_THROWS_AS(run_survey(config, log), std::invalid_argument);  // l not prime
}

TEST_SUITE_END();
