#include "lefschetz/report.hpp"

#include "lefschetz/version.hpp"

#include <sstream>
#include <stdexcept>

namespace lefschetz {

namespace {

Rule rule_from_string(const std::string& s) {
  for (Rule r : {Rule::SUPERSINGULAR_F_EVEN, Rule::DIM_ONE_ELLIPTIC, Rule::CASE_AAB,
                 Rule::CASE_DEGREE_NOT_6, Rule::CASE_2POW_TIMES_3, Rule::GENERAL_CRITERION}) {
    if (to_string(r) == s) return r;
  }
  throw std::invalid_argument("unknown rule string: " + s);
}

}  // namespace

nlohmann::ordered_json record_to_json(const ClassificationRecord& rec) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["engine_version"] = kEngineVersion;
  j["p"] = rec.p;
  j["l"] = rec.l;
  j["f"] = rec.f;
  j["alpha"] = rec.alpha;
  j["h_alpha_size"] = rec.h_alpha_size;
  j["center_degree"] = rec.center_degree;
  if (rec.brauer_order) j["brauer_order"] = *rec.brauer_order;
  if (rec.dimension) j["dimension"] = *rec.dimension;
  j["verdict"] = rec.verdict;
  if (rec.verdict_by_rank) j["verdict_by_rank"] = *rec.verdict_by_rank;
  if (rec.verdict_by_characters) j["verdict_by_characters"] = *rec.verdict_by_characters;
  if (rec.verdict_by_e) j["verdict_by_e"] = *rec.verdict_by_e;
  j["rule"] = to_string(rec.rule);
  j["agreement"] = rec.agreement;
  j["witnesses"] = rec.witnesses;
  return j;
}

ClassificationRecord record_from_json(const nlohmann::ordered_json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw std::invalid_argument("record_from_json: schema version mismatch");
  }
  ClassificationRecord rec;
  rec.p = j.at("p").get<std::int64_t>();
  rec.l = j.at("l").get<std::int64_t>();
  rec.f = j.at("f").get<std::int64_t>();
  const auto arr = j.at("alpha");
  for (int i = 0; i < 3; ++i) rec.alpha[static_cast<std::size_t>(i)] = arr.at(i).get<std::int64_t>();
  rec.h_alpha_size = j.at("h_alpha_size").get<std::int64_t>();
  rec.center_degree = j.at("center_degree").get<std::int64_t>();
  if (j.contains("brauer_order")) rec.brauer_order = j.at("brauer_order").get<std::int64_t>();
  if (j.contains("dimension")) rec.dimension = j.at("dimension").get<std::int64_t>();
  rec.verdict = j.at("verdict").get<bool>();
  if (j.contains("verdict_by_rank")) rec.verdict_by_rank = j.at("verdict_by_rank").get<bool>();
  if (j.contains("verdict_by_characters")) {
    rec.verdict_by_characters = j.at("verdict_by_characters").get<bool>();
  }
  if (j.contains("verdict_by_e")) rec.verdict_by_e = j.at("verdict_by_e").get<bool>();
  rec.rule = rule_from_string(j.at("rule").get<std::string>());
  rec.agreement = j.at("agreement").get<bool>();
  rec.witnesses = j.at("witnesses").get<std::vector<std::int64_t>>();
  return rec;
}

std::string csv_header() {
  return "schema_version,engine_version,p,l,f,alpha,h_alpha_size,center_degree,"
         "brauer_order,dimension,verdict,verdict_by_rank,verdict_by_characters,"
         "verdict_by_e,rule,agreement,witnesses";
}

std::string record_to_csv(const ClassificationRecord& rec) {
  std::ostringstream os;
  auto opt_int = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  auto opt_bool = [](const std::optional<bool>& v) {
    return v ? std::string(*v ? "true" : "false") : std::string();
  };
  os << kSchemaVersion << ',' << kEngineVersion << ',' << rec.p << ',' << rec.l << ',' << rec.f
     << ',' << rec.alpha[0] << ';' << rec.alpha[1] << ';' << rec.alpha[2] << ','
     << rec.h_alpha_size << ',' << rec.center_degree << ',' << opt_int(rec.brauer_order) << ','
     << opt_int(rec.dimension) << ',' << (rec.verdict ? "true" : "false") << ','
     << opt_bool(rec.verdict_by_rank) << ',' << opt_bool(rec.verdict_by_characters) << ','
     << opt_bool(rec.verdict_by_e) << ',' << to_string(rec.rule) << ','
     << (rec.agreement ? "true" : "false") << ',';
  for (std::size_t i = 0; i < rec.witnesses.size(); ++i) {
    if (i) os << ';';
    os << rec.witnesses[i];
  }
  return os.str();
}

}  // namespace lefschetz
