#pragma once

#include "lefschetz/criteria.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace lefschetz {

// One serialized row per classification.  Keys are snake_case; the schema
// version travels in every row so files stay self-describing.  Exact values
// only: any rational that ever lands in an output is written "num/den".
nlohmann::ordered_json record_to_json(const ClassificationRecord& rec);
ClassificationRecord record_from_json(const nlohmann::ordered_json& j);

std::string csv_header();
std::string record_to_csv(const ClassificationRecord& rec);

}  // namespace lefschetz
