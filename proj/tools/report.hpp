#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "collapse_lab/criteria.hpp"
#include "collapse_lab/presets.hpp"
#include "collapse_lab/ssclass.hpp"

namespace clab::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

Json to_json(const WitnessD& w);
Json to_json(const WitnessF& w);
Json to_json(const WitnessC& w);
Json to_json(const BoundsRecord& b);
Json to_json(const Verdict& v);
Json to_json(const InventoryRow& r);
Json to_json(const PresetReport& r);
Json to_json(const TableRow& r);

// json: the document as is. csv and text: one record per element of `rows`,
// scalar fields only; nested values are written as compact JSON.
void emit(std::ostream& os, const Json& doc, const std::vector<Json>& rows, Format f);

}  // namespace clab::cli
