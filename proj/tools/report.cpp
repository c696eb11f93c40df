#include "report.hpp"

#include <ostream>

namespace clab::cli {

namespace {

Json matrices(const std::vector<Matrix>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(format_matrix(m));
  return a;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const WitnessD& w) {
  return Json{{"type", "D"},
              {"r", format_matrix(w.r)},
              {"s", format_matrix(w.s)},
              {"r_index", w.r_index},
              {"s_index", w.s_index},
              {"subgroup_order", w.subgroup_order},
              {"orbit_r", w.orbit_r},
              {"orbit_s", w.orbit_s}};
}

Json to_json(const WitnessF& w) {
  return Json{{"type", "F"},
              {"r", matrices({w.r.begin(), w.r.end()})},
              {"index", w.index},
              {"subgroup_order", w.subgroup_order},
              {"orbits", w.orbit}};
}

Json to_json(const WitnessC& w) {
  return Json{{"type", "C"},
              {"generators", matrices(w.generators)},
              {"r", format_matrix(w.r)},
              {"s", format_matrix(w.s)},
              {"orbit_r", w.orbit_r},
              {"orbit_s", w.orbit_s},
              {"subgroup_order", w.subgroup_order},
              {"odd_shortcut", w.odd_shortcut}};
}

Json to_json(const BoundsRecord& b) {
  return Json{{"complete", b.complete()},
              {"regime", b.regime()},
              {"pairs_scanned", b.pairs_scanned},
              {"pairs_complete", b.pairs_complete},
              {"quads_scanned", b.quads_scanned},
              {"quads_complete", b.quads_complete},
              {"lattice_used", b.lattice_used},
              {"lattice_nodes", b.lattice_nodes},
              {"lattice_complete", b.lattice_complete},
              {"odd_order_shortcut", b.odd_order_shortcut},
              {"closure_truncated", b.closure_truncated}};
}

Json to_json(const Verdict& v) {
  Json j{{"verdict", to_string(v.tag)}};
  std::visit(
      [&](const auto& w) {
        if constexpr (std::is_same_v<std::decay_t<decltype(w)>, std::monostate>)
          j["witness"] = nullptr;
        else
          j["witness"] = to_json(w);
      },
      v.witness);
  j["bounds"] = to_json(v.bounds);
  return j;
}

Json to_json(const InventoryRow& r) {
  Json j{{"n", r.n},
         {"q", r.q},
         {"chi", r.chi},
         {"irreducible", r.irreducible},
         {"order", r.order},
         {"class_size", r.class_size},
         {"verdict", r.verdict},
         {"witness_ref", r.witness_ref},
         {"case", r.case_tag}};
  std::visit(
      [&](const auto& w) {
        if constexpr (std::is_same_v<std::decay_t<decltype(w)>, std::monostate>)
          j["witness"] = nullptr;
        else
          j["witness"] = to_json(w);
      },
      r.witness);
  return j;
}

Json to_json(const PresetReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims)
    claims.push_back(Json{{"claim", c.id}, {"pass", c.pass}, {"expected", c.expected}, {"observed", c.observed}});
  return Json{{"preset", r.name}, {"pass", r.pass()}, {"claims", claims}};
}

Json to_json(const TableRow& r) {
  return Json{{"id", r.id},         {"group", r.group},       {"class", r.cls},
              {"expected", r.expected}, {"observed", r.observed}, {"match", r.match}};
}

void emit(std::ostream& os, const Json& doc, const std::vector<Json>& rows, Format f) {
  if (f == Format::Json) {
    os << doc.dump(2) << '\n';
    return;
  }
  if (rows.empty()) return;
  if (f == Format::Csv) {
    bool first = true;
    for (const auto& [k, v] : rows.front().items()) {
      os << (first ? "" : ",") << csv_quote(k);
      first = false;
    }
    os << '\n';
    for (const auto& row : rows) {
      first = true;
      for (const auto& [k, v] : row.items()) {
        os << (first ? "" : ",") << csv_quote(cell(v));
        first = false;
      }
      os << '\n';
    }
    return;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << '\n';
    for (const auto& [k, v] : rows[i].items()) os << k << ": " << cell(v) << '\n';
  }
}

}  // namespace clab::cli
