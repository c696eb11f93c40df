#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"

#include "collapse_lab/error.hpp"
#include "collapse_lab/qarith.hpp"

namespace {

using namespace clab;
using clab::cli::Format;
using clab::cli::Json;

constexpr int kOk = 0, kUsage = 1, kMismatch = 2, kTruncated = 3;

struct Caps {
  std::uint64_t group = kDefaultGroupCap;
  std::uint64_t lattice = SearchBounds{}.lattice_cap;
  std::uint64_t pairs = SearchBounds{}.pair_budget;
  std::uint64_t quads = SearchBounds{}.quad_budget;
  unsigned threads = 1;
};

// COLLAPSE_LAB_CAPS="group=200000,lattice=5000,pairs=1e6,quads=1e7,threads=2"
void apply_env_caps(Caps& c) {
  const char* env = std::getenv("COLLAPSE_LAB_CAPS");
  if (!env) return;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("COLLAPSE_LAB_CAPS: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const double v = std::stod(item.substr(eq + 1));
    if (!(v >= 1)) throw InvalidArgument("COLLAPSE_LAB_CAPS: caps must be positive");
    const auto u = static_cast<std::uint64_t>(v);
    if (key == "group") c.group = u;
    else if (key == "lattice") c.lattice = u;
    else if (key == "pairs") c.pairs = u;
    else if (key == "quads") c.quads = u;
    else if (key == "threads") c.threads = static_cast<unsigned>(u);
    else throw InvalidArgument("COLLAPSE_LAB_CAPS: unknown key '" + key + "'");
  }
}

SearchBounds bounds_of(const Caps& c) {
  SearchBounds b;
  b.group_cap = c.group;
  b.lattice_cap = c.lattice;
  b.pair_budget = c.pairs;
  b.quad_budget = c.quads;
  b.threads = c.threads;
  return b;
}

struct ClassOpts {
  int n = 0;
  std::uint64_t q = 0;
  std::string group = "sl";
  bool psl = false;
  std::string poly, matrix;
  std::vector<std::string> checks{"all"};
  bool require_complete = false;
};

bool wants(const ClassOpts& o, const std::string& c) {
  for (const auto& x : o.checks)
    if (x == c || x == "all") return true;
  return false;
}

int run_verify(const std::vector<std::string>& names, const SearchBounds& b, Format fmt) {
  Json doc = Json::array();
  std::vector<Json> rows;
  bool all = true;
  for (const auto& name : names) {
    const PresetReport rep = run_preset(name, b);
    all = all && rep.pass();
    doc.push_back(cli::to_json(rep));
    for (const auto& c : rep.claims)
      rows.push_back(Json{{"preset", rep.name}, {"claim", c.id}, {"pass", c.pass}, {"expected", c.expected},
                          {"observed", c.observed}});
  }
  if (fmt == Format::Text) {
    for (const auto& name : names) {
      for (const auto& r : doc)
        if (r["preset"] == name) {
          std::cout << name << ": " << (r["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
          for (const auto& c : r["claims"])
            std::cout << "  [" << (c["pass"].get<bool>() ? "ok" : "MISMATCH") << "] "
                      << c["claim"].get<std::string>() << ": " << c["observed"].get<std::string>()
                      << (c["pass"].get<bool>() ? "" : " (expected " + c["expected"].get<std::string>() + ")") << '\n';
        }
    }
  } else {
    cli::emit(std::cout, doc.size() == 1 ? doc[0] : doc, rows, fmt);
  }
  return all ? kOk : kMismatch;
}

int run_class(const ClassOpts& o, const SearchBounds& b, Format fmt) {
  const std::string kind = o.psl ? "psl" : o.group;
  if (o.n < 1) throw InvalidArgument("--n must be positive");
  if (o.poly.empty() == o.matrix.empty()) throw InvalidArgument("give exactly one of --poly or --matrix");
  const auto f = Field::of_order(o.q);

  CtxPtr ctx;
  std::vector<Matrix> gens;
  Matrix x;
  if (!o.poly.empty()) {
    if (kind == "sp") throw InvalidArgument("--poly is not supported with --group sp; pass --matrix");
    const Poly chi = poly_parse(*f, o.poly);
    if (chi.degree() != o.n)
      throw InvalidArgument("--poly has degree " + std::to_string(chi.degree()) + ", --n is " + std::to_string(o.n));
    x = semisimple_label(f, chi).representative;
  } else {
    x = parse_matrix(*f, o.matrix, o.n);
  }
  if (kind == "sl" || kind == "psl") {
    if (det(*f, x) != f->one()) throw InvalidArgument("element is not in SL_n(q): determinant is not 1");
    ctx = kind == "sl" ? GroupContext::linear(f, o.n) : GroupContext::projective(f, o.n);
    gens = sl_generators(*f, o.n);
  } else if (kind == "sp") {
    if (o.n % 2) throw InvalidArgument("--group sp needs even --n");
    const Matrix form = sp_preset_form(*f, o.n);
    if (!sp_form_check(*f, x, form)) throw InvalidArgument("element does not preserve the preset symplectic form");
    ctx = GroupContext::linear(f, o.n);
    gens = sp_generators(*f, form);
  } else {
    throw InvalidArgument("--group must be sl, sp or psl");
  }
  x = ctx->canon(x);

  std::shared_ptr<const ConjClass> cls;
  try {
    cls = std::make_shared<const ConjClass>(conj_class(ctx, gens, x, b.group_cap));
  } catch (const CapExceeded& e) {
    std::cerr << "class enumeration truncated: " << e.what() << '\n';
    return kTruncated;
  }
  const Rack rack = Rack::from_class(cls);
  const ClassRef ref(cls);

  Json doc{{"n", o.n},
           {"q", o.q},
           {"group", kind},
           {"representative", format_matrix(x)},
           {"chi", poly_format(*f, char_poly(*f, x))},
           {"class_size", cls->size()},
           {"element_order", ctx->order(x)}};
  Json row = doc;
  bool incomplete = false;

  auto witness_json = [&](const auto& w) {
    Json j = cli::to_json(w);
    j["verified"] = verify_witness(w, ref, b.group_cap);
    return j;
  };
  if (wants(o, "d")) {
    BoundsRecord rec;
    const auto w = check_type_d(rack, b, rec);
    doc["type_d"] = Json{{"witness", w ? witness_json(*w) : Json(nullptr)}, {"bounds", cli::to_json(rec)}};
    row["type_d"] = w ? "found" : (rec.complete() ? "none (complete)" : "none (bounded)");
    incomplete = incomplete || (!w && !rec.complete());
  }
  if (wants(o, "f")) {
    BoundsRecord rec;
    const auto w = check_type_f(rack, b, rec);
    doc["type_f"] = Json{{"witness", w ? witness_json(*w) : Json(nullptr)}, {"bounds", cli::to_json(rec)}};
    row["type_f"] = w ? "found" : (rec.complete() ? "none (complete)" : "none (bounded)");
    incomplete = incomplete || (!w && !rec.complete());
  }
  if (wants(o, "c")) {
    BoundsRecord rec;
    const auto w = check_type_c(rack, b, rec);
    doc["type_c"] = Json{{"witness", w ? witness_json(*w) : Json(nullptr)}, {"bounds", cli::to_json(rec)}};
    row["type_c"] = w ? "found" : (rec.complete() ? "none (complete)" : "none (bounded)");
    incomplete = incomplete || (!w && !rec.complete());
  }
  if (wants(o, "austere")) {
    const AustereReport a = austere_check(rack, b.pair_budget);
    Json j{{"pass", a.pass}, {"complete", a.complete}, {"pairs_checked", a.pairs_checked}};
    if (a.counterexample) {
      j["counterexample"] = Json{{"x", format_matrix(cls->element(a.counterexample->first))},
                                 {"y", format_matrix(cls->element(a.counterexample->second))},
                                 {"subrack_size", a.counterexample_size}};
    }
    doc["austere"] = j;
    row["austere"] = a.pass ? (a.complete ? "pass" : "pass (bounded)") : "fail";
    incomplete = incomplete || !a.complete;
  }
  if (wants(o, "screen")) {
    const QuasiRealData d = quasi_real_data(*cls);
    std::uint64_t torus = 0;
    if (o.n == 2 && d.order > 2 && is_irreducible_elem(*f, x)) torus = (o.q + 1) / (kind == "psl" ? gcd_u64(2, o.q - 1) : 1);
    const ScreenVerdict v = abelian_screen(d, torus);
    doc["screen"] = Json{{"order", d.order},
                         {"real", d.real},
                         {"quasi_real", d.quasi_real()},
                         {"j_witnesses", d.j_witnesses},
                         {"j_squared_escapes", d.j_squared_escapes},
                         {"torus_order", torus},
                         {"verdict", to_string(v)}};
    row["screen"] = to_string(v);
  }
  cli::emit(std::cout, doc, {row}, fmt);
  return incomplete && o.require_complete ? kTruncated : kOk;
}

int run_inventory(int n, std::uint64_t q, const SearchBounds& b, Format fmt) {
  if (n != 2) throw InvalidArgument("inventory supports --n 2 only");
  const ClassInventory inv = psl2_semisimple_inventory(q, b);
  Json rows = Json::array();
  std::vector<Json> flat;
  for (const auto& r : inv.rows) {
    rows.push_back(cli::to_json(r));
    Json f = cli::to_json(r);
    f.erase("witness");
    flat.push_back(std::move(f));
  }
  cli::emit(std::cout, Json{{"n", inv.n}, {"q", inv.q}, {"rows", rows}}, flat, fmt);
  return kOk;
}

int run_tables(const std::string& fixture, const SearchBounds& b, Format fmt) {
  std::ifstream in(fixture);
  if (!in) throw InvalidArgument("cannot open fixture " + fixture);
  const Json expected = Json::parse(in, nullptr, true, /*ignore_comments=*/true);
  std::map<std::string, TableRow> observed;
  for (auto& r : count_vs_verdict_tables(b)) observed.emplace(r.id, r);

  Json doc = Json::array();
  std::vector<Json> rows;
  bool all = true;
  for (const auto& e : expected.at("rows")) {
    const std::string id = e.at("id");
    const auto it = observed.find(id);
    const std::string obs = it == observed.end() ? "missing" : it->second.observed;
    const bool match = obs == e.at("expected").get<std::string>();
    all = all && match;
    Json j{{"id", id},
           {"group", e.at("group")},
           {"class", e.at("class")},
           {"expected", e.at("expected")},
           {"observed", obs},
           {"match", match}};
    doc.push_back(j);
    rows.push_back(j);
  }
  cli::emit(std::cout, Json{{"fixture", fixture}, {"all_match", all}, {"rows", doc}}, rows, fmt);
  return all ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"collapse-lab: rack criteria for conjugacy classes of finite matrix groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Caps caps;
  std::string format = "text";
  try {
    apply_env_caps(caps);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  app.add_option("--cap-group", caps.group, "Largest group or orbit materialized")->check(CLI::PositiveNumber);
  app.add_option("--cap-lattice", caps.lattice, "Largest subgroup lattice explored")->check(CLI::PositiveNumber);
  app.add_option("--cap-pairs", caps.pairs, "Pair budget for type D and odd-order scans")->check(CLI::PositiveNumber);
  app.add_option("--cap-quads", caps.quads, "Quadruple budget for type F")->check(CLI::PositiveNumber);
  app.add_option("--threads", caps.threads, "Worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* verify = app.add_subcommand("verify", "Rebuild a published computation and check every claim");
  std::vector<std::string> presets;
  bool verify_all = false;
  verify->add_option("preset", presets, "Preset names")->check(CLI::IsMember(preset_names()));
  verify->add_flag("--all", verify_all, "Run every preset");

  auto* list = app.add_subcommand("presets", "List preset names");

  auto* cls = app.add_subcommand("class", "Build a class and run criteria checks");
  ClassOpts co;
  cls->add_option("--n", co.n, "Matrix size")->required();
  cls->add_option("--q", co.q, "Field order")->required();
  cls->add_option("--group", co.group, "Ambient group")->check(CLI::IsMember({"sl", "sp", "psl"}));
  cls->add_flag("--psl", co.psl, "Same as --group psl");
  cls->add_option("--poly", co.poly, "Characteristic polynomial, e.g. X^2+3X+1");
  cls->add_option("--matrix", co.matrix, "Matrix rows, e.g. 0,2;1,0");
  cls->add_option("--check", co.checks, "Checks to run")
      ->check(CLI::IsMember({"c", "d", "f", "austere", "screen", "all"}))
      ->delimiter(',');
  cls->add_flag("--require-complete", co.require_complete, "Exit 3 if a negative result is only bounded");

  auto* inv = app.add_subcommand("inventory", "Semisimple classes of PSL_2(q) with verdicts");
  int inv_n = 2;
  std::uint64_t inv_q = 0;
  inv->add_option("--n", inv_n, "Matrix size (2)");
  inv->add_option("--q", inv_q, "Field order")->required();

  auto* tables = app.add_subcommand("tables", "Re-derive desk-scale table rows and diff against the fixture");
  std::string fixture = COLLAPSE_LAB_DEFAULT_FIXTURE;
  tables->add_option("--fixture", fixture, "Expected rows (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  const Format fmt = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  const SearchBounds b = bounds_of(caps);

  try {
    if (*list) {
      for (const auto& n : preset_names()) std::cout << n << '\n';
      return kOk;
    }
    if (*verify) {
      if (verify_all) presets = preset_names();
      if (presets.empty()) throw InvalidArgument("verify: give a preset name or --all");
      return run_verify(presets, b, fmt);
    }
    if (*cls) return run_class(co, b, fmt);
    if (*inv) return run_inventory(inv_n, inv_q, b, fmt);
    if (*tables) return run_tables(fixture, b, fmt);
  } catch (const CapExceeded& e) {
    std::cerr << "truncated: " << e.what() << '\n';
    return kTruncated;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
