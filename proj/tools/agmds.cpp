/**************************************************************************
 * Copyright 2026 The agmds Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

// agmds: command-line front end for the MDS code workbench.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "agmds/agmds.hpp"
#include "json.hpp"

namespace {

using namespace agmds;
using Json = nlohmann::ordered_json;

struct Options {
  std::string field;
  std::uint64_t q = 0;
  bool json = false;
  std::string catalog;
  std::optional<std::uint64_t> seed;

  std::string curve;
  std::uint64_t big_n = 0;
  std::uint64_t d1 = 0;
  std::uint64_t d2 = 0;

  std::string recipe;
  std::uint64_t n = 0;
  int m = 0;
  int k = 0;
  std::uint64_t l1 = 0;
  std::uint64_t l2 = 0;
  bool long_variant = false;
  std::uint64_t p = 0;
  int ext = 1;
  std::vector<std::string> alpha;
  std::string eta;
  std::uint64_t attempts = 100'000;
  std::uint64_t budget = kDefaultBudget;

  int s1 = 0;
  int s2 = 0;
  int t = 0;
  std::uint64_t lp = 0;

  std::string matrix_file;
  std::string id;
  std::string format = "matrix-text";
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotMDS:
    case ErrorKind::NotFound:
    case ErrorKind::BudgetExhausted:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::NoCurveFound:
    case ErrorKind::NoAdmissibleCurve:
    case ErrorKind::NoAdmissibleBeta:
    case ErrorKind::NoFullWeightSolution:
    case ErrorKind::SubgroupNotFound:
      return 1;
    default:
      return 2;
  }
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("AGMDS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "AGMDS_SEED must be a non-negative integer");
    }
  }
  return 0;
}

Field resolve_field(const Options& o) {
  if (!o.field.empty()) return Field::parse_spec(o.field);
  if (o.q != 0) return Field::of_order(o.q);
  throw Error(ErrorKind::PreconditionFailed, "a field is required: pass --q or --field");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IOFailure, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string group_text(const std::optional<GroupStructure>& g) {
  if (!g) return "-";
  return "Z/" + std::to_string(g->d1) + " x Z/" + std::to_string(g->d2);
}

void print_report_text(const CodeReport& r) {
  std::cout << "  [n,k,d]     [" << r.n << "," << r.k << "," << (r.d ? std::to_string(*r.d) : "?") << "]\n"
            << "  mds         " << (r.is_mds ? "yes" : "no") << "\n"
            << "  schur dim   " << r.schur_dim << "\n"
            << "  schur d     " << (r.schur_d ? std::to_string(*r.schur_d) : "?") << "\n"
            << "  hull dim    " << r.hull_dim << "\n"
            << "  self-dual   " << (r.self_dual ? "yes" : "no") << "\n"
            << "  non-RS      " << (r.non_rs_certified ? "certified" : "not certified") << "\n";
}

void emit_entry(const Options& o, const CatalogEntry& e) {
  if (!o.catalog.empty()) {
    const bool added = catalog_store(e, o.catalog);
    if (!o.json) std::cerr << (added ? "stored " : "already catalogued ") << e.id << " in " << o.catalog << "\n";
  }
  if (o.json) {
    std::cout << entry_json(e, false).dump(2) << "\n";
    return;
  }
  std::cout << "code " << e.id << "\n"
            << "  recipe      " << e.construction << " (seed " << e.seed << ")\n"
            << "  field       " << e.field << "\n";
  if (!e.curve.empty()) {
    std::cout << "  curve       " << e.curve << "\n"
              << "  N           " << e.n_points << "\n"
              << "  group       " << group_text(e.group) << "\n"
              << "  m           " << e.m << "\n";
  }
  for (const auto& [key, val] : e.params) std::cout << "  param       " << key << "=" << val << "\n";
  print_report_text(e.report);
  for (const auto& row : e.matrix) {
    std::cout << "  row:";
    for (const auto& x : row) std::cout << " " << x;
    std::cout << "\n";
  }
}

int emit_result(const Options& o, const RecipeResult& r, std::uint64_t seed) {
  emit_entry(o, make_entry(r.code, r.report, seed));
  return 0;
}

int cmd_curve_info(const Options& o) {
  const Field f = resolve_field(o);
  const Curve c = Curve::parse(f, o.curve);
  Json j;
  j["field"] = f.spec_text();
  j["curve"] = c.text();
  j["genus"] = c.genus();
  j["N"] = c.point_count();
  if (c.genus() == 1) {
    j["discriminant"] = f.format(c.discriminant());
    const auto g = group_structure(c);
    j["group"] = Json::array({g.d1, g.d2});
  }
  if (o.json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "field         " << f.spec_text() << "\n"
            << "curve         " << c.text() << " (genus " << c.genus() << ")\n"
            << "points        " << c.point_count() << "\n";
  if (c.genus() == 1) {
    std::cout << "discriminant  " << j["discriminant"].get<std::string>() << "\n"
              << "group         " << group_text(group_structure(c)) << "\n";
  }
  return 0;
}

int cmd_tables(const Options& o) {
  const Field f = resolve_field(o);
  const auto [lo, hi] = hasse_window(f.q());
  const auto orders = admissible_orders(f.q());
  Json j;
  j["q"] = f.q();
  j["hasse"] = Json::array({lo, hi});
  j["orders"] = orders;
  Json structures = Json::object();
  for (auto big : orders) {
    if (o.big_n != 0 && big != o.big_n) continue;
    Json list = Json::array();
    for (const auto& g : admissible_structures(f.q(), big)) list.push_back(Json::array({g.d1, g.d2}));
    structures[std::to_string(big)] = list;
  }
  j["structures"] = structures;
  if (o.json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "q = " << f.q() << ", Hasse window [" << lo << ", " << hi << "]\n";
  for (auto& [big, list] : structures.items()) {
    std::cout << "  N = " << big << ":";
    for (const auto& g : list) std::cout << " (" << g[0].get<std::uint64_t>() << "," << g[1].get<std::uint64_t>() << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_build(const Options& o) {
  const std::uint64_t seed = resolve_seed(o);
  const CurveSearchOptions search{std::nullopt, 1'000'000, seed};
  const std::string& r = o.recipe;
  if (r == "coset") {
    return emit_result(o, coset_recipe(resolve_field(o), o.big_n, o.n, o.m, search, o.budget), seed);
  }
  if (r == "cor31" || r == "cor32" || r == "cor33") {
    LengthParams prm;
    prm.l1 = o.l1;
    prm.l2 = o.l2;
    prm.n = o.n;
    prm.m = r == "cor33" ? (o.k ? o.k : o.m) : o.m;
    prm.long_variant = o.long_variant;
    const auto kind = r == "cor31" ? LengthRecipe::Cor31 : r == "cor32" ? LengthRecipe::Cor32 : LengthRecipe::Cor33;
    const Field f = r == "cor33" && o.q == 0 && o.field.empty() ? Field::make(o.p, 1) : resolve_field(o);
    return emit_result(o, length_recipe(kind, f, prm, search, o.budget), seed);
  }
  if (r == "supersingular") {
    return emit_result(o, supersingular_recipe(o.p, o.ext, o.big_n, o.k ? o.k : o.m, o.budget), seed);
  }
  if (r == "twisted-rs" || r == "rs") {
    const Field f = resolve_field(o);
    std::vector<Elem> alpha;
    for (const auto& a : o.alpha) alpha.push_back(f.parse(a));
    const int k = o.k ? o.k : o.m;
    if (r == "rs") {
      auto code = rs_baseline(f, alpha, k);
      const auto report = invariant_report(code, o.budget);
      return emit_result(o, {std::move(code), report}, seed);
    }
    auto tw = twisted_rs(f, alpha, f.parse(o.eta), k, o.budget);
    auto prov = *tw.result.code.provenance();
    prov.params["product_condition"] = tw.product_condition ? "true" : "false";
    prov.params["inverse_product_condition"] = tw.exact_condition ? "true" : "false";
    tw.result.code.set_provenance(std::move(prov));
    return emit_result(o, tw.result, seed);
  }
  if (r == "genus2") {
    const Field f = resolve_field(o);
    const Curve c = Curve::parse(f, o.curve);
    auto res = genus2_search(c, o.n, o.m, seed, o.attempts, o.budget);
    if (!res.result) throw Error(ErrorKind::NotFound, "no MDS subset in " + std::to_string(res.attempts) + " attempts");
    auto prov = *res.result->code.provenance();
    prov.params["counting_bound"] = res.counting_bound_holds ? "true" : "false";
    res.result->code.set_provenance(std::move(prov));
    return emit_result(o, *res.result, seed);
  }
  throw Error(ErrorKind::PreconditionFailed, "unknown recipe '" + r + "'");
}

LinearCode load_code(const Options& o) {
  if (!o.id.empty()) {
    if (o.catalog.empty()) throw Error(ErrorKind::PreconditionFailed, "--id needs --catalog");
    for (const auto& e : catalog_load(o.catalog)) {
      if (e.id != o.id) continue;
      const Field f = Field::parse_spec(e.field);
      std::vector<Vec> rows;
      for (const auto& row : e.matrix) {
        Vec v;
        for (const auto& x : row) v.push_back(f.parse(x));
        rows.push_back(std::move(v));
      }
      return LinearCode(Matrix(f, rows, e.n));
    }
    throw Error(ErrorKind::NotFound, "no catalog entry with id " + o.id);
  }
  if (o.matrix_file.empty()) throw Error(ErrorKind::PreconditionFailed, "pass --matrix <file> or --id <id> --catalog <path>");
  return LinearCode(import_matrix_text(read_file(o.matrix_file)));
}

int cmd_certify(const Options& o) {
  const auto code = load_code(o);
  const auto report = invariant_report(code, o.budget);
  if (o.json) {
    std::cout << report_json(report).dump(2) << "\n";
  } else {
    std::cout << "certificate\n";
    print_report_text(report);
  }
  return report.is_mds ? 0 : 1;
}

int cmd_schur(const Options& o) {
  const auto code = load_code(o);
  const auto sq = schur_square(code);
  const std::size_t k = code.k();
  Json j;
  j["n"] = code.n();
  j["k"] = k;
  j["schur_dim"] = sq.k();
  j["rs_value"] = k ? 2 * k - 1 : 0;
  j["non_rs_certified"] = k > 0 && sq.k() >= 2 * k;
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "schur square of [" << code.n() << "," << k << "]: dim " << sq.k() << " (RS value " << (k ? 2 * k - 1 : 0)
              << ")\n";
    std::cout << export_code(sq);
  }
  return 0;
}

int cmd_selfdual(const Options& o) {
  SelfDualParams prm;
  prm.s1 = o.s1;
  prm.s2 = o.s2;
  prm.t = o.t;
  prm.lp = o.lp;
  prm.seed = resolve_seed(o);
  auto res = selfdual_pipeline(prm, o.budget);
  return emit_result(o, res.result, prm.seed);
}

int cmd_search(const Options& o) {
  const Field f = resolve_field(o);
  CurveSearchOptions opt;
  opt.seed = resolve_seed(o);
  if (o.d1 || o.d2) opt.shape = GroupStructure{o.d1 ? o.d1 : 1, o.d2};
  const Curve c = find_curve_with_order(f, o.big_n, opt);
  const auto g = group_structure(c);
  if (o.json) {
    Json j;
    j["field"] = f.spec_text();
    j["curve"] = c.text();
    j["N"] = c.point_count();
    j["group"] = Json::array({g.d1, g.d2});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << c.text() << "  N=" << c.point_count() << "  " << group_text(g) << "\n";
  }
  return 0;
}

int cmd_catalog(const Options& o) {
  if (o.catalog.empty()) throw Error(ErrorKind::PreconditionFailed, "--catalog <path> is required");
  const auto entries = catalog_load(o.catalog);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& e : entries) arr.push_back(entry_json(e));
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : entries) {
    std::cout << e.id << "  " << e.construction << "  [" << e.n << "," << e.k << ","
              << (e.report.d ? std::to_string(*e.report.d) : "?") << "]  " << e.field << "  " << e.created << "\n";
  }
  return 0;
}

int cmd_export(const Options& o) {
  const auto code = load_code(o);
  if (o.format != "matrix-text" && o.format != "json") throw Error(ErrorKind::PreconditionFailed, "format must be matrix-text or json");
  std::cout << export_code(code, o.format == "json" ? ExportFormat::Json : ExportFormat::MatrixText);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"agmds: algebraic-geometry MDS code workbench"};
  app.require_subcommand(1);
  Options o;

  auto field_opts = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "field order (default modulus)");
    sub->add_option("--field", o.field, "field spec, e.g. 2^4:[1,1,0,0,1]");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit one JSON document");
    sub->add_option("--catalog", o.catalog, "JSON-lines catalog path");
    sub->add_option("--seed", o.seed, "seed (default $AGMDS_SEED, else 0)");
    sub->add_option("--budget", o.budget, "step budget for enumerations");
  };
  auto code_source = [&](CLI::App* sub) {
    sub->add_option("--matrix", o.matrix_file, "matrix-text file");
    sub->add_option("--id", o.id, "catalog entry id");
  };

  auto* curve_info = app.add_subcommand("curve-info", "points, discriminant and group of a curve");
  field_opts(curve_info);
  common(curve_info);
  curve_info->add_option("--curve", o.curve, "g1:a1,a3,a2,a4,a6 or g2:f0,..,f5;h0,..")->required();

  auto* tables = app.add_subcommand("tables", "admissible orders and group structures");
  field_opts(tables);
  common(tables);
  tables->add_option("--N", o.big_n, "restrict structures to one order");

  auto* build = app.add_subcommand("build", "run a construction recipe");
  field_opts(build);
  common(build);
  build->add_option("--recipe", o.recipe, "coset|cor31|cor32|cor33|supersingular|twisted-rs|rs|genus2")->required();
  build->add_option("--N", o.big_n, "point count or subgroup order");
  build->add_option("--n", o.n, "length");
  build->add_option("--m", o.m, "divisor degree");
  build->add_option("--k", o.k, "dimension");
  build->add_option("--l1", o.l1);
  build->add_option("--l2", o.l2);
  build->add_flag("--long", o.long_variant, "cor33: length floor(sqrt p) + 1");
  build->add_option("--p", o.p, "characteristic");
  build->add_option("--ext", o.ext, "extension degree");
  build->add_option("--alpha", o.alpha, "evaluation points")->delimiter(',');
  build->add_option("--eta", o.eta, "twist coefficient");
  build->add_option("--curve", o.curve, "genus-2 curve for the genus2 recipe");
  build->add_option("--attempts", o.attempts, "genus2 sample count");

  auto* certify = app.add_subcommand("certify", "invariant report and MDS verdict");
  common(certify);
  code_source(certify);

  auto* schur = app.add_subcommand("schur", "Schur square of a code");
  common(schur);
  code_source(schur);

  auto* selfdual = app.add_subcommand("selfdual", "self-dual MDS code over F_{2^(s1 s2)}");
  common(selfdual);
  selfdual->add_option("--s1", o.s1)->required();
  selfdual->add_option("--s2", o.s2)->required();
  selfdual->add_option("--t", o.t)->required();
  selfdual->add_option("--Lp", o.lp)->required();

  auto* search = app.add_subcommand("search", "find a curve with N points");
  field_opts(search);
  common(search);
  search->add_option("--N", o.big_n)->required();
  search->add_option("--d1", o.d1);
  search->add_option("--d2", o.d2);

  auto* catalog = app.add_subcommand("catalog", "list catalogued codes");
  common(catalog);

  auto* exp = app.add_subcommand("export", "write a generator matrix");
  common(exp);
  code_source(exp);
  exp->add_option("--format", o.format, "matrix-text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*curve_info) return cmd_curve_info(o);
    if (*tables) return cmd_tables(o);
    if (*build) return cmd_build(o);
    if (*certify) return cmd_certify(o);
    if (*schur) return cmd_schur(o);
    if (*selfdual) return cmd_selfdual(o);
    if (*search) return cmd_search(o);
    if (*catalog) return cmd_catalog(o);
    if (*exp) return cmd_export(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
