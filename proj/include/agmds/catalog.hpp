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

#pragma once

// Catalog entries, JSON-lines persistence and bit-exact matrix export.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "agmds/code.hpp"
#include "agmds/constructions.hpp"
#include "agmds/curve.hpp"
#include "agmds/errors.hpp"
#include "agmds/field.hpp"

namespace agmds {

struct CatalogEntry {
  std::string id;
  std::string field;
  std::string curve;  // empty for codes without a curve
  std::uint64_t n_points = 0;
  std::optional<GroupStructure> group;
  std::string construction;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  int m = 0;
  CodeReport report;
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> matrix;
  std::string created;

  friend bool operator==(const CatalogEntry& a, const CatalogEntry& b) {
    auto tie = [](const CatalogEntry& e) {
      return std::tie(e.id, e.field, e.curve, e.n_points, e.construction, e.params, e.seed, e.n, e.k, e.m, e.report,
                      e.points, e.matrix, e.created);
    };
    const bool groups = a.group.has_value() == b.group.has_value() &&
                        (!a.group || (a.group->d1 == b.group->d1 && a.group->d2 == b.group->d2));
    return groups && tie(a) == tie(b);
  }
};

inline nlohmann::ordered_json report_json(const CodeReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d ? nlohmann::ordered_json(*r.d) : nlohmann::ordered_json(nullptr);
  j["is_mds"] = r.is_mds;
  j["schur_dim"] = r.schur_dim;
  j["schur_d"] = r.schur_d ? nlohmann::ordered_json(*r.schur_d) : nlohmann::ordered_json(nullptr);
  j["hull_dim"] = r.hull_dim;
  j["self_dual"] = r.self_dual;
  j["non_rs_certified"] = r.non_rs_certified;
  return j;
}

inline CodeReport report_from_json(const nlohmann::json& j) {
  CodeReport r;
  r.n = j.at("n").get<std::size_t>();
  r.k = j.at("k").get<std::size_t>();
  if (!j.at("d").is_null()) r.d = j.at("d").get<std::uint64_t>();
  r.is_mds = j.at("is_mds").get<bool>();
  r.schur_dim = j.at("schur_dim").get<std::size_t>();
  if (!j.at("schur_d").is_null()) r.schur_d = j.at("schur_d").get<std::uint64_t>();
  r.hull_dim = j.at("hull_dim").get<std::size_t>();
  r.self_dual = j.at("self_dual").get<bool>();
  r.non_rs_certified = j.at("non_rs_certified").get<bool>();
  return r;
}

/// Every field except id and created, in a fixed key order.
inline nlohmann::ordered_json entry_body_json(const CatalogEntry& e) {
  nlohmann::ordered_json j;
  j["field"] = e.field;
  j["curve"] = e.curve;
  j["N"] = e.n_points;
  j["group"] = e.group ? nlohmann::ordered_json::array({e.group->d1, e.group->d2}) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json c;
  c["name"] = e.construction;
  c["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, val] : e.params) c["params"][key] = val;
  c["seed"] = e.seed;
  j["construction"] = c;
  j["n"] = e.n;
  j["k"] = e.k;
  j["m"] = e.m;
  j["report"] = report_json(e.report);
  j["points"] = e.points;
  j["matrix"] = e.matrix;
  return j;
}

/// FNV-1a 64 over the canonical body, as 16 hex digits.
inline std::string entry_id(const CatalogEntry& e) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : entry_body_json(e).dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

inline nlohmann::ordered_json entry_json(const CatalogEntry& e, bool with_created = true) {
  nlohmann::ordered_json j;
  j["id"] = e.id;
  const auto body = entry_body_json(e);
  for (const auto& [key, val] : body.items()) j[key] = val;
  if (with_created) j["created"] = e.created;
  return j;
}

inline CatalogEntry entry_from_json(const nlohmann::json& j) {
  CatalogEntry e;
  e.id = j.at("id").get<std::string>();
  e.field = j.at("field").get<std::string>();
  e.curve = j.at("curve").get<std::string>();
  e.n_points = j.at("N").get<std::uint64_t>();
  if (!j.at("group").is_null()) e.group = GroupStructure{j.at("group").at(0).get<std::uint64_t>(), j.at("group").at(1).get<std::uint64_t>()};
  const auto& c = j.at("construction");
  e.construction = c.at("name").get<std::string>();
  e.params = c.at("params").get<std::map<std::string, std::string>>();
  e.seed = c.at("seed").get<std::uint64_t>();
  e.n = j.at("n").get<std::size_t>();
  e.k = j.at("k").get<std::size_t>();
  e.m = j.at("m").get<int>();
  e.report = report_from_json(j.at("report"));
  e.points = j.at("points").get<std::vector<std::string>>();
  e.matrix = j.at("matrix").get<std::vector<std::vector<std::string>>>();
  e.created = j.value("created", std::string{});
  return e;
}

inline std::string iso8601_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline CatalogEntry make_entry(const LinearCode& code, const CodeReport& report, std::uint64_t seed) {
  CatalogEntry e;
  const Field& f = code.field();
  e.field = f.spec_text();
  if (const auto& prov = code.provenance()) {
    e.construction = prov->construction;
    e.params = prov->params;
    e.m = prov->m;
    for (const auto& p : prov->points) e.points.push_back(format_point(f, p));
    if (prov->curve) {
      e.curve = prov->curve->text();
      if (prov->curve->genus() == 1) {
        const PointGroup g(*prov->curve);
        e.n_points = g.size();
        e.group = g.structure();
      } else {
        e.n_points = prov->curve->point_count();
      }
    }
  }
  e.seed = seed;
  e.n = code.n();
  e.k = code.k();
  e.report = report;
  for (std::size_t r = 0; r < code.k(); ++r) {
    std::vector<std::string> row;
    for (auto x : code.generator().row(r)) row.push_back(f.format(x));
    e.matrix.push_back(std::move(row));
  }
  e.id = entry_id(e);
  e.created = iso8601_now();
  return e;
}

/// Reads every well-formed line; malformed lines are reported on stderr.
inline std::vector<CatalogEntry> catalog_load(const std::string& path) {
  std::vector<CatalogEntry> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    try {
      out.push_back(entry_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& ex) {
      std::cerr << "warning: " << path << ":" << lineno << ": skipping unreadable catalog line (" << ex.what() << ")\n";
    }
  }
  return out;
}

/// Appends the entry unless its id is already present. Returns true on append.
inline bool catalog_store(const CatalogEntry& entry, const std::string& path) {
  for (const auto& e : catalog_load(path)) {
    if (e.id == entry.id) return false;
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorKind::IOFailure, "cannot open " + path + " for appending");
  out << entry_json(entry).dump() << '\n';
  out.flush();
  if (!out) throw Error(ErrorKind::IOFailure, "write to " + path + " failed");
  return true;
}

enum class ExportFormat { MatrixText, Json };

inline std::string export_code(const Matrix& g, ExportFormat fmt = ExportFormat::MatrixText) {
  const Field& f = g.field();
  if (fmt == ExportFormat::Json) {
    nlohmann::ordered_json j;
    j["field"] = f.spec_text();
    j["n"] = g.cols();
    j["k"] = g.rows();
    j["rows"] = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      auto row = nlohmann::ordered_json::array();
      for (auto x : g.row(r)) row.push_back(f.format(x));
      j["rows"].push_back(row);
    }
    return j.dump() + "\n";
  }
  std::string s = "field " + f.spec_text() + "\n";
  s += "n " + std::to_string(g.cols()) + " k " + std::to_string(g.rows()) + "\n";
  for (std::size_t r = 0; r < g.rows(); ++r) {
    s += "row:";
    for (auto x : g.row(r)) s += " " + f.format(x);
    s += "\n";
  }
  return s;
}

inline std::string export_code(const LinearCode& code, ExportFormat fmt = ExportFormat::MatrixText) {
  return export_code(code.generator(), fmt);
}

/// Inverse of the matrix-text export.
inline Matrix import_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto fail = [](const std::string& why) { return Error(ErrorKind::ParseError, why); };
  if (!std::getline(in, line) || line.rfind("field ", 0) != 0) throw fail("expected 'field <spec>'");
  const Field f = Field::parse_spec(line.substr(6));
  if (!std::getline(in, line)) throw fail("expected 'n <n> k <k>'");
  std::istringstream hdr(line);
  std::string tn, tk;
  std::size_t n = 0, k = 0;
  if (!(hdr >> tn >> n >> tk >> k) || tn != "n" || tk != "k") throw fail("expected 'n <n> k <k>'");
  Matrix g(f, 0, n);
  for (std::size_t r = 0; r < k; ++r) {
    if (!std::getline(in, line) || line.rfind("row:", 0) != 0) throw fail("expected 'row:' line " + std::to_string(r + 1));
    std::istringstream row(line.substr(4));
    Vec v;
    std::string tok;
    while (row >> tok) v.push_back(f.parse(tok));
    if (v.size() != n) throw fail("row " + std::to_string(r + 1) + " has " + std::to_string(v.size()) + " entries");
    g.append_row(v);
  }
  return g;
}

}  // namespace agmds
