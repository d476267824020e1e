#pragma once

// Named diagram collections (newline-delimited JSON) and table reproduction
// against published values.

#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nullwrithe/diagram.hpp"
#include "nullwrithe/errors.hpp"
#include "nullwrithe/nullification.hpp"
#include "nullwrithe/report.hpp"
#include "nullwrithe/seifert.hpp"

namespace nullwrithe {

struct ExpectedValues {
  int w = 0;
  int w_x = 0;
};

struct CatalogEntry {
  std::string name;
  std::string code;
  Format format = Format::pd_signed;
  std::optional<ExpectedValues> expected;
  std::string source;
  Diagram diagram;
};

/// Parses one record per non-blank line:
///   {"name": "...", "code": "...", "expected": {"w": 0, "w_x": -2},
///    "source": "...", "format": "pd" | "gauss"}
/// `expected`, `source` and `format` are optional. Codes are parsed and their
/// Seifert graphs built, so every returned entry is analyzable.
inline std::vector<CatalogEntry> parse_catalog(std::istream& in, const std::string& origin = "<catalog>") {
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = origin + ":" + std::to_string(line_no) + ": ";

    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw SyntaxError(where + "invalid JSON: " + e.what());
    }
    auto required_string = [&](const char* key) {
      if (!j.is_object() || !j.contains(key) || !j[key].is_string())
        throw SyntaxError(where + "missing string field '" + key + "'");
      return j[key].get<std::string>();
    };
    const std::string name = required_string("name");
    const std::string code = required_string("code");

    Format format = Format::pd_signed;
    if (j.contains("format")) {
      const auto f = j["format"];
      if (f == "gauss" || f == "gauss-signed")
        format = Format::gauss_signed;
      else if (f != "pd" && f != "pd-signed")
        throw SyntaxError(where + "unknown format " + f.dump());
    }

    std::optional<ExpectedValues> expected;
    if (j.contains("expected") && !j["expected"].is_null()) {
      const auto& e = j["expected"];
      if (!e.is_object() || !e.contains("w") || !e.contains("w_x") ||
          !e["w"].is_number_integer() || !e["w_x"].is_number_integer())
        throw SyntaxError(where + "'expected' must be an object with integer 'w' and 'w_x'");
      expected = ExpectedValues{e["w"].get<int>(), e["w_x"].get<int>()};
    }
    std::string source;
    if (j.contains("source") && j["source"].is_string()) source = j["source"].get<std::string>();

    if (!names.insert(name).second) throw DuplicateNameError(where + "duplicate entry name '" + name + "'");

    std::optional<Diagram> diagram;
    try {
      diagram = parse_diagram(code, format);
      (void)build_seifert_graph(*diagram);
    } catch (const Error& e) {
      e.rethrow_with_context(where + "entry '" + name + "': ");
    }
    out.push_back(CatalogEntry{name, code, format, expected, std::move(source), std::move(*diagram)});
  }
  return out;
}

inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open catalog '" + path + "'");
  return parse_catalog(in, path);
}

// ---------------------------------------------------------------------------
// Table reproduction

enum class MatchStatus { exact, mirror, mismatch, computed_only };

inline const char* to_string(MatchStatus s) {
  switch (s) {
    case MatchStatus::exact: return "exact";
    case MatchStatus::mirror: return "mirror";
    case MatchStatus::mismatch: return "mismatch";
    case MatchStatus::computed_only: return "computed-only";
  }
  return "?";
}

struct TableRow {
  std::string name;
  InvariantReport report;
  std::optional<ExpectedValues> expected;
  MatchStatus status = MatchStatus::computed_only;
};

struct TableReport {
  std::vector<TableRow> rows;
  std::size_t exact = 0;
  std::size_t mirror = 0;
  std::size_t mismatch = 0;
  std::size_t computed_only = 0;
};

/// `exact` when (w, w_x) equals the expected pair, `mirror` when it equals
/// its negation (the other enantiomorph), `mismatch` otherwise.
inline MatchStatus classify(const InvariantReport& r, const std::optional<ExpectedValues>& e) {
  if (!e) return MatchStatus::computed_only;
  if (r.w_x == e->w_x && r.w == e->w) return MatchStatus::exact;
  if (r.w_x == -e->w_x && r.w == -e->w) return MatchStatus::mirror;
  return MatchStatus::mismatch;
}

inline TableReport reproduce_table(const std::vector<CatalogEntry>& entries, std::uint64_t seed = 0) {
  TableReport t;
  for (const CatalogEntry& e : entries) {
    TableRow row{e.name, chirality_verdict(e.diagram, seed), e.expected, MatchStatus::computed_only};
    row.status = classify(row.report, e.expected);
    switch (row.status) {
      case MatchStatus::exact: ++t.exact; break;
      case MatchStatus::mirror: ++t.mirror; break;
      case MatchStatus::mismatch: ++t.mismatch; break;
      case MatchStatus::computed_only: ++t.computed_only; break;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline nlohmann::ordered_json to_json(const TableReport& t) {
  auto rows = nlohmann::ordered_json::array();
  for (const TableRow& row : t.rows) {
    nlohmann::ordered_json j;
    j["name"] = row.name;
    const auto report = to_json(row.report);
    for (const auto& item : report.items()) j[item.key()] = item.value();
    j["expected_w"] = row.expected ? nlohmann::ordered_json(row.expected->w) : nlohmann::ordered_json(nullptr);
    j["expected_w_x"] = row.expected ? nlohmann::ordered_json(row.expected->w_x) : nlohmann::ordered_json(nullptr);
    j["status"] = to_string(row.status);
    rows.push_back(std::move(j));
  }
  return rows;
}

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

inline std::string to_csv(const TableReport& t) {
  std::ostringstream os;
  os << "name,n,s,k,c,o,w,w_x,w_y,expected_w_x,status\n";
  for (const TableRow& row : t.rows) {
    const auto& r = row.report;
    os << detail::csv_field(row.name) << ',' << r.n << ',' << r.s << ',' << r.k << ',' << r.c << ','
       << r.o << ',' << r.w << ',' << r.w_x << ',' << r.w_y << ',';
    if (row.expected) os << row.expected->w_x;
    os << ',' << to_string(row.status) << '\n';
  }
  return os.str();
}

inline std::string to_text(const TableReport& t) {
  std::size_t name_width = 4;
  for (const auto& row : t.rows) name_width = std::max(name_width, row.name.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_width)) << "name" << std::right;
  for (const char* h : {"n", "s", "k", "c", "o", "w", "w_x", "w_y", "exp"}) os << std::setw(5) << h;
  os << "  status\n";
  for (const TableRow& row : t.rows) {
    const auto& r = row.report;
    os << std::left << std::setw(static_cast<int>(name_width)) << row.name << std::right;
    for (long v : {long(r.n), long(r.s), long(r.k), long(r.c), long(r.o), long(r.w), long(r.w_x), long(r.w_y)})
      os << std::setw(5) << v;
    os << std::setw(5) << (row.expected ? std::to_string(row.expected->w_x) : std::string("-"));
    os << "  " << to_string(row.status) << '\n';
  }
  os << t.rows.size() << " rows: " << t.exact << " exact, " << t.mirror << " mirror, " << t.mismatch
     << " mismatch, " << t.computed_only << " computed-only\n";
  return os.str();
}

}  // namespace nullwrithe
