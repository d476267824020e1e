#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "nullwrithe/nullification.hpp"

namespace nullwrithe {

/// Flat object: the report fields plus `warnings`.
inline nlohmann::ordered_json to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["s"] = r.s;
  j["k"] = r.k;
  j["c"] = r.c;
  j["o"] = r.o;
  j["w"] = r.w;
  j["w_x"] = r.w_x;
  j["w_y"] = r.w_y;
  j["alternating"] = r.alternating;
  j["reduced"] = r.reduced;
  j["split"] = r.split;
  j["verdict"] = r.verdict.to_string();
  j["warnings"] = r.warnings;
  return j;
}

inline std::string to_text(const InvariantReport& r) {
  std::ostringstream os;
  auto row = [&](const char* key, const auto& value) {
    os << std::left << std::setw(12) << key << value << '\n';
  };
  row("n", r.n);
  row("s", r.s);
  row("k", r.k);
  row("c", r.c);
  row("o", r.o);
  row("w", r.w);
  row("w_x", r.w_x);
  row("w_y", r.w_y);
  row("alternating", r.alternating ? "yes" : "no");
  row("reduced", r.reduced ? "yes" : "no");
  row("split", r.split ? "yes" : "no");
  row("verdict", r.verdict.to_string());
  std::string warnings;
  for (const auto& w : r.warnings) warnings += (warnings.empty() ? "" : ",") + w;
  row("warnings", warnings.empty() ? std::string("-") : warnings);
  return os.str();
}

}  // namespace nullwrithe
