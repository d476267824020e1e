#pragma once

// Command-line front end. `run_cli` is the whole program; tools/nullwrithe.cpp
// only forwards argv and the standard streams to it.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "nullwrithe/catalog.hpp"
#include "nullwrithe/diagram.hpp"
#include "nullwrithe/errors.hpp"
#include "nullwrithe/nullification.hpp"
#include "nullwrithe/report.hpp"
#include "nullwrithe/seifert.hpp"

namespace nullwrithe::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, input_error = 2, io_error = 3 };

enum class Command { analyze, batch, verify, mirror };
enum class Output { json, text, csv };

struct CliConfig {
  Command command = Command::analyze;
  std::optional<std::string> code;  // inline diagram code
  std::optional<std::string> path;  // code file (analyze, mirror) or catalog
  Format format = Format::pd_signed;
  Output output = Output::json;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool dump_seifert = false;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Diagram input_diagram(const CliConfig& cfg) {
  if (cfg.code) return parse_diagram(*cfg.code, cfg.format);
  return parse_diagram(read_file(*cfg.path), cfg.format);
}

struct NamedDiagram {
  std::string name;
  Diagram diagram;
};

inline std::vector<NamedDiagram> input_diagrams(const CliConfig& cfg) {
  std::vector<NamedDiagram> out;
  if (cfg.code) {
    out.push_back(NamedDiagram{"<code>", parse_diagram(*cfg.code, cfg.format)});
  } else {
    for (auto& e : load_catalog(*cfg.path)) out.push_back(NamedDiagram{e.name, std::move(e.diagram)});
  }
  return out;
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline std::string split_text(const WritheSplit& s) {
  return "(w,w_x,w_y)=(" + std::to_string(s.w) + "," + std::to_string(s.w_x) + "," +
         std::to_string(s.w_y) + ")";
}

/// Every applicable verifier on one diagram.
inline std::vector<Check> verify_diagram(const Diagram& d, std::size_t trials, std::uint64_t seed) {
  std::vector<Check> checks;
  const SeifertGraph g = build_seifert_graph(d);
  const std::size_t o = nullification_number(g);
  const std::size_t s = g.vertex_count(), k = g.component_count(), n = g.edge_count();

  {
    bool pass = o == n - s + k && s + o == n + k;
    bool split_ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
      const SpanningForest f = spanning_forest(g, seed + t);
      pass = pass && is_spanning_forest(g, f) && f.size() == s - k && n - f.size() == o;
      const WritheSplit w = writhe_split(g, f);
      split_ok = split_ok && w.w == w.w_x + w.w_y && w.w == writhe(d);
    }
    checks.push_back({"nullification-law", pass,
                      "o=" + std::to_string(o) + " n=" + std::to_string(n) + " s=" + std::to_string(s) +
                          " k=" + std::to_string(k) + " over " + std::to_string(trials) + " forests"});
    checks.push_back({"writhe-split", split_ok, "w = w_x + w_y over " + std::to_string(trials) + " forests"});
  }

  if (!g.from_alternating()) {
    checks.push_back({"alternating", false,
                      "NotAlternating: forest independence and sign structure are only claimed for "
                      "alternating diagrams"});
  } else {
    const SignStructureReport sr = check_sign_structure(g, seed);
    checks.push_back({"sign-structure", sr.ok(),
                      std::to_string(sr.parallel_classes) + " parallel classes, " +
                          std::to_string(sr.fundamental_cycles) + " fundamental cycles; " +
                          std::to_string(sr.mixed_parallel_classes.size() + sr.mixed_cycles.size()) +
                          " mixed"});
    IndependenceOptions opts;
    opts.first_seed = seed;
    const IndependenceResult ir = verify_forest_independence(g, trials, opts);
    std::string detail = ir.exhaustive ? "exhaustive over " + std::to_string(*ir.forest_count) + " forests"
                                       : "sampled " + std::to_string(trials) + " forests";
    detail += "; " + std::to_string(ir.distinct_splits.size()) + " distinct split(s)";
    if (!ir.distinct_splits.empty()) detail += ", first " + split_text(ir.distinct_splits.front());
    checks.push_back({"forest-independence", ir.independent, detail});
  }

  const MirrorCheck mc = verify_mirror_antisymmetry(d, seed);
  checks.push_back({"mirror-antisymmetry", mc.holds,
                    split_text(mc.original) + " vs mirror " + split_text(mc.mirrored)});

  if (k == 1) {
    const bool parity = verify_parity_law(d);
    checks.push_back({"parity-law", parity,
                      "o=" + std::to_string(o) + " c=" + std::to_string(d.component_count())});
  }
  return checks;
}

inline int run_analyze(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const Diagram d = input_diagram(cfg);
  const InvariantReport r = chirality_verdict(d, cfg.seed);
  if (cfg.output == Output::text)
    out << to_text(r);
  else
    out << to_json(r).dump(2) << '\n';
  if (cfg.dump_seifert) err << to_adjacency_text(build_seifert_graph(d));
  return ok;
}

inline int run_batch(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const auto entries = load_catalog(*cfg.path);
  const TableReport t = reproduce_table(entries, cfg.seed);
  switch (cfg.output) {
    case Output::json: out << to_json(t).dump(2) << '\n'; break;
    case Output::text: out << to_text(t); break;
    case Output::csv: out << to_csv(t); break;
  }
  return t.mismatch == 0 ? ok : verification_failed;
}

inline int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto diagrams = input_diagrams(cfg);
  std::size_t total = 0, failed = 0;
  auto report = nlohmann::ordered_json::array();
  for (const auto& [name, d] : diagrams) {
    const auto checks = verify_diagram(d, cfg.trials, cfg.seed);
    nlohmann::ordered_json entry;
    entry["name"] = name;
    entry["checks"] = nlohmann::ordered_json::array();
    if (cfg.output == Output::text) out << "== " << name << " ==\n";
    for (const Check& c : checks) {
      ++total;
      if (!c.pass) {
        ++failed;
        if (c.name == "alternating") err << name << ": " << c.detail << '\n';
      }
      if (cfg.output == Output::text)
        out << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n';
      entry["checks"].push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    report.push_back(std::move(entry));
  }
  if (cfg.output == Output::text)
    out << "summary: " << total << " checks, " << failed << " failed\n";
  else
    out << report.dump(2) << '\n';
  return failed == 0 ? ok : verification_failed;
}

inline int run_mirror(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const Diagram m = mirror(input_diagram(cfg));
  const std::string code = to_string(m, cfg.format);
  if (cfg.output == Output::text) {
    out << code << '\n';
  } else {
    nlohmann::ordered_json j;
    j["code"] = code;
    j["format"] = cfg.format == Format::pd_signed ? "pd" : "gauss";
    j["report"] = to_json(chirality_verdict(m, cfg.seed));
    out << j.dump(2) << '\n';
  }
  return ok;
}

}  // namespace detail

/// Dispatches a parsed configuration, mapping library errors to exit codes.
inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::analyze: return detail::run_analyze(cfg, out, err);
      case Command::batch: return detail::run_batch(cfg, out, err);
      case Command::verify: return detail::run_verify(cfg, out, err);
      case Command::mirror: return detail::run_mirror(cfg, out, err);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return io_error;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nullification writhe and chirality detection for oriented link diagrams", "nullwrithe"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string format = "pd", output = "json";
  std::string code, path;

  const std::map<std::string, std::string> formats{
      {"pd", "pd"}, {"pd-signed", "pd"}, {"gauss", "gauss"}, {"gauss-signed", "gauss"}};

  auto common = [&](CLI::App* sub, bool catalog, bool allow_code, const std::vector<std::string>& outputs) {
    CLI::Option* code_opt = nullptr;
    if (allow_code) code_opt = sub->add_option("--code", code, "Diagram code given inline");
    auto* file_opt = sub->add_option("--file", path, catalog ? "Catalog file (newline-delimited JSON)"
                                                             : "File holding a diagram code");
    if (catalog) {
      auto* pos = sub->add_option("catalog", path, "Catalog file (newline-delimited JSON)");
      pos->excludes(file_opt);
      if (code_opt) pos->excludes(code_opt);
    }
    if (code_opt) code_opt->excludes(file_opt);
    sub->add_option("--format", format, "Code format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description("{pd,gauss}"));
    sub->add_option("--output", output, "Output format")->check(CLI::IsMember(outputs));
    sub->add_option("--seed", cfg.seed, "Seed for spanning-forest selection");
  };

  auto* analyze = app.add_subcommand("analyze", "Compute the invariant report of one diagram");
  common(analyze, false, true, {"json", "text"});
  analyze->add_flag("--dump-seifert", cfg.dump_seifert, "Print the Seifert graph (u v sign) to stderr");

  auto* batch = app.add_subcommand("batch", "Reproduce a table of published values from a catalog");
  common(batch, true, false, {"json", "text", "csv"});

  auto* verify = app.add_subcommand("verify", "Run the verification suite on a catalog or one code");
  common(verify, true, true, {"json", "text"});
  verify->add_option("--trials", cfg.trials, "Seeded forests per diagram")->check(CLI::PositiveNumber);

  auto* mirror_cmd = app.add_subcommand("mirror", "Print the mirror image of a diagram");
  common(mirror_cmd, false, true, {"json", "text"});

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e, out, err);
    return code_ == 0 ? ok : input_error;
  }

  if (analyze->parsed()) cfg.command = Command::analyze;
  if (batch->parsed()) cfg.command = Command::batch;
  if (verify->parsed()) cfg.command = Command::verify;
  if (mirror_cmd->parsed()) cfg.command = Command::mirror;

  cfg.format = format == "gauss" ? Format::gauss_signed : Format::pd_signed;
  cfg.output = output == "text" ? Output::text : output == "csv" ? Output::csv : Output::json;
  if (!code.empty()) cfg.code = code;
  if (!path.empty()) cfg.path = path;
  if (!cfg.code && !cfg.path) {
    err << "error: no input; give --code, --file"
        << (cfg.command == Command::batch || cfg.command == Command::verify ? " or a catalog path" : "")
        << '\n';
    return input_error;
  }
  return run(cfg, out, err);
}

/// argv-style entry; argv[0] is skipped.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace nullwrithe::cli
