#pragma once

// Command-line front end: verify / build-s / solve-r / check-theorem.
// Exit codes: 0 pass, 1 mismatch, 2 usage, 3 I/O.

#include "tetra/intertwiner.hpp"
#include "tetra/reduction.hpp"
#include "tetra/report.hpp"
#include "tetra/threedr.hpp"
#include "tetra/uqalg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tetra::cli {

enum Exit { kPass = 0, kMismatch = 1, kUsage = 2, kIO = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string algebra = "d2";
  int n = 1;
  int s = 1, t = 1;
  bool st_given = false;
  int degree = 2;
  int zmax = 6;
  std::string out;
  int jobs = 1;
  std::string golden;
  bool bless = false;
  bool gauged = false;

  Algebra alg() const { return {parse_algebra(algebra), n}; }

  void validate() const {
    if (n < 1) throw UsageError("--n must be at least 1");
    if (degree < 0 || zmax < 0) throw UsageError("--degree and --zmax must be non-negative");
    if (jobs < 1) throw UsageError("--jobs must be at least 1");
    if (s < 1 || s > 2 || t < 1 || t > 2) throw UsageError("(s,t) must be one of (1,1), (1,2), (2,1), (2,2)");
    try {
      parse_algebra(algebra);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  // (s,t) must be the pair that corresponds to the algebra.
  void validate_pairing() const {
    if (!st_given) return;
    auto [ms, mt] = matching_st(parse_algebra(algebra));
    if (s != ms || t != mt)
      throw UsageError("algebra " + algebra + " corresponds to (s,t) = (" + std::to_string(ms) + "," +
                       std::to_string(mt) + ")");
  }
};

inline nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IOError(path + ": " + e.what());
  }
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw IOError("cannot write " + path);
}

/// Compare (or with bless, replace) <golden>/<name> against text. Returns
/// true on a match.
inline bool golden_check(const RunConfig& cfg, const std::string& name, const std::string& text, std::ostream& err) {
  if (cfg.golden.empty()) return true;
  auto path = (std::filesystem::path(cfg.golden) / name).string();
  if (cfg.bless) {
    write_file(path, text);
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("missing golden file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (buf.str() == text) return true;
  bool same = false;
  try {
    same = nlohmann::json::parse(buf.str()) == nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IOError(path + ": " + e.what());
  }
  if (!same) err << "golden mismatch: " << path << "\n";
  return same;
}

// Output for one JSON document: --out file or stdout.
inline void emit(const RunConfig& cfg, const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) out << text;
  else write_file(path, text);
  (void)cfg;
}

inline std::string failure_line(const Failure& f) {
  std::vector<std::string> t;
  for (int x : f.tuple) t.push_back(std::to_string(x));
  return join_strings(t) + ": " + f.lhs + " != " + f.rhs;
}

inline int finish_report(const RunConfig& cfg, const Report& rep, std::ostream& out, std::ostream& err) {
  out << rep.target << ": " << rep.checked << " checked, " << rep.failures.size() << " failed -> "
      << (rep.passed() ? "PASS" : "FAIL") << "\n";
  if (!rep.passed()) err << "first failure " << failure_line(rep.failures.front()) << "\n";
  std::string text = dump(to_json(rep));
  if (!cfg.out.empty()) write_file(cfg.out, text);
  bool golden = golden_check(cfg, rep.target + ".json", text, err);
  return rep.passed() && golden ? kPass : kMismatch;
}

inline Report run_verify(const std::string& target, const RunConfig& cfg, bool s_given) {
  if (target == "tetrahedron") return verify_tetrahedron(cfg.degree, cfg.jobs);
  if (target == "weight-symmetry") return verify_weight_symmetry(cfg.degree);
  if (target == "boundary") {
    Report rep;
    rep.target = "boundary";
    std::vector<int> ss = s_given ? std::vector<int>{cfg.s} : std::vector<int>{1, 2};
    for (int s : ss)
      for (auto side : {BoundarySide::Bra, BoundarySide::Ket}) rep.merge(verify_boundary_eigenrelation(s, side, cfg.degree));
    return rep;
  }
  if (target == "relations") return verify_relations(cfg.alg(), cfg.degree);
  if (target == "sybe") return verify_sybe(cfg.s, cfg.t, cfg.n, cfg.degree, cfg.zmax, cfg.jobs);
  if (target == "s21") return verify_s21(cfg.n, cfg.degree, cfg.zmax);
  if (target == "yber") return verify_yber(cfg.alg(), cfg.degree, cfg.zmax, cfg.gauged, cfg.jobs);
  if (target == "w-recursions") return verify_w_recursions(cfg.alg(), cfg.degree);
  throw UsageError("unknown verify target '" + target + "'");
}

inline int cmd_build_s(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_st(cfg.s, cfg.t);
  SMatrix S = build_s_matrix(cfg.s, cfg.t, cfg.n, cfg.degree, cfg.zmax, cfg.jobs);
  bool ok = true;
  if (cfg.s == 2 && cfg.t == 2) {
    if (cfg.out.empty()) throw UsageError("build-s with (s,t) = (2,2) needs --out (one file per sector)");
    auto base = std::filesystem::path(cfg.out);
    for (const auto& [eps, sub] : decompose_parity(S)) {
      std::string tag = std::string(eps.first > 0 ? "p" : "m") + (eps.second > 0 ? "p" : "m");
      auto path = base.parent_path() / (base.stem().string() + "." + tag + base.extension().string());
      std::string text = dump(to_json(sub));
      write_file(path.string(), text);
      ok = golden_check(cfg, path.filename().string(), text, err) && ok;
      out << path.string() << ": " << sub.entries.size() << " entries\n";
    }
  } else {
    std::string text = dump(to_json(S));
    emit(cfg, cfg.out, text, out);
    std::string name = cfg.out.empty() ? "S.json" : std::filesystem::path(cfg.out).filename().string();
    ok = golden_check(cfg, name, text, err);
    if (!cfg.out.empty()) out << cfg.out << ": " << S.entries.size() << " entries\n";
  }
  return ok ? kPass : kMismatch;
}

inline int cmd_solve_r(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RMatrix R;
  try {
    R = solve_r(cfg.alg(), cfg.degree);
  } catch (const SolveError& e) {
    err << "solve-r: " << e.what() << "\n";
    return kMismatch;
  }
  if (cfg.gauged) R = gauge_transform(R, GaugeDirection::Forward);
  std::string text = dump(to_json(R));
  emit(cfg, cfg.out, text, out);
  if (!cfg.out.empty())
    out << cfg.out << ": " << R.blocks.size() << " blocks, " << R.unknowns << " unknowns, rank " << R.rank << "\n";
  return golden_check(cfg, cfg.out.empty() ? "R.json" : std::filesystem::path(cfg.out).filename().string(), text, err)
             ? kPass
             : kMismatch;
}

inline int cmd_check_theorem(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate_pairing();
  Report rep;
  try {
    rep = check_theorem(cfg.alg(), cfg.degree, cfg.zmax, cfg.jobs);
  } catch (const SolveError& e) {
    err << "check-theorem: " << e.what() << "\n";
    return kMismatch;
  }
  nlohmann::json summary = {{"algebra", cfg.algebra},
                            {"n", cfg.n},
                            {"entries_checked", rep.checked},
                            {"max_block_degree", cfg.degree},
                            {"zmax", cfg.zmax},
                            {"result", rep.passed() ? "pass" : "fail"}};
  if (!rep.passed()) {
    const auto& f = rep.failures.front();
    summary["first_failure"] = {{"tuple", f.tuple}, {"R", f.lhs}, {"S", f.rhs}};
    err << "first failure " << failure_line(f) << "\n";
  }
  out << "check-theorem " << cfg.algebra << " n=" << cfg.n << ": " << rep.checked << " entries -> "
      << (rep.passed() ? "PASS" : "FAIL") << "\n";
  std::string text = dump(summary);
  if (!cfg.out.empty()) write_file(cfg.out, text);
  bool golden = golden_check(cfg, "theorem-" + cfg.algebra + ".json", text, err);
  return rep.passed() && golden ? kPass : kMismatch;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Tetrahedron-equation reductions and q-oscillator quantum R matrices"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string config_path, target;
  auto* o_alg = app.add_option("--algebra", cfg.algebra, "d2, a2 or c1");
  auto* o_n = app.add_option("--n", cfg.n, "rank");
  auto* o_s = app.add_option("--s", cfg.s, "boundary vector index s");
  auto* o_t = app.add_option("--t", cfg.t, "boundary vector index t");
  auto* o_deg = app.add_option("--degree", cfg.degree, "degree bound (l_max for w-recursions)");
  auto* o_z = app.add_option("--zmax", cfg.zmax, "series order in z");
  auto* o_out = app.add_option("--out", cfg.out, "output path");
  auto* o_jobs = app.add_option("--jobs", cfg.jobs, "worker threads");
  auto* o_gold = app.add_option("--golden", cfg.golden, "golden-file directory");
  auto* o_bless = app.add_flag("--bless", cfg.bless, "rewrite golden files instead of comparing");
  auto* o_gauged = app.add_flag("--gauged", cfg.gauged, "use the gauge-transformed R (yber, solve-r)");
  app.add_option("--config", config_path, "JSON file with defaults for the flags above");

  auto* verify = app.add_subcommand("verify", "run a verifier");
  verify->add_option("target", target,
                     "tetrahedron, weight-symmetry, boundary, relations, sybe, yber, s21 or w-recursions")
      ->required();
  auto* build_s = app.add_subcommand("build-s", "write the S matrix as JSON");
  auto* solve = app.add_subcommand("solve-r", "solve the intertwining relations, write R as JSON");
  auto* theorem = app.add_subcommand("check-theorem", "compare the gauged R with S");
  for (auto* sub : {verify, build_s, solve, theorem}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (!config_path.empty()) {
      nlohmann::json j = read_json(config_path);
      if (!j.is_object()) throw UsageError("config file must hold a JSON object");
      auto take = [&](CLI::Option* opt, const char* key, auto& field) {
        if (opt->count() == 0 && j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
      };
      try {
        take(o_alg, "algebra", cfg.algebra);
        take(o_n, "n", cfg.n);
        take(o_s, "s", cfg.s);
        take(o_t, "t", cfg.t);
        take(o_deg, "degree", cfg.degree);
        take(o_z, "zmax", cfg.zmax);
        take(o_out, "out", cfg.out);
        take(o_jobs, "jobs", cfg.jobs);
        take(o_gold, "golden", cfg.golden);
        take(o_bless, "bless", cfg.bless);
        take(o_gauged, "gauged", cfg.gauged);
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("config: ") + e.what());
      }
      for (const auto& [k, v] : j.items())
        if (k != "algebra" && k != "n" && k != "s" && k != "t" && k != "degree" && k != "zmax" && k != "out" &&
            k != "jobs" && k != "golden" && k != "bless" && k != "gauged")
          throw UsageError("config: unknown key '" + k + "'");
      cfg.st_given = o_s->count() > 0 || o_t->count() > 0 || j.contains("s") || j.contains("t");
    } else {
      cfg.st_given = o_s->count() > 0 || o_t->count() > 0;
    }
    cfg.validate();

    if (*verify) return finish_report(cfg, run_verify(target, cfg, cfg.st_given), out, err);
    if (*build_s) return cmd_build_s(cfg, out, err);
    if (*solve) return cmd_solve_r(cfg, out, err);
    if (*theorem) return cmd_check_theorem(cfg, out, err);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const IOError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIO;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace tetra::cli
