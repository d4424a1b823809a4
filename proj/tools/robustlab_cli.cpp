// Copyright 2026 The robustlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// robustlab command-line front end. Every subcommand forwards to the C
// interface in robustlab.h; this file only parses arguments and formats output.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "robustlab.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitAuditFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitPositivity = 3;
constexpr int kExitOther = 4;

// Carries a status out of nested helpers to main().
struct CliFailure {
  int exit_code;
  std::string message;
};

int exit_code_for(rl_status s) {
  switch (s) {
    case RL_OK: return kExitOk;
    case RL_ERR_INVALID_ARGUMENT:
    case RL_ERR_PARSE:
    case RL_ERR_VALIDATION:
    case RL_ERR_CONFIGURATION: return kExitInvalidInput;
    case RL_ERR_INVALID_PARAMETERS: return kExitPositivity;
    default: return kExitOther;
  }
}

void check(rl_status s) {
  if (s != RL_OK) throw CliFailure{exit_code_for(s), std::string(rl_status_name(s)) + ": " + rl_last_error()};
}

struct StateDeleter {
  void operator()(rl_state* s) const { rl_state_free(s); }
};
struct ResultDeleter {
  void operator()(rl_result* r) const { rl_result_free(r); }
};
using StatePtr = std::unique_ptr<rl_state, StateDeleter>;
using ResultPtr = std::unique_ptr<rl_result, ResultDeleter>;

std::string take_string(char* s) {
  std::string out(s);
  rl_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliFailure{kExitInvalidInput, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Shortest decimal form that reads back to the same double.
std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::vector<double> parse_list(const std::string& text, char sep, std::size_t expected, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    double v = 0;
    const auto r = std::from_chars(item.data(), item.data() + item.size(), v);
    if (r.ec != std::errc() || r.ptr != item.data() + item.size())
      throw CliFailure{kExitInvalidInput, std::string(what) + ": '" + item + "' is not a number"};
    out.push_back(v);
  }
  if (out.size() != expected)
    throw CliFailure{kExitInvalidInput, std::string(what) + ": expected " + std::to_string(expected) + " values"};
  return out;
}

// start:stop:step, start included, stop excluded beyond a 1e-12 slack.
std::vector<double> parse_sweep(const std::string& text) {
  const std::vector<double> v = parse_list(text, ':', 3, "--sweep");
  const double start = v[0], stop = v[1], step = v[2];
  if (!(step != 0.0) || !std::isfinite(step) || (stop - start) / step < 0)
    throw CliFailure{kExitInvalidInput, "--sweep: step must be nonzero and point from start to stop"};
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    double t = start + static_cast<double>(i) * step;
    if (step > 0 ? t >= stop - 1e-12 : t <= stop + 1e-12) break;
    if (std::abs(t) < 1e-12) t = 0.0;
    out.push_back(t);
    if (out.size() > 10000000) throw CliFailure{kExitInvalidInput, "--sweep: too many points"};
  }
  return out;
}

struct Output {
  std::string path;
  std::string format = "json";

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream out(path);
    if (!out) throw CliFailure{kExitInvalidInput, "cannot write '" + path + "'"};
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  }
};

struct StateInput {
  std::string bds;
  std::string state_file;

  StatePtr load() const {
    if (bds.empty() == state_file.empty())
      throw CliFailure{kExitInvalidInput, "give exactly one of --bds or --state"};
    rl_state* s = nullptr;
    if (!bds.empty()) {
      const std::vector<double> c = parse_list(bds, ',', 3, "--bds");
      check(rl_state_from_bds(c[0], c[1], c[2], &s));
    } else {
      check(rl_state_parse_json(read_file(state_file).c_str(), &s));
    }
    return StatePtr(s);
  }
};

void add_state_options(CLI::App* cmd, StateInput& in) {
  cmd->add_option("--bds", in.bds, "Bell-diagonal parameters c1,c2,c3");
  cmd->add_option("--state", in.state_file, "State JSON file");
}

void add_output_options(CLI::App* cmd, Output& out, const std::string& default_format) {
  out.format = default_format;
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", out.path, "Output file (default stdout)");
}

ordered_json result_doc(const ResultPtr& r) {
  char* s = nullptr;
  check(rl_result_json(r.get(), &s));
  return ordered_json::parse(take_string(s));
}

// JSON as-is, or a two-line CSV of the scalar top-level fields.
std::string render(const ordered_json& doc, const std::string& format) {
  if (format == "json") return doc.dump();
  std::string head, row;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_structured()) continue;
    head += (head.empty() ? "" : ",") + key;
    std::string cell;
    if (value.is_number_float())
      cell = fmt(value.get<double>());
    else if (value.is_string())
      cell = value.get<std::string>();
    else
      cell = value.is_null() ? "inf" : value.dump();
    row += (row.empty() ? "" : ",") + cell;
  }
  return head + "\n" + row + "\n";
}

// --- subcommands ---------------------------------------------------------------

struct DiscordArgs {
  StateInput in;
  std::string method = "closed-form";
  Output out;
};

int run_discord(const DiscordArgs& a) {
  StatePtr rho = a.in.load();
  rl_result* r = nullptr;
  check(rl_discord(rho.get(), a.method.c_str(), &r));
  a.out.write(render(result_doc(ResultPtr(r)), a.out.format));
  return kExitOk;
}

struct BoundsArgs {
  StateInput in;
  Output out;
};

int run_bounds(const BoundsArgs& a) {
  StatePtr rho = a.in.load();
  rl_result* r = nullptr;
  check(rl_discord_bounds(rho.get(), &r));
  a.out.write(render(result_doc(ResultPtr(r)), a.out.format));
  return kExitOk;
}

struct RayArgs {
  StateInput in;
  std::string free_set = "ppt";
  std::string noise = "maxmixed";
  double tol = 0.0;
  Output out;
};

int run_ray(const RayArgs& a) {
  StatePtr rho = a.in.load();
  StatePtr noise;
  if (a.noise.rfind("state:", 0) == 0) {
    rl_state* s = nullptr;
    check(rl_state_parse_json(read_file(a.noise.substr(6)).c_str(), &s));
    noise.reset(s);
  } else if (a.noise != "maxmixed") {
    throw CliFailure{kExitInvalidInput, "--noise must be maxmixed or state:<file>"};
  }
  rl_result* r = nullptr;
  check(rl_ray_robustness(rho.get(), noise.get(), a.free_set.c_str(), a.tol, &r));
  a.out.write(render(result_doc(ResultPtr(r)), a.out.format));
  return kExitOk;
}

struct TeleportArgs {
  StateInput in;
  int restarts = 8;
  std::uint64_t seed = 1;
  Output out;
};

int run_teleport(const TeleportArgs& a) {
  StatePtr rho = a.in.load();
  rl_result* r = nullptr;
  check(rl_teleport_check(rho.get(), a.restarts, a.seed, &r));
  a.out.write(render(result_doc(ResultPtr(r)), a.out.format));
  return kExitOk;
}

struct CounterexampleArgs {
  int id = 1;
  double delta = 0.2;
  double a = 1.0;
  double b = 1.0;
  double angle = std::numbers::pi / 2;
  std::string family = "a";
  std::optional<double> t;
  std::string sweep;
  bool numeric = false;
  int resolution = 256;
  Output out;
};

int run_counterexample(const CounterexampleArgs& a) {
  if (a.t.has_value() == !a.sweep.empty()) throw CliFailure{kExitInvalidInput, "give exactly one of --t or --sweep"};
  const rl_counterexample_params p{a.id, a.delta, a.a, a.b, a.angle, a.family.empty() ? 'a' : a.family[0]};
  const std::vector<double> ts = a.t ? std::vector<double>{*a.t} : parse_sweep(a.sweep);
  struct Row {
    double t, exact, numeric;
    int unbounded;
  };
  std::vector<Row> rows;
  rows.reserve(ts.size());
  for (double t : ts) {
    Row row{t, 0.0, 0.0, 0};
    check(rl_counterexample_exact(&p, t, &row.exact));
    if (a.numeric) check(rl_counterexample_numeric(&p, t, a.resolution, &row.numeric, &row.unbounded));
    rows.push_back(row);
  }
  if (a.out.format == "csv") {
    std::string text = a.numeric ? "t,R_exact,R_numeric\n" : "t,R_exact\n";
    for (const Row& r : rows) {
      text += fmt(r.t) + "," + fmt(r.exact);
      if (a.numeric) text += "," + fmt(r.numeric);
      text += "\n";
    }
    a.out.write(text);
    return kExitOk;
  }
  auto to_row = [&](const Row& r) {
    ordered_json j{{"t", r.t}, {"R_exact", r.exact}};
    if (a.numeric) j["R_numeric"] = r.unbounded ? ordered_json() : ordered_json(r.numeric);
    return j;
  };
  ordered_json doc{{"v", 1}, {"id", a.id}};
  if (a.t) {
    const ordered_json row = to_row(rows.front());
    for (const auto& [k, v] : row.items()) doc[k] = v;
  } else {
    doc["rows"] = ordered_json::array();
    for (const Row& r : rows) doc["rows"].push_back(to_row(r));
  }
  a.out.write(doc.dump());
  return kExitOk;
}

struct AuditArgs {
  std::string name;
  bool list = false;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  double tol = 0.0;
  Output out;
};

int run_audit(const AuditArgs& a) {
  if (a.list) {
    char* s = nullptr;
    check(rl_audit_names(&s));
    a.out.write(take_string(s));
    return kExitOk;
  }
  if (a.name.empty()) throw CliFailure{kExitInvalidInput, "audit: name required (see --list)"};
  unsigned threads = 1;
  if (const char* env = std::getenv("ROBUSTLAB_THREADS")) threads = static_cast<unsigned>(std::max(1L, std::atol(env)));
  const rl_audit_config cfg{a.samples, a.seed, a.tol, threads};
  char* s = nullptr;
  int passed = 0;
  check(rl_audit_run(a.name.c_str(), &cfg, &s, &passed));
  const ordered_json doc = ordered_json::parse(take_string(s));
  if (a.out.format == "csv") {
    a.out.write("audit,passed,expectation\n" + a.name + "," + (passed ? "true" : "false") + "," +
                doc["expectation"].get<std::string>() + "\n");
  } else {
    a.out.write(doc.dump());
  }
  if (!passed) std::cerr << "audit " << a.name << " failed: expected " << doc["expectation"].get<std::string>() << "\n";
  return passed ? kExitOk : kExitAuditFailed;
}

struct LevelsetArgs {
  double r = 0.3;
  int grid = 41;
  Output out;
};

int run_levelset(const LevelsetArgs& a) {
  if (a.grid < 2) throw CliFailure{kExitInvalidInput, "--grid must be >= 2"};
  const auto coord = [&](int i) { return -1.0 + 2.0 * i / (a.grid - 1); };
  std::string csv = "c1,c2,c3,R,inside\n";
  ordered_json points = ordered_json::array();
  std::size_t valid_count = 0, inside_count = 0;
  for (int i = 0; i < a.grid; ++i)
    for (int j = 0; j < a.grid; ++j)
      for (int k = 0; k < a.grid; ++k) {
        const double c1 = coord(i), c2 = coord(j), c3 = coord(k);
        int valid = 0;
        check(rl_bds_valid(c1, c2, c3, &valid));
        if (!valid) continue;
        double R = 0;
        check(rl_discord_bds(c1, c2, c3, &R));
        const bool inside = R <= a.r;
        ++valid_count;
        inside_count += inside ? 1 : 0;
        if (a.out.format == "csv")
          csv += fmt(c1) + "," + fmt(c2) + "," + fmt(c3) + "," + fmt(R) + "," + (inside ? "1" : "0") + "\n";
        else
          points.push_back({c1, c2, c3, R, inside});
      }
  if (a.out.format == "csv") {
    a.out.write(csv);
  } else {
    ordered_json doc{{"v", 1},          {"r", a.r},         {"grid", a.grid},
                     {"valid", valid_count}, {"inside", inside_count}, {"columns", {"c1", "c2", "c3", "R", "inside"}},
                     {"points", std::move(points)}};
    a.out.write(doc.dump());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robustlab: robustness measures, counterexamples and continuity audits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rl_version());

  DiscordArgs discord;
  auto* c_discord = app.add_subcommand("discord", "Robustness of discord of a Bell-diagonal state");
  add_state_options(c_discord, discord.in);
  c_discord->add_option("--method", discord.method)->check(CLI::IsMember({"closed-form", "axis-opt"}));
  add_output_options(c_discord, discord.out, "json");

  BoundsArgs bounds;
  auto* c_bounds = app.add_subcommand("discord-bounds", "Two-sided discord robustness bounds");
  add_state_options(c_bounds, bounds.in);
  add_output_options(c_bounds, bounds.out, "json");

  RayArgs ray;
  auto* c_ray = app.add_subcommand("ent-ray", "Robustness along the ray towards a noise state");
  add_state_options(c_ray, ray.in);
  c_ray->add_option("--free-set", ray.free_set, "ppt, zero-discord, unfaithful or bds-axes");
  c_ray->add_option("--noise", ray.noise, "maxmixed or state:<file>");
  c_ray->add_option("--tol", ray.tol, "Bisection tolerance");
  add_output_options(c_ray, ray.out, "json");

  TeleportArgs tel;
  auto* c_tel = app.add_subcommand("tel-check", "Singlet fraction and teleportation constants");
  add_state_options(c_tel, tel.in);
  c_tel->add_option("--restarts", tel.restarts, "Optimiser restarts")->check(CLI::PositiveNumber);
  c_tel->add_option("--seed", tel.seed);
  add_output_options(c_tel, tel.out, "json");

  CounterexampleArgs ce;
  auto* c_ce = app.add_subcommand("counterexample", "Planar counterexample evaluations and sweeps");
  c_ce->add_option("--id", ce.id)->check(CLI::IsMember({1, 2}));
  c_ce->add_option("--delta", ce.delta, "Strip width (id 1)");
  c_ce->add_option("--a", ce.a, "Edge length a (id 2)");
  c_ce->add_option("--b", ce.b, "Edge length b (id 2)");
  c_ce->add_option("--angle", ce.angle, "Angle between the edges (id 2)");
  c_ce->add_option("--family", ce.family, "Edge family a or b (id 2)")->check(CLI::IsMember({"a", "b"}));
  c_ce->add_option("--t", ce.t, "Single parameter value");
  c_ce->add_option("--sweep", ce.sweep, "start:stop:step");
  c_ce->add_flag("--numeric", ce.numeric, "Also run the numeric search engine");
  c_ce->add_option("--resolution", ce.resolution, "Boundary samples per edge");
  add_output_options(c_ce, ce.out, "csv");

  AuditArgs audit;
  auto* c_audit = app.add_subcommand("audit", "Run a named continuity audit");
  c_audit->add_option("name", audit.name, "Audit name");
  c_audit->add_flag("--list", audit.list, "List audit names");
  c_audit->add_option("--samples", audit.samples);
  c_audit->add_option("--seed", audit.seed);
  c_audit->add_option("--tol", audit.tol);
  add_output_options(c_audit, audit.out, "json");

  LevelsetArgs ls;
  auto* c_ls = app.add_subcommand("levelset", "Discord robustness level set on the Bell-diagonal tetrahedron");
  c_ls->add_option("--r", ls.r, "Level");
  c_ls->add_option("--grid", ls.grid, "Grid points per axis");
  add_output_options(c_ls, ls.out, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (c_discord->parsed()) return run_discord(discord);
    if (c_bounds->parsed()) return run_bounds(bounds);
    if (c_ray->parsed()) return run_ray(ray);
    if (c_tel->parsed()) return run_teleport(tel);
    if (c_ce->parsed()) return run_counterexample(ce);
    if (c_audit->parsed()) return run_audit(audit);
    if (c_ls->parsed()) return run_levelset(ls);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitInvalidInput;
}
