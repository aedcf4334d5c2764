// Copyright 2026 The ghzsim Authors
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

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ghzsim/circuit_io.hpp"
#include "ghzsim/csv.hpp"
#include "ghzsim/exact.hpp"
#include "ghzsim/graph_state.hpp"
#include "ghzsim/optimizer.hpp"
#include "ghzsim/oracle.hpp"
#include "ghzsim/permutation_table.hpp"
#include "ghzsim/protocols.hpp"
#include "ghzsim/simulator.hpp"

namespace ghzsim::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// JSON <-> configuration

std::string locality_name(NoiseLocality l) {
  return l == NoiseLocality::AllTouched ? "all" : "two-random";
}

NoiseLocality parse_locality(const std::string& s) {
  if (s == "all") return NoiseLocality::AllTouched;
  if (s == "two-random") return NoiseLocality::TwoRandom;
  throw UsageError("unknown noise locality '" + s + "' (expected all or two-random)");
}

json noise_json(const NoiseModel& m) {
  json j{{"p_gate", m.p_gate}, {"eta", m.eta}, {"locality", locality_name(m.locality)}};
  j["bias"] = m.bias ? json{{"px", m.bias->px}, {"py", m.bias->py}, {"pz", m.bias->pz}} : json();
  return j;
}

NoiseModel noise_from(const json& j) {
  NoiseModel m;
  m.p_gate = j.value("p_gate", 0.0);
  m.eta = j.value("eta", 0.0);
  m.locality = parse_locality(j.value("locality", std::string("all")));
  if (j.contains("bias") && !j.at("bias").is_null()) {
    const auto& b = j.at("bias");
    m.bias = PauliBias{b.value("px", 0.0), b.value("py", 0.0), b.value("pz", 0.0)};
  }
  m.validate();
  return m;
}

json config_json(const CircuitConfig& c) {
  json j{{"n", c.n}, {"N", c.N}, {"K", c.K}, {"R", c.R}, {"f_in", c.f_in}};
  j.update(noise_json(c.noise));
  return j;
}

CircuitConfig config_from(const json& j) {
  CircuitConfig c;
  c.n = j.value("n", c.n);
  c.N = j.value("N", c.N);
  c.K = j.value("K", c.K);
  c.R = j.value("R", c.R);
  c.f_in = j.value("f_in", c.f_in);
  c.noise = noise_from(j);
  c.validate();
  return c;
}

json ga_json(const GAConfig& g) {
  return json{{"population", g.population},
              {"generations", g.generations},
              {"max_length", g.max_length},
              {"elite", g.elite},
              {"tournament", g.tournament},
              {"crossover", g.crossover},
              {"p_replace", g.p_replace},
              {"p_insert", g.p_insert},
              {"p_delete", g.p_delete},
              {"t0", g.t0},
              {"alpha", g.alpha},
              {"budget", g.budget},
              {"allow_pauli", g.allow_pauli},
              {"evaluator", g.evaluator == FitnessEvaluator::Exact ? "exact" : "mc"},
              {"final_pool", g.final_pool}};
}

GAConfig ga_from(const json& j) {
  GAConfig g;
  g.population = j.value("population", g.population);
  g.generations = j.value("generations", g.generations);
  g.max_length = j.value("max_length", g.max_length);
  g.elite = j.value("elite", g.elite);
  g.tournament = j.value("tournament", g.tournament);
  g.crossover = j.value("crossover", g.crossover);
  g.p_replace = j.value("p_replace", g.p_replace);
  g.p_insert = j.value("p_insert", g.p_insert);
  g.p_delete = j.value("p_delete", g.p_delete);
  g.t0 = j.value("t0", g.t0);
  g.alpha = j.value("alpha", g.alpha);
  g.budget = j.value("budget", g.budget);
  g.allow_pauli = j.value("allow_pauli", g.allow_pauli);
  const auto evaluator = j.value("evaluator", std::string("mc"));
  if (evaluator == "exact") {
    g.evaluator = FitnessEvaluator::Exact;
  } else if (evaluator != "mc") {
    throw UsageError("unknown evaluator '" + evaluator + "' (expected mc or exact)");
  }
  g.final_pool = j.value("final_pool", g.final_pool);
  g.validate();
  return g;
}

ProtocolCircuit protocol_from(const json& j, const BaselineParams& params) {
  const auto name = j.value("protocol", std::string());
  if (name == "pumping") return pumping(PumpingConfig{j.value("rounds", 1)}, params);
  if (name == "nested") {
    return nested(NestedConfig{j.value("levels", 1), j.value("twirl", true)}, params);
  }
  if (name == "sequence") {
    return sequence(SequenceConfig::parse(j.value("bases", std::string())), params);
  }
  throw UsageError("unknown protocol '" + name + "' (expected pumping, nested or sequence)");
}

std::string protocol_label(const json& j) {
  const auto name = j.value("protocol", std::string());
  if (name == "pumping") return "pumping(rounds=" + std::to_string(j.value("rounds", 1)) + ")";
  if (name == "nested") return "nested(levels=" + std::to_string(j.value("levels", 1)) + ")";
  return "sequence(" + j.value("bases", std::string()) + ")";
}

// ---------------------------------------------------------------------------
// Run context

struct Context {
  json manifest;
  int threads = 0;
  std::optional<fs::path> output_dir;
  std::ostream& out;
  std::ostream& err;

  std::uint64_t seed() const { return manifest.value("seed", std::uint64_t{1}); }

  // Output path for key, re-rooted under output_dir; empty for stdout.
  fs::path output(const std::string& key) {
    auto& outputs = manifest["outputs"];
    std::string path = outputs.is_object() ? outputs.value(key, std::string()) : std::string();
    if (!path.empty() && output_dir) {
      path = (*output_dir / fs::path(path).filename()).string();
      outputs[key] = path;
    }
    return path;
  }

  void write_manifest(const fs::path& primary) {
    if (primary.empty()) return;
    manifest["version"] = kManifestVersion;
    manifest["threads"] = threads;
    std::ofstream f(primary.string() + ".manifest.json");
    if (!f) throw std::runtime_error("cannot write manifest beside " + primary.string());
    f << manifest.dump(2) << "\n";
  }
};

TableCache& table_cache() {
  static TableCache* cache = [] {
    const char* dir = std::getenv("GHZSIM_CACHE_DIR");
    if (dir && *dir) return new TableCache(fs::path(dir));
    return &default_table_cache();
  }();
  return *cache;
}

void ensure_parent(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
}

void write_rows(const fs::path& path, const std::vector<CsvRow>& rows, std::ostream& out) {
  if (path.empty()) {
    out << csv_header() << "\n";
    for (const auto& r : rows) out << csv_line(r) << "\n";
    return;
  }
  ensure_parent(path);
  const bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
  std::ofstream f(path, std::ios::app);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  if (fresh) f << csv_header() << "\n";
  for (const auto& r : rows) f << csv_line(r) << "\n";
}

void write_text(const fs::path& path, const std::string& text) {
  ensure_parent(path);
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

Estimate run_estimate(const Circuit& circuit, const CircuitConfig& config, bool exact,
                      std::uint64_t samples, std::uint64_t seed, int threads) {
  if (exact) return exact_diagonal_oracle(circuit, config);
  const Simulator sim(circuit, config, table_cache());
  return estimate(sim, samples, seed, threads);
}

// ---------------------------------------------------------------------------
// Commands

int cmd_enumerate(Context& ctx) {
  const int n = ctx.manifest.value("n", 0);
  const bool converse = ctx.manifest.value("brute_force_converse", false);
  if (n < 2 || n > 5) throw UsageError("enumerate needs 2 <= n <= 5");
  if (converse && n > 3) throw UsageError("--brute-force-converse supports n <= 3");

  const auto e = enumerate_ghz_preserving(n);
  std::size_t expected = 6;
  for (int k = 1; k < n; ++k) expected *= 8;
  ctx.out << e.gates.size() << "\n";
  ctx.out << "candidates " << e.candidates << ", duplicates " << e.duplicates
          << ", all GHZ-preserving " << (e.all_preserving ? "yes" : "no") << ", oracle agrees "
          << (e.oracle_agrees ? "yes" : "no") << "\n";
  bool ok = e.gates.size() == expected && e.duplicates == 0 && e.all_preserving && e.oracle_agrees;

  const auto catalog = ctx.output("catalog");
  if (!catalog.empty()) {
    std::ostringstream text;
    text << "# n=" << n << " count=" << e.gates.size() << "\n";
    for (std::size_t i = 0; i < e.gates.size(); ++i) {
      const auto& g = e.gates[i];
      text << i << " H:" << name(g.h);
      for (std::size_t k = 0; k < g.b_codes.size(); ++k) {
        text << " B:" << b_code_name(g.b_codes[k]) << "@" << k + 1 << "-" << k + 2;
      }
      text << " columns";
      for (auto c : g.columns) text << " " << c;
      text << "\n";
    }
    write_text(catalog, text.str());
    ctx.write_manifest(catalog);
  }

  if (converse) {
    const auto c = brute_force_converse(n);
    ctx.out << "brute force: " << c.passing << " of " << c.candidates << " local pairs pass, "
            << c.distinct_permutations << " distinct permutations\n";
    if (c.matches_constructive && c.distinct_permutations == e.gates.size()) {
      ctx.out << "converse verified\n";
    } else {
      ctx.out << "converse failed: expected " << e.gates.size() << " permutations\n";
      ok = false;
    }
  }
  if (!ok) throw CheckFailed("enumeration check failed");
  return kExitOk;
}

int cmd_simulate(Context& ctx) {
  const auto& m = ctx.manifest;
  if (!m.contains("circuit")) throw UsageError("simulate manifest needs a circuit");
  const auto file = parse_circuit(m.at("circuit").dump());
  CircuitConfig config = config_from(m.value("config", json::object()));
  file.apply_shape(config);
  config.validate();
  require_valid(file.circuit, config);

  const bool exact = m.value("exact", false);
  const auto samples = m.value("samples", std::uint64_t{100000});
  const auto est = run_estimate(file.circuit, config, exact, samples, ctx.seed(), ctx.threads);
  CsvRow row{m.value("label", std::string("circuit")), config, est, ctx.seed()};

  const auto csv = ctx.output("csv");
  write_rows(csv, {row}, ctx.out);
  ctx.write_manifest(csv);
  return kExitOk;
}

int cmd_baseline(Context& ctx) {
  const auto& m = ctx.manifest;
  if (!m.contains("baseline")) throw UsageError("baseline manifest needs a protocol");
  BaselineParams params;
  params.n = m.value("n", 3);
  params.noise = noise_from(m.value("noise", json::object()));
  const bool exact = m.value("exact", false);
  const auto samples = m.value("samples", std::uint64_t{100000});
  const auto f_values = m.value("f_in", std::vector<double>{});
  if (f_values.empty()) throw UsageError("baseline needs at least one f_in value");

  std::vector<CsvRow> rows;
  for (double f : f_values) {
    params.f_in = f;
    const auto pc = protocol_from(m.at("baseline"), params);
    const auto est = run_estimate(pc.circuit, pc.config, exact, samples, ctx.seed(), ctx.threads);
    rows.push_back({pc.name, pc.config, est, ctx.seed()});
  }
  const auto csv = ctx.output("csv");
  write_rows(csv, rows, ctx.out);
  ctx.write_manifest(csv);
  return kExitOk;
}

Estimate reference_estimate(const json& spec, const CircuitConfig& config, std::uint64_t seed,
                            int threads) {
  BaselineParams params{config.n, config.noise, config.f_in};
  const auto pc = protocol_from(spec, params);
  const bool exact = exact_feasible(pc.config);
  return run_estimate(pc.circuit, pc.config, exact, 1000000, seed, threads);
}

int cmd_optimize(Context& ctx) {
  auto& m = ctx.manifest;
  const CircuitConfig config = config_from(m.value("config", json::object()));
  GAConfig ga = ga_from(m.value("ga", json::object()));
  ga.threads = ctx.threads;

  const json cost_j = m.value("cost", json::object());
  CostFunction cost;
  const auto mode = cost_j.value("mode", std::string("fidelity"));
  if (mode == "floor") {
    cost.mode = CostMode::FidelityUnderSuccessFloor;
  } else if (mode != "fidelity") {
    throw UsageError("unknown cost mode '" + mode + "' (expected fidelity or floor)");
  }
  cost.p_min = cost_j.value("p_min", 0.0);
  cost.penalty = cost_j.value("penalty", cost.penalty);

  std::optional<Estimate> reference;
  if (m.contains("reference")) {
    reference = reference_estimate(m.at("reference"), config, ctx.seed(), ctx.threads);
    if (cost.mode == CostMode::FidelityUnderSuccessFloor && cost_j.value("p_min_from_reference", false)) {
      cost.p_min = reference->p_succ;
    }
  }
  cost.validate();
  m["cost"] = json{{"mode", mode}, {"p_min", cost.p_min}, {"penalty", cost.penalty},
                   {"p_min_from_reference", cost_j.value("p_min_from_reference", false)}};

  const auto result = evolve(ga, cost, config, ctx.seed());
  const auto& est = result.final_estimate;
  ctx.out << "best fitness " << format_double(result.fitness) << " (f_out "
          << format_double(est.f_out) << ", p_succ " << format_double(est.p_succ) << ", "
          << (result.exact_final ? "exact" : "Monte Carlo") << ")\n";
  ctx.out << "p_min " << format_double(cost.p_min) << "\n";
  for (const auto& e : result.best.elements) ctx.out << "  " << to_string(e) << "\n";
  if (reference) {
    const bool beats = est.f_out > reference->f_out && est.p_succ >= cost.p_min;
    ctx.out << "reference " << protocol_label(m.at("reference")) << ": f_out "
            << format_double(reference->f_out) << ", p_succ " << format_double(reference->p_succ)
            << "; improvement " << (beats ? "yes" : "no") << "\n";
  }

  const auto circuit_path = ctx.output("circuit");
  const auto history_path = ctx.output("history");
  const auto csv = ctx.output("csv");
  if (!circuit_path.empty()) {
    ensure_parent(circuit_path);
    save_circuit_file(circuit_path, result.best, config);
  }
  if (!history_path.empty()) {
    std::ostringstream text;
    text << "generation,best_fitness,mean_fitness,temperature\n";
    for (const auto& h : result.history) {
      text << h.generation << "," << format_double(h.best_fitness) << ","
           << format_double(h.mean_fitness) << "," << format_double(h.temperature) << "\n";
    }
    write_text(history_path, text.str());
  }
  if (!csv.empty()) write_rows(csv, {{"optimized", config, est, ctx.seed()}}, ctx.out);
  ctx.write_manifest(!circuit_path.empty() ? circuit_path : csv);
  return kExitOk;
}

int cmd_convert(Context& ctx) {
  const auto text = ctx.manifest.value("graph", std::string());
  Graph graph;
  try {
    graph = Graph::parse_edge_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("graph: ") + e.what());
  }
  const auto c = convert_to_ghz(graph);
  const auto report = ctx.output("report");
  if (!report.empty()) {
    write_text(report, c.recipe + "\n");
    ctx.write_manifest(report);
  }
  if (!c.ghz_equivalent) throw CheckFailed("not GHZ-equivalent");
  ctx.out << c.recipe << "\n";
  if (!c.verified) throw CheckFailed("conversion did not verify");
  return kExitOk;
}

int cmd_cache_tables(Context& ctx) {
  const int n = ctx.manifest.value("n", 0);
  if (n < 2 || n > kMaxQubits) throw UsageError("cache-tables needs 2 <= n <= " + std::to_string(kMaxQubits));
  auto dir = ctx.manifest.value("dir", std::string());
  if (dir.empty()) {
    const char* env = std::getenv("GHZSIM_CACHE_DIR");
    if (!env || !*env) throw UsageError("cache-tables needs --dir or GHZSIM_CACHE_DIR");
    dir = env;
  }
  fs::create_directories(dir);
  TableCache cache{fs::path(dir)};
  ctx.out << cache.warm(n) << " tables in " << dir << "\n";
  return kExitOk;
}

std::uint64_t parse_count(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: " + text);
  }
  if (used != text.size() || !(v >= 1) || v > 1e18 || v != std::floor(v)) {
    throw UsageError("expected a positive integer count: " + text);
  }
  return static_cast<std::uint64_t>(v);
}

std::vector<double> f_grid(double lo, double hi, double step) {
  if (!(step > 0) || hi < lo) throw UsageError("invalid f_in sweep");
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out;
  for (long i = 0; i < count; ++i) {
    out.push_back(std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path.string());
  std::ostringstream text;
  text << f.rdbuf();
  return text.str();
}

}  // namespace

json load_manifest(const fs::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError("manifest " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("manifest " + path.string() + " must be an object");
  return j;
}

json showcase_manifest(std::uint64_t seed) {
  CircuitConfig config;
  config.n = 3;
  config.N = 5;
  config.K = 1;
  config.R = 3;
  config.f_in = 0.9;
  config.noise.p_gate = 0.01;
  config.noise.eta = 0.01;
  return json{{"version", kManifestVersion},
              {"command", "optimize"},
              {"seed", seed},
              {"config", config_json(config)},
              {"ga", ga_json(GAConfig{})},
              {"cost", {{"mode", "floor"}, {"penalty", 10.0}, {"p_min_from_reference", true}}},
              {"reference", {{"protocol", "pumping"}, {"rounds", 4}}},
              {"outputs",
               {{"circuit", "showcase.circuit.json"},
                {"history", "showcase.history.csv"},
                {"csv", "showcase.csv"}}}};
}

int run_manifest(json manifest, const RunOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (!manifest.is_object()) throw UsageError("manifest must be an object");
    const int version = manifest.value("version", kManifestVersion);
    if (version != kManifestVersion) {
      throw UsageError("unsupported manifest version " + std::to_string(version));
    }
    Context ctx{std::move(manifest), 0, options.output_dir, out, err};
    ctx.threads = options.threads ? *options.threads : ctx.manifest.value("threads", 0);
    if (ctx.threads < 0) throw UsageError("--threads must be non-negative");
    if (options.output_dir) fs::create_directories(*options.output_dir);
    const auto command = ctx.manifest.value("command", std::string());
    if (command == "enumerate") return cmd_enumerate(ctx);
    if (command == "simulate") return cmd_simulate(ctx);
    if (command == "baseline") return cmd_baseline(ctx);
    if (command == "optimize") return cmd_optimize(ctx);
    if (command == "convert") return cmd_convert(ctx);
    if (command == "cache-tables") return cmd_cache_tables(ctx);
    throw UsageError("unknown command '" + command + "'");
  } catch (const CheckFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CircuitParseError& e) {
    err << "circuit error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "manifest error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"GHZ distillation simulator"};
  app.require_subcommand(1);

  int threads = 0;
  std::uint64_t seed = 1;
  std::string samples = "100000";
  std::string output;
  CircuitConfig noise_config;
  std::string locality = "all";
  std::vector<double> bias;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "Worker threads (0 = auto)");
    sub->add_option("--seed", seed, "64-bit seed");
  };
  auto add_noise = [&](CLI::App* sub) {
    sub->add_option("--p", noise_config.noise.p_gate, "Gate depolarizing probability");
    sub->add_option("--eta", noise_config.noise.eta, "Measurement flip probability");
    sub->add_option("--locality", locality, "all | two-random");
    sub->add_option("--bias", bias, "px py pz per touched qubit")->expected(3);
  };
  auto noise_now = [&] {
    NoiseModel m = noise_config.noise;
    m.locality = parse_locality(locality);
    if (!bias.empty()) m.bias = PauliBias{bias[0], bias[1], bias[2]};
    m.validate();
    return m;
  };

  int n = 3;
  bool converse = false;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate and check the GHZ-preserving gates");
  enumerate->add_option("--n", n, "Qubits per GHZ state (2..5)")->required();
  enumerate->add_flag("--brute-force-converse", converse, "Also search all bilocal Cliffords");
  enumerate->add_option("--output", output, "Gate catalog file");

  std::string circuit_path;
  bool exact = false;
  std::string label = "circuit";
  double f_in = 1.0;
  auto* simulate = app.add_subcommand("simulate", "Estimate a circuit file");
  simulate->add_option("--circuit", circuit_path, "Circuit JSON file")->required();
  simulate->add_option("--f-in", f_in, "Raw copy fidelity");
  simulate->add_option("--samples", samples, "Monte Carlo trajectories");
  simulate->add_flag("--exact", exact, "Use the exact diagonal oracle");
  simulate->add_option("--label", label, "Protocol column value");
  simulate->add_option("--output", output, "CSV file (appended)");
  add_common(simulate);
  add_noise(simulate);

  std::string protocol;
  int rounds = 1, levels = 1;
  bool no_twirl = false;
  std::string bases;
  std::vector<double> f_values;
  double f_min = 0.6, f_max = 0.99, f_step = 0.01;
  auto* baseline = app.add_subcommand("baseline", "Sweep a baseline protocol over f_in");
  baseline->add_option("--protocol", protocol, "pumping | nested | sequence")->required();
  baseline->add_option("--rounds", rounds, "Pumping rounds");
  baseline->add_option("--levels", levels, "Nested levels");
  baseline->add_flag("--no-twirl", no_twirl, "Disable twirling between nested levels");
  baseline->add_option("--bases", bases, "Sequence bases, e.g. ZZX");
  baseline->add_option("--n", n, "Qubits per GHZ state");
  baseline->add_option("--f-in", f_values, "Explicit f_in values");
  baseline->add_option("--f-in-min", f_min, "Sweep start");
  baseline->add_option("--f-in-max", f_max, "Sweep end (inclusive)");
  baseline->add_option("--f-in-step", f_step, "Sweep step");
  baseline->add_option("--samples", samples, "Monte Carlo trajectories per row");
  baseline->add_flag("--exact", exact, "Use the exact diagonal oracle");
  baseline->add_option("--output", output, "CSV file (appended)");
  add_common(baseline);
  add_noise(baseline);

  std::string manifest_path;
  std::string output_dir;
  bool template_only = false;
  auto* optimize = app.add_subcommand("optimize", "Run the genetic optimizer from a manifest");
  optimize->add_option("--manifest", manifest_path, "Optimization manifest");
  optimize->add_flag("--template", template_only, "Print the showcase manifest and exit");
  optimize->add_option("--seed", seed, "Seed for --template");
  optimize->add_option("--threads", threads, "Worker threads (0 = auto)");
  optimize->add_option("--output-dir", output_dir, "Directory for the outputs");

  std::string graph_path;
  auto* convert = app.add_subcommand("convert", "Convert a graph state to GHZ form");
  convert->add_option("--graph", graph_path, "Edge list file")->required();
  convert->add_option("--output", output, "Report file");

  std::string dir;
  auto* cache = app.add_subcommand("cache-tables", "Precompute permutation tables");
  cache->add_option("--n", n, "Qubits per GHZ state")->required();
  cache->add_option("--dir", dir, "Cache directory (default GHZSIM_CACHE_DIR)");

  auto* replay = app.add_subcommand("replay", "Re-run a written manifest");
  replay->add_option("manifest", manifest_path, "Manifest file")->required();
  replay->add_option("--threads", threads, "Override the thread count");
  replay->add_option("--output-dir", output_dir, "Directory for the outputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunOptions options;
  json m{{"version", kManifestVersion}, {"seed", seed}, {"threads", threads}};
  try {
    if (*enumerate) {
      m["command"] = "enumerate";
      m["n"] = n;
      m["brute_force_converse"] = converse;
      m["outputs"] = {{"catalog", output}};
    } else if (*simulate) {
      m["command"] = "simulate";
      m["circuit"] = json::parse(read_file(circuit_path));
      CircuitConfig c = noise_config;
      c.noise = noise_now();
      c.f_in = f_in;
      m["config"] = config_json(c);
      m["samples"] = parse_count(samples);
      m["exact"] = exact;
      m["label"] = label;
      m["outputs"] = {{"csv", output}};
    } else if (*baseline) {
      m["command"] = "baseline";
      json spec{{"protocol", protocol}};
      if (protocol == "pumping") spec["rounds"] = rounds;
      if (protocol == "nested") {
        spec["levels"] = levels;
        spec["twirl"] = !no_twirl;
      }
      if (protocol == "sequence") spec["bases"] = bases;
      m["baseline"] = spec;
      m["n"] = n;
      m["noise"] = noise_json(noise_now());
      m["f_in"] = f_values.empty() ? f_grid(f_min, f_max, f_step) : f_values;
      m["samples"] = parse_count(samples);
      m["exact"] = exact;
      m["outputs"] = {{"csv", output}};
    } else if (*optimize) {
      if (template_only) {
        out << showcase_manifest(seed).dump(2) << "\n";
        return kExitOk;
      }
      if (manifest_path.empty()) throw UsageError("optimize needs --manifest or --template");
      m = load_manifest(manifest_path);
      m["command"] = "optimize";
      if (optimize->count("--threads")) options.threads = threads;
      if (!output_dir.empty()) options.output_dir = output_dir;
    } else if (*convert) {
      m["command"] = "convert";
      m["graph"] = read_file(graph_path);
      m["outputs"] = {{"report", output}};
    } else if (*cache) {
      m["command"] = "cache-tables";
      m["n"] = n;
      m["dir"] = dir;
    } else if (*replay) {
      m = load_manifest(manifest_path);
      if (replay->count("--threads")) options.threads = threads;
      if (!output_dir.empty()) options.output_dir = output_dir;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run_manifest(std::move(m), options, out, err);
}

}  // namespace ghzsim::cli
