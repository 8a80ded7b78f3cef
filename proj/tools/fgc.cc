// fgc: command-line front end for familial graph compression.
//
// Exit codes: 0 completed (any answer), 1 usage or validation error,
// 2 verification disagreement, 3 solver budget exhausted (inconclusive).

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fgc/canonical.hh"
#include "fgc/compression.hh"
#include "fgc/errors.hh"
#include "fgc/io.hh"
#include "fgc/random.hh"
#include "fgc/reduction.hh"

namespace {

using namespace fgc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitInconclusive = 3;

struct GlobalOptions {
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string emit_steps;
  std::optional<std::string> mode;
  std::optional<std::uint64_t> max_states;
  std::string output;
};

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// JSON when the first non-blank character opens an object, edge list otherwise.
Graph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(parse_json(text));
  std::istringstream in(text);
  return read_edge_list(in);
}

json load_json(const std::string& path) { return parse_json(read_file(path)); }

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw InvalidArgument("cannot write " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void write_graph(std::ostream& out, const Graph& g, const std::string& format, const DotOptions& dot = {}) {
  if (format == "edgelist") {
    write_edge_list(out, g);
  } else if (format == "dot") {
    out << to_dot(g, dot);
  } else {
    out << to_json(g).dump() << '\n';
  }
}

std::string graph_extension(const std::string& format) {
  if (format == "edgelist") return ".txt";
  if (format == "dot") return ".dot";
  return ".json";
}

MatchMode resolve_mode(const GlobalOptions& global, MatchMode fallback) {
  return global.mode ? mode_from_string(*global.mode) : fallback;
}

void emit_trace(const std::string& dir, const std::vector<Graph>& trace, const std::string& format) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < trace.size(); ++i) {
    std::ostringstream name;
    name << "step_" << std::setw(3) << std::setfill('0') << i << graph_extension(format);
    const std::string path = (std::filesystem::path(dir) / name.str()).string();
    // Write to a temporary name first so readers never see a partial file.
    {
      std::ofstream out(path + ".tmp", std::ios::binary);
      DotOptions dot;
      dot.name = "G" + std::to_string(i);
      write_graph(out, trace[i], format, dot);
    }
    std::filesystem::rename(path + ".tmp", path);
  }
}

// ---------------------------------------------------------------- compress

int cmd_compress(const GlobalOptions& global, const std::string& graph_path, const std::string& pattern_path) {
  const Graph g = load_graph(graph_path);
  Pattern pattern = pattern_from_json(load_json(pattern_path));
  pattern.mode = resolve_mode(global, pattern.mode);
  const CompressionResult result = compress_step(g, pattern);

  Output output(global.output);
  std::ostream& out = output.stream();
  if (global.format == "json") {
    json j = {{"graph", to_json(result.quotient)}, {"classes", result.partition.class_of}, {"changed", result.changed()}};
    out << j.dump() << '\n';
  } else if (global.format == "edgelist") {
    write_edge_list(out, result.quotient);
    out << "# changed=" << (result.changed() ? "true" : "false") << '\n' << "# classes";
    for (std::size_t c : result.partition.class_of) out << ' ' << c;
    out << '\n';
  } else {
    DotOptions dot;
    dot.classes = &result.partition;
    out << to_dot(g, dot);
  }
  std::cerr << "changed=" << (result.changed() ? "true" : "false") << " nodes=" << g.node_count() << "->"
            << result.quotient.node_count() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- solve

json run_report(const SolveResult& result) {
  json report = witness_json(result);
  report["states_explored"] = result.stats.states_explored;
  report["memo_hits"] = result.stats.memo_hits;
  if (result.verdict == Verdict::Yes) report["empty_sequence"] = result.witness.steps.empty();
  return report;
}

int verdict_exit(Verdict verdict) { return verdict == Verdict::Inconclusive ? kExitInconclusive : kExitOk; }

int cmd_solve(const GlobalOptions& global, const std::string& path) {
  const json document = load_json(path);
  FgcInstance instance = fgc_instance_from_json(document);
  if (global.mode)
    for (Pattern& p : instance.family) p.mode = mode_from_string(*global.mode);

  SolveOptions options;
  options.max_states = global.max_states;
  Stopwatch clock;
  const SolveResult result = solve_fgc(instance, options);
  const double ms = clock.elapsed_ms();

  Output output(global.output);
  output.stream() << run_report(result).dump() << '\n';
  std::cerr << "wall_ms=" << ms << '\n';
  if (result.verdict == Verdict::Inconclusive) std::cerr << "inconclusive: state budget exhausted\n";

  if (!global.emit_steps.empty() && result.verdict == Verdict::Yes)
    emit_trace(global.emit_steps, replay_trace(instance.g, instance.family, result.witness.steps), global.format);
  return verdict_exit(result.verdict);
}

// ---------------------------------------------------------------- reduce / xc3

int cmd_reduce(const GlobalOptions& global, const std::string& path) {
  const Xc3Instance x = xc3_from_json(load_json(path));
  for (const std::string& warning : xc3_warnings(x)) std::cerr << "warning: " << warning << '\n';
  const ReducedInstance reduced = xc3_to_fgc(x, resolve_mode(global, MatchMode::Graphlet));

  Output output(global.output);
  if (global.format == "dot") {
    const auto labels = element_labels(reduced);
    DotOptions dot;
    dot.labels = &labels;
    output.stream() << to_dot(reduced.instance.g, dot);
  } else {
    output.stream() << to_json(reduced).dump() << '\n';
  }
  return kExitOk;
}

int cmd_xc3(const GlobalOptions& global, const std::string& path) {
  const Xc3Instance x = xc3_from_json(load_json(path));
  Stopwatch clock;
  const auto cover = solve_xc3_bruteforce(x);
  const double ms = clock.elapsed_ms();
  json report = {{"answer", cover ? "yes" : "no"}, {"chosen", cover ? cover->chosen : std::vector<std::size_t>{}}};
  Output output(global.output);
  output.stream() << report.dump() << '\n';
  std::cerr << "wall_ms=" << ms << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOutcome {
  bool agree = false;
  bool round_trip_ok = true;
  bool inconclusive = false;
  std::string line;
};

// Both solvers, both witness translations, and replay of each.
VerifyOutcome verify_instance(const Xc3Instance& x, MatchMode mode, const SolveOptions& options) {
  VerifyOutcome outcome;
  const auto cover = solve_xc3_bruteforce(x);
  const ReducedInstance reduced = xc3_to_fgc(x, mode);
  const SolveResult fgc = solve_fgc(reduced.instance, options);
  std::ostringstream line;

  if (fgc.verdict == Verdict::Inconclusive) {
    outcome.inconclusive = true;
    line << "inconclusive: xc3=" << (cover ? "YES" : "NO") << " fgc=budget exhausted";
    outcome.line = line.str();
    return outcome;
  }
  const bool fgc_yes = fgc.verdict == Verdict::Yes;
  outcome.agree = cover.has_value() == fgc_yes;
  if (!outcome.agree) {
    line << "DISAGREE: xc3=" << (cover ? "YES" : "NO") << " fgc=" << (fgc_yes ? "YES" : "NO");
    outcome.line = line.str();
    return outcome;
  }
  line << "agree: " << (fgc_yes ? "YES" : "NO");
  if (fgc_yes) {
    std::string failure;
    try {
      const CompressionWitness steps = cover_to_steps(reduced, *cover);
      if (steps_to_cover(reduced, steps) != *cover) failure = "cover -> steps -> cover changed the cover";
      steps_to_cover(reduced, fgc.witness);
    } catch (const InvalidWitness& e) {
      failure = e.what();
    }
    outcome.round_trip_ok = failure.empty();
    line << (outcome.round_trip_ok ? ", round-trip ok" : ", round-trip FAILED: " + failure);
    line << " cover=" << json(cover->chosen).dump() << " steps=" << json(fgc.witness.steps).dump();
  }
  outcome.line = line.str();
  return outcome;
}

std::map<std::string, std::string> parse_key_values(const std::vector<std::string>& tokens) {
  std::map<std::string, std::string> values;
  for (const std::string& token : tokens) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidArgument("--gen expects key=value pairs, got '" + token + "'");
    values[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return values;
}

std::uint64_t parse_count(const std::map<std::string, std::string>& values, const std::string& key,
                          std::uint64_t fallback) {
  auto it = values.find(key);
  if (it == values.end()) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("--gen " + key + " must be a non-negative integer, got '" + it->second + "'");
  }
}

int cmd_verify(const GlobalOptions& global, const std::string& path, const std::vector<std::string>& gen) {
  const MatchMode mode = resolve_mode(global, MatchMode::Graphlet);
  SolveOptions options;
  options.max_states = global.max_states;
  Output output(global.output);
  std::ostream& out = output.stream();
  Stopwatch clock;

  if (!path.empty()) {
    const Xc3Instance x = xc3_from_json(load_json(path));
    const VerifyOutcome outcome = verify_instance(x, mode, options);
    out << outcome.line << '\n';
    std::cerr << "wall_ms=" << clock.elapsed_ms() << '\n';
    if (outcome.inconclusive) return kExitInconclusive;
    return outcome.agree && outcome.round_trip_ok ? kExitOk : kExitDisagreement;
  }

  const auto values = parse_key_values(gen);
  for (const auto& [key, value] : values)
    if (key != "k" && key != "count" && key != "sets" && key != "seed")
      throw InvalidArgument("--gen: unknown key '" + key + "'");
  const auto k = static_cast<int>(parse_count(values, "k", 2));
  const std::uint64_t count = parse_count(values, "count", 100);
  const std::uint64_t seed = parse_count(values, "seed", global.seed);
  const std::optional<std::uint64_t> sets =
      values.count("sets") ? std::optional<std::uint64_t>(parse_count(values, "sets", 0)) : std::nullopt;

  // Instance i alternates planted / unplanted; its seed and set count come
  // from one master generator so the batch is reproducible from `seed`.
  Rng master(seed);
  std::uint64_t agreed = 0, round_trips_failed = 0, inconclusive = 0;
  out << "batch k=" << k << " count=" << count << " seed=" << seed << " mode=" << to_string(mode)
      << " generator=" << Rng::kName << '\n';
  for (std::uint64_t i = 0; i < count; ++i) {
    const bool planted = i % 2 == 0;
    const std::uint64_t num_sets = sets ? *sets : k + master.below(2 * static_cast<std::uint64_t>(k) + 1);
    const std::uint64_t instance_seed = master.next();
    const Xc3Instance x = gen_xc3(k, num_sets, instance_seed, planted);
    const VerifyOutcome outcome = verify_instance(x, mode, options);
    agreed += outcome.agree;
    round_trips_failed += !outcome.round_trip_ok;
    inconclusive += outcome.inconclusive;
    out << "#" << i << " sets=" << to_json(x)["sets"].dump() << ' ' << outcome.line << '\n';
  }
  out << "agreement: " << agreed << "/" << count << ", round-trip failures: " << round_trips_failed
      << ", inconclusive: " << inconclusive << '\n';
  std::cerr << "wall_ms=" << clock.elapsed_ms() << '\n';
  if (agreed + inconclusive != count || round_trips_failed > 0) return kExitDisagreement;
  return inconclusive > 0 ? kExitInconclusive : kExitOk;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::string kind;
  int k = 1;
  std::size_t sets = 0;
  bool planted = false;
  std::size_t n = 6;
  double p = 0.5;
};

int cmd_gen(const GlobalOptions& global, const GenOptions& gen) {
  Output output(global.output);
  std::ostream& out = output.stream();
  if (gen.kind == "xc3") {
    out << to_json(gen_xc3(gen.k, gen.sets, global.seed, gen.planted)).dump() << '\n';
    return kExitOk;
  }
  if (gen.p < 0.0 || gen.p > 1.0) throw InfeasibleParameters("--p must lie in [0, 1]");
  Rng rng(global.seed);
  if (gen.kind == "random-graph") {
    write_graph(out, random_graph(gen.n, gen.p, rng), global.format);
  } else if (gen.kind == "hamilton") {
    if (gen.n < 3) throw InfeasibleParameters("hamilton needs --n >= 3");
    const Graph g = random_graph(gen.n, gen.p, rng);
    out << to_json(gen_theorem1_instance({Theorem1Kind::HamiltonCycle, gen.n}, g)).dump() << '\n';
  } else if (gen.kind == "triangles") {
    if (gen.k < 1) throw InfeasibleParameters("triangles needs --k >= 1");
    const auto k = static_cast<std::size_t>(gen.k);
    const Graph g = random_graph(3 * k, gen.p, rng);
    out << to_json(gen_theorem1_instance({Theorem1Kind::TrianglePartition, k}, g)).dump() << '\n';
  } else {
    throw InvalidArgument("unknown gen kind '" + gen.kind + "'");
  }
  return kExitOk;
}

// ---------------------------------------------------------------- replay

int cmd_replay(const GlobalOptions& global, const std::string& path, const std::vector<std::size_t>& steps) {
  const json document = load_json(path);
  FgcInstance instance = fgc_instance_from_json(document);
  if (global.mode)
    for (Pattern& p : instance.family) p.mode = mode_from_string(*global.mode);
  validate(instance);
  const std::vector<Graph> trace = replay_trace(instance.g, instance.family, steps);

  std::vector<std::size_t> sizes;
  for (const Graph& g : trace) sizes.push_back(g.node_count());
  const bool reaches_target = is_isomorphic(trace.back(), instance.h);

  Output output(global.output);
  if (global.format == "json") {
    json j = {{"graph", to_json(trace.back())}, {"intermediate_sizes", sizes}, {"reaches_target", reaches_target}};
    output.stream() << j.dump() << '\n';
  } else {
    write_graph(output.stream(), trace.back(), global.format);
  }
  std::cerr << "reaches_target=" << (reaches_target ? "true" : "false") << '\n';
  if (!global.emit_steps.empty()) emit_trace(global.emit_steps, trace, global.format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Familial graph compression: compression steps, exhaustive solver, XC3 reduction"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Graph output format")
      ->check(CLI::IsMember({"json", "edgelist", "dot"}));
  app.add_option("--seed", global.seed, "Seed for every random choice");
  app.add_option("--emit-steps", global.emit_steps, "Directory receiving each intermediate graph");
  app.add_option("--mode", global.mode, "Override pattern matching mode")->check(CLI::IsMember({"motif", "graphlet"}));
  app.add_option("--max-states", global.max_states, "Solver state budget; exceeding it exits 3");
  app.add_option("-o,--output", global.output, "Write the primary output here instead of stdout");

  std::string graph_path, pattern_path, instance_path, xc3_path;
  std::vector<std::string> gen_tokens;
  std::vector<std::size_t> steps;
  GenOptions gen;

  auto* compress = app.add_subcommand("compress", "Apply one compression step");
  compress->add_option("graph", graph_path, "Graph file (JSON or edge list)")->required();
  compress->add_option("pattern", pattern_path, "Pattern JSON file")->required();

  auto* solve = app.add_subcommand("solve", "Decide an FGC instance");
  solve->add_option("instance", instance_path, "FGC instance JSON")->required();

  auto* reduce = app.add_subcommand("reduce", "Reduce an XC3 instance to FGC");
  reduce->add_option("xc3", xc3_path, "XC3 instance JSON")->required();

  auto* xc3 = app.add_subcommand("xc3", "Solve an XC3 instance by brute force");
  xc3->add_option("xc3", xc3_path, "XC3 instance JSON")->required();

  auto* verify = app.add_subcommand("verify", "Cross-check the XC3 and FGC solvers through the reduction");
  auto* verify_file = verify->add_option("xc3", xc3_path, "XC3 instance JSON");
  auto* verify_gen = verify->add_option("--gen", gen_tokens, "Generated batch: k=K count=N [sets=M] [seed=S]")
                         ->expected(1, -1);
  verify_file->excludes(verify_gen);
  verify->require_option(1);

  auto* generate = app.add_subcommand("gen", "Generate an instance");
  generate->add_option("kind", gen.kind, "xc3 | hamilton | triangles | random-graph")
      ->required()
      ->check(CLI::IsMember({"xc3", "hamilton", "triangles", "random-graph"}));
  generate->add_option("--k", gen.k, "XC3 k, or number of triangles");
  generate->add_option("--sets", gen.sets, "Number of XC3 sets");
  generate->add_flag("--planted", gen.planted, "Plant an exact cover");
  generate->add_option("--n", gen.n, "Node count");
  generate->add_option("--p", gen.p, "Edge probability");

  auto* replay_cmd = app.add_subcommand("replay", "Replay compression steps on an instance");
  replay_cmd->add_option("instance", instance_path, "FGC instance JSON")->required();
  replay_cmd->add_option("steps", steps, "Family indices in order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compress) return cmd_compress(global, graph_path, pattern_path);
    if (*solve) return cmd_solve(global, instance_path);
    if (*reduce) return cmd_reduce(global, xc3_path);
    if (*xc3) return cmd_xc3(global, xc3_path);
    if (*verify) return cmd_verify(global, xc3_path, gen_tokens);
    if (*generate) return cmd_gen(global, gen);
    if (*replay_cmd) return cmd_replay(global, instance_path, steps);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidWitness& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
