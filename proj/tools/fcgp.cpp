#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fcgp/fcgp.hpp"

namespace {

using nlohmann::json;

struct SolveArgs {
  std::string input;
  int k = 1;
  std::string alpha;
  std::string mode = "max";
  std::string algo;
  std::string epsilon;
  int width_budget = -1;
  std::uint64_t seed = 0;  // accepted for symmetry with generate; solvers are deterministic
  std::string out = "csv";
  bool stable = false;
  bool with_oracle = false;
};

struct GenerateArgs {
  std::string family;
  std::uint64_t seed = 1;
  std::string out_prefix;
  int k = 4, hubs = 3;
  std::string mu = "1/6";
  int n = 10;
  long long m = 15;
  int rows = 2, cols = 2;
  int d = 3;
};

struct ExperimentArgs {
  std::string suite;
  int trials = -1;
  std::uint64_t seed = 1;
  int max_n = 14;
  int max_k = 4;
  int threads = 0;
  bool stable = false;
  int gap_k = 30;
  std::vector<std::string> mus;
  std::string repro_dir = "repro";
};

const std::map<std::string, std::string> kAlgoNames = {
    {"brute", "brute-force"},     {"bnb", "branch-and-bound"},
    {"greedy", "greedy"},         {"fptas", "fptas-general"},
    {"topdeg", "fptas-topdegree"}, {"subexp", "subexponential"},
    {"closed", "closed-form"}};

json record_to_json(const fcgp::RunRecord& r) {
  json j;
  j["instance"] = r.instance;
  j["algorithm"] = r.algorithm;
  j["k"] = r.k;
  j["alpha"] = r.alpha.str();
  if (r.epsilon) j["epsilon"] = r.epsilon->str();
  j["mode"] = r.mode;
  j["value"] = r.value.str();
  j["vertices"] = r.vertices;
  j["wall_ms"] = r.wall_ms;
  j["branch"] = r.branch;
  if (r.oracle) j["oracle"] = r.oracle->str();
  if (r.ratio) j["ratio"] = r.ratio->str();
  return j;
}

int cmd_solve(const SolveArgs& a) {
  fcgp::Graph g = fcgp::read_edge_list_file(a.input);
  fcgp::Rational alpha = fcgp::Rational::parse(a.alpha);
  fcgp::Direction dir = a.mode == "max" ? fcgp::Direction::Max : fcgp::Direction::Min;
  fcgp::Instance inst = fcgp::make_instance(std::move(g), a.k, alpha, dir);

  fcgp::SolveSpec spec;
  spec.algorithm = kAlgoNames.at(a.algo);
  if (!a.epsilon.empty()) spec.epsilon = fcgp::Rational::parse(a.epsilon);
  if ((a.algo == "fptas" || a.algo == "topdeg") && !spec.epsilon)
    throw fcgp::input_error("--epsilon is required for --algo " + a.algo);
  spec.width_budget = a.width_budget;
  spec.with_oracle = a.with_oracle;
  spec.stable_timing = a.stable;

  fcgp::RunRecord rec = fcgp::run_solve(a.input, inst, spec);
  if (a.out == "json")
    std::cout << record_to_json(rec).dump(2) << '\n';
  else
    fcgp::write_csv(std::cout, {rec});
  return 0;
}

int cmd_generate(const GenerateArgs& a) {
  fcgp::Graph g;
  json params;
  std::string stem;
  auto slug = [](const fcgp::Rational& r) {
    return std::to_string(r.num) + "-" + std::to_string(r.den);
  };
  if (a.family == "gap") {
    fcgp::Rational mu = fcgp::Rational::parse(a.mu);
    fcgp::GapInstanceSpec spec{a.k, a.hubs, mu};
    g = fcgp::gen_gap_graph(spec);
    params = {{"k", a.k}, {"N", a.hubs}, {"mu", mu.str()}};
    stem = "gap-k" + std::to_string(a.k) + "-N" + std::to_string(a.hubs) + "-mu" + slug(mu);
  } else if (a.family == "gnm") {
    g = fcgp::gen_random_gnm(a.n, a.m, a.seed);
    params = {{"n", a.n}, {"m", a.m}};
    stem = "gnm-n" + std::to_string(a.n) + "-m" + std::to_string(a.m) + "-s" +
           std::to_string(a.seed);
  } else if (a.family == "grid") {
    g = fcgp::gen_grid(a.rows, a.cols);
    params = {{"rows", a.rows}, {"cols", a.cols}};
    stem = "grid-" + std::to_string(a.rows) + "x" + std::to_string(a.cols);
  } else {
    g = fcgp::gen_regular(a.n, a.d, a.seed);
    params = {{"n", a.n}, {"d", a.d}};
    stem = "reg-n" + std::to_string(a.n) + "-d" + std::to_string(a.d) + "-s" +
           std::to_string(a.seed);
  }
  std::string prefix = a.out_prefix.empty() ? stem : a.out_prefix;
  std::string edge_path = prefix + ".edges";
  std::string meta_path = prefix + ".json";
  fcgp::write_edge_list_file(edge_path, g);
  json meta = {{"family", a.family},
               {"params", params},
               {"seed", a.seed},
               {"n", g.n},
               {"m", g.m()}};
  std::ofstream meta_out(meta_path, std::ios::binary);
  if (!meta_out) throw fcgp::input_error("cannot write " + meta_path);
  meta_out << meta.dump(2) << '\n';
  std::cout << edge_path << '\n' << meta_path << '\n';
  return 0;
}

int cmd_experiment(const ExperimentArgs& a) {
  fcgp::SuiteOptions opts;
  opts.trials = a.trials;
  opts.seed = a.seed;
  opts.max_n = a.max_n;
  opts.max_k = a.max_k;
  opts.threads = a.threads;
  opts.stable_timing = a.stable;
  opts.gap_k = a.gap_k;
  if (!a.mus.empty()) {
    opts.gap_margins.clear();
    for (const auto& m : a.mus) opts.gap_margins.push_back(fcgp::Rational::parse(m));
  }

  fcgp::SuiteReport rep = fcgp::run_suite(a.suite, opts);
  fcgp::write_csv(std::cout, rep.rows,
                  fcgp::SuiteSummary{rep.violations, rep.worst_ratio});

  std::cerr << "suite " << a.suite << ": " << rep.rows.size() << " rows, "
            << rep.violations << " violations\n";
  for (const auto& [key, count] : rep.check_counts) {
    auto it = rep.violation_counts.find(key);
    long long bad = it == rep.violation_counts.end() ? 0 : it->second;
    std::cerr << "  " << key << ": " << count - bad << "/" << count << " ok\n";
  }
  for (const auto& note : rep.notes) std::cerr << "  " << note << '\n';

  if (rep.violations == 0) return 0;
  std::filesystem::create_directories(a.repro_dir);
  for (const auto& [name, content] : rep.repro_files) {
    std::filesystem::path p = std::filesystem::path(a.repro_dir) / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    std::cerr << "repro instance written: " << p.string() << '\n';
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvers, generators, and experiment sweeps for alpha-weighted "
               "fixed-cardinality graph partitioning"};
  app.require_subcommand(1);

  SolveArgs sa;
  CLI::App* solve = app.add_subcommand("solve", "run one solver on an edge-list file");
  solve->add_option("input", sa.input, "edge-list file")->required();
  solve->add_option("--k", sa.k, "selection size")->required();
  solve->add_option("--alpha", sa.alpha, "objective weight, as p/q")->required();
  solve->add_option("--mode", sa.mode, "max or min")
      ->check(CLI::IsMember({"max", "min"}))
      ->required();
  solve->add_option("--algo", sa.algo, "brute, bnb, greedy, fptas, topdeg, subexp, closed")
      ->check(CLI::IsMember({"brute", "bnb", "greedy", "fptas", "topdeg", "subexp", "closed"}))
      ->required();
  solve->add_option("--epsilon", sa.epsilon, "accuracy target for fptas/topdeg, as p/q");
  solve->add_option("--width-budget", sa.width_budget,
                    "decomposition width cap for subexp; -1 for the default");
  solve->add_option("--seed", sa.seed, "reserved; solvers are deterministic");
  solve->add_option("--out", sa.out, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  solve->add_flag("--stable-output", sa.stable, "zero out wall_ms for reproducible output");
  solve->add_flag("--with-oracle", sa.with_oracle,
                  "also brute-force the optimum and report the ratio");

  GenerateArgs ga;
  CLI::App* gen = app.add_subcommand("generate", "write an instance and its JSON sidecar");
  gen->add_option("--family", ga.family, "gap, gnm, grid, regular")
      ->check(CLI::IsMember({"gap", "gnm", "grid", "regular"}))
      ->required();
  gen->add_option("--seed", ga.seed, "generator seed");
  gen->add_option("--out-prefix", ga.out_prefix, "output path prefix (default: derived)");
  gen->add_option("--k", ga.k, "gap: clique and star size");
  gen->add_option("--N", ga.hubs, "gap: hub count");
  gen->add_option("--mu", ga.mu, "gap: margin below 1/3, as p/q");
  gen->add_option("--n", ga.n, "gnm/regular: vertex count");
  gen->add_option("--m", ga.m, "gnm: edge count");
  gen->add_option("--rows", ga.rows, "grid: row count");
  gen->add_option("--cols", ga.cols, "grid: column count");
  gen->add_option("--d", ga.d, "regular: degree");

  ExperimentArgs ea;
  CLI::App* exp = app.add_subcommand("experiment", "run a checked sweep and emit CSV");
  exp->add_option("--suite", ea.suite, "approx, gap, subexp, exchange")
      ->check(CLI::IsMember({"approx", "gap", "subexp", "exchange"}))
      ->required();
  exp->add_option("--trials", ea.trials, "sweep size; -1 for the suite default");
  exp->add_option("--seed", ea.seed, "base seed for generated instances");
  exp->add_option("--max-n", ea.max_n, "largest instance size");
  exp->add_option("--max-k", ea.max_k, "largest selection size");
  exp->add_option("--threads", ea.threads, "worker count; 0 = FCGP_THREADS or hardware");
  exp->add_flag("--stable-output", ea.stable, "zero out wall_ms for reproducible output");
  exp->add_option("--k", ea.gap_k, "gap suite: instance k");
  exp->add_option("--mu", ea.mus, "gap suite: margin(s), as p/q; default 1/10 and 1/6");
  exp->add_option("--repro-dir", ea.repro_dir, "where violating instances are written");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(solve)) return cmd_solve(sa);
    if (app.got_subcommand(gen)) return cmd_generate(ga);
    return cmd_experiment(ea);
  } catch (const fcgp::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const fcgp::gate_exhausted_error& e) {
    std::cerr << "gate exhausted: " << e.what() << '\n';
    return 3;
  } catch (const fcgp::unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return 2;
  } catch (const fcgp::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
