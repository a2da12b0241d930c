#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fcgp/approx.hpp"
#include "fcgp/errors.hpp"
#include "fcgp/exact.hpp"
#include "fcgp/generators.hpp"
#include "fcgp/graph.hpp"
#include "fcgp/instance.hpp"
#include "fcgp/run_record.hpp"
#include "fcgp/subexp.hpp"
#include "fcgp/tree_decomposition.hpp"

namespace fcgp {

// ---- single dispatch ----

struct SolveSpec {
  std::string algorithm;  // brute-force, branch-and-bound, subexponential,
                          // greedy, fptas-general, fptas-topdegree, closed-form
  std::optional<Rational> epsilon;
  int width_budget = -1;
  std::uint64_t subset_budget = kDefaultSubsetBudget;
  bool with_oracle = false;
  bool stable_timing = false;  // zero out wall_ms for reproducible output
};

inline RunRecord run_solve(const std::string& label, const Instance& inst,
                           const SolveSpec& spec) {
  RunRecord r;
  r.instance = label;
  r.algorithm = spec.algorithm;
  r.k = inst.k;
  r.alpha = inst.alpha;
  r.epsilon = spec.epsilon;
  r.mode = direction_name(inst.direction);

  const auto t0 = std::chrono::steady_clock::now();
  Solution sol;
  if (spec.algorithm == "brute-force") {
    sol = solve_brute_force(inst, {}, spec.subset_budget).solution;
  } else if (spec.algorithm == "branch-and-bound") {
    sol = solve_branch_and_bound(inst).solution;
  } else if (spec.algorithm == "subexponential") {
    sol = solve_subexponential(inst, spec.width_budget).solution;
  } else if (spec.algorithm == "greedy") {
    sol = greedy_extremal_degree(inst);
  } else if (spec.algorithm == "fptas-general") {
    if (!spec.epsilon) throw input_error("fptas-general needs an epsilon");
    sol = fptas_general(inst, *spec.epsilon).solution;
  } else if (spec.algorithm == "fptas-topdegree") {
    if (!spec.epsilon) throw input_error("fptas-topdegree needs an epsilon");
    sol = fptas_topdegree(inst, *spec.epsilon, spec.subset_budget).solution;
  } else if (spec.algorithm == "closed-form") {
    // at alpha = 1/3 the objective collapses to a pure degree sum, so the
    // extremal-degree pick is already optimal
    if (!(inst.alpha == Rational(1, 3)))
      throw unsupported_error("closed form applies at alpha = 1/3 only");
    sol = greedy_extremal_degree(inst);
    sol.provenance = {"closed-form", "degree-sum"};
  } else {
    throw input_error("unknown algorithm: " + spec.algorithm);
  }
  const auto t1 = std::chrono::steady_clock::now();

  r.vertices = sol.vertices;
  r.value = cov_alpha(inst.graph, sol.vertices, inst.alpha);
  r.branch = sol.provenance.branch;
  r.wall_ms = spec.stable_timing
                  ? 0.0
                  : std::chrono::duration<double, std::milli>(t1 - t0).count();
  if (spec.with_oracle) {
    Rational opt = solve_brute_force(inst).solution.value;
    r.oracle = opt;
    r.ratio = performance_ratio(r.value, opt, inst.direction);
  }
  return r;
}

// ---- worker pool ----

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FCGP_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs body(i) for i in [0, tasks).  Each task writes only its own slot, so
// results are independent of the worker count; the first exception wins.
template <class F>
inline void parallel_for(int tasks, int threads, F&& body) {
  int t = std::min(resolve_threads(threads), tasks);
  if (t <= 1) {
    for (int i = 0; i < tasks; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex mx;
  std::exception_ptr first;
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int w = 0; w < t; ++w)
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= tasks) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(mx);
          if (!first) first = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first) std::rethrow_exception(first);
}

// ---- suites ----

struct SuiteOptions {
  int trials = -1;  // -1 picks the suite default
  std::uint64_t seed = 1;
  int max_n = 14;
  int max_k = 4;
  int threads = 0;  // 0: FCGP_THREADS, then hardware concurrency
  bool stable_timing = false;
  int gap_k = 30;
  std::vector<Rational> gap_margins{{1, 10}, {1, 6}};
};

struct SuiteReport {
  std::vector<RunRecord> rows;
  long long violations = 0;
  std::map<std::string, long long> check_counts;
  std::map<std::string, long long> violation_counts;
  std::optional<Rational> worst_ratio;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, std::string>> repro_files;  // name, edge list
};

namespace detail {

struct CheckOutcome {
  std::string key;
  bool pass = true;
  std::string note;
  std::optional<std::pair<std::string, std::string>> repro;
};

struct TaskOutput {
  std::vector<RunRecord> rows;
  std::vector<CheckOutcome> checks;
};

inline void merge_outputs(SuiteReport& rep, std::vector<TaskOutput>& slots) {
  constexpr std::size_t kReproCap = 8;
  for (auto& slot : slots) {
    for (auto& row : slot.rows) {
      if (row.ratio && (!rep.worst_ratio || *row.ratio < *rep.worst_ratio))
        rep.worst_ratio = *row.ratio;
      rep.rows.push_back(std::move(row));
    }
    for (auto& c : slot.checks) {
      ++rep.check_counts[c.key];
      if (c.pass) continue;
      ++rep.violations;
      ++rep.violation_counts[c.key];
      if (!c.note.empty()) rep.notes.push_back(c.note);
      if (c.repro && rep.repro_files.size() < kReproCap)
        rep.repro_files.push_back(std::move(*c.repro));
    }
  }
}

inline std::uint64_t task_seed(std::uint64_t base, std::uint64_t index) {
  return base * 0x9e3779b97f4a7c15ull + index + 1;
}

// direct scan of the prefix-local objective over k-subsets; the independent
// reference for the decomposition DP
inline std::pair<Rational, std::vector<int>> weighted_prefix_best(
    const PrefixSubproblem& sp, int k, const Rational& alpha, Direction dir,
    int force = -1) {
  const Graph& g = sp.prefix_graph;
  if (g.n > 24) throw input_error("prefix oracle limited to 24 vertices");
  const AlphaWeights w = alpha_weights(alpha);
  const bool maximize = dir == Direction::Max;
  bool have = false;
  long long best = 0;
  unsigned best_mask = 0;
  for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    if (force >= 0 && !((mask >> force) & 1)) continue;
    long long val = 0;
    for (int v = 0; v < g.n; ++v)
      if ((mask >> v) & 1) val += w.cross_w * sp.boundary_weight[v];
    for (auto [u, v] : g.edges) {
      int ends = ((mask >> u) & 1) + ((mask >> v) & 1);
      val += ends == 2 ? w.inside_w : ends == 1 ? w.cross_w : 0;
    }
    if (!have || (maximize ? val > best : val < best)) {
      have = true;
      best = val;
      best_mask = mask;
    }
  }
  if (!have) throw input_error("no feasible subset for the prefix oracle");
  std::vector<int> set;
  for (int v = 0; v < g.n; ++v)
    if ((best_mask >> v) & 1) set.push_back(v);
  return {w.to_value(best), set};
}

inline std::string combo_tag(const std::string& label, int k, const Rational& alpha,
                             Direction dir) {
  return label + " k=" + std::to_string(k) + " alpha=" + alpha.str() + " " +
         direction_name(dir);
}

}  // namespace detail

// Exact-vs-exact agreement, the greedy additive bound, and both
// approximation-scheme guarantees over a seeded instance sweep.
inline SuiteReport run_suite_approx(const SuiteOptions& opts) {
  const int pairs = opts.trials > 0 ? opts.trials : 48;
  const int max_n = std::max(6, std::min(opts.max_n, 14));
  const int max_k = std::max(1, std::min(opts.max_k, 4));
  const Rational alphas[] = {{0, 1}, {1, 4}, {1, 3}, {1, 2}, {3, 4}, {1, 1}};
  const Rational epsilons[] = {{1, 4}, {1, 2}};

  struct Combo {
    std::string label;
    Graph g;
    int k;
    Rational alpha;
    Direction dir;
  };
  std::vector<Combo> combos;
  for (int t = 0; t < pairs; ++t) {
    Graph g;
    std::string label;
    switch (t) {
      case 0: g = gen_complete(5); label = "k5"; break;
      case 1: g = gen_cycle(6); label = "c6"; break;
      case 2: g = gen_path(7); label = "p7"; break;
      case 3: g = gen_star(8); label = "star8"; break;
      case 4: g = gen_grid(3, 3); label = "grid-3x3"; break;
      default: {
        int n = 6 + (t * 7) % (max_n - 5);
        long long all = static_cast<long long>(n) * (n - 1) / 2;
        long long m = t % 3 == 0 ? std::min(all, static_cast<long long>(n) + n / 3)
                     : t % 3 == 1 ? all / 3
                                  : all / 2;
        std::uint64_t s = detail::task_seed(opts.seed, t);
        g = gen_random_gnm(n, m, s);
        label = "gnm-n" + std::to_string(n) + "-m" + std::to_string(m) + "-t" +
                std::to_string(t);
        break;
      }
    }
    int k = std::min(t % max_k + 1, g.n);
    for (const Rational& a : alphas)
      for (Direction dir : {Direction::Max, Direction::Min})
        combos.push_back({label, g, k, a, dir});
  }

  std::vector<detail::TaskOutput> slots(combos.size());
  parallel_for(static_cast<int>(combos.size()), opts.threads, [&](int i) {
    const Combo& c = combos[i];
    detail::TaskOutput& out = slots[i];
    Instance inst = make_instance(c.g, c.k, c.alpha, c.dir);
    const std::string tag = detail::combo_tag(c.label, c.k, c.alpha, c.dir);
    auto repro = [&] {
      return std::make_pair("repro-approx-" + std::to_string(i) + ".edges",
                            edge_list_string(c.g));
    };
    auto check = [&](const std::string& key, bool pass, const std::string& why) {
      detail::CheckOutcome co{key, pass, "", std::nullopt};
      if (!pass) {
        co.note = key + " failed: " + tag + ": " + why;
        co.repro = repro();
      }
      out.checks.push_back(std::move(co));
    };

    SolveSpec base;
    base.stable_timing = opts.stable_timing;

    SolveSpec s = base;
    s.algorithm = "brute-force";
    RunRecord bf = run_solve(c.label, inst, s);
    const Rational opt = bf.value;
    auto add = [&](RunRecord r) {
      r.oracle = opt;
      r.ratio = performance_ratio(r.value, opt, c.dir);
      out.rows.push_back(std::move(r));
    };
    add(bf);

    s = base;
    s.algorithm = "branch-and-bound";
    RunRecord bnb = run_solve(c.label, inst, s);
    check("exact-value-agree", bnb.value == opt,
          "bnb " + bnb.value.str() + " vs brute " + opt.str());
    check("exact-set-agree", bnb.vertices == bf.vertices, "selected sets differ");
    add(bnb);

    s = base;
    s.algorithm = "greedy";
    RunRecord gr = run_solve(c.label, inst, s);
    Rational slack = c.dir == Direction::Max ? opt - gr.value : gr.value - opt;
    Rational bound(2LL * c.k * c.k);
    check("greedy-additive", slack.sign() >= 0 && slack <= bound,
          "additive gap " + slack.str() + " exceeds " + bound.str());
    add(gr);

    for (const Rational& eps : epsilons) {
      s = base;
      s.algorithm = "fptas-general";
      s.epsilon = eps;
      if (c.alpha.sign() == 0) {
        bool rejected = false;
        try {
          run_solve(c.label, inst, s);
        } catch (const unsupported_error&) {
          rejected = true;
        }
        check("fptas-alpha-zero-rejected", rejected, "alpha = 0 was accepted");
        continue;
      }
      RunRecord fg = run_solve(c.label, inst, s);
      bool ok = c.dir == Direction::Max ? fg.value >= (Rational(1) - eps) * opt
                                        : fg.value <= (Rational(1) + eps) * opt;
      check("fptas-general-bound", ok,
            "eps=" + eps.str() + " value " + fg.value.str() + " vs opt " + opt.str());
      add(fg);
    }

    s = base;
    s.algorithm = "fptas-topdegree";
    s.epsilon = Rational(1, 2);
    if (c.dir == Direction::Max && !(c.alpha < Rational(1, 3))) {
      RunRecord td = run_solve(c.label, inst, s);
      check("topdeg-bound", td.value >= (Rational(1) - *s.epsilon) * opt,
            "value " + td.value.str() + " vs opt " + opt.str());
      add(td);
    } else {
      bool rejected = false;
      try {
        run_solve(c.label, inst, s);
      } catch (const unsupported_error&) {
        rejected = true;
      }
      check("topdeg-regime-rejected", rejected, "out-of-regime call was accepted");
    }
  });

  SuiteReport rep;
  detail::merge_outputs(rep, slots);
  return rep;
}

// Closed forms and the greedy-vs-clique ratio on the adversarial gap family,
// plus a small-k oracle spot check.
inline SuiteReport run_suite_gap(const SuiteOptions& opts) {
  const int tasks = static_cast<int>(opts.gap_margins.size()) + 1;
  std::vector<detail::TaskOutput> slots(tasks);
  parallel_for(tasks, opts.threads, [&](int i) {
    detail::TaskOutput& out = slots[i];
    if (i < static_cast<int>(opts.gap_margins.size())) {
      GapInstanceSpec spec{opts.gap_k, opts.gap_k, opts.gap_margins[i]};
      GapReport report = gap_report(spec);
      Instance inst = gen_gap_instance(spec);
      const std::string label =
          "gap-k" + std::to_string(spec.k) + "-mu" + spec.margin.str();
      auto repro = [&] {
        return std::make_pair("repro-gap-" + std::to_string(i) + ".edges",
                              edge_list_string(inst.graph));
      };
      auto check = [&](const std::string& key, bool pass, const std::string& why) {
        detail::CheckOutcome co{key, pass, "", std::nullopt};
        if (!pass) {
          co.note = key + " failed: " + label + ": " + why;
          co.repro = repro();
        }
        out.checks.push_back(std::move(co));
      };

      Rational hub_eval = cov_alpha(inst.graph, gap_hub_set(spec), inst.alpha);
      Rational clique_eval = cov_alpha(inst.graph, gap_clique_set(spec), inst.alpha);
      check("gap-hub-closed-form", hub_eval == report.hub_value,
            "measured " + hub_eval.str() + " vs " + report.hub_value.str());
      check("gap-clique-closed-form", clique_eval == report.clique_value,
            "measured " + clique_eval.str() + " vs " + report.clique_value.str());
      check("gap-ratio-loose",
            report.ratio < report.loose_bound + Rational(1, 100),
            "ratio " + report.ratio.str() + " vs bound " +
                (report.loose_bound + Rational(1, 100)).str());
      check("gap-ratio-asymptotic", report.ratio < report.asymptotic_bound,
            "ratio " + report.ratio.str() + " vs bound " +
                report.asymptotic_bound.str());

      auto synth = [&](const std::string& algo, const std::vector<int>& set,
                       const Rational& value) {
        RunRecord r;
        r.instance = label;
        r.algorithm = algo;
        r.k = inst.k;
        r.alpha = inst.alpha;
        r.mode = direction_name(inst.direction);
        r.value = value;
        r.vertices = set;
        r.branch = "fixed-selection";
        r.oracle = report.clique_value;
        r.ratio = performance_ratio(value, report.clique_value, inst.direction);
        return r;
      };
      out.rows.push_back(synth("hub-subset", gap_hub_set(spec), hub_eval));
      out.rows.push_back(synth("clique-subset", gap_clique_set(spec), clique_eval));

      SolveSpec s;
      s.algorithm = "greedy";
      s.stable_timing = opts.stable_timing;
      RunRecord gr = run_solve(label, inst, s);
      check("gap-greedy-hubs", gr.value == report.hub_value,
            "greedy " + gr.value.str() + " vs hub value " + report.hub_value.str());
      gr.oracle = report.clique_value;
      gr.ratio = performance_ratio(gr.value, report.clique_value, inst.direction);
      out.rows.push_back(std::move(gr));
      return;
    }

    // oracle spot check at small k
    GapInstanceSpec spec{4, 5, {1, 6}};
    GapReport report = gap_report(spec);
    Instance inst = gen_gap_instance(spec);
    SolveSpec s;
    s.algorithm = "brute-force";
    s.stable_timing = opts.stable_timing;
    RunRecord bf = run_solve("gap-spot-k4", inst, s);
    Rational expected = std::max(report.hub_value, report.clique_value);
    detail::CheckOutcome co{"gap-oracle-spot",
                            bf.value == expected,
                            "",
                            std::nullopt};
    if (!co.pass) {
      co.note = "gap-oracle-spot failed: optimum " + bf.value.str() + " vs closed form " +
                expected.str();
      co.repro = {std::make_pair(std::string("repro-gap-spot.edges"),
                                 edge_list_string(inst.graph))};
    }
    out.checks.push_back(std::move(co));
    bf.oracle = bf.value;
    bf.ratio = Rational(1);
    out.rows.push_back(std::move(bf));
  });

  SuiteReport rep;
  detail::merge_outputs(rep, slots);
  return rep;
}

// Decomposition DP against a direct subset scan on prefix subproblems, and
// the whole prefix pipeline against brute force on a 4x4 grid.
inline SuiteReport run_suite_subexp(const SuiteOptions& opts) {
  const int per_family = opts.trials > 0 ? opts.trials : 20;
  const int max_k = std::max(1, std::min(opts.max_k, 4));
  const int prefix_cap = std::min(opts.max_n, 14);
  const Rational max_alphas[] = {{1, 3}, {1, 2}, {1, 1}};
  const Rational min_alphas[] = {{0, 1}, {1, 6}, {1, 3}};
  const int instance_tasks = 2 * per_family;
  const int end_tasks = 2 * max_k;

  std::vector<detail::TaskOutput> slots(instance_tasks + end_tasks);
  parallel_for(instance_tasks + end_tasks, opts.threads, [&](int i) {
    detail::TaskOutput& out = slots[i];
    if (i < instance_tasks) {
      Graph g;
      std::string label;
      if (i < per_family) {
        static constexpr std::pair<int, int> dims[] = {
            {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 3}, {3, 4}, {4, 3}};
        auto [r, c] = dims[i % (sizeof dims / sizeof dims[0])];
        g = gen_grid(r, c);
        label = "grid-" + std::to_string(r) + "x" + std::to_string(c);
      } else {
        int n = 8 + i % 7;
        long long m = n + i % 5 + n / 4;
        g = gen_random_gnm(n, std::min(m, static_cast<long long>(n) * (n - 1) / 2),
                           detail::task_seed(opts.seed, i));
        label = "gnm-n" + std::to_string(n) + "-t" + std::to_string(i);
      }
      int k = std::min(i % max_k + 1, g.n);
      Direction dir = i % 2 == 0 ? Direction::Max : Direction::Min;
      Rational alpha = dir == Direction::Max ? max_alphas[(i / 2) % 3]
                                             : min_alphas[(i / 2) % 3];
      const std::string tag = detail::combo_tag(label, k, alpha, dir);
      auto check = [&](const std::string& key, bool pass, const std::string& why) {
        detail::CheckOutcome co{key, pass, "", std::nullopt};
        if (!pass) {
          co.note = key + " failed: " + tag + ": " + why;
          co.repro = {std::make_pair("repro-subexp-" + std::to_string(i) + ".edges",
                                     edge_list_string(g))};
        }
        out.checks.push_back(std::move(co));
      };

      OrderBy by = dir == Direction::Max ? OrderBy::NonIncreasing : OrderBy::NonDecreasing;
      DegreeOrdering ord = degree_ordering(g, by);
      for (int j = k; j <= std::min(g.n, prefix_cap); ++j) {
        PrefixSubproblem sp = make_prefix_subproblem(g, ord, j);
        bool valid = true;
        TreeDecomposition td;
        try {
          td = tree_decomposition_heuristic(sp.prefix_graph);
        } catch (const input_error& e) {
          valid = false;
          check("decomp-valid", false, e.what());
        }
        if (!valid) continue;
        check("decomp-valid", true, "");

        auto [free_opt, free_set] = detail::weighted_prefix_best(sp, k, alpha, dir);
        PrefixDpResult free_dp = dp_solve_prefix(sp, td, k, alpha, dir);
        check("prefix-dp-value", free_dp.solution.value == free_opt,
              "j=" + std::to_string(j) + " dp " + free_dp.solution.value.str() +
                  " vs scan " + free_opt.str());
        auto [forced_opt, forced_set] =
            detail::weighted_prefix_best(sp, k, alpha, dir, j - 1);
        PrefixDpResult forced_dp = dp_solve_prefix(sp, td, k, alpha, dir, j - 1);
        check("prefix-dp-forced", forced_dp.solution.value == forced_opt,
              "j=" + std::to_string(j) + " dp " + forced_dp.solution.value.str() +
                  " vs scan " + forced_opt.str());
      }
      return;
    }

    // end to end on the 4x4 grid under the default width budget
    int e = i - instance_tasks;
    int k = e % max_k + 1;
    Direction dir = e < max_k ? Direction::Max : Direction::Min;
    Rational alpha = dir == Direction::Max ? Rational{1, 2} : Rational{1, 6};
    Graph g = gen_grid(4, 4);
    Instance inst = make_instance(g, k, alpha, dir);
    const std::string label = "grid-4x4";
    SolveSpec s;
    s.algorithm = "subexponential";
    s.stable_timing = opts.stable_timing;
    s.with_oracle = true;
    RunRecord row = run_solve(label, inst, s);
    detail::CheckOutcome co{"subexp-end-to-end", row.value == *row.oracle, "", std::nullopt};
    if (!co.pass)
      co.note = "subexp-end-to-end failed: " + detail::combo_tag(label, k, alpha, dir) +
                ": got " + row.value.str() + " vs opt " + row.oracle->str();
    out.checks.push_back(std::move(co));
    out.rows.push_back(std::move(row));
  });

  SuiteReport rep;
  detail::merge_outputs(rep, slots);
  return rep;
}

// The prefix-restriction argument, observed: the position-lexicographic
// smallest optimum must dominate its own prefix graph.
inline SuiteReport run_suite_exchange(const SuiteOptions& opts) {
  const int trials = opts.trials > 0 ? opts.trials : 300;
  const int max_n = std::max(6, std::min(opts.max_n, 12));
  const int max_k = std::max(1, std::min(opts.max_k, 4));
  const Rational max_alphas[] = {{1, 3}, {1, 2}, {1, 1}};
  const Rational min_alphas[] = {{0, 1}, {1, 6}, {1, 3}};

  std::vector<detail::TaskOutput> slots(trials);
  parallel_for(trials, opts.threads, [&](int t) {
    detail::TaskOutput& out = slots[t];
    int n = 6 + t % (max_n - 5);
    long long all = static_cast<long long>(n) * (n - 1) / 2;
    long long m = t % 3 == 0 ? std::min(all, static_cast<long long>(n + t % 4))
                 : t % 3 == 1 ? all / 3
                              : all / 2;
    Graph g = gen_random_gnm(n, m, detail::task_seed(opts.seed, t));
    int k = std::min(t % max_k + 1, n);
    Direction dir = t % 2 == 0 ? Direction::Max : Direction::Min;
    Rational alpha =
        dir == Direction::Max ? max_alphas[(t / 2) % 3] : min_alphas[(t / 2) % 3];
    const std::string label = "gnm-n" + std::to_string(n) + "-m" + std::to_string(m) +
                              "-t" + std::to_string(t);
    Instance inst = make_instance(g, k, alpha, dir);
    ExchangeWitness w = check_exchange_lemma(inst);
    const std::string tag = detail::combo_tag(label, k, alpha, dir);

    auto check = [&](const std::string& key, bool pass, const std::string& why) {
      detail::CheckOutcome co{key, pass, "", std::nullopt};
      if (!pass) {
        co.note = key + " failed: " + tag + ": " + why;
        co.repro = {std::make_pair("repro-exchange-" + std::to_string(t) + ".edges",
                                   edge_list_string(g))};
      }
      out.checks.push_back(std::move(co));
    };
    check("exchange-dominated", w.dominated, "prefix j=" + std::to_string(w.j) +
                                                 " is not dominated by the optimum");
    check("exchange-j-range", w.j >= k && w.j <= n,
          "j=" + std::to_string(w.j) + " out of range");

    RunRecord r;
    r.instance = label;
    r.algorithm = "exchange-check";
    r.k = k;
    r.alpha = alpha;
    r.mode = direction_name(dir);
    r.value = cov_alpha(g, w.solution, alpha);
    r.vertices = w.solution;
    r.branch = "prefix-j=" + std::to_string(w.j);
    r.oracle = r.value;
    r.ratio = Rational(1);
    out.rows.push_back(std::move(r));
  });

  SuiteReport rep;
  detail::merge_outputs(rep, slots);
  return rep;
}

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "approx") return run_suite_approx(opts);
  if (name == "gap") return run_suite_gap(opts);
  if (name == "subexp") return run_suite_subexp(opts);
  if (name == "exchange") return run_suite_exchange(opts);
  throw input_error("unknown suite: " + name + " (expected approx, gap, subexp, exchange)");
}

}  // namespace fcgp
