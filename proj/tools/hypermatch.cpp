#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hypermatch/constructions.hpp"
#include "hypermatch/hg_io.hpp"
#include "hypermatch/optimize.hpp"
#include "hypermatch/report.hpp"
#include "hypermatch/rounding.hpp"
#include "hypermatch/shifting.hpp"
#include "hypermatch/stability.hpp"
#include "hypermatch/verify.hpp"

using namespace hypermatch;

namespace {

constexpr int kExitBudget = 2;
constexpr int kExitMismatch = 3;

struct Globals {
  std::uint64_t seed = 0;
  std::string format = "json";
  long budget_ms = 0;
};

VertexSet prefix(int count) {
  VertexSet out(count);
  for (int i = 0; i < count; ++i) out[i] = i + 1;
  return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

template <class W>
Json witness_json(const W& w);

template <>
Json witness_json(const Matching& m) {
  return m.edges;
}
template <>
Json witness_json(const VertexCover& c) {
  return c.vertices;
}
template <>
Json witness_json(const VertexSet& s) {
  return s;
}

template <class W>
int emit_exact(const char* what, const ExactResult<W>& r) {
  print_json(Json{{"what", what},
                  {"value", r.value},
                  {"status", to_string(r.status)},
                  {"nodes", r.nodes},
                  {"witness", witness_json(r.witness)}});
  return r.status == SolveStatus::budget_exceeded ? kExitBudget : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal hypergraph matching toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--budget-ms", g.budget_ms, "Time budget in milliseconds (0 = none)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an extremal family");
  std::string family;
  int gn = 0, gk = 3, gs = 1, gi = 2;
  double gp = 0.5;
  std::string gout;
  gen->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"cover", "clique", "hm", "a", "complete", "random"}));
  gen->add_option("--n", gn)->required();
  gen->add_option("--k", gk);
  gen->add_option("--s", gs);
  gen->add_option("--i", gi);
  gen->add_option("--p", gp, "Edge probability for --family random");
  gen->add_option("--out", gout);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for (n, k, s)");
  int bn = 0, bk = 3, bs = 1;
  bounds->add_option("--n", bn)->required();
  bounds->add_option("--k", bk);
  bounds->add_option("--s", bs)->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Matching, cover and independence numbers");
  std::string what, sin;
  bool exact_lp = false, exhaustive_solve = false;
  std::optional<int> limit;
  solve->add_option("--what", what)
      ->required()
      ->check(CLI::IsMember({"nu", "tau", "alpha", "nustar", "taustar", "duality"}));
  solve->add_option("--in", sin)->required();
  solve->add_flag("--exact-lp", exact_lp, "Exact rational LP");
  solve->add_flag("--exhaustive", exhaustive_solve, "Unbounded enumeration oracle");
  solve->add_option("--limit", limit);

  // shift
  auto* shift = app.add_subcommand("shift", "Stabilize under all (i,j)-shifts");
  std::string shin, shout, trace_path;
  shift->add_option("--in", shin)->required();
  shift->add_option("--out", shout)->required();
  shift->add_option("--trace", trace_path);

  // closeness
  auto* close = app.add_subcommand("closeness", "Distance to the cover or clique family");
  std::string cin, target = "cover";
  int cs = 1;
  bool exhaustive_close = false;
  close->add_option("--in", cin)->required();
  close->add_option("--target", target)->check(CLI::IsMember({"cover", "clique"}));
  close->add_option("--s", cs)->required();
  close->add_flag("--exhaustive", exhaustive_close);

  // crossover
  auto* cross = app.add_subcommand("crossover", "Clique versus HM bound crossover");
  int xn = 0, s_lo = 1, s_hi = 0;
  bool table = false;
  cross->add_option("--n", xn)->required();
  cross->add_flag("--table", table);
  cross->add_option("--s-lo", s_lo);
  cross->add_option("--s-hi", s_hi, "Default: largest s with 3s + 2 <= n");

  // round
  auto* round = app.add_subcommand("round", "Fractional-to-integral matching pipeline");
  std::string rin, rreport, strategy = "greedy";
  int rs = 1, rt = 0;
  bool rational = false;
  round->add_option("--in", rin)->required();
  round->add_option("--s", rs)->required();
  round->add_option("--t", rt, "Default: max(2, round(n^0.2))");
  round->add_option("--strategy", strategy)->check(CLI::IsMember({"greedy", "nibble"}));
  round->add_option("--report", rreport);
  round->add_flag("--exact-lp", rational);

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive extremal search at tiny n");
  int vn = 0, vk = 3, vs = 1;
  std::size_t cap = 8;
  std::string constraint = "nu_le_s_and_tau_gt_s";
  bool pruned = false, serial = false;
  verify->add_option("--n", vn)->required();
  verify->add_option("--k", vk);
  verify->add_option("--s", vs)->required();
  verify->add_option("--constraint", constraint)
      ->check(CLI::IsMember({"nu_le_s", "nu_le_s_and_tau_gt_s"}));
  verify->add_flag("--pruned", pruned);
  verify->add_flag("--serial", serial);
  verify->add_option("--witness-cap", cap);

  CLI11_PARSE(app, argc, argv);

  try {
    const Format fmt = format_from_string(g.format);
    const std::chrono::milliseconds budget(g.budget_ms);

    if (*gen) {
      Hypergraph h(gn, gk);
      if (family == "cover") h = cover_family(gn, gk, gs, prefix(gs));
      if (family == "clique") h = clique_family(gn, gk, gs, prefix(gk * (gs + 1) - 1));
      if (family == "hm") h = hm_family(gn, gk, gs);
      if (family == "a") h = a_family(gn, gk, gs, gi);
      if (family == "complete") h = complete_hypergraph(gn, gk);
      if (family == "random") h = random_hypergraph(gn, gk, gp, g.seed);
      if (gout.empty()) {
        write_hg(std::cout, h);
      } else {
        write_hg_file(gout, h);
      }
      return 0;
    }

    if (*bounds) {
      const BoundReport r = bound_report(bn, bk, bs);
      if (fmt == Format::tsv) {
        std::cout << tsv_header(r) << '\n' << to_tsv(r) << '\n';
      } else {
        print_json(to_json(r));
      }
      return 0;
    }

    if (*solve) {
      const Hypergraph h = read_hg_file(sin);
      const LpMode mode = exact_lp ? LpMode::rational : LpMode::floating;
      ExactOptions opts;
      opts.limit = limit;
      opts.exhaustive = exhaustive_solve;
      opts.budget.time = budget;
      if (what == "nu") return emit_exact("nu", nu_exact(h, opts));
      if (what == "tau") return emit_exact("tau", tau_exact(h, opts));
      if (what == "alpha") return emit_exact("alpha", alpha_exact(h, opts));
      if (what == "nustar") print_json(to_json(nu_frac(h, mode)));
      if (what == "taustar") print_json(to_json(tau_frac(h, mode)));
      if (what == "duality") print_json(to_json(check_duality(h, mode)));
      return 0;
    }

    if (*shift) {
      const Hypergraph h = read_hg_file(shin);
      const Stabilized st = stabilize(h);
      write_hg_file(shout, st.graph);
      if (!trace_path.empty()) {
        std::ofstream(trace_path) << trace_to_json(st.trace).dump(2) << '\n';
      }
      print_json(Json{{"edges", st.graph.edge_count()},
                      {"rounds", st.trace.rounds},
                      {"potential_before", potential(h)},
                      {"potential_after", potential(st.graph)},
                      {"stable", is_stable(st.graph)}});
      return 0;
    }

    if (*close) {
      const Hypergraph h = read_hg_file(cin);
      const SearchMode mode = exhaustive_close ? SearchMode::exhaustive : SearchMode::heuristic;
      const ClosenessReport r = target == "cover" ? closeness_to_cover(h, cs, mode)
                                                  : closeness_to_clique(h, cs, mode);
      if (fmt == Format::tsv) {
        std::cout << to_tsv(r) << '\n';
      } else {
        print_json(to_json(r));
      }
      return 0;
    }

    if (*cross) {
      if (table) {
        const int hi = s_hi > 0 ? s_hi : (xn - 2) / 3;
        const BoundTable t = bound_table(xn, s_lo, hi);
        if (fmt == Format::json) {
          print_json(to_json(t));
        } else {
          std::cout << to_tsv(t);
          std::cout << "# clique_overtakes_at\t"
                    << (t.clique_overtakes_at ? std::to_string(*t.clique_overtakes_at) : "none")
                    << '\n';
        }
        return 0;
      }
      const double root = crossover_root_bisection();
      std::cout.precision(12);
      std::cout << "n\tf(5/18)\troot_bisection\troot_closed_form\troot*n\n"
                << xn << '\t' << crossover_f(5.0 / 18) << '\t' << root << '\t'
                << crossover_root_closed_form() << '\t' << root * xn << '\n';
      return 0;
    }

    if (*round) {
      const Hypergraph h = read_hg_file(rin);
      PipelineOptions opts;
      opts.strategy = match_strategy_from_string(strategy);
      opts.extract.mode = rational ? LpMode::rational : LpMode::floating;
      const int t = rt > 0 ? rt : default_t(h.n());
      const PipelineResult r = pipeline(h, rs, t, g.seed, opts);
      const Json j = to_json(r);
      if (!rreport.empty()) std::ofstream(rreport) << j.dump(2) << '\n';
      print_json(Json{{"success", r.success},
                      {"matching_size", r.matching.size()},
                      {"s", r.s},
                      {"t", r.t},
                      {"r", r.r},
                      {"stage", r.stage},
                      {"failure", r.failure},
                      {"matching", r.matching.edges}});
      return 0;
    }

    if (*verify) {
      VerifyOptions opts;
      opts.pruned = pruned;
      opts.exec = serial ? Execution::serial : Execution::parallel;
      opts.witness_cap = cap;
      opts.budget = budget;
      const VerifyResult r = verify_extremal(vn, vk, vs, constraint_from_string(constraint), opts);
      if (fmt == Format::tsv) {
        std::cout << to_tsv(r) << '\n';
      } else {
        print_json(to_json(r));
      }
      if (!r.complete) {
        std::cerr << "budget exceeded after " << r.searched << " "
                  << (r.method == "pruned" ? "nodes" : "graphs") << '\n';
        return kExitBudget;
      }
      if (!r.matches_bound) {
        std::cerr << "bound mismatch: found " << r.max_edges_found << ", expected " << r.expected
                  << '\n';
        return kExitMismatch;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
