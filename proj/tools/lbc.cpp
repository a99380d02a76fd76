// Command-line front end: solving, generators, certificates and benchmarks.
//
// Exit codes: 0 success / yes, 1 no, 2 usage or input error, 3 verification failure.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lbc/bench.hpp"
#include "lbc/graph.hpp"
#include "lbc/instance_io.hpp"
#include "lbc/interval_dp.hpp"
#include "lbc/oracles.hpp"
#include "lbc/reductions.hpp"
#include "lbc/witnesses.hpp"

namespace {

using namespace lbc;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kVerifyFailed = 3;

// An input problem that is not malformed input as such (e.g. oracle budget).
struct Refusal {
  std::string what;
};

InstanceFile load_instance(const std::string& path) {
  InstanceFile file = parse_instance(read_file(path));
  for (const auto& w : file.warnings) std::cerr << "warning: " << path << ": " << w << '\n';
  return file;
}

std::string ids(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

// ---- solve

struct SolveOptions {
  std::string file;
  bool subset = false;
  bool branch = false;
  int max_subset_edges = OracleBudget{}.max_subset_edges;
  long long max_nodes = OracleBudget{}.max_branch_nodes;
  std::string cut_out;
};

enum class SolveMode { kAuto, kDp, kOracle };

int run_solve(const SolveOptions& opt, SolveMode mode) {
  const InstanceFile file = load_instance(opt.file);
  const Instance& inst = file.instance;
  const bool dp_ok = file.model && file.model_issue.empty();
  if (mode == SolveMode::kDp && !dp_ok) {
    throw InputError(file.model ? "interval model rejected: " + file.model_issue : "no interval lines in instance");
  }
  if (mode == SolveMode::kAuto && !dp_ok) {
    std::cerr << "note: " << (file.model ? "interval model rejected (" + file.model_issue + ")" : "no interval model")
              << "; using the branching oracle\n";
  }

  std::string method;
  int cost = 0;
  CutSet cut;
  if (mode != SolveMode::kOracle && dp_ok) {
    const DpResult r = solve_interval(inst, *file.model);
    method = "dp";
    cost = r.cost;
    cut = r.cut;
  } else {
    OracleBudget budget;
    budget.max_subset_edges = opt.max_subset_edges;
    budget.max_branch_nodes = opt.max_nodes;
    const bool subset = mode == SolveMode::kOracle && opt.subset && !opt.branch;
    const OracleOutcome o = subset ? oracle_subset(inst, budget) : oracle_branch(inst, budget);
    method = subset ? "oracle-subset" : "oracle-branch";
    if (!o.solved()) throw Refusal{method + " gave up after " + std::to_string(o.nodes) + " nodes; raise the budget"};
    cost = o.cost;
    cut = o.cut;
  }

  const CutVerdict v = verify_cut(inst, cut);
  if (!v.valid || static_cast<int>(cut.size()) != cost) {
    throw VerificationError("solver cut failed verification (size " + std::to_string(cut.size()) + ", cost " +
                            std::to_string(cost) + ", distance " + v.distance.to_string() + ")");
  }
  const bool yes = cost <= inst.beta;
  std::cout << "method " << method << '\n'
            << "cost " << cost << '\n'
            << "beta " << inst.beta << '\n'
            << "decision " << (yes ? "yes" : "no") << '\n'
            << "distance " << v.distance.to_string() << '\n'
            << "verified yes\n"
            << "cut " << cut.size() << '\n';
  if (opt.cut_out.empty()) {
    std::cout << serialize_cut(cut);
  } else {
    write_file(opt.cut_out, serialize_cut(cut));
  }
  return yes ? kYes : kNo;
}

// ---- gen

struct GenOptions {
  std::string input;
  bool planted = false;
  std::optional<int> k;
  int n = 6;
  int m = 8;
  int nu = 3;
  std::uint64_t seed = 1;
  std::string prefix = "out";
};

int run_gen(const GenOptions& opt, ReductionKind kind) {
  ReductionOutput out;
  std::optional<CutSet> forward;
  SourceGraph src;
  if (opt.planted) {
    const int k = opt.k.value_or(3);
    if (kind == ReductionKind::kPathwidth) {
      const PlantedClique pc = planted_clique(opt.n, opt.m, k, opt.seed);
      out = gen_pw(pc.instance);
      forward = forward_cut_pw(out, pc.clique);
      src = {pc.instance.graph(), k, {}};
      std::cout << "planted-clique " << ids(pc.clique) << '\n';
    } else {
      const PlantedMulticolored pm = planted_multicolored_clique(k, opt.nu, opt.m, opt.seed);
      out = gen_fvs(pm.instance);
      forward = forward_cut_fvs(out, pm.clique);
      src = {pm.instance.graph(), k, pm.instance.parts()};
      std::cout << "planted-clique " << ids(pm.clique) << '\n';
    }
  } else {
    if (opt.input.empty()) throw InputError("gen needs --input or --planted");
    src = parse_source_graph(read_file(opt.input));
    if (opt.k) src.k = opt.k;
    if (kind == ReductionKind::kPathwidth) {
      if (!src.k) throw InputError("clique size missing: pass -k or add a 'k' line");
      out = gen_pw(CliqueInstance::make(src.graph, *src.k));
    } else {
      if (src.parts.empty()) throw InputError("multicolored source needs 'g' part lines");
      out = gen_fvs(MulticoloredCliqueInstance::make(src.graph, src.parts));
    }
  }

  const std::string inst_path = opt.prefix + ".gr";
  write_file(inst_path, serialize_instance(from_reduction(out)));
  std::cout << "instance " << inst_path << '\n'
            << "vertices " << out.instance.graph.vertex_count() << '\n'
            << "edges " << out.instance.graph.edge_count() << '\n'
            << "beta " << out.instance.beta << '\n'
            << "lambda " << out.instance.lambda << '\n';
  if (kind == ReductionKind::kPathwidth) {
    const PathDecomposition pd = build_pw_witness(out);
    const DecompositionVerdict v = verify_path_decomposition(out.instance.graph, pd);
    if (!v.valid || v.width > 2 * out.params.k + 11) throw VerificationError("path decomposition witness rejected");
    write_file(opt.prefix + ".pd", serialize_pathdecomp(pd));
    std::cout << "pathdecomp " << opt.prefix << ".pd width " << v.width << '\n';
  } else {
    const FvsWitness w = build_fvs_witness(out);
    if (!verify_fvs(out.instance.graph, w)) throw VerificationError("feedback vertex witness rejected");
    write_file(opt.prefix + ".fvs", serialize_fvs(w));
    std::cout << "fvs " << opt.prefix << ".fvs size " << w.vertices.size() << '\n';
  }
  if (opt.planted) {
    write_file(opt.prefix + ".src", serialize_source_graph(src));
    const CutVerdict v = verify_cut(out.instance, *forward);
    if (!v.valid || static_cast<int>(forward->size()) != out.instance.beta) {
      throw VerificationError("forward cut rejected");
    }
    write_file(opt.prefix + ".cut", serialize_cut(*forward));
    std::cout << "source " << opt.prefix << ".src\n"
              << "cut " << opt.prefix << ".cut size " << forward->size() << '\n';
  }
  return kYes;
}

// ---- forward-cut / decode

int run_forward_cut(const std::string& path, const std::vector<int>& clique, const std::string& out_path) {
  const ReductionOutput out = to_reduction(load_instance(path));
  std::vector<Vertex> vs;
  for (int x : clique) vs.push_back(x - 1);
  if (out.params.kind == ReductionKind::kPathwidth && !out.source_parts.empty()) {
    // forward_cut_pw wants index order
    const auto& order = out.source_parts[0];
    auto rank = [&order](Vertex v) { return std::find(order.begin(), order.end(), v) - order.begin(); };
    std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return rank(a) < rank(b); });
  }
  const CutSet cut = out.params.kind == ReductionKind::kPathwidth ? forward_cut_pw(out, vs) : forward_cut_fvs(out, vs);
  if (!verify_cut(out.instance, cut).valid) throw VerificationError("forward cut rejected");
  emit(out_path, serialize_cut(cut));
  return kYes;
}

int run_decode(const std::string& path, const std::string& cut_path) {
  const ReductionOutput out = to_reduction(load_instance(path));
  const CutSet cut = parse_cut(read_file(cut_path), out.instance.graph.vertex_count());
  const auto clique = out.params.kind == ReductionKind::kPathwidth ? decode_pw(out, cut) : decode_fvs(out, cut);
  if (!clique) {
    std::cout << "clique none\n";
    return kNo;
  }
  std::cout << "clique " << ids(*clique) << '\n';
  return kYes;
}

void require_kind(const ReductionOutput& out, ReductionKind kind) {
  if (out.params.kind != kind) throw InputError("instance was generated by the other reduction");
}

// ---- verify

int run_verify_cut(const std::string& path, const std::string& cut_path) {
  const InstanceFile file = load_instance(path);
  const Instance& inst = file.instance;
  const CutSet cut = parse_cut(read_file(cut_path), inst.graph.vertex_count());
  for (const Edge& e : cut) {
    if (!inst.graph.has_edge(e.u, e.v)) {
      throw InputError("cut edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " is not in the graph");
    }
  }
  const CutVerdict v = verify_cut(inst, cut);
  std::cout << "valid " << (v.valid ? "yes" : "no") << '\n'
            << "size " << cut.size() << '\n'
            << "within-beta " << (static_cast<int>(cut.size()) <= inst.beta ? "yes" : "no") << '\n'
            << "distance " << v.distance.to_string() << '\n';
  if (!v.valid) std::cout << "witness " << ids(v.witness) << '\n';
  return v.valid ? kYes : kNo;
}

int run_verify_fvs(const std::string& path, const std::string& w_path) {
  const InstanceFile file = load_instance(path);
  const FvsWitness w = parse_fvs(read_file(w_path), file.instance.graph.vertex_count());
  const bool ok = verify_fvs(file.instance.graph, w);
  std::cout << "valid " << (ok ? "yes" : "no") << '\n' << "size " << w.vertices.size() << '\n';
  return ok ? kYes : kNo;
}

std::string_view fault_name(DecompositionFault f) {
  switch (f) {
    case DecompositionFault::kNone: return "none";
    case DecompositionFault::kUnknownVertex: return "unknown-vertex";
    case DecompositionFault::kUncoveredVertex: return "uncovered-vertex";
    case DecompositionFault::kUncoveredEdge: return "uncovered-edge";
    case DecompositionFault::kNotContiguous: return "not-contiguous";
  }
  return "?";
}

int run_verify_pathdecomp(const std::string& path, const std::string& pd_path) {
  const InstanceFile file = load_instance(path);
  const PathDecomposition pd = parse_pathdecomp(read_file(pd_path), file.instance.graph.vertex_count());
  const DecompositionVerdict v = verify_path_decomposition(file.instance.graph, pd);
  std::cout << "valid " << (v.valid ? "yes" : "no") << '\n' << "bags " << pd.bags.size() << '\n';
  if (v.valid) {
    std::cout << "width " << v.width << '\n';
  } else if (v.fault == DecompositionFault::kUncoveredEdge) {
    std::cout << "fault " << fault_name(v.fault) << ' ' << v.edge.u + 1 << ' ' << v.edge.v + 1 << '\n';
  } else {
    std::cout << "fault " << fault_name(v.fault) << ' ' << v.vertex + 1 << '\n';
  }
  return v.valid ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Length-bounded s-t cuts: exact solving on proper interval graphs, hardness generators, certificates"};
  app.require_subcommand(1);
  std::function<int()> action;

  // solve
  SolveOptions solve_opt;
  bool auto_flag = false;
  auto* solve = app.add_subcommand("solve", "Minimum length-bounded cut of an instance");
  solve->add_flag("--auto", auto_flag, "DP when a valid interval model is present, otherwise the oracle (default)");
  solve->add_option("file", solve_opt.file, "Instance file");
  solve->add_option("-o,--cut-out", solve_opt.cut_out, "Write the cut here instead of stdout");
  auto* solve_dp = solve->add_subcommand("dp", "Interval dynamic program");
  solve_dp->add_option("file", solve_opt.file, "Instance file")->required();
  solve_dp->add_option("-o,--cut-out", solve_opt.cut_out, "Write the cut here instead of stdout");
  auto* solve_oracle = solve->add_subcommand("oracle", "Exact search on any graph");
  solve_oracle->add_option("file", solve_opt.file, "Instance file")->required();
  solve_oracle->add_option("-o,--cut-out", solve_opt.cut_out, "Write the cut here instead of stdout");
  auto* subset_flag = solve_oracle->add_flag("--subset", solve_opt.subset, "Enumerate edge subsets");
  solve_oracle->add_flag("--branch", solve_opt.branch, "Branch on short paths (default)")->excludes(subset_flag);
  for (auto* cmd : {solve, solve_oracle}) {
    cmd->add_option("--max-edges", solve_opt.max_subset_edges, "Subset oracle: largest edge count");
    cmd->add_option("--max-nodes", solve_opt.max_nodes, "Branching oracle: node budget");
  }
  solve->require_subcommand(0, 1);
  solve->callback([&] {
    if (solve_dp->parsed()) {
      action = [&] { return run_solve(solve_opt, SolveMode::kDp); };
    } else if (solve_oracle->parsed()) {
      action = [&] { return run_solve(solve_opt, SolveMode::kOracle); };
    } else {
      if (solve_opt.file.empty()) throw CLI::RequiredError("file");
      action = [&] { return run_solve(solve_opt, SolveMode::kAuto); };
    }
  });

  // gen
  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Hardness-reduction instances with witnesses");
  gen->require_subcommand(1);
  for (auto [name, kind, help] : {std::tuple{"pw", ReductionKind::kPathwidth, "From Clique; bounded pathwidth"},
                                  std::tuple{"fvs", ReductionKind::kFeedbackVertex,
                                             "From Multicolored Clique; bounded feedback vertex number"}}) {
    auto* cmd = gen->add_subcommand(name, help);
    cmd->add_option("-i,--input", gen_opt.input, "Source graph file");
    cmd->add_flag("--planted", gen_opt.planted, "Random source graph with a planted clique");
    cmd->add_option("-k", gen_opt.k, "Clique size");
    cmd->add_option("-n", gen_opt.n, "Planted pw: source vertices");
    cmd->add_option("-m", gen_opt.m, "Planted: source edges");
    cmd->add_option("--nu", gen_opt.nu, "Planted fvs: part size");
    cmd->add_option("--seed", gen_opt.seed, "Planted: seed");
    cmd->add_option("-o,--prefix", gen_opt.prefix, "Output prefix (.gr, .pd/.fvs, .src, .cut)");
    cmd->callback([&action, &gen_opt, kind] { action = [&gen_opt, kind] { return run_gen(gen_opt, kind); }; });
  }

  // forward-cut and decode
  std::string red_file, red_cut, red_out;
  std::vector<int> clique;
  auto* fwd = app.add_subcommand("forward-cut", "Cut built from a source clique");
  auto* dec = app.add_subcommand("decode", "Source clique read off a cut");
  fwd->require_subcommand(1);
  dec->require_subcommand(1);
  for (auto [name, kind] : {std::pair{"pw", ReductionKind::kPathwidth}, std::pair{"fvs", ReductionKind::kFeedbackVertex}}) {
    auto* f = fwd->add_subcommand(name, "");
    f->add_option("file", red_file, "Generated instance")->required();
    f->add_option("--clique", clique, "Source ids (1-indexed), comma separated")->required()->delimiter(',');
    f->add_option("-o,--out", red_out, "Cut file (stdout if omitted)");
    f->callback([&, kind] {
      action = [&, kind] {
        require_kind(to_reduction(load_instance(red_file)), kind);
        return run_forward_cut(red_file, clique, red_out);
      };
    });
    auto* d = dec->add_subcommand(name, "");
    d->add_option("file", red_file, "Generated instance")->required();
    d->add_option("-f,--cut", red_cut, "Cut file")->required();
    d->callback([&, kind] {
      action = [&, kind] {
        require_kind(to_reduction(load_instance(red_file)), kind);
        return run_decode(red_file, red_cut);
      };
    });
  }

  // verify
  std::string ver_file, ver_cert;
  auto* verify = app.add_subcommand("verify", "Check a certificate against an instance");
  verify->require_subcommand(1);
  auto* v_cut = verify->add_subcommand("cut", "Length-bounded cut");
  auto* v_fvs = verify->add_subcommand("fvs", "Feedback vertex set");
  auto* v_pd = verify->add_subcommand("pathdecomp", "Path decomposition");
  for (auto* cmd : {v_cut, v_fvs, v_pd}) {
    cmd->add_option("file", ver_file, "Instance file")->required();
    cmd->add_option("-f,--cert", ver_cert, "Certificate file")->required();
  }
  v_cut->callback([&] { action = [&] { return run_verify_cut(ver_file, ver_cert); }; });
  v_fvs->callback([&] { action = [&] { return run_verify_fvs(ver_file, ver_cert); }; });
  v_pd->callback([&] { action = [&] { return run_verify_pathdecomp(ver_file, ver_cert); }; });

  // random-pig
  RandomIntervalSpec pig;
  std::vector<int> pig_beta{0, 4}, pig_lambda{1, 6};
  bool unordered = false;
  std::string pig_out;
  auto* rpig = app.add_subcommand("random-pig", "Random proper interval instance (with interval lines)");
  rpig->add_option("-n", pig.n, "Vertices");
  rpig->add_option("--span", pig.span, "Starts drawn from [0, span]");
  rpig->add_option("--beta", pig_beta, "Budget range lo hi")->expected(2);
  rpig->add_option("--lambda", pig_lambda, "Length bound range lo hi")->expected(2);
  rpig->add_flag("--unordered", unordered, "Allow start(s) > start(t)");
  rpig->add_option("--seed", pig.seed, "Seed");
  rpig->add_option("-o,--out", pig_out, "Output file (stdout if omitted)");
  rpig->callback([&] {
    action = [&] {
      pig.beta_range = {pig_beta[0], pig_beta[1]};
      pig.lambda_range = {pig_lambda[0], pig_lambda[1]};
      pig.ordered_terminals = !unordered;
      RandomInterval r = random_proper_interval_instance(pig);
      InstanceFile file;
      file.instance = std::move(r.instance);
      file.model = std::move(r.model);
      file.comments.push_back("random proper interval instance, seed " + std::to_string(pig.seed));
      emit(pig_out, serialize_instance(file));
      return kYes;
    };
  });

  // bench
  BenchConfig bench_cfg;
  std::string bench_out;
  bool no_single = false;
  auto* bench = app.add_subcommand("bench", "Timing table for the interval DP (tab separated)");
  bench->add_option("--sizes", bench_cfg.sizes, "Vertex counts")->delimiter(',');
  bench->add_option("--reps", bench_cfg.reps, "Instances per size");
  bench->add_option("--seed", bench_cfg.seed, "Base seed");
  bench->add_option("-j,--threads", bench_cfg.threads, "Worker threads");
  bench->add_option("--lambda", bench_cfg.lambda, "Length bound (0: n/8)");
  bench->add_option("--span-per-vertex", bench_cfg.span_per_vertex, "Start range per vertex");
  bench->add_flag("--no-single-frontier", no_single, "Skip the single-frontier comparison");
  bench->add_option("-o,--out", bench_out, "Output file (stdout if omitted)");
  bench->callback([&] {
    action = [&] {
      bench_cfg.single_frontier = !no_single;
      const auto rows = run_bench(bench_cfg);
      emit(bench_out, format_bench_table(rows));
      for (const auto& r : rows) {
        if (!r.verified) throw VerificationError("bench cut failed verification at n = " + std::to_string(r.n));
      }
      return kYes;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  try {
    return action ? action() : kInputError;
  } catch (const Refusal& e) {
    std::cerr << "error: " << e.what << '\n';
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
