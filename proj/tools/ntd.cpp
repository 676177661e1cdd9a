// Command line front end: generators, solvers, verification, the hardness
// constructions and the scaling bench, over 1-based edge-list documents.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ntd/approx.hpp"
#include "ntd/gadget.hpp"
#include "ntd/generators.hpp"
#include "ntd/io.hpp"
#include "ntd/oracle.hpp"
#include "ntd/pig.hpp"
#include "ntd/reductions.hpp"
#include "ntd/verify.hpp"

namespace {

using namespace ntd;

// 0 ok, 1 usage, 2 parse, 3 precondition, 4 internal, 5 verification failed
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;
constexpr int kExitVerifyFailed = 5;

int exit_code_for(errc code) {
  switch (code) {
    case errc::parse_error:
    case errc::index_out_of_range:
    case errc::self_loop:
    case errc::duplicate_edge:
      return kExitParse;
    case errc::bad_params:
      return kExitUsage;
    case errc::internal:
      return kExitInternal;
    default:
      return kExitPrecondition;
  }
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot open " + path + " for writing");
  out << text;
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream field(token);
    int value = 0;
    if (!(field >> value)) fail(errc::bad_params, "bad id list: " + text);
    out.push_back(value);
  }
  return out;
}

VertexSet set_from_1based(const Graph& g, const std::vector<int>& ids) {
  VertexSet s(g.vertex_count());
  for (int id : ids) {
    if (id < 1 || id > g.vertex_count())
      fail(errc::index_out_of_range, "id " + std::to_string(id));
    s.insert(id - 1);
  }
  return s;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_gen(const std::string& kind, const std::vector<std::string>& params,
            const std::string& out_path, bool no_shuffle) {
  auto need = [&](size_t count) {
    if (params.size() != count)
      fail(errc::bad_params,
           kind + " expects " + std::to_string(count) + " parameter(s)");
  };
  auto as_int = [](const std::string& s) {
    try {
      return std::stoi(s);
    } catch (...) {
      fail(errc::bad_params, "not an integer: " + s);
    }
  };
  auto as_double = [](const std::string& s) {
    try {
      return std::stod(s);
    } catch (...) {
      fail(errc::bad_params, "not a number: " + s);
    }
  };
  auto as_seed = [](const std::string& s) {
    try {
      return static_cast<std::uint64_t>(std::stoull(s));
    } catch (...) {
      fail(errc::bad_params, "not a seed: " + s);
    }
  };

  Graph g;
  if (kind == "path") {
    need(1);
    g = gen_path(as_int(params[0]));
  } else if (kind == "cycle") {
    need(1);
    g = gen_cycle(as_int(params[0]));
  } else if (kind == "star") {
    need(1);
    g = gen_star(as_int(params[0]));
  } else if (kind == "random-gnp") {
    need(3);
    g = gen_gnp(as_int(params[0]), as_double(params[1]), as_seed(params[2]));
  } else if (kind == "random-pig") {
    need(3);
    g = gen_proper_interval(as_int(params[0]), as_double(params[1]),
                            as_seed(params[2]), !no_shuffle);
  } else if (kind == "random-subcubic") {
    need(2);
    g = gen_subcubic(as_int(params[0]), as_seed(params[1]));
  } else {
    fail(errc::bad_params, "unknown generator kind: " + kind);
  }
  write_text(out_path, serialize_graph(g));
  return 0;
}

int cmd_solve(const std::string& input, const std::string& algo,
              const std::string& require, int limit, bool trace, bool strict) {
  Graph g = parse_graph(read_text(input));
  if (g.vertex_count() == 0) fail(errc::bad_params, "empty graph");

  auto t0 = std::chrono::steady_clock::now();
  VertexSet result(g.vertex_count());

  if (algo == "exact" && !require.empty()) {
    VertexSet required = set_from_1based(g, parse_id_list(require));
    result = exact_min_with_required(g, SetKind::ntd, required, limit).set;
  } else {
    if (!require.empty())
      fail(errc::bad_params, "--require is only available with --algo exact");
    // solve per connected component; single vertices have no NTD-set
    for (const auto& comp : components(g)) {
      if (comp.size() == 1)
        fail(errc::isolated_vertex,
             "vertex " + std::to_string(comp[0] + 1) + " is isolated");
      if (comp.size() == 2) {
        result.insert(comp[0]);
        result.insert(comp[1]);
        continue;
      }
      auto sub =
          induced_subgraph(g, VertexSet::from_members(g.vertex_count(), comp));
      VertexSet local(sub.graph.vertex_count());
      if (algo == "exact") {
        local = exact_min(sub.graph, SetKind::ntd, limit).set;
      } else if (algo == "pig") {
        PigResult pr = mntds_pig(sub.graph);
        local = pr.set;
        if (trace) std::cout << pr.trace.to_text();
      } else if (algo == "approx") {
        local = strict ? approx_ntds_strict(sub.graph).set
                       : approx_ntds(sub.graph);
      } else {
        fail(errc::bad_params, "unknown algorithm: " + algo);
      }
      for (Vertex v : local.members()) result.insert(sub.to_orig[v]);
    }
  }
  double ms = ms_since(t0);
  bool ok = is_ntd(g, result).pass;
  std::cout << serialize_result(make_result(algo, g, result, ok, ms));
  return ok ? 0 : kExitInternal;
}

int cmd_verify(const std::string& input, const std::string& kind_name,
               const std::string& set_arg, const std::string& result_path) {
  Graph g = parse_graph(read_text(input));
  SetKind kind;
  if (kind_name == "dominating")
    kind = SetKind::dominating;
  else if (kind_name == "total")
    kind = SetKind::total;
  else if (kind_name == "ntd")
    kind = SetKind::ntd;
  else
    fail(errc::bad_params, "unknown kind: " + kind_name);

  std::vector<int> ids;
  if (!result_path.empty())
    ids = parse_result(read_text(result_path)).set;
  else if (!set_arg.empty())
    ids = parse_id_list(set_arg);
  else
    fail(errc::bad_params, "provide --set or --result");

  VerifyReport report = verify(g, set_from_1based(g, ids), kind);
  if (report.pass) {
    std::cout << "pass kind=" << set_kind_name(kind) << "\n";
    return 0;
  }
  std::cout << "fail kind=" << set_kind_name(kind)
            << " witness=" << *report.witness + 1 << "\n";
  return kExitVerifyFailed;
}

ReductionKind reduction_kind_from(const std::string& name) {
  for (ReductionKind k : {ReductionKind::domset_to_ntds,
                          ReductionKind::fourcopy, ReductionKind::subcubic})
    if (name == reduction_kind_name(k)) return k;
  fail(errc::bad_params, "unknown reduction kind: " + name);
}

int cmd_reduce(const std::string& input, const std::string& kind_name,
               const std::string& out_path, std::string provenance_path) {
  Graph g = parse_graph(read_text(input));
  ReductionArtifact artifact;
  switch (reduction_kind_from(kind_name)) {
    case ReductionKind::domset_to_ntds:
      artifact = build_domset_to_ntds(g);
      break;
    case ReductionKind::fourcopy:
      artifact = build_fourcopy(g);
      break;
    case ReductionKind::subcubic:
      artifact = build_subcubic_gadget(g);
      break;
  }
  if (provenance_path.empty()) provenance_path = out_path + ".prov";
  write_text(out_path, serialize_graph(artifact.output));
  write_text(provenance_path, serialize_provenance(artifact));
  std::cout << "kind=" << reduction_kind_name(artifact.kind)
            << " vertices=" << artifact.output.vertex_count()
            << " edges=" << artifact.output.edge_count() << " relation=("
            << artifact.relation.slope << "," << artifact.relation.intercept
            << ")\n";
  return 0;
}

int cmd_extract(const std::string& graph_path,
                const std::string& provenance_path,
                const std::string& kind_name, const std::string& set_arg,
                const std::string& cert_path, const std::string& source_path) {
  ReductionArtifact artifact =
      parse_artifact(read_text(graph_path), read_text(provenance_path));
  if (!kind_name.empty() && kind_name != reduction_kind_name(artifact.kind))
    fail(errc::bad_params,
         "artifact kind is " + std::string(reduction_kind_name(artifact.kind)));

  std::vector<int> ids;
  if (!cert_path.empty())
    ids = parse_result(read_text(cert_path)).set;
  else if (!set_arg.empty())
    ids = parse_id_list(set_arg);
  else
    fail(errc::bad_params, "provide --set or --cert");
  VertexSet certificate = set_from_1based(artifact.output, ids);

  auto t0 = std::chrono::steady_clock::now();
  VertexSet extracted(artifact.source_n);
  switch (artifact.kind) {
    case ReductionKind::domset_to_ntds:
      extracted = extract_domset_from_ntds(artifact, certificate);
      break;
    case ReductionKind::fourcopy:
      extracted = extract_domset_fourcopy(artifact, certificate);
      break;
    case ReductionKind::subcubic:
      extracted = extract_domset_subcubic(artifact, certificate);
      break;
  }
  double ms = ms_since(t0);

  std::optional<bool> verified;
  if (!source_path.empty()) {
    Graph source = parse_graph(read_text(source_path));
    verified = is_dominating(source, extracted).pass;
  }
  std::string algo =
      std::string("extract-") + reduction_kind_name(artifact.kind);
  ResultDocument doc =
      make_result(algo, artifact.output, extracted, verified, ms);
  std::cout << serialize_result(doc);
  return (verified.has_value() && !*verified) ? kExitVerifyFailed : 0;
}

int cmd_bench(const std::string& algo, const std::string& sizes_arg,
              std::uint64_t seed, double density, int repeats) {
  if (algo != "pig") fail(errc::bad_params, "bench supports --algo pig");
  std::vector<int> sizes = parse_id_list(sizes_arg);
  if (sizes.empty() || repeats < 1) fail(errc::bad_params, "bench parameters");

  std::vector<double> xs, ts;
  std::cout << "n\tm\tseconds\tpeak_rss_kb\n";
  for (size_t i = 0; i < sizes.size(); ++i) {
    BenchPoint best{};
    for (int r = 0; r < repeats; ++r) {
      BenchPoint p =
          mntds_pig_linear_bench(sizes[i], density, seed + 1000 * i + r);
      if (r == 0 || p.seconds < best.seconds) best = p;
    }
    xs.push_back(static_cast<double>(best.n + best.m));
    ts.push_back(best.seconds);
    std::cout << best.n << '\t' << best.m << '\t' << best.seconds << '\t'
              << best.peak_rss_kb << '\n';
  }
  if (xs.size() < 2) return 0;  // one row, nothing to fit
  LinearFit fit = fit_time_linear(xs, ts);
  std::cout << "fit: time = " << fit.a << " * (n+m) + " << fit.b << '\n';
  for (size_t i = 0; i < fit.rel_residuals.size(); ++i)
    std::cout << "residual[" << sizes[i] << "] = "
              << fit.rel_residuals[i] * 100 << "%\n";
  return 0;
}

int cmd_gadget_search(const GadgetContract& contract) {
  GadgetSpec spec = gadget_search(contract);
  std::cout << "attach (port v-x1):";
  for (auto [a, b] : spec.attach_edges)
    std::cout << " x" << a + 1 << "-x" << b + 1;
  std::cout << "\nsplit (v1,v2,y1..y6):";
  const char* names[] = {"v1", "v2", "y1", "y2", "y3", "y4", "y5", "y6"};
  for (auto [a, b] : spec.split_edges)
    std::cout << ' ' << names[a] << '-' << names[b];
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum neighborhood total domination toolkit"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a graph document");
  std::string gen_kind, gen_out = "-";
  std::vector<std::string> gen_params;
  bool gen_no_shuffle = false;
  gen->add_option("kind", gen_kind,
                  "path|cycle|star|random-gnp|random-pig|random-subcubic")
      ->required();
  gen->add_option("params", gen_params, "generator parameters");
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->add_flag("--no-shuffle", gen_no_shuffle, "keep interval-order labels");

  auto* solve =
      app.add_subcommand("solve", "compute a minimum/approximate NTD-set");
  std::string solve_input, solve_algo, solve_require;
  int solve_limit = kDefaultOracleLimit;
  bool solve_trace = false, solve_strict = false;
  solve->add_option("input", solve_input, "edge-list file or -")->required();
  solve->add_option("--algo", solve_algo, "exact|pig|approx")->required();
  solve->add_option("--require", solve_require,
                    "1-based ids the set must contain (exact)");
  solve->add_option("--limit", solve_limit, "oracle size limit");
  solve->add_flag("--trace", solve_trace, "print the solver trace (pig)");
  solve->add_flag("--strict", solve_strict, "literal augmentation rule (approx)");

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
  std::string verify_input, verify_kind = "ntd", verify_set, verify_result;
  verify_cmd->add_option("input", verify_input, "edge-list file or -")
      ->required();
  verify_cmd->add_option("--kind", verify_kind, "dominating|total|ntd");
  verify_cmd->add_option("--set", verify_set, "comma-separated 1-based ids");
  verify_cmd->add_option("--result", verify_result, "result document to check");

  auto* reduce = app.add_subcommand("reduce", "build a hardness construction");
  std::string reduce_input, reduce_kind, reduce_out, reduce_prov;
  reduce->add_option("input", reduce_input, "edge-list file or -")->required();
  reduce->add_option("--kind", reduce_kind, "domset2ntds|fourcopy|subcubic")
      ->required();
  reduce->add_option("--out", reduce_out, "output edge-list file")->required();
  reduce->add_option("--provenance", reduce_prov,
                     "sidecar file (default <out>.prov)");

  auto* extract = app.add_subcommand("extract", "map a certificate back");
  std::string extract_graph, extract_prov, extract_kind, extract_set,
      extract_cert, extract_source;
  extract->add_option("artifact", extract_graph, "artifact edge-list file")
      ->required();
  extract->add_option("--provenance", extract_prov, "provenance sidecar")
      ->required();
  extract->add_option("--kind", extract_kind, "expected artifact kind");
  extract->add_option("--set", extract_set, "comma-separated 1-based ids");
  extract->add_option("--cert", extract_cert, "result document with the set");
  extract->add_option("--source", extract_source,
                      "source graph, to verify domination");

  auto* bench = app.add_subcommand("bench", "scaling table and linear fit");
  std::string bench_algo = "pig", bench_sizes;
  std::uint64_t bench_seed = 1;
  double bench_density = 0.3;
  int bench_repeats = 3;
  bench->add_option("--algo", bench_algo, "pig");
  bench->add_option("--sizes", bench_sizes, "comma-separated vertex counts")
      ->required();
  bench->add_option("--seed", bench_seed, "seed");
  bench->add_option("--density", bench_density, "generator density");
  bench->add_option("--repeats", bench_repeats, "runs per size (min is kept)");

  auto* gadget =
      app.add_subcommand("gadget-search", "search the gadget wirings");
  GadgetContract contract;
  gadget->add_option("--attach-rho-any", contract.attach_rho_any);
  gadget->add_option("--attach-rho-member", contract.attach_rho_member);
  gadget->add_option("--split-rho-any", contract.split_rho_any);
  gadget->add_option("--split-rho-member", contract.split_rho_member);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_params, gen_out, gen_no_shuffle);
    if (solve->parsed())
      return cmd_solve(solve_input, solve_algo, solve_require, solve_limit,
                       solve_trace, solve_strict);
    if (verify_cmd->parsed())
      return cmd_verify(verify_input, verify_kind, verify_set, verify_result);
    if (reduce->parsed())
      return cmd_reduce(reduce_input, reduce_kind, reduce_out, reduce_prov);
    if (extract->parsed())
      return cmd_extract(extract_graph, extract_prov, extract_kind,
                         extract_set, extract_cert, extract_source);
    if (bench->parsed())
      return cmd_bench(bench_algo, bench_sizes, bench_seed, bench_density,
                       bench_repeats);
    if (gadget->parsed()) return cmd_gadget_search(contract);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
