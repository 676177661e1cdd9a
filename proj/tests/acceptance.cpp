// Acceptance gate: one check per criterion, one pass/fail line each.
// Exits nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ntd/approx.hpp"
#include "ntd/gadget.hpp"
#include "ntd/generators.hpp"
#include "ntd/oracle.hpp"
#include "ntd/pig.hpp"
#include "ntd/reductions.hpp"
#include "ntd/verify.hpp"
#include "test_util.hpp"

using namespace ntd;
using namespace ntd::testutil;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// all minimum NTD-sets of g, as bitmasks (needs n <= 32)
std::vector<std::uint32_t> minimum_ntd_sets(const Graph& g, int optimum) {
  MaskChecker mc(g);
  std::vector<std::uint32_t> sets;
  int n = g.vertex_count();
  std::vector<int> c(optimum);
  for (int i = 0; i < optimum; ++i) c[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int v : c) mask |= std::uint32_t{1} << v;
    if (mc.ntd(mask)) sets.push_back(mask);
    int i = optimum - 1;
    while (i >= 0 && c[i] == n - optimum + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < optimum; ++j) c[j] = c[j - 1] + 1;
  }
  return sets;
}

bool criterion1(std::string& detail) {
  const int instances = 1000;
  int mismatches = 0;
  double t0 = now_seconds();
  for (int i = 0; i < instances; ++i) {
    int n = 3 + i % 12;
    double density = 0.05 + 0.09 * (i % 11);
    Graph g = gen_proper_interval(n, density, 770000 + i);
    PigResult r = mntds_pig(g);
    if (!is_ntd(g, r.set).pass) ++mismatches;
    if (r.set.size() != exact_min(g, SetKind::ntd).size) ++mismatches;
  }
  double elapsed = now_seconds() - t0;
  detail = std::to_string(instances) + " instances, " +
           std::to_string(mismatches) + " mismatches, " +
           std::to_string(elapsed) + " s";
  return mismatches == 0 && elapsed <= 300.0;
}

bool criterion2(std::string& detail) {
  const int instances = 500;
  int violations = 0;
  for (int i = 0; i < instances; ++i) {
    int n = 3 + i % 10;  // up to 12
    double p = 0.25 + 0.05 * (i % 8);
    Graph g = random_connected_gnp(n, p, 880000 + i);
    auto [gamma, gamma_nt, gamma_t] = check_chain(g);
    if (!(gamma <= gamma_nt && gamma_nt <= gamma_t)) ++violations;
  }
  detail = std::to_string(instances) + " instances, " +
           std::to_string(violations) + " violations";
  return violations == 0;
}

bool criterion3(std::string& detail) {
  struct Row {
    const char* name;
    Graph g;
  };
  std::vector<Row> rows = {{"K1", k1()}, {"K2", k2()}, {"P3", p3()},
                           {"K3", k3()}, {"P4", p4()}, {"paw", paw()}};
  detail.clear();
  bool ok = true;
  for (auto& [name, g] : rows) {
    double t0 = now_seconds();
    int n = g.vertex_count();
    int gamma = exact_min(g, SetKind::dominating).size;
    auto artifact = build_domset_to_ntds(g);
    int got = exact_min(artifact.output, SetKind::ntd).size;
    double elapsed = now_seconds() - t0;
    bool here = got == gamma + 2 * n && elapsed <= 60.0;
    ok = ok && here;
    detail += std::string(name) + "=" + std::to_string(got) +
              (here ? " " : "(FAIL) ");
  }
  return ok;
}

bool criterion4(std::string& detail) {
  struct Row {
    const char* name;
    Graph g;
  };
  std::vector<Row> rows = {
      {"K2", k2()}, {"P3", p3()}, {"P4", p4()}, {"C4", c4()}, {"K3", k3()}};
  detail.clear();
  bool ok = true;
  for (auto& [name, g] : rows) {
    int gamma = exact_min(g, SetKind::dominating).size;
    auto artifact = build_fourcopy(g);
    int out_n = artifact.output.vertex_count();
    int got = exact_min(artifact.output, SetKind::ntd).size;
    bool here = got == 2 * gamma;
    for (std::uint32_t mask : minimum_ntd_sets(artifact.output, got)) {
      VertexSet extracted =
          extract_domset_fourcopy(artifact, set_from_mask(out_n, mask));
      if (!is_dominating(g, extracted).pass) here = false;
      if (extracted.size() != gamma) here = false;
    }
    ok = ok && here;
    detail += std::string(name) + "=" + std::to_string(got) +
              (here ? " " : "(FAIL) ");
  }
  return ok;
}

bool criterion5(std::string& detail) {
  struct Row {
    const char* name;
    Graph g;
  };
  // outputs stay at or below 26 vertices (the largest, K1,3, has 23)
  std::vector<Row> rows = {
      {"K2", k2()}, {"P3", p3()}, {"P4", p4()}, {"K1,3", claw()}, {"C4", c4()}};
  detail.clear();
  bool ok = true;
  for (auto& [name, g] : rows) {
    int n = g.vertex_count();
    int s = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 3) ++s;
    int gamma = exact_min(g, SetKind::dominating).size;
    auto artifact = build_subcubic_gadget(g);
    int got = exact_min(artifact.output, SetKind::ntd, 26).size;
    bool here = got == gamma + n + 2 * s && artifact.output.max_degree() <= 3;
    ok = ok && here;
    detail += std::string(name) + "=" + std::to_string(got) +
              (here ? " " : "(FAIL) ");
  }
  return ok;
}

bool criterion6(std::string& detail) {
  const int instances = 500;
  int ratio_violations = 0, growth_violations = 0;
  for (int i = 0; i < instances; ++i) {
    int n = 3 + i % 12;  // up to 14
    double p = 0.2 + 0.05 * (i % 9);
    Graph g = random_connected_gnp(n, p, 990000 + i);
    VertexSet d = greedy_dominating(g);
    VertexSet result = approx_ntds(g);
    if (result.size() > 2 * d.size()) ++growth_violations;
    int optimum = exact_min(g, SetKind::ntd).size;
    if (result.size() > approx_ratio_bound(g) * optimum) ++ratio_violations;
  }
  detail = std::to_string(instances) + " instances, " +
           std::to_string(ratio_violations) + " ratio / " +
           std::to_string(growth_violations) + " growth violations";
  return ratio_violations == 0 && growth_violations == 0;
}

bool criterion7(std::string& detail) {
  const double density = 0.3;
  const int sizes[] = {10000, 100000, 1000000};
  const int repeats[] = {5, 3, 2};
  std::vector<double> xs, ts;
  double t_large = 0.0;
  for (int i = 0; i < 3; ++i) {
    BenchPoint best{};
    for (int r = 0; r < repeats[i]; ++r) {
      BenchPoint p = mntds_pig_linear_bench(sizes[i], density, 4200 + 10 * i + r);
      if (r == 0 || p.seconds < best.seconds) best = p;
    }
    xs.push_back(static_cast<double>(best.n + best.m));
    ts.push_back(best.seconds);
    if (i == 2) t_large = best.seconds;
  }
  LinearFit fit = fit_time_linear(xs, ts);
  double worst = 0.0;
  for (double r : fit.rel_residuals) worst = std::max(worst, std::abs(r));
  char buf[160];
  snprintf(buf, sizeof buf,
           "max residual %.1f%%, t(1e6)=%.2fs, a=%.3g b=%.3g", worst * 100,
           t_large, fit.a, fit.b);
  detail = buf;
  return worst <= 0.25 && t_large <= 10.0;
}

bool criterion8(std::string& detail) {
  bool ok = true;
  detail.clear();

  for (auto& [name, g] : {std::pair{"K1", k1()}, {"K2", k2()}}) {
    int n = g.vertex_count();
    auto artifact = build_domset_to_ntds(g);
    int optimum = exact_min(artifact.output, SetKind::ntd).size;
    auto sets = minimum_ntd_sets(artifact.output, optimum);
    bool here = !sets.empty();
    for (std::uint32_t mask : sets) {
      VertexSet s = set_from_mask(artifact.output.vertex_count(), mask);
      VertexSet extracted = extract_domset_from_ntds(artifact, s);
      if (!is_dominating(g, extracted).pass) here = false;
      if (extracted.size() > s.size() - 2 * n) here = false;
    }
    ok = ok && here;
    detail += std::string("tail-") + name + ":" + std::to_string(sets.size()) +
              (here ? " " : "(FAIL) ");
  }

  {
    Graph g = k2();
    auto artifact = build_fourcopy(g);
    int optimum = exact_min(artifact.output, SetKind::ntd).size;
    auto sets = minimum_ntd_sets(artifact.output, optimum);
    bool here = !sets.empty();
    for (std::uint32_t mask : sets) {
      VertexSet d = set_from_mask(artifact.output.vertex_count(), mask);
      VertexSet extracted = extract_domset_fourcopy(artifact, d);
      if (!is_dominating(g, extracted).pass) here = false;
      if (2 * extracted.size() > d.size()) here = false;
    }
    ok = ok && here;
    detail += "fourcopy-K2:" + std::to_string(sets.size()) + (here ? " " : "(FAIL) ");
  }

  {
    Graph g = k2();
    auto artifact = build_subcubic_gadget(g);
    int optimum = exact_min(artifact.output, SetKind::ntd).size;
    auto sets = minimum_ntd_sets(artifact.output, optimum);
    bool here = !sets.empty();
    for (std::uint32_t mask : sets) {
      VertexSet nd = set_from_mask(artifact.output.vertex_count(), mask);
      VertexSet extracted = extract_domset_subcubic(artifact, nd);
      if (!is_dominating(g, extracted).pass) here = false;
      if (extracted.size() > nd.size() - 2) here = false;
    }
    ok = ok && here;
    detail += "subcubic-K2:" + std::to_string(sets.size()) + (here ? "" : "(FAIL)");
  }
  return ok;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    std::function<bool(std::string&)> run;
  };
  std::vector<Entry> entries = {
      {"1 solver/oracle agreement on 1000 proper interval graphs", criterion1},
      {"2 domination chain on 500 random connected graphs", criterion2},
      {"3 tail construction optimum shift (+2n)", criterion3},
      {"4 fourcopy optimum doubling and minimum-set extraction", criterion4},
      {"5 subcubic gadget optimum shift (+n+2s)", criterion5},
      {"6 approximation guarantee on 500 random connected graphs", criterion6},
      {"7 linear scaling fit for the interval solver", criterion7},
      {"8 extractor soundness over all minimum certificates", criterion8},
  };

  int failed = 0;
  for (auto& entry : entries) {
    double t0 = now_seconds();
    std::string detail;
    bool pass = false;
    try {
      pass = entry.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed = now_seconds() - t0;
    printf("[%s] criterion %s: %s(%.1f s)\n", pass ? "PASS" : "FAIL",
           entry.label, detail.empty() ? "" : (detail + " ").c_str(), elapsed);
    fflush(stdout);
    if (!pass) ++failed;
  }
  printf("%d/%zu criteria passed\n", static_cast<int>(entries.size()) - failed,
         entries.size());
  return failed == 0 ? 0 : 1;
}
