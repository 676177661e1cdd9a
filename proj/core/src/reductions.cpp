#include "ntd/reductions.hpp"

#include <algorithm>

#include "ntd/verify.hpp"

namespace ntd {

const char* reduction_kind_name(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::domset_to_ntds: return "domset2ntds";
    case ReductionKind::fourcopy: return "fourcopy";
    case ReductionKind::subcubic: return "subcubic";
  }
  return "unknown";
}

Vertex ReductionArtifact::vertex_for(Vertex source_vertex,
                                     std::string_view role) const {
  for (size_t id = 0; id < role_of.size(); ++id)
    if (source_of[id] == source_vertex && role_of[id] == role)
      return static_cast<Vertex>(id);
  return -1;
}

std::vector<std::vector<Vertex>> ReductionArtifact::groups() const {
  std::vector<std::vector<Vertex>> out(source_n);
  for (size_t id = 0; id < source_of.size(); ++id)
    out[source_of[id]].push_back(static_cast<Vertex>(id));
  return out;
}

ReductionArtifact build_domset_to_ntds(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) fail(errc::bad_params, "empty source");
  ReductionArtifact artifact;
  artifact.kind = ReductionKind::domset_to_ntds;
  artifact.source_n = n;
  artifact.source = g;
  artifact.has_source = true;
  artifact.relation = {1, 2 * n};

  int out_n = 6 * n;
  artifact.source_of.assign(out_n, 0);
  artifact.role_of.assign(out_n, "");
  std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
  const char* roles[] = {"a", "b", "c", "x", "y"};
  for (int v = 0; v < n; ++v) {
    artifact.source_of[v] = v;
    artifact.role_of[v] = "v";
    int base = n + 5 * v;
    for (int k = 0; k < 5; ++k) {
      artifact.source_of[base + k] = v;
      artifact.role_of[base + k] = roles[k];
    }
    int a = base, b = base + 1, c = base + 2, x = base + 3, y = base + 4;
    edges.emplace_back(v, a);
    edges.emplace_back(a, b);
    edges.emplace_back(b, c);
    edges.emplace_back(b, x);
    edges.emplace_back(c, y);
  }
  artifact.output = Graph::build(out_n, edges);
  return artifact;
}

VertexSet extract_domset_from_ntds(const ReductionArtifact& artifact,
                                   const VertexSet& s) {
  if (artifact.kind != ReductionKind::domset_to_ntds)
    fail(errc::bad_params, "artifact kind mismatch");
  if (!is_ntd(artifact.output, s).pass)
    fail(errc::not_ntd, "certificate fails verification on the output graph");

  int n = artifact.source_n;
  int out_n = artifact.output.vertex_count();
  std::vector<Vertex> va(n, -1), vb(n, -1), vc(n, -1), vx(n, -1), vy(n, -1),
      vv(n, -1);
  for (Vertex id = 0; id < out_n; ++id) {
    const std::string& role = artifact.role_of[id];
    Vertex src = artifact.source_of[id];
    if (role == "v") vv[src] = id;
    else if (role == "a") va[src] = id;
    else if (role == "b") vb[src] = id;
    else if (role == "c") vc[src] = id;
    else if (role == "x") vx[src] = id;
    else if (role == "y") vy[src] = id;
  }

  std::vector<char> member(out_n, 0);
  for (Vertex v : s.members()) member[v] = 1;

  for (int v = 0; v < n; ++v) {
    Vertex a = va[v], b = vb[v], c = vc[v], x = vx[v], y = vy[v];
    bool mx = member[x], my = member[y];
    if (mx && !my) {  // b,c already forced in
      member[x] = 0;
    } else if (mx && my) {
      member[x] = member[y] = 0;
      if (!member[b] && !member[c]) {
        member[b] = member[c] = 1;
      } else if (member[b] && !member[c]) {
        member[c] = 1;
      } else if (!member[b] && member[c]) {
        member[b] = 1;
      }
    } else if (!mx && my) {  // b in; a or c in
      member[y] = 0;
      if (!member[c]) member[c] = 1;  // the a-route swaps c in
    }
    if (member[a]) {  // swap a for the original vertex
      member[a] = 0;
      if (!member[vv[v]]) member[vv[v]] = 1;
    }
    if (!member[b] || !member[c] || member[a] || member[x] || member[y])
      fail(errc::internal, "tail normalization broke its invariant");
  }

  VertexSet result(n);
  for (int v = 0; v < n; ++v)
    if (member[vv[v]]) result.insert(v);
  return result;
}

ReductionArtifact build_fourcopy(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) fail(errc::bad_params, "empty source");
  if (g.has_isolated_vertex())
    fail(errc::isolated_vertex,
         "an isolated source vertex leaves its copies 3 and 4 isolated");

  ReductionArtifact artifact;
  artifact.kind = ReductionKind::fourcopy;
  artifact.source_n = n;
  artifact.source = g;
  artifact.has_source = true;
  artifact.relation = {2, 0};

  int out_n = 4 * n;
  artifact.source_of.assign(out_n, 0);
  artifact.role_of.assign(out_n, "");
  for (int k = 0; k < 4; ++k)
    for (int u = 0; u < n; ++u) {
      artifact.source_of[k * n + u] = u;
      artifact.role_of[k * n + u] = std::string("v") + char('1' + k);
    }

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u) {
    edges.emplace_back(u, 2 * n + u);          // u1-u3
    edges.emplace_back(n + u, 3 * n + u);      // u2-u4
    for (Vertex w : g.neighbors(u)) {
      edges.emplace_back(u, 2 * n + w);        // u1-w3
      edges.emplace_back(n + u, 3 * n + w);    // u2-w4
    }
    for (int w = 0; w < n; ++w) edges.emplace_back(u, n + w);  // biclique
  }
  artifact.output = Graph::build(out_n, edges);
  return artifact;
}

VertexSet extract_domset_fourcopy(const ReductionArtifact& artifact,
                                  const VertexSet& d) {
  if (artifact.kind != ReductionKind::fourcopy)
    fail(errc::bad_params, "artifact kind mismatch");
  const Graph& out = artifact.output;
  if (!is_ntd(out, d).pass)
    fail(errc::not_ntd, "certificate fails verification on the output graph");

  int n = artifact.source_n;
  int out_n = out.vertex_count();
  std::vector<char> member(out_n, 0);
  for (Vertex v : d.members()) member[v] = 1;

  auto any_member_neighbor = [&](Vertex z) {
    for (Vertex w : out.neighbors(z))
      if (member[w]) return true;
    return false;
  };

  // push members of copies 3 and 4 into copies 1 and 2
  while (true) {
    Vertex w = -1;
    for (Vertex id = 2 * n; id < out_n; ++id)
      if (member[id]) {
        w = id;
        break;
      }
    if (w < 0) break;

    bool in_copy3 = w < 3 * n;
    Vertex u = in_copy3 ? w - 2 * n : w - 3 * n;
    int near_lo = in_copy3 ? 0 : n;          // copy adjacent to w's copy
    int near_hi = near_lo + n;
    Vertex twin = in_copy3 ? 3 * n + u : 2 * n + u;   // u's copy on the other side
    Vertex twin_target = in_copy3 ? n + u : u;        // u2 resp. u1

    Vertex z_free = -1, z_any = -1;
    for (Vertex z : out.neighbors(w)) {
      if (z < near_lo || z >= near_hi) continue;
      if (z_any < 0) z_any = z;
      if (!member[z] && z_free < 0) z_free = z;
    }
    if (z_free >= 0) {
      member[w] = 0;
      member[z_free] = 1;
      if (!any_member_neighbor(z_free)) {
        if (!member[twin]) fail(errc::internal, "expected twin copy in the set");
        member[twin] = 0;
        member[twin_target] = 1;
      }
    } else {
      if (z_any < 0) fail(errc::internal, "copy vertex without neighbors");
      if (any_member_neighbor(z_any)) {
        member[w] = 0;
      } else {
        if (!member[twin]) fail(errc::internal, "expected twin copy in the set");
        member[twin] = 0;
        member[twin_target] = 1;
      }
    }
  }

  VertexSet normalized(out_n);
  for (Vertex id = 0; id < out_n; ++id)
    if (member[id]) normalized.insert(id);
  if (!is_ntd(out, normalized).pass)
    fail(errc::internal, "normalization left the certificate invalid");

  int size1 = 0, size2 = 0;
  for (int u = 0; u < n; ++u) {
    size1 += member[u];
    size2 += member[n + u];
  }
  VertexSet result(n);
  int base = size1 <= size2 ? 0 : n;
  for (int u = 0; u < n; ++u)
    if (member[base + u]) result.insert(u);
  return result;
}

namespace {

struct SubcubicLayout {
  std::vector<int> base;
  std::vector<bool> split;
};

SubcubicLayout subcubic_layout(const Graph& g) {
  int n = g.vertex_count();
  SubcubicLayout layout;
  layout.base.assign(n, 0);
  layout.split.assign(n, false);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    layout.base[v] = next;
    layout.split[v] = g.degree(v) == 3;
    next += layout.split[v] ? 8 : 5;
  }
  return layout;
}

// Endpoint of the transformed edge (u, w) on u's side: degree-3 vertices
// send their first two edges (by neighbor index) to v1 and the third to v2.
Vertex edge_endpoint(const Graph& g, const SubcubicLayout& layout, Vertex u,
                     Vertex w) {
  if (!layout.split[u]) return layout.base[u];
  auto nb = g.neighbors(u);
  int idx = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
  return layout.base[u] + (idx < 2 ? 0 : 1);
}

}  // namespace

ReductionArtifact build_subcubic_gadget(const Graph& g, const GadgetSpec& spec) {
  int n = g.vertex_count();
  if (n < 1) fail(errc::bad_params, "empty source");
  if (g.max_degree() > 3)
    fail(errc::degree_too_high, "source has a vertex of degree > 3");

  SubcubicLayout layout = subcubic_layout(g);
  int s = 0;
  for (int v = 0; v < n; ++v) s += layout.split[v] ? 1 : 0;
  int out_n = 5 * (n - s) + 8 * s;

  ReductionArtifact artifact;
  artifact.kind = ReductionKind::subcubic;
  artifact.source_n = n;
  artifact.source = g;
  artifact.has_source = true;
  artifact.relation = {1, n + 2 * s};
  artifact.source_of.assign(out_n, 0);
  artifact.role_of.assign(out_n, "");

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, w] : g.edges())
    edges.emplace_back(edge_endpoint(g, layout, u, w),
                       edge_endpoint(g, layout, w, u));

  const char* attach_roles[] = {"v", "x1", "x2", "x3", "x4"};
  const char* split_roles[] = {"v1", "v2", "y1", "y2", "y3", "y4", "y5", "y6"};
  for (int v = 0; v < n; ++v) {
    int base = layout.base[v];
    if (!layout.split[v]) {
      for (int k = 0; k < 5; ++k) {
        artifact.source_of[base + k] = v;
        artifact.role_of[base + k] = attach_roles[k];
      }
      edges.emplace_back(base, base + 1);  // port v-x1
      for (auto [a, b] : spec.attach_edges)
        edges.emplace_back(base + 1 + a, base + 1 + b);
    } else {
      for (int k = 0; k < 8; ++k) {
        artifact.source_of[base + k] = v;
        artifact.role_of[base + k] = split_roles[k];
      }
      for (auto [a, b] : spec.split_edges)
        edges.emplace_back(base + a, base + b);
    }
  }
  artifact.output = Graph::build(out_n, edges);
  if (artifact.output.max_degree() > 3)
    fail(errc::internal, "construction exceeded degree 3");
  return artifact;
}

VertexSet forward_ntd_subcubic(const ReductionArtifact& artifact,
                               const VertexSet& d) {
  if (artifact.kind != ReductionKind::subcubic)
    fail(errc::bad_params, "artifact kind mismatch");
  if (!artifact.has_source)
    fail(errc::bad_params, "artifact was reloaded without its source graph");
  const Graph& g = artifact.source;
  if (!is_dominating(g, d).pass)
    fail(errc::not_dominating, "input set does not dominate the source");

  SubcubicLayout layout = subcubic_layout(g);
  VertexSet nd(artifact.output.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    int base = layout.base[v];
    if (!layout.split[v]) {
      if (d.contains(v)) nd.insert(base);  // v itself
      nd.insert(base + 2);                 // x2
      continue;
    }
    auto y = [&](int k) { return base + 1 + k; };  // y1..y6
    if (d.contains(v)) {
      nd.insert(base);      // v1
      nd.insert(base + 1);  // v2
      nd.insert(y(5));
      nd.insert(y(6));
      continue;
    }
    auto nb = g.neighbors(v);
    bool a = d.contains(nb[0]), b = d.contains(nb[1]), c = d.contains(nb[2]);
    if (!a && !b && c) {
      nd.insert(y(1));
      nd.insert(y(3));
      nd.insert(y(6));
    } else {
      // covers (a or b, not c), (exactly one of a,b and c), (all three)
      nd.insert(y(2));
      nd.insert(y(4));
      nd.insert(y(5));
    }
  }
  return nd;
}

VertexSet extract_domset_subcubic(const ReductionArtifact& artifact,
                                  const VertexSet& nd) {
  if (artifact.kind != ReductionKind::subcubic)
    fail(errc::bad_params, "artifact kind mismatch");
  if (!is_ntd(artifact.output, nd).pass)
    fail(errc::not_ntd, "certificate fails verification on the output graph");

  VertexSet result(artifact.source_n);
  auto groups = artifact.groups();
  for (int v = 0; v < artifact.source_n; ++v) {
    int rho = 0;
    for (Vertex id : groups[v])
      if (nd.contains(id)) ++rho;
    int threshold = groups[v].size() == 8 ? 4 : 2;
    if (rho >= threshold) result.insert(v);
  }
  return result;
}

}  // namespace ntd
