#include "ntd/io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>

#include "json.hpp"

namespace ntd {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string_view::npos && line[a] != '#')
      lines.push_back({number, line});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<long long> parse_ints(const Line& line, size_t expected) {
  std::vector<long long> out;
  const char* p = line.text.data();
  const char* end = p + line.text.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    long long value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc())
      parse_fail(line.number, "expected an integer");
    p = next;
    out.push_back(value);
  }
  if (out.size() != expected)
    parse_fail(line.number, "expected " + std::to_string(expected) + " fields");
  return out;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = significant_lines(text);
  if (lines.empty()) fail(errc::parse_error, "line 1: missing header");
  auto header = parse_ints(lines[0], 2);
  long long n = header[0], m = header[1];
  if (n < 0 || m < 0) parse_fail(lines[0].number, "negative header field");
  if (static_cast<long long>(lines.size()) - 1 != m)
    parse_fail(lines[0].number,
               "header announces " + std::to_string(m) + " edges, found " +
                   std::to_string(lines.size() - 1));

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<size_t>(m));
  std::vector<std::pair<Vertex, Vertex>> seen;
  for (size_t k = 1; k < lines.size(); ++k) {
    auto fields = parse_ints(lines[k], 2);
    long long u = fields[0], v = fields[1];
    if (u < 1 || u > n || v < 1 || v > n)
      fail(errc::index_out_of_range,
           "line " + std::to_string(lines[k].number) + ": endpoint outside 1.." +
               std::to_string(n));
    if (u == v)
      fail(errc::self_loop, "line " + std::to_string(lines[k].number) +
                                ": self loop at " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  return Graph::build(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string graph_digest(const Graph& g) {
  std::uint64_t h = fnv1a64(serialize_graph(g));
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string serialize_result(const ResultDocument& doc) {
  nlohmann::ordered_json j;
  j["algorithm"] = doc.algorithm;
  j["input_digest"] = doc.input_digest;
  j["set"] = doc.set;
  j["size"] = doc.size;
  if (doc.verified.has_value())
    j["verified"] = *doc.verified;
  else
    j["verified"] = nullptr;
  j["wall_time_ms"] = doc.wall_time_ms;
  return j.dump() + "\n";
}

ResultDocument parse_result(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, e.what());
  }
  ResultDocument doc;
  try {
    doc.algorithm = j.at("algorithm").get<std::string>();
    doc.input_digest = j.at("input_digest").get<std::string>();
    doc.set = j.at("set").get<std::vector<int>>();
    doc.size = j.at("size").get<int>();
    if (!j.at("verified").is_null()) doc.verified = j.at("verified").get<bool>();
    doc.wall_time_ms = j.at("wall_time_ms").get<double>();
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, e.what());
  }
  return doc;
}

ResultDocument make_result(std::string algorithm, const Graph& input,
                           const VertexSet& set, std::optional<bool> verified,
                           double wall_time_ms) {
  ResultDocument doc;
  doc.algorithm = std::move(algorithm);
  doc.input_digest = graph_digest(input);
  for (Vertex v : set.members()) doc.set.push_back(v + 1);
  doc.size = set.size();
  doc.verified = verified;
  doc.wall_time_ms = wall_time_ms;
  return doc;
}

std::string serialize_provenance(const ReductionArtifact& artifact) {
  std::ostringstream out;
  out << "# kind: " << reduction_kind_name(artifact.kind) << '\n';
  out << "# relation: " << artifact.relation.slope << ' '
      << artifact.relation.intercept << '\n';
  for (size_t id = 0; id < artifact.role_of.size(); ++id)
    out << id + 1 << '\t' << artifact.source_of[id] + 1 << '\t'
        << artifact.role_of[id] << '\n';
  return out.str();
}

ReductionArtifact parse_artifact(std::string_view graph_text,
                                 std::string_view provenance_text) {
  ReductionArtifact artifact;
  artifact.output = parse_graph(graph_text);
  artifact.has_source = false;

  // kind comes from the header comment
  bool kind_found = false;
  {
    std::string_view text = provenance_text;
    size_t pos = text.find("# kind:");
    if (pos != std::string_view::npos) {
      size_t end = text.find('\n', pos);
      std::string_view value = text.substr(pos + 7, end - pos - 7);
      size_t a = value.find_first_not_of(" \t");
      if (a != std::string_view::npos) value = value.substr(a);
      size_t b = value.find_last_not_of(" \t\r");
      value = value.substr(0, b + 1);
      for (ReductionKind k : {ReductionKind::domset_to_ntds,
                              ReductionKind::fourcopy, ReductionKind::subcubic})
        if (value == reduction_kind_name(k)) {
          artifact.kind = k;
          kind_found = true;
        }
    }
  }
  if (!kind_found) fail(errc::parse_error, "provenance is missing a kind header");

  int out_n = artifact.output.vertex_count();
  artifact.source_of.assign(out_n, -1);
  artifact.role_of.assign(out_n, "");
  auto lines = significant_lines(provenance_text);
  if (static_cast<int>(lines.size()) != out_n)
    fail(errc::parse_error, "provenance must list every output vertex");
  int max_source = -1;
  for (const Line& line : lines) {
    std::istringstream in{std::string(line.text)};
    long long id = 0, src = 0;
    std::string role;
    if (!(in >> id >> src >> role))
      parse_fail(line.number, "expected: vertex-id<TAB>source-id<TAB>role");
    if (id < 1 || id > out_n) parse_fail(line.number, "vertex id out of range");
    if (src < 1) parse_fail(line.number, "source id out of range");
    if (!artifact.role_of[id - 1].empty())
      parse_fail(line.number, "duplicate vertex id");
    artifact.source_of[id - 1] = static_cast<Vertex>(src - 1);
    artifact.role_of[id - 1] = role;
    max_source = std::max(max_source, static_cast<int>(src - 1));
  }
  artifact.source_n = max_source + 1;

  int s = 0;
  for (Vertex id = 0; id < out_n; ++id)
    if (artifact.role_of[id] == "v1" &&
        artifact.kind == ReductionKind::subcubic)
      ++s;
  switch (artifact.kind) {
    case ReductionKind::domset_to_ntds:
      artifact.relation = {1, 2 * artifact.source_n};
      break;
    case ReductionKind::fourcopy:
      artifact.relation = {2, 0};
      break;
    case ReductionKind::subcubic:
      artifact.relation = {1, artifact.source_n + 2 * s};
      break;
  }
  return artifact;
}

}  // namespace ntd
