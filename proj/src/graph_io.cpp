#include "arrsym/graph_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "arrsym/error.hpp"

namespace arrsym {
namespace {

using nlohmann::json;

const char* family_name(GraphMeta::Family f) {
  switch (f) {
    case GraphMeta::Family::arrangement:
      return "arrangement";
    case GraphMeta::Family::cayley:
      return "cayley";
    case GraphMeta::Family::generic:
      return "generic";
  }
  return "generic";
}

GraphMeta::Family parse_family(const std::string& name) {
  if (name == "arrangement") return GraphMeta::Family::arrangement;
  if (name == "cayley") return GraphMeta::Family::cayley;
  if (name == "generic") return GraphMeta::Family::generic;
  throw ValidationError("unknown graph family '" + name + "'");
}

std::string title(const Graph& g) {
  const GraphMeta& m = g.meta();
  switch (m.family) {
    case GraphMeta::Family::arrangement:
      return "A(" + std::to_string(m.n) + "," + std::to_string(m.k) + "," + std::to_string(m.r) + ")";
    case GraphMeta::Family::cayley:
      return "Cay(S" + std::to_string(m.n) + "," + m.connection + ")";
    case GraphMeta::Family::generic:
      break;
  }
  return "G";
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "dot") return GraphFormat::dot;
  if (name == "graphdoc") return GraphFormat::graphdoc;
  throw ValidationError("unknown graph format '" + std::string(name) + "'");
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << "# vertices " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph \"" << title(g) << "\" {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << g.label_string(v) << "\"];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_graphdoc(const Graph& g) {
  // ordered_json keeps key order stable, which the byte-exact round trip needs.
  nlohmann::ordered_json doc;
  const GraphMeta& m = g.meta();
  doc["format"] = "arrsym-graph";
  doc["version"] = 1;
  doc["family"] = family_name(m.family);
  doc["n"] = m.n;
  doc["k"] = m.k;
  doc["r"] = m.r;
  doc["connection"] = m.connection;
  doc["vertices"] = g.vertex_count();
  doc["labels"] = g.labels();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

std::string write_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::edgelist:
      return to_edgelist(g);
    case GraphFormat::dot:
      return to_dot(g);
    case GraphFormat::graphdoc:
      return to_graphdoc(g);
  }
  throw ValidationError("unknown graph format");
}

Graph from_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t declared = 0;
  bool have_declared = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t max_vertex = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream header(line.substr(1));
      std::string word;
      if (header >> word && word == "vertices") {
        if (!(header >> declared)) throw ValidationError("malformed '# vertices' header");
        have_declared = true;
      }
      continue;
    }
    std::istringstream fields(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0) {
      throw ValidationError("malformed edge on line " + std::to_string(line_no));
    }
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    max_vertex = std::max({max_vertex, static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
  }
  std::size_t count = have_declared ? declared : (edges.empty() ? 0 : max_vertex + 1);
  if (count == 0) throw ValidationError("edge list describes an empty graph");
  if (!edges.empty() && max_vertex >= count) throw ValidationError("edge endpoint exceeds declared vertex count");
  return graph_from_edges(count, edges);
}

Graph from_graphdoc(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
    if (doc.at("format").get<std::string>() != "arrsym-graph") throw ValidationError("not an arrsym graph document");
    if (doc.at("version").get<int>() != 1) throw ValidationError("unsupported graph document version");
    const std::size_t count = doc.at("vertices").get<std::size_t>();
    Graph::Builder b(count);
    for (const json& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ValidationError("malformed edge entry");
      b.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    b.set_labels(doc.at("labels").get<std::vector<std::vector<Point>>>());
    GraphMeta meta;
    meta.family = parse_family(doc.at("family").get<std::string>());
    meta.n = doc.at("n").get<std::size_t>();
    meta.k = doc.at("k").get<std::size_t>();
    meta.r = doc.at("r").get<std::size_t>();
    meta.connection = doc.at("connection").get<std::string>();
    b.set_meta(std::move(meta));
    return std::move(b).build();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed graph document: ") + e.what());
  }
}

Graph read_graph(std::string_view text) {
  const std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') return from_graphdoc(text);
  return from_edgelist(text);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_graph(buffer.str());
}

}  // namespace arrsym
