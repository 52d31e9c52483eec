#include "arrsym/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "arrsym/error.hpp"

namespace arrsym {

Graph::Builder::Builder(std::size_t vertex_count) : n_(vertex_count), rows_(vertex_count, Bitset(vertex_count)) {
  if (vertex_count == 0) throw ValidationError("graph needs at least one vertex");
}

void Graph::Builder::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw ValidationError("edge endpoint out of range");
  if (u == v) throw ValidationError("self-loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::Builder::set_labels(std::vector<std::vector<Point>> labels) { labels_ = std::move(labels); }

void Graph::Builder::set_meta(GraphMeta meta) { meta_ = std::move(meta); }

Graph Graph::Builder::build() && {
  if (!labels_.empty()) {
    if (labels_.size() != n_) throw ValidationError("label count does not match vertex count");
    std::set<std::vector<Point>> distinct(labels_.begin(), labels_.end());
    if (distinct.size() != labels_.size()) throw ValidationError("vertex labels are not distinct");
  }
  Graph g;
  g.rows_ = std::move(rows_);
  std::size_t twice = 0;
  for (const Bitset& row : g.rows_) twice += row.count();
  g.edges_ = twice / 2;
  g.labels_ = std::move(labels_);
  g.meta_ = std::move(meta_);
  return g;
}

std::optional<std::size_t> Graph::regular_degree() const {
  const std::size_t d = degree(0);
  for (std::size_t v = 1; v < rows_.size(); ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::string Graph::label_string(std::size_t v) const {
  if (labels_.empty()) return std::to_string(v);
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < labels_[v].size(); ++i) out << (i ? "," : "") << labels_[v][i];
  out << ']';
  return out.str();
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    for (std::size_t v = rows_[u].next(u); v < rows_.size(); v = rows_[u].next(v)) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::relabeled(const Permutation& relabel) const {
  if (relabel.degree() != vertex_count()) throw ValidationError("relabeling degree does not match vertex count");
  Builder b(vertex_count());
  for (auto [u, v] : edges()) b.add_edge(relabel(static_cast<Point>(u)), relabel(static_cast<Point>(v)));
  if (!labels_.empty()) {
    std::vector<std::vector<Point>> moved(labels_.size());
    for (std::size_t v = 0; v < labels_.size(); ++v) moved[relabel(static_cast<Point>(v))] = labels_[v];
    b.set_labels(std::move(moved));
  }
  b.set_meta(meta_);
  return std::move(b).build();
}

Graph Graph::complement() const {
  Builder b(vertex_count());
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < vertex_count(); ++v) {
      if (!adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

std::size_t Graph::component_count() const {
  const std::size_t n = vertex_count();
  Bitset unseen = Bitset::full(n);
  std::size_t components = 0;
  std::vector<std::size_t> stack;
  for (std::size_t start = unseen.first(); start < n; start = unseen.first()) {
    ++components;
    unseen.reset(start);
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      Bitset fresh = rows_[u];
      fresh &= unseen;
      for (std::size_t v = fresh.first(); v < n; v = fresh.next(v)) {
        unseen.reset(v);
        stack.push_back(v);
      }
    }
  }
  return components;
}

Graph graph_from_edges(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph::Builder b(vertex_count);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace arrsym
