#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrsym/bitset.hpp"
#include "arrsym/permutation.hpp"

namespace arrsym {

struct GraphMeta {
  enum class Family { generic, arrangement, cayley };
  Family family = Family::generic;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  // For Cayley graphs: "transpositions", "derangements" or "fixed:K".
  std::string connection;

  friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

// Immutable undirected simple graph with packed adjacency rows.
class Graph {
 public:
  class Builder {
   public:
    explicit Builder(std::size_t vertex_count);
    void add_edge(std::size_t u, std::size_t v);
    void set_labels(std::vector<std::vector<Point>> labels);
    void set_meta(GraphMeta meta);
    // Validates label count and label distinctness.
    Graph build() &&;

   private:
    std::size_t n_;
    std::vector<Bitset> rows_;
    std::vector<std::vector<Point>> labels_;
    GraphMeta meta_;
  };

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const { return edges_; }
  const Bitset& neighbours(std::size_t v) const { return rows_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  // Common degree when regular.
  std::optional<std::size_t> regular_degree() const;

  // 1-based tuple or one-line permutation per vertex; empty for generic graphs.
  const std::vector<std::vector<Point>>& labels() const { return labels_; }
  std::string label_string(std::size_t v) const;
  const GraphMeta& meta() const { return meta_; }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // The graph with vertex v renamed to relabel(v); labels move along.
  Graph relabeled(const Permutation& relabel) const;
  Graph complement() const;
  std::size_t component_count() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.rows_ == b.rows_ && a.labels_ == b.labels_ && a.meta_ == b.meta_;
  }

 private:
  Graph() = default;

  std::vector<Bitset> rows_;
  std::size_t edges_ = 0;
  std::vector<std::vector<Point>> labels_;
  GraphMeta meta_;
};

// Undirected simple graph from an edge list (generic family, no labels).
Graph graph_from_edges(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace arrsym
