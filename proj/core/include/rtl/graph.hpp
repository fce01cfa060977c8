#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace rtl {

/// Undirected simple graph with a fixed edge order. Edge indices follow the
/// order given at construction.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  /// Throws StructureError on loops, repeated edges or endpoints out of range.
  static Graph from_edges(std::size_t nodes, std::vector<Edge> edges);
  static Graph k4();
  /// Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram 5+i -> 5+(i+2)%5.
  static Graph petersen();

  std::size_t num_nodes() const { return incident_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  /// Incident edge indices, ascending.
  const std::vector<std::size_t>& incident(std::size_t node) const { return incident_.at(node); }
  std::size_t other(std::size_t e, std::size_t node) const;
  std::size_t degree(std::size_t node) const { return incident(node).size(); }

  bool is_regular(std::size_t degree) const;
  bool is_cubic() const { return is_regular(3); }
  bool is_connected() const;

  /// BFS distances from `root`; unreachable nodes get num_nodes().
  std::vector<std::size_t> distances(std::size_t root) const;
  /// BFS parent edge of every node (nullopt for the root and unreachable
  /// nodes). Neighbours are visited by ascending node index.
  std::vector<std::optional<std::size_t>> bfs_tree(std::size_t root) const;
  /// Throws StructureError when disconnected.
  std::size_t diameter() const;
  /// Length of the shortest cycle; nullopt for forests.
  std::optional<std::size_t> girth() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

}  // namespace rtl
