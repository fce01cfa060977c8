#include "rtl/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "rtl/error.hpp"

namespace rtl {

Graph Graph::from_edges(std::size_t nodes, std::vector<Edge> edges) {
  Graph g;
  g.incident_.resize(nodes);
  std::set<Edge> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u >= nodes || v >= nodes) {
      throw StructureError("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (u == v) throw StructureError("edge " + std::to_string(e) + " is a loop");
    if (!seen.insert(std::minmax(u, v)).second) {
      throw StructureError("edge " + std::to_string(e) + " repeats an earlier edge");
    }
    g.incident_[u].push_back(e);
    g.incident_[v].push_back(e);
  }
  g.edges_ = std::move(edges);
  return g;
}

Graph Graph::k4() { return from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph Graph::petersen() {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  for (std::size_t i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
  for (std::size_t i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  return from_edges(10, std::move(edges));
}

std::size_t Graph::other(std::size_t e, std::size_t node) const {
  const auto& [u, v] = edge(e);
  if (u == node) return v;
  if (v == node) return u;
  throw StructureError("node " + std::to_string(node) + " is not an endpoint of edge " +
                       std::to_string(e));
}

bool Graph::is_regular(std::size_t d) const {
  return std::all_of(incident_.begin(), incident_.end(),
                     [d](const auto& inc) { return inc.size() == d; });
}

bool Graph::is_connected() const {
  if (num_nodes() == 0) return true;
  const auto dist = distances(0);
  return std::none_of(dist.begin(), dist.end(), [&](auto d) { return d == num_nodes(); });
}

std::vector<std::size_t> Graph::distances(std::size_t root) const {
  std::vector<std::size_t> dist(num_nodes(), num_nodes());
  std::deque<std::size_t> queue{root};
  dist.at(root) = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto e : incident_[u]) {
      auto v = other(e, u);
      if (dist[v] == num_nodes()) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::optional<std::size_t>> Graph::bfs_tree(std::size_t root) const {
  std::vector<std::optional<std::size_t>> parent(num_nodes());
  std::vector<bool> seen(num_nodes(), false);
  std::deque<std::size_t> queue{root};
  seen.at(root) = true;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    std::vector<std::pair<std::size_t, std::size_t>> next;  // (neighbour, edge)
    for (auto e : incident_[u]) next.emplace_back(other(e, u), e);
    std::sort(next.begin(), next.end());
    for (auto [v, e] : next) {
      if (seen[v]) continue;
      seen[v] = true;
      parent[v] = e;
      queue.push_back(v);
    }
  }
  return parent;
}

std::size_t Graph::diameter() const {
  if (!is_connected()) throw StructureError("diameter of a disconnected graph");
  std::size_t d = 0;
  for (std::size_t u = 0; u < num_nodes(); ++u) {
    const auto dist = distances(u);
    d = std::max(d, *std::max_element(dist.begin(), dist.end()));
  }
  return d;
}

std::optional<std::size_t> Graph::girth() const {
  std::optional<std::size_t> best;
  for (std::size_t root = 0; root < num_nodes(); ++root) {
    std::vector<std::size_t> dist(num_nodes(), num_nodes());
    std::vector<std::size_t> via(num_nodes(), num_edges());
    std::deque<std::size_t> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto e : incident_[u]) {
        if (e == via[u]) continue;
        auto v = other(e, u);
        if (dist[v] == num_nodes()) {
          dist[v] = dist[u] + 1;
          via[v] = e;
          queue.push_back(v);
        } else {
          const auto len = dist[u] + dist[v] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace rtl
