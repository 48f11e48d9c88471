#include "pathdepth/graph.hpp"

#include <algorithm>
#include <deque>

namespace pathdepth {

SimpleGraph::SimpleGraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), adjacency_(num_vertices + 1) {
  if (num_vertices == 0) throw Error("a graph needs at least one vertex");
  for (auto& [i, j] : edges) {
    if (i == j) throw Error("loop at vertex " + std::to_string(i));
    if (i == 0 || j == 0 || i > num_vertices || j > num_vertices) {
      throw Error("edge {" + std::to_string(i) + "," + std::to_string(j) + "} out of range");
    }
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error("duplicate edge");
  }
  edges_ = std::move(edges);
  for (const auto& [i, j] : edges_) {
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool SimpleGraph::adjacent(std::size_t i, std::size_t j) const {
  if (i == 0 || i > num_vertices_) return false;
  return std::binary_search(adjacency_[i].begin(), adjacency_[i].end(), j);
}

const std::vector<std::size_t>& SimpleGraph::neighbors(std::size_t v) const {
  if (v == 0 || v > num_vertices_) throw Error("vertex out of range");
  return adjacency_[v];
}

std::vector<std::size_t> SimpleGraph::distances_from(std::size_t source) const {
  std::vector<std::size_t> dist(num_vertices_ + 1, 0);
  std::vector<bool> seen(num_vertices_ + 1, false);
  std::deque<std::size_t> queue{source};
  seen[source] = true;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto w : adjacency_[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

SimpleGraph path_graph(std::size_t n) {
  if (n < 1) throw Error("a path needs at least one vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph graph_power(const SimpleGraph& graph, std::size_t k) {
  if (k < 1) throw Error("graph power exponent must be at least 1");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= graph.num_vertices(); ++i) {
    const auto dist = graph.distances_from(i);
    for (std::size_t j = i + 1; j <= graph.num_vertices(); ++j) {
      if (dist[j] >= 1 && dist[j] <= k) edges.emplace_back(i, j);
    }
  }
  return SimpleGraph(graph.num_vertices(), std::move(edges));
}

namespace {

class PathEnumerator {
 public:
  PathEnumerator(const SimpleGraph& graph, std::size_t t, const Limits& limits)
      : graph_(graph), t_(t), limits_(limits), on_path_(graph.num_vertices() + 1, false) {}

  std::vector<TPath> run() {
    for (std::size_t start = 1; start <= graph_.num_vertices(); ++start) extend(start);
    return std::move(paths_);
  }

 private:
  void extend(std::size_t v) {
    if (++steps_ > limits_.max_path_steps) {
      throw LimitExceeded("t-path enumeration exceeded " + std::to_string(limits_.max_path_steps) +
                          " partial sequences");
    }
    current_.push_back(v);
    on_path_[v] = true;
    if (current_.size() == t_) {
      // keep the reversal-minimal orientation
      if (current_.front() < current_.back()) record();
    } else {
      for (auto w : graph_.neighbors(v)) {
        if (!on_path_[w]) extend(w);
      }
    }
    on_path_[v] = false;
    current_.pop_back();
  }

  void record() {
    std::vector<Exponent> e(graph_.num_vertices(), 0);
    for (auto v : current_) e[v - 1] = 1;
    paths_.push_back(TPath{current_, Monomial(std::move(e))});
  }

  const SimpleGraph& graph_;
  std::size_t t_;
  const Limits& limits_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> current_;
  std::vector<TPath> paths_;
  std::uint64_t steps_ = 0;
};

}  // namespace

std::vector<TPath> enumerate_t_paths(const SimpleGraph& graph, std::size_t t, const Limits& limits) {
  if (t < 2) throw Error("paths need at least 2 vertices");
  if (t > graph.num_vertices()) return {};
  return PathEnumerator(graph, t, limits).run();
}

MonomialIdeal path_ideal(const SimpleGraph& graph, std::size_t t, const Limits& limits) {
  std::vector<Monomial> gens;
  for (auto& p : enumerate_t_paths(graph, t, limits)) gens.push_back(std::move(p.monomial));
  return minimalize(std::move(gens), RingContext(graph.num_vertices()));
}

MonomialIdeal edge_ideal(const SimpleGraph& graph) {
  const auto n = graph.num_vertices();
  std::vector<Monomial> gens;
  for (const auto& [i, j] : graph.edges()) {
    std::vector<Exponent> e(n, 0);
    e[i - 1] = 1;
    e[j - 1] = 1;
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), RingContext(n));
}

nlohmann::json graph_to_json(const SimpleGraph& graph) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [i, j] : graph.edges()) edges.push_back({i, j});
  return {{"n", graph.num_vertices()}, {"edges", std::move(edges)}};
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("an edge must be a pair [i, j]");
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return SimpleGraph(j.at("n").get<std::size_t>(), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace pathdepth
