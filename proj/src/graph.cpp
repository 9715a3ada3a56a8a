#include "cohconf/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "cohconf/word.hpp"

namespace cohconf {

EdgeColouredGraph::EdgeColouredGraph(int vertex_count, int colour_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), colour_count_(colour_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw Error("graph: negative vertex count");
  if (colour_count_ < 0) throw Error("graph: negative colour count");
  colour_of_.assign(static_cast<std::size_t>(vertex_count_) * vertex_count_, 0);
  adj_.assign(colour_count_, std::vector<std::vector<int>>(vertex_count_));
  std::vector<char> seen(colour_count_, 0);
  for (auto& e : edges_) {
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
      throw Error("graph: vertex index out of range on edge " + std::to_string(e.u) + " " +
                  std::to_string(e.v));
    if (e.u == e.v) throw Error("graph: loop at vertex " + std::to_string(e.u));
    if (e.colour < 1 || e.colour > colour_count_)
      throw Error("graph: colour " + std::to_string(e.colour) + " out of range 1.." +
                  std::to_string(colour_count_));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (colour_of_[index(e.u, e.v)] != 0)
      throw Error("graph: duplicate edge between " + std::to_string(e.u) + " and " +
                  std::to_string(e.v));
    colour_of_[index(e.u, e.v)] = e.colour;
    colour_of_[index(e.v, e.u)] = e.colour;
    adj_[e.colour - 1][e.u].push_back(e.v);
    adj_[e.colour - 1][e.v].push_back(e.u);
    seen[e.colour - 1] = 1;
  }
  for (int c = 0; c < colour_count_; ++c) {
    if (!seen[c]) throw Error("graph: colour " + std::to_string(c + 1) + " never occurs");
    for (auto& list : adj_[c]) std::sort(list.begin(), list.end());
  }
}

const std::vector<int>& EdgeColouredGraph::neighbours(int colour, int v) const {
  if (colour < 1 || colour > colour_count_)
    throw Error("graph: colour " + std::to_string(colour) + " out of range");
  return adj_[colour - 1][v];
}

bool EdgeColouredGraph::is_connected() const {
  if (vertex_count_ == 0) return true;
  std::vector<char> vis(vertex_count_, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int count = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int c = 1; c <= colour_count_; ++c)
      for (int w : neighbours(c, u))
        if (!vis[w]) {
          vis[w] = 1;
          ++count;
          q.push(w);
        }
  }
  return count == vertex_count_;
}

RatMatrix adjacency_operator(const EdgeColouredGraph& g, int colour) {
  if (colour < 1 || colour > g.colour_count())
    throw Error("adjacency_operator: colour " + std::to_string(colour) + " out of range");
  const int n = g.vertex_count();
  RatMatrix m(n, n);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbours(colour, v)) m.at(v, w) = 1;
  return m;
}

bool is_chamber_system(const EdgeColouredGraph& g) {
  // Each colour class must be a disjoint union of complete graphs: every two
  // neighbours of a vertex (in that colour) must themselves be adjacent.
  for (int c = 1; c <= g.colour_count(); ++c)
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto& nb = g.neighbours(c, v);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (g.edge_colour(nb[i], nb[j]) != c) return false;
    }
  return true;
}

std::optional<std::vector<int>> regularity_orders(const EdgeColouredGraph& g) {
  std::vector<int> orders(g.colour_count());
  for (int c = 1; c <= g.colour_count(); ++c) {
    const int deg = static_cast<int>(g.neighbours(c, 0).size());
    for (int v = 1; v < g.vertex_count(); ++v)
      if (static_cast<int>(g.neighbours(c, v).size()) != deg) return std::nullopt;
    orders[c - 1] = deg;
  }
  return orders;
}

std::vector<RatMatrix> distance_matrices(const EdgeColouredGraph& g) {
  if (g.colour_count() != 1) throw Error("distance_matrices: graph must be monochrome");
  if (!g.is_connected()) throw Error("distance_matrices: graph must be connected");
  const int n = g.vertex_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  int diameter = 0;
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : g.neighbours(1, u))
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][u] + 1;
          diameter = std::max(diameter, dist[s][w]);
          q.push(w);
        }
    }
  }
  std::vector<RatMatrix> out(diameter + 1, RatMatrix(n, n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[dist[x][y]].at(x, y) = 1;
  return out;
}

std::vector<long> apply_word(const EdgeColouredGraph& g, int x, const Word& w) {
  if (x < 0 || x >= g.vertex_count()) throw Error("apply_word: vertex out of range");
  std::vector<long> v(g.vertex_count(), 0);
  v[x] = 1;
  for (int c : w) {
    if (c < 1 || c > g.colour_count())
      throw Error("apply_word: colour " + std::to_string(c) + " out of range");
    std::vector<long> next(g.vertex_count(), 0);
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (v[u] == 0) continue;
      for (int nb : g.neighbours(c, u)) next[nb] += v[u];
    }
    v = std::move(next);
  }
  return v;
}

EdgeColouredGraph graph_product(const EdgeColouredGraph& g1, const EdgeColouredGraph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<Edge> edges;
  for (const auto& e : g1.edges())
    for (int b = 0; b < n2; ++b) edges.push_back({e.u * n2 + b, e.v * n2 + b, e.colour});
  for (const auto& e : g2.edges())
    for (int a = 0; a < n1; ++a)
      edges.push_back({a * n2 + e.u, a * n2 + e.v, e.colour + g1.colour_count()});
  return EdgeColouredGraph(n1 * n2, g1.colour_count() + g2.colour_count(), std::move(edges));
}

EdgeColouredGraph complete_graph(int n, int colour_count, int colour) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, colour});
  if (n < 2) colour_count = 0;  // no edges, so no colours to declare
  return EdgeColouredGraph(n, colour_count, std::move(edges));
}

}  // namespace cohconf
