#pragma once

#include <optional>
#include <vector>

#include "cohconf/matrix.hpp"
#include "cohconf/word.hpp"

namespace cohconf {

struct Edge {
  int u, v;
  int colour;  // 1-based
};

// Finite edge-coloured graph: no loops, at most one edge per vertex pair,
// every declared colour present on at least one edge.
class EdgeColouredGraph {
 public:
  EdgeColouredGraph(int vertex_count, int colour_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int colour_count() const { return colour_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // 0 when not adjacent, else the colour of the edge.
  int edge_colour(int u, int v) const { return colour_of_[index(u, v)]; }
  const std::vector<int>& neighbours(int colour, int v) const;

  bool is_connected() const;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * vertex_count_ + v;
  }

  int vertex_count_;
  int colour_count_;
  std::vector<Edge> edges_;
  std::vector<int> colour_of_;                       // dense pair -> colour (0 = none)
  std::vector<std::vector<std::vector<int>>> adj_;   // adj_[colour-1][v] sorted
};

RatMatrix adjacency_operator(const EdgeColouredGraph& g, int colour);

// True iff each monochrome subgraph is a disjoint union of complete graphs.
bool is_chamber_system(const EdgeColouredGraph& g);

// Per-colour constant degrees, or nullopt when some colour is irregular.
std::optional<std::vector<int>> regularity_orders(const EdgeColouredGraph& g);

// A_0 = I, ..., A_d for a connected monochrome graph; throws otherwise.
std::vector<RatMatrix> distance_matrices(const EdgeColouredGraph& g);

// Entry y counts galleries of type w from x ending at y; equals row x of the
// corresponding product of adjacency operators, computed by walking the graph.
std::vector<long> apply_word(const EdgeColouredGraph& g, int x, const Word& w);

// Vertex set = pairs (a, b) indexed a * g2.vertex_count() + b; colours of g2
// are shifted past those of g1.
EdgeColouredGraph graph_product(const EdgeColouredGraph& g1, const EdgeColouredGraph& g2);

EdgeColouredGraph complete_graph(int n, int colour_count = 1, int colour = 1);

}  // namespace cohconf
