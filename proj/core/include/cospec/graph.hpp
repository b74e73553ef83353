#pragma once

#include "cospec/matrix.hpp"
#include "cospec/rational.hpp"
#include "cospec/word.hpp"

#include <span>
#include <string>
#include <vector>

namespace cospec {

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  Rational weight;
};

struct Neighbor {
  int vertex = 0;
  Rational weight;
};

// Undirected graph with positive rational edge weights, no loops and no
// parallel edges. Immutable after construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  // Edges may be given in any orientation; they are stored with u < v and
  // sorted. Throws ShapeError on loops, out-of-range endpoints or parallel
  // edges and ParameterError on non-positive weights.
  WeightedGraph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::size_t n() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Neighbor> neighbors(int v) const { return adjacency_[v]; }
  const Rational& degree(int v) const { return degrees_[v]; }
  const std::vector<Rational>& degrees() const { return degrees_; }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Zero when u and v are not adjacent.
  Rational weight(int u, int v) const;
  bool has_edge(int u, int v) const;
  bool has_isolated_vertex() const;
  bool is_connected() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<Rational> degrees_;
};

enum class GadgetRole { A, Plus, Minus, B };

struct GadgetEdge {
  GadgetRole x;
  GadgetRole y;
  Rational weight;
};

// One P, C or E building block. Signed vertices are Plus and Minus; A hangs
// off Plus and B off Minus.
struct ModuleGadget {
  ModuleKind kind;
  std::vector<GadgetRole> vertices;
  std::vector<GadgetEdge> edges;
};

// E: {+,-} weight k+1.
// P: {a,+} weight k, {+,-} weight 1, {-,b} weight k.
// C: P plus {a,b} weight k^2.
// Throws ParameterError unless k > 0.
ModuleGadget build_module_gadget(ModuleKind kind, const Rational& k);

// Vertex indices of one module inside an assembled ring. a and b are -1
// for E modules.
struct ModuleSlots {
  int plus = -1;
  int minus = -1;
  int a = -1;
  int b = -1;
};

// G(W) together with the word and module layout it was built from.
struct RingGraph {
  Word word;
  Rational k;
  WeightedGraph graph;
  std::vector<ModuleSlots> modules;

  // The signed vertex shared by module i-1 (as "-") and module i (as "+").
  int signed_vertex(std::size_t i) const { return modules[i % modules.size()].plus; }
};

// Places the gadgets in cyclic order, identifying the "-" vertex of module
// i with the "+" vertex of module i+1. Vertices are numbered module by
// module: signed vertex i, then a_i, then b_i.
RingGraph assemble_ring(const Word& w, const Rational& k);

// L = I - D^{-1/2} A D^{-1/2}. Throws DegreeError on isolated vertices.
Matrix<double> normalized_laplacian(const WeightedGraph& g);

// Exact data behind L before the square root: entry (i,j) is
// w(i,j)^2 / (d_i d_j), diagonal 1.
Matrix<Rational> laplacian_square_form(const WeightedGraph& g);

// D^{-1} A, exactly.
Matrix<Rational> random_walk_matrix(const WeightedGraph& g);

// True iff some rotation or reflection of the module alignment carries
// every edge of g1 onto an edge of g2 of equal weight. Throws ShapeError
// when the rings have different lengths or different k.
bool subgraph_after_symmetry(const RingGraph& g1, const RingGraph& g2);

// Textbook graphs used for sanity checks.
WeightedGraph complete_bipartite(std::size_t p, std::size_t q);
WeightedGraph cycle_graph(std::size_t n, const Rational& weight);
WeightedGraph path_graph(std::size_t n, const Rational& weight);

}  // namespace cospec
