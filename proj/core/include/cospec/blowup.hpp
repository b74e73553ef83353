#pragma once

#include "cospec/graph.hpp"

#include <string>
#include <vector>

namespace cospec {

// Multiplicity per vertex (>= 1) and the vertex paths of E chains that were
// replaced by parallel paths.
struct BlowupSpec {
  std::vector<int> multiplicity;
  std::vector<std::vector<int>> path_splits;
};

struct BlownGraph {
  WeightedGraph graph;
  std::vector<std::vector<int>> copies;  // copies[v]: new vertices standing for old v
};

// Multiplies every weight by c. Throws ParameterError unless c > 0.
WeightedGraph scale_weights(const WeightedGraph& g, const Rational& c);

// Vertex v becomes multiplicity[v] independent copies; edge {u,v} becomes a
// complete bipartite graph with weights w(u,v) / (r(u) r(v)). Throws
// ParameterError for multiplicities < 1 and ShapeError on size mismatch.
BlownGraph blow_up(const WeightedGraph& g, const std::vector<int>& multiplicity);

struct SplitResult {
  WeightedGraph graph;
  std::vector<int> old_to_new;  // -1 for removed interior vertices
};

// Replaces the path chain[0] - chain[1] - ... - chain.back(), whose edges
// all carry the same integer weight c, by c vertex-disjoint unit-weight
// paths between the same endpoints. Interior chain vertices must have no
// other edges. Throws ParameterError for non-integer weights and
// ShapeError when chain is not such a path (including single-edge chains,
// which would need parallel edges).
SplitResult split_e_chain(const WeightedGraph& g, const std::vector<int>& chain);

bool is_simple(const WeightedGraph& g);

struct BlowupResult {
  RingGraph source;
  WeightedGraph blown;
  BlowupSpec spec;
  std::vector<std::string> warnings;
};

struct BlowupPair {
  BlowupResult first;   // from w
  BlowupResult second;  // from toggle(w)
};

// Unsigned vertices get multiplicity k; maximal runs of >= 2 consecutive E
// modules are split into k+1 parallel paths. Both outputs are certified
// simple. An all-E ring is rescaled to unit weights and flagged as an
// identity blowup. Throws ParameterError unless k is a positive integer and
// RecipeError when a lone E module (weight k+1) blocks a simple result.
BlowupPair simple_blowup_recipe(const Word& w, const Rational& k);

// Finds integer multiplicities with r(u) r(v) = w(u,v) on every edge of a
// connected graph and blows up with them, giving a simple graph. Throws
// RecipeError when no such multiplicities exist.
BlownGraph unit_weight_blowup(const WeightedGraph& g, std::vector<int>* multiplicity_out = nullptr);

// Scales G(w,k) and G(toggle(w),k) by c and blows both up to simple graphs.
// c = 1 defers to simple_blowup_recipe.
BlowupPair scaled_blowup_pair(const Word& w, const Rational& k, const Rational& c);

}  // namespace cospec
