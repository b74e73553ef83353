#include "cospec/graph.hpp"

#include "cospec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace cospec {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges,
                             std::vector<std::string> labels)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != n) {
    throw ShapeError("label count does not match vertex count");
  }
  const int nn = static_cast<int>(n);
  for (auto& e : edges_) {
    if (e.u == e.v) throw ShapeError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= nn || e.v >= nn)
      throw ShapeError("edge endpoint out of range");
    if (e.weight <= 0) throw ParameterError("edge weights must be positive");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw ShapeError("parallel edge {" + std::to_string(edges_[i].u) + "," +
                       std::to_string(edges_[i].v) + "}");

  adjacency_.assign(n, {});
  degrees_.assign(n, Rational(0));
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.weight});
    adjacency_[e.v].push_back({e.u, e.weight});
    degrees_[e.u] += e.weight;
    degrees_[e.v] += e.weight;
  }
  for (auto& adj : adjacency_)
    std::sort(adj.begin(), adj.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
}

Rational WeightedGraph::weight(int u, int v) const {
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& nb, int x) { return nb.vertex < x; });
  if (it != adj.end() && it->vertex == v) return it->weight;
  return 0;
}

bool WeightedGraph::has_edge(int u, int v) const { return weight(u, v) != 0; }

bool WeightedGraph::has_isolated_vertex() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& adj) { return adj.empty(); });
}

bool WeightedGraph::is_connected() const {
  if (n() == 0) return true;
  std::vector<bool> seen(n(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& nb : adjacency_[v])
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = true;
        ++count;
        stack.push_back(nb.vertex);
      }
  }
  return count == n();
}

ModuleGadget build_module_gadget(ModuleKind kind, const Rational& k) {
  if (k <= 0) throw ParameterError("module parameter k must be positive, got " + to_pretty(k));
  using R = GadgetRole;
  switch (kind) {
    case ModuleKind::E:
      return {kind, {R::Plus, R::Minus}, {{R::Plus, R::Minus, k + 1}}};
    case ModuleKind::P:
      return {kind,
              {R::A, R::Plus, R::Minus, R::B},
              {{R::A, R::Plus, k}, {R::Plus, R::Minus, Rational(1)}, {R::Minus, R::B, k}}};
    case ModuleKind::C:
      return {kind,
              {R::A, R::Plus, R::Minus, R::B},
              {{R::A, R::Plus, k},
               {R::Plus, R::Minus, Rational(1)},
               {R::Minus, R::B, k},
               {R::A, R::B, k * k}}};
  }
  throw ParameterError("unknown module kind");
}

RingGraph assemble_ring(const Word& w, const Rational& k) {
  const std::size_t tau = w.tau();
  std::vector<ModuleSlots> modules(tau);
  std::vector<std::string> labels;
  int next = 0;
  for (std::size_t i = 0; i < tau; ++i) {
    modules[i].plus = next++;
    labels.push_back("s" + std::to_string(i));
    if (w[i] != ModuleKind::E) {
      modules[i].a = next++;
      labels.push_back("a" + std::to_string(i));
      modules[i].b = next++;
      labels.push_back("b" + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < tau; ++i) modules[i].minus = modules[(i + 1) % tau].plus;

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < tau; ++i) {
    const ModuleGadget gadget = build_module_gadget(w[i], k);
    const ModuleSlots& s = modules[i];
    auto index = [&](GadgetRole r) {
      switch (r) {
        case GadgetRole::A: return s.a;
        case GadgetRole::Plus: return s.plus;
        case GadgetRole::Minus: return s.minus;
        case GadgetRole::B: return s.b;
      }
      return -1;
    };
    for (const auto& ge : gadget.edges) edges.push_back({index(ge.x), index(ge.y), ge.weight});
  }
  WeightedGraph g(static_cast<std::size_t>(next), std::move(edges), std::move(labels));
  return RingGraph{w, k, std::move(g), std::move(modules)};
}

namespace {

void require_no_isolated(const WeightedGraph& g) {
  if (g.has_isolated_vertex()) throw DegreeError("graph has an isolated vertex");
}

}  // namespace

Matrix<double> normalized_laplacian(const WeightedGraph& g) {
  require_no_isolated(g);
  const std::size_t n = g.n();
  Matrix<double> L(n, n, 0.0);
  std::vector<double> inv_sqrt(n);
  for (std::size_t i = 0; i < n; ++i) inv_sqrt[i] = 1.0 / std::sqrt(g.degree(int(i)).get_d());
  for (std::size_t i = 0; i < n; ++i) L(i, i) = 1.0;
  for (const auto& e : g.edges()) {
    const double x = -e.weight.get_d() * inv_sqrt[e.u] * inv_sqrt[e.v];
    L(e.u, e.v) = x;
    L(e.v, e.u) = x;
  }
  return L;
}

Matrix<Rational> laplacian_square_form(const WeightedGraph& g) {
  require_no_isolated(g);
  const std::size_t n = g.n();
  Matrix<Rational> out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  for (const auto& e : g.edges()) {
    Rational x = e.weight * e.weight / (g.degree(e.u) * g.degree(e.v));
    out(e.u, e.v) = x;
    out(e.v, e.u) = x;
  }
  return out;
}

Matrix<Rational> random_walk_matrix(const WeightedGraph& g) {
  require_no_isolated(g);
  const std::size_t n = g.n();
  Matrix<Rational> out(n, n);
  for (const auto& e : g.edges()) {
    out(e.u, e.v) = e.weight / g.degree(e.u);
    out(e.v, e.u) = e.weight / g.degree(e.v);
  }
  return out;
}

namespace {

// Vertex map g1 -> g2 for one alignment, or nullopt when an unsigned
// vertex of g1 has no counterpart.
std::optional<std::vector<int>> alignment_map(const RingGraph& g1, const RingGraph& g2,
                                              std::size_t shift, bool reflect) {
  const std::size_t tau = g1.word.tau();
  std::vector<int> map(g1.graph.n(), -1);
  for (std::size_t i = 0; i < tau; ++i) {
    const ModuleSlots& src = g1.modules[i];
    std::size_t target;
    if (!reflect) {
      target = (i + shift) % tau;
    } else {
      // signed j -> shift - j, so module i lands on module shift - i - 1
      target = (shift + 2 * tau - i - 1) % tau;
    }
    const ModuleSlots& dst = g2.modules[target];
    map[src.plus] = reflect ? dst.minus : dst.plus;
    if (src.a >= 0) {
      const int a_img = reflect ? dst.b : dst.a;
      const int b_img = reflect ? dst.a : dst.b;
      if (a_img < 0 || b_img < 0) return std::nullopt;
      map[src.a] = a_img;
      map[src.b] = b_img;
    }
  }
  return map;
}

}  // namespace

bool subgraph_after_symmetry(const RingGraph& g1, const RingGraph& g2) {
  if (g1.word.tau() != g2.word.tau())
    throw ShapeError("rings have different lengths (" + std::to_string(g1.word.tau()) + " vs " +
                     std::to_string(g2.word.tau()) + ")");
  if (g1.k != g2.k) throw ShapeError("rings were built with different k");
  const std::size_t tau = g1.word.tau();
  for (int reflect = 0; reflect < 2; ++reflect)
    for (std::size_t shift = 0; shift < tau; ++shift) {
      auto map = alignment_map(g1, g2, shift, reflect == 1);
      if (!map) continue;
      const bool ok = std::all_of(g1.graph.edges().begin(), g1.graph.edges().end(),
                                  [&](const Edge& e) {
                                    return g2.graph.weight((*map)[e.u], (*map)[e.v]) == e.weight;
                                  });
      if (ok) return true;
    }
  return false;
}

WeightedGraph complete_bipartite(std::size_t p, std::size_t q) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) edges.push_back({int(i), int(p + j), Rational(1)});
  return WeightedGraph(p + q, std::move(edges));
}

WeightedGraph cycle_graph(std::size_t n, const Rational& weight) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({int(i), int((i + 1) % n), weight});
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph path_graph(std::size_t n, const Rational& weight) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({int(i), int(i + 1), weight});
  return WeightedGraph(n, std::move(edges));
}

}  // namespace cospec
