#include "cospec/blowup.hpp"

#include "cospec/errors.hpp"

#include <algorithm>
#include <optional>

namespace cospec {

WeightedGraph scale_weights(const WeightedGraph& g, const Rational& c) {
  if (c <= 0) throw ParameterError("scale factor must be positive, got " + to_pretty(c));
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.weight *= c;
  return WeightedGraph(g.n(), std::move(edges), g.labels());
}

BlownGraph blow_up(const WeightedGraph& g, const std::vector<int>& multiplicity) {
  if (multiplicity.size() != g.n()) throw ShapeError("one multiplicity per vertex required");
  BlownGraph out;
  out.copies.resize(g.n());
  std::vector<std::string> labels;
  int next = 0;
  for (std::size_t v = 0; v < g.n(); ++v) {
    const int r = multiplicity[v];
    if (r < 1) throw ParameterError("multiplicity of vertex " + std::to_string(v) + " must be >= 1");
    for (int c = 0; c < r; ++c) {
      out.copies[v].push_back(next++);
      labels.push_back(r == 1 ? g.label(int(v)) : g.label(int(v)) + "#" + std::to_string(c));
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const Rational w = e.weight / (multiplicity[e.u] * multiplicity[e.v]);
    for (int x : out.copies[e.u])
      for (int y : out.copies[e.v]) edges.push_back({x, y, w});
  }
  out.graph = WeightedGraph(std::size_t(next), std::move(edges), std::move(labels));
  return out;
}

SplitResult split_e_chain(const WeightedGraph& g, const std::vector<int>& chain) {
  if (chain.size() < 2) throw ShapeError("a chain needs at least one edge");
  if (chain.size() == 2)
    throw ShapeError("single-edge chain would become parallel edges");
  if (chain.front() == chain.back()) throw ShapeError("chain closes into a cycle");
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (chain[i] == chain[j]) throw ShapeError("chain repeats a vertex");

  const Rational c = g.weight(chain[0], chain[1]);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Rational w = g.weight(chain[i], chain[i + 1]);
    if (w == 0) throw ShapeError("chain vertices are not adjacent");
    if (w != c) throw ShapeError("chain edges carry different weights");
  }
  if (!is_integer(c)) throw ParameterError("chain weight " + to_pretty(c) + " is not an integer");
  for (std::size_t i = 1; i + 1 < chain.size(); ++i)
    if (g.neighbors(chain[i]).size() != 2)
      throw ShapeError("interior chain vertex " + std::to_string(chain[i]) + " has other edges");

  const std::size_t interior = chain.size() - 2;
  std::vector<char> removed(g.n(), 0);
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) removed[chain[i]] = 1;

  SplitResult out;
  out.old_to_new.assign(g.n(), -1);
  std::vector<std::string> labels;
  int next = 0;
  for (std::size_t v = 0; v < g.n(); ++v)
    if (!removed[v]) {
      out.old_to_new[v] = next++;
      labels.push_back(g.label(int(v)));
    }
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (!removed[e.u] && !removed[e.v])
      edges.push_back({out.old_to_new[e.u], out.old_to_new[e.v], e.weight});

  const long paths = c.get_num().get_si();
  const int first = out.old_to_new[chain.front()];
  const int last = out.old_to_new[chain.back()];
  for (long p = 0; p < paths; ++p) {
    int prev = first;
    for (std::size_t i = 0; i < interior; ++i) {
      const int x = next++;
      labels.push_back(g.label(chain[i + 1]) + "~" + std::to_string(p));
      edges.push_back({prev, x, Rational(1)});
      prev = x;
    }
    edges.push_back({prev, last, Rational(1)});
  }
  out.graph = WeightedGraph(std::size_t(next), std::move(edges), std::move(labels));
  return out;
}

bool is_simple(const WeightedGraph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.weight == 1; });
}

namespace {

BlowupResult recipe_for(const RingGraph& ring, const Rational& k) {
  BlowupResult out{ring, {}, {}, {}};
  const Word& w = ring.word;
  const std::size_t tau = w.tau();

  if (w.e_count() == tau) {
    out.blown = scale_weights(ring.graph, 1 / (k + 1));
    out.spec.multiplicity.assign(ring.graph.n(), 1);
    out.warnings.push_back("identity blowup: all-E ring only needs rescaling to unit weights");
    return out;
  }

  std::vector<int> mult(ring.graph.n(), 1);
  for (const auto& s : ring.modules)
    if (s.a >= 0) {
      mult[s.a] = static_cast<int>(k.get_num().get_si());
      mult[s.b] = mult[s.a];
    }

  // Maximal cyclic runs of E, starting just after a non-E module.
  std::vector<std::vector<int>> chains;
  for (std::size_t i = 0; i < tau; ++i) {
    if (w[i] != ModuleKind::E || w[(i + tau - 1) % tau] == ModuleKind::E) continue;
    std::size_t len = 0;
    while (w[(i + len) % tau] == ModuleKind::E) ++len;
    if (len == 1)
      throw RecipeError("G(" + w.str() + "): lone E module at position " + std::to_string(i) +
                        " has weight " + to_pretty(k + 1) +
                        " and cannot be split into parallel paths");
    std::vector<int> chain;
    for (std::size_t j = 0; j <= len; ++j) chain.push_back(ring.signed_vertex(i + j));
    chains.push_back(std::move(chain));
  }

  BlownGraph blown = blow_up(ring.graph, mult);
  WeightedGraph current = blown.graph;
  // Signed vertices keep a single copy, so chains map through copies[v][0].
  std::vector<int> to_current(ring.graph.n());
  for (std::size_t v = 0; v < ring.graph.n(); ++v) to_current[v] = blown.copies[v][0];
  for (const auto& chain : chains) {
    std::vector<int> mapped;
    for (int v : chain) mapped.push_back(to_current[v]);
    SplitResult split = split_e_chain(current, mapped);
    for (auto& v : to_current)
      if (v >= 0) v = split.old_to_new[v];
    current = std::move(split.graph);
  }

  if (!is_simple(current))
    throw RecipeError("G(" + w.str() + "): blowup still carries non-unit weights");
  out.blown = std::move(current);
  out.spec.multiplicity = std::move(mult);
  out.spec.path_splits = std::move(chains);
  return out;
}

void require_positive_integer(const Rational& k) {
  if (k <= 0 || !is_integer(k))
    throw ParameterError("blowup recipe needs a positive integer k, got " + to_pretty(k));
}

}  // namespace

BlowupPair simple_blowup_recipe(const Word& w, const Rational& k) {
  require_positive_integer(k);
  return {recipe_for(assemble_ring(w, k), k), recipe_for(assemble_ring(toggle(w), k), k)};
}

BlownGraph unit_weight_blowup(const WeightedGraph& g, std::vector<int>* multiplicity_out) {
  if (g.n() == 0 || !g.is_connected())
    throw RecipeError("unit-weight blowup needs a nonempty connected graph");
  Rational max_weight = 0;
  for (const auto& e : g.edges()) max_weight = std::max(max_weight, e.weight);
  const long root_limit = std::max<long>(1, mpz_class(max_weight.get_num() / max_weight.get_den()).get_si());

  // r(root) fixes every other multiplicity through r(v) = w(u,v) / r(u).
  auto attempt = [&](long root) -> std::optional<std::vector<int>> {
    std::vector<Rational> r(g.n(), 0);
    r[0] = root;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(v)) {
        const Rational want = nb.weight / r[v];
        if (r[nb.vertex] == 0) {
          if (!is_integer(want)) return std::nullopt;
          r[nb.vertex] = want;
          stack.push_back(nb.vertex);
        } else if (r[nb.vertex] != want) {
          return std::nullopt;
        }
      }
    }
    std::vector<int> out;
    for (const auto& x : r) out.push_back(static_cast<int>(x.get_num().get_si()));
    return out;
  };

  for (long root = 1; root <= root_limit; ++root)
    if (auto mult = attempt(root)) {
      BlownGraph blown = blow_up(g, *mult);
      if (multiplicity_out) *multiplicity_out = *mult;
      return blown;
    }
  throw RecipeError("no integer multiplicities turn every edge weight into 1");
}

BlowupPair scaled_blowup_pair(const Word& w, const Rational& k, const Rational& c) {
  if (c == 1) return simple_blowup_recipe(w, k);
  auto one = [&](const Word& word) {
    RingGraph ring = assemble_ring(word, k);
    BlowupResult out{ring, {}, {}, {}};
    const WeightedGraph scaled = scale_weights(ring.graph, c);
    try {
      out.blown = unit_weight_blowup(scaled, &out.spec.multiplicity).graph;
    } catch (const RecipeError& err) {
      throw RecipeError("G(" + word.str() + ") scaled by " + to_pretty(c) + ": " + err.what());
    }
    return out;
  };
  return {one(w), one(toggle(w))};
}

}  // namespace cospec
