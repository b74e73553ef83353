#pragma once

#include "cospec/graph.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace cospec {

enum class ExportFormat { Dot, Json, Csv };

// "dot", "json", "csv" (case-insensitive). Throws FormatError otherwise.
ExportFormat parse_export_format(std::string_view name);

struct ExportMetadata {
  std::optional<std::string> word;
  std::optional<Rational> k;
};

// Deterministic serialization; weights are exact "p/q" strings.
//   csv:  one "u,v,p/q" line per edge
//   json: {"word": str, "k": "p/q", "n": int, "edges": [[u, v, "p/q"], ...]}
//   dot:  undirected graph with weight labels
std::string export_graph(const WeightedGraph& g, ExportFormat format,
                         const ExportMetadata& meta = {});
std::string export_graph(const RingGraph& g, ExportFormat format);

}  // namespace cospec
