#include "cospec/export.hpp"

#include "cospec/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cospec {

ExportFormat parse_export_format(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "dot") return ExportFormat::Dot;
  if (lower == "json") return ExportFormat::Json;
  if (lower == "csv") return ExportFormat::Csv;
  throw FormatError("unknown export format '" + std::string(name) + "'");
}

std::string export_graph(const WeightedGraph& g, ExportFormat format,
                         const ExportMetadata& meta) {
  std::ostringstream out;
  switch (format) {
    case ExportFormat::Csv:
      for (const auto& e : g.edges()) out << e.u << "," << e.v << "," << to_string(e.weight) << "\n";
      break;
    case ExportFormat::Json: {
      nlohmann::ordered_json j;
      if (meta.word) j["word"] = *meta.word;
      if (meta.k) j["k"] = to_string(*meta.k);
      j["n"] = g.n();
      auto edges = nlohmann::json::array();
      for (const auto& e : g.edges()) edges.push_back({e.u, e.v, to_string(e.weight)});
      j["edges"] = std::move(edges);
      out << j.dump() << "\n";
      break;
    }
    case ExportFormat::Dot:
      out << "graph G {\n";
      if (meta.word) out << "  label=\"" << *meta.word << "\";\n";
      for (std::size_t v = 0; v < g.n(); ++v)
        out << "  " << v << " [label=\"" << g.label(int(v)) << "\"];\n";
      for (const auto& e : g.edges())
        out << "  " << e.u << " -- " << e.v << " [label=\"" << to_string(e.weight) << "\"];\n";
      out << "}\n";
      break;
  }
  return out.str();
}

std::string export_graph(const RingGraph& g, ExportFormat format) {
  return export_graph(g.graph, format, ExportMetadata{g.word.str(), g.k});
}

}  // namespace cospec
