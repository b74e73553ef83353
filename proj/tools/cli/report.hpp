#pragma once

#include <cospec/decomposition.hpp>
#include <cospec/polynomial.hpp>
#include <cospec/transfer.hpp>

#include <json.hpp>

namespace cospec::cli {

using Json = nlohmann::ordered_json;

// Array of "p/q" strings, constant term first.
Json to_json(const Polynomial& p);
Json to_json(const ConjugationReport& r);
Json to_json(const DecompositionAnalysis& a);

}  // namespace cospec::cli
