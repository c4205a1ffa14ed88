#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "embhom/hypergraph.hpp"
#include "embhom/metric.hpp"

namespace embhom::io {

using AnyHypergraph = std::variant<Hypergraph, Hyperdigraph>;

struct ParsedHypergraph {
  AnyHypergraph graph;
  std::vector<std::string> warnings;
};

// {"vertices":[...], "edges":[[...],...]} or {"directed_edges":[[...],...]}.
// Unordered edges are sorted; duplicates are dropped with a warning. Without
// "vertices" the vertex set is the support. With `edges_as_directed`, rows
// under "edges" are read as directed words. Throws ParseError.
ParsedHypergraph parse_hypergraph(const std::string& text, bool edges_as_directed = false);
ParsedHypergraph read_hypergraph(const std::string& path, bool edges_as_directed = false);

template <EdgeOrder O>
nlohmann::json hypergraph_to_json(const BasicHypergraph<O>& h);

// Exact value of a decimal literal such as "-1.25e-3".
mpq_class parse_decimal(const std::string& s);

// CSV rows "id,x1,...,xd" (an optional header row starting with a
// non-numeric field is skipped), or JSON {"distance_matrix":[[...]]} or
// {"circle_angles":[...]} with optional "ids" and, for circles, "tolerance".
MetricPointSample parse_point_sample(const std::string& text);
MetricPointSample read_point_sample(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace embhom::io
