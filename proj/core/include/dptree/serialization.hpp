#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dptree/constructor.hpp"
#include "dptree/digraph.hpp"
#include "dptree/oracle.hpp"
#include "dptree/pendant_tree.hpp"
#include "dptree/product.hpp"

namespace dptree {

// {"n": 4, "arcs": [[0,1], ...]} with arcs sorted. Readers throw ParseError.
std::string digraph_to_json(const Digraph& d);
Digraph digraph_from_json(std::string_view text);

// {"0": [0, 0], "1": [0, 1], ...}: flat id -> [D-vertex, H-vertex].
std::string product_coordinates_json(const ProductDigraph& p);

// {"root": 0, "arcs": [[0,3], ...]}
std::string tree_to_json(const OutTree& t);
OutTree tree_from_json(const Digraph& host, std::string_view text);

// A family is a JSON list of trees.
std::string family_to_json(const std::vector<OutTree>& trees);
std::vector<OutTree> family_from_json(const Digraph& host, std::string_view text);

// {"count": k, "trees": [...]}; a bare list of trees is accepted as well.
std::string certificate_to_json(const std::vector<OutTree>& trees);
std::vector<OutTree> certificate_from_json(const Digraph& host, std::string_view text);

std::string spec_to_json(const TerminalSpec& spec);
// Timings are left out so reruns produce identical bytes.
std::string trace_to_json(const ConstructionTrace& trace);
std::string timings_to_json(const PhaseTimings& timings);
std::string report_to_json(const FamilyReport& report);
// {"value": k, "witness_spec": {...} | null, "witness_family": [...]}
std::string oracle_result_to_json(int value, const TerminalSpec* spec,
                                  const std::vector<OutTree>& family);

// "t -> h;" per arc inside `digraph name { ... }`.
std::string digraph_to_dot(const Digraph& d, std::string_view name);
// Terminals filled, one pen colour per tree, unused host arcs grey.
std::string family_to_dot(const TreeFamily& family, std::string_view name);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace dptree
