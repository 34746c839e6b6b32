#pragma once

// Brute-force and independent reference implementations shared by the unit
// tests and the acceptance runner. Nothing here calls into the code it is
// meant to check, except for plain data types.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <dptree/dptree.hpp>

namespace testkit {

using dptree::Arc;
using dptree::Digraph;
using dptree::VertexId;

// Max flow by DFS augmenting paths over a dense residual matrix.
std::int64_t ford_fulkerson(const dptree::FlowNetwork& net);

dptree::FlowNetwork random_network(std::mt19937_64& rng, int max_nodes, int max_capacity);

// Reachability u -> v avoiding the vertices flagged in `removed`.
bool reaches(const Digraph& d, VertexId u, VertexId v, std::uint32_t removed);

// Smallest X (bitmask) with no u -> v path in D - X; u, v non-adjacent.
int min_separator_size(const Digraph& d, VertexId u, VertexId v);

// kappa straight from the definition: smallest X leaving a non-strong digraph
// on at least two vertices, or n - 1 if none. n <= 20.
int brute_force_connectivity(const Digraph& d);

// All simple u -> v paths.
std::vector<std::vector<VertexId>> simple_paths(const Digraph& d, VertexId u, VertexId v);

// Maximum number of internally disjoint u -> v paths by exhaustive packing.
int brute_force_path_packing(const Digraph& d, VertexId u, VertexId v);

// min over ordered pairs of brute_force_path_packing.
int brute_force_tau2(const Digraph& d);

// Pendant check recomputed from the arc list only.
bool pendant_by_degree_count(const Digraph& host, VertexId root, const std::vector<Arc>& arcs,
                             VertexId x, VertexId y);

// Uniformly random arc set on n vertices, not necessarily strong.
Digraph random_digraph(std::mt19937_64& rng, int n, double p);

// Random strong digraph on n vertices with tau3 >= 1 (rejection over seeds).
Digraph random_factor(std::mt19937_64& rng, int n, double p, int* tau_out = nullptr);

// Draws a terminal triple of the product with the requested numbers of
// distinct D- and H-coordinates (sd, sh). Needs sd * sh >= 3 and sizes that
// can host the pattern.
dptree::TerminalSpec shaped_spec(std::mt19937_64& rng, const dptree::ProductDigraph& p, int sd,
                                 int sh);

// Every (r, {x, y}) with x < y on n vertices.
std::vector<dptree::TerminalSpec> all_specs(VertexId n);

// Relabels vertices of `d` by a random permutation.
Digraph permuted(const Digraph& d, const std::vector<VertexId>& perm);

}  // namespace testkit
