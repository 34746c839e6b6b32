#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dptree/digraph.hpp"

namespace dptree {

using Capacity = std::int64_t;

enum class SplitSide { In, Out, Auxiliary };

struct NodeOrigin {
  VertexId vertex = -1;  // -1 for auxiliary nodes such as a super-source
  SplitSide side = SplitSide::Auxiliary;
};

struct FlowEdge {
  int tail = 0;
  int head = 0;
  Capacity capacity = 0;
};

// Capacitated network. For the vertex-split networks built below, vertex x of
// the source digraph becomes node 2x (x_in) and 2x+1 (x_out).
struct FlowNetwork {
  int node_count = 0;
  std::vector<FlowEdge> edges;
  int source = 0;
  int sink = 0;
  std::vector<NodeOrigin> origin;

  int add_node(NodeOrigin o);
  int add_edge(int tail, int head, Capacity capacity);
};

struct MaxFlow {
  Capacity value = 0;
  std::vector<Capacity> flow;  // indexed like FlowNetwork::edges
};

// Dinic's algorithm. Adjacency is scanned in ascending head-node order in both
// the BFS and the blocking-flow DFS, so results are reproducible.
MaxFlow dinic_max_flow(const FlowNetwork& net);

struct DirectedPath {
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  std::vector<Arc> arcs() const;

  friend auto operator<=>(const DirectedPath&, const DirectedPath&) = default;
};

struct Fan {
  VertexId target = -1;
  std::vector<DirectedPath> paths;  // paths[i] starts at the i-th source
};

// Split network of the fan search: x_in -> x_out has capacity 1 except for the
// target (capacity |sources|), every arc xy becomes x_out -> y_in with
// capacity |sources|, and a super-source feeds each source's in-node with one
// unit. The sink is target_out.
FlowNetwork build_fan_network(const Digraph& d, std::span<const VertexId> sources,
                              VertexId target);

// Split network of the internally-disjoint path search from u_out to v_in.
// Endpoints get split capacity l; the direct arc uv (if any) is capped at 1
// so that at most one unit can use it.
FlowNetwork build_iddp_network(const Digraph& d, VertexId u, VertexId v, int l);

// Turns an integral flow into source-to-sink paths expressed in original
// vertex ids. Flow cycles are cancelled on the way.
std::vector<DirectedPath> decompose_flow_to_paths(const FlowNetwork& net,
                                                  std::span<const Capacity> flow);

// One path from each source to target, pairwise sharing only the target.
// Throws FanNotFound when the flow value is below |sources|.
Fan find_fan(const Digraph& d, std::span<const VertexId> sources, VertexId target);
Fan find_fan(const Digraph& d, const VertexSet& sources, VertexId target);

// Exactly l internally-disjoint u->v paths ordered by length, then by vertex
// sequence. Throws PathsNotFound when fewer exist.
std::vector<DirectedPath> find_iddp(const Digraph& d, VertexId u, VertexId v, int l);

// Maximum number of internally-disjoint u->v paths (the direct arc counts once).
int max_internally_disjoint_paths(const Digraph& d, VertexId u, VertexId v);

}  // namespace dptree
