#include "dptree/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <string>

#include "dptree/error.hpp"

namespace dptree {

int FlowNetwork::add_node(NodeOrigin o) {
  origin.push_back(o);
  return node_count++;
}

int FlowNetwork::add_edge(int tail, int head, Capacity capacity) {
  edges.push_back({tail, head, capacity});
  return static_cast<int>(edges.size()) - 1;
}

std::vector<Arc> DirectedPath::arcs() const {
  std::vector<Arc> result;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    result.push_back({vertices[i], vertices[i + 1]});
  }
  return result;
}

namespace {

void validate(const FlowNetwork& net) {
  if (net.node_count <= 0) throw Error(ErrorCode::InvalidNetwork, "empty network");
  auto in_range = [&](int node) { return node >= 0 && node < net.node_count; };
  if (!in_range(net.source) || !in_range(net.sink)) {
    throw Error(ErrorCode::InvalidNetwork, "source or sink out of range");
  }
  if (net.source == net.sink) throw Error(ErrorCode::InvalidNetwork, "source equals sink");
  if (!net.origin.empty() && static_cast<int>(net.origin.size()) != net.node_count) {
    throw Error(ErrorCode::InvalidNetwork, "origin map size does not match node count");
  }
  for (const FlowEdge& e : net.edges) {
    if (!in_range(e.tail) || !in_range(e.head)) {
      throw Error(ErrorCode::InvalidNetwork, "edge endpoint out of range");
    }
    if (e.capacity < 0) throw Error(ErrorCode::InvalidNetwork, "negative capacity");
  }
}

// Residual graph: edge e of the network becomes arcs 2e (forward) and 2e+1
// (reverse). Each node's residual arcs are sorted by head node.
class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net) : net_(net), level_(net.node_count), next_(net.node_count) {
    const std::size_t m = net.edges.size();
    head_.resize(2 * m);
    residual_.resize(2 * m);
    adjacency_.resize(static_cast<std::size_t>(net.node_count));
    for (std::size_t e = 0; e < m; ++e) {
      const FlowEdge& edge = net.edges[e];
      head_[2 * e] = edge.head;
      head_[2 * e + 1] = edge.tail;
      residual_[2 * e] = edge.capacity;
      residual_[2 * e + 1] = 0;
      adjacency_[edge.tail].push_back(static_cast<int>(2 * e));
      adjacency_[edge.head].push_back(static_cast<int>(2 * e + 1));
    }
    for (auto& list : adjacency_) {
      std::stable_sort(list.begin(), list.end(),
                       [&](int a, int b) { return head_[a] < head_[b]; });
    }
  }

  MaxFlow run() {
    Capacity total = 0;
    while (build_levels()) {
      std::fill(next_.begin(), next_.end(), 0);
      while (Capacity pushed = push(net_.source, std::numeric_limits<Capacity>::max())) {
        total += pushed;
      }
    }
    MaxFlow result;
    result.value = total;
    result.flow.resize(net_.edges.size());
    for (std::size_t e = 0; e < net_.edges.size(); ++e) result.flow[e] = residual_[2 * e + 1];
    return result;
  }

 private:
  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[net_.source] = 0;
    queue.push(net_.source);
    while (!queue.empty()) {
      int node = queue.front();
      queue.pop();
      for (int arc : adjacency_[node]) {
        if (residual_[arc] > 0 && level_[head_[arc]] < 0) {
          level_[head_[arc]] = level_[node] + 1;
          queue.push(head_[arc]);
        }
      }
    }
    return level_[net_.sink] >= 0;
  }

  Capacity push(int node, Capacity limit) {
    if (node == net_.sink) return limit;
    auto& list = adjacency_[node];
    for (std::size_t& i = next_[node]; i < list.size(); ++i) {
      int arc = list[i];
      int to = head_[arc];
      if (residual_[arc] <= 0 || level_[to] != level_[node] + 1) continue;
      Capacity pushed = push(to, std::min(limit, residual_[arc]));
      if (pushed > 0) {
        residual_[arc] -= pushed;
        residual_[arc ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  const FlowNetwork& net_;
  std::vector<int> head_;
  std::vector<Capacity> residual_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

int in_node(VertexId x) { return 2 * x; }
int out_node(VertexId x) { return 2 * x + 1; }

FlowNetwork split_nodes(const Digraph& d) {
  FlowNetwork net;
  for (VertexId x = 0; x < d.vertex_count(); ++x) {
    net.add_node({x, SplitSide::In});
    net.add_node({x, SplitSide::Out});
  }
  return net;
}

void check_disjoint(const std::vector<DirectedPath>& paths, VertexId shared_end,
                    VertexId shared_start) {
  std::map<VertexId, std::size_t> owner;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (VertexId v : paths[i].vertices) {
      if (v == shared_end || v == shared_start) continue;
      auto [it, inserted] = owner.emplace(v, i);
      if (!inserted) {
        throw Error(ErrorCode::InternalContractViolation,
                    "flow decomposition reused vertex " + std::to_string(v));
      }
    }
  }
}

}  // namespace

MaxFlow dinic_max_flow(const FlowNetwork& net) {
  validate(net);
  return Dinic(net).run();
}

FlowNetwork build_fan_network(const Digraph& d, std::span<const VertexId> sources,
                              VertexId target) {
  if (!d.is_vertex(target)) {
    throw Error(ErrorCode::InvalidVertex, "fan target " + std::to_string(target));
  }
  if (sources.empty()) throw Error(ErrorCode::InvalidParameter, "fan needs at least one source");
  std::vector<VertexId> sorted(sources.begin(), sources.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidParameter, "fan sources must be distinct");
  }
  for (VertexId z : sources) {
    if (!d.is_vertex(z)) throw Error(ErrorCode::InvalidVertex, "fan source " + std::to_string(z));
    if (z == target) throw Error(ErrorCode::InvalidVertex, "fan source equals target");
  }
  const auto l = static_cast<Capacity>(sources.size());
  FlowNetwork net = split_nodes(d);
  for (VertexId x = 0; x < d.vertex_count(); ++x) {
    net.add_edge(in_node(x), out_node(x), x == target ? l : 1);
  }
  for (const Arc& a : d.arcs()) net.add_edge(out_node(a.tail), in_node(a.head), l);
  net.source = net.add_node({-1, SplitSide::Auxiliary});
  for (VertexId z : sorted) net.add_edge(net.source, in_node(z), 1);
  net.sink = out_node(target);
  return net;
}

FlowNetwork build_iddp_network(const Digraph& d, VertexId u, VertexId v, int l) {
  if (!d.is_vertex(u) || !d.is_vertex(v)) {
    throw Error(ErrorCode::InvalidVertex, "path endpoints must be vertices");
  }
  if (u == v) throw Error(ErrorCode::InvalidParameter, "path endpoints must differ");
  if (l < 1) throw Error(ErrorCode::InvalidParameter, "path count must be positive");
  FlowNetwork net = split_nodes(d);
  for (VertexId x = 0; x < d.vertex_count(); ++x) {
    net.add_edge(in_node(x), out_node(x), (x == u || x == v) ? l : 1);
  }
  for (const Arc& a : d.arcs()) {
    Capacity cap = (a.tail == u && a.head == v) ? 1 : l;
    net.add_edge(out_node(a.tail), in_node(a.head), cap);
  }
  net.source = out_node(u);
  net.sink = in_node(v);
  return net;
}

std::vector<DirectedPath> decompose_flow_to_paths(const FlowNetwork& net,
                                                  std::span<const Capacity> flow) {
  validate(net);
  if (flow.size() != net.edges.size()) {
    throw Error(ErrorCode::DecompositionError, "flow size does not match edge count");
  }
  std::vector<Capacity> remaining(flow.begin(), flow.end());
  std::vector<std::vector<int>> out(static_cast<std::size_t>(net.node_count));
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    if (remaining[e] < 0 || remaining[e] > net.edges[e].capacity) {
      throw Error(ErrorCode::DecompositionError, "flow violates capacity on edge " + std::to_string(e));
    }
    out[net.edges[e].tail].push_back(static_cast<int>(e));
  }
  for (auto& list : out) {
    std::stable_sort(list.begin(), list.end(),
                     [&](int a, int b) { return net.edges[a].head < net.edges[b].head; });
  }
  auto next_edge = [&](int node) {
    for (int e : out[node]) {
      if (remaining[e] > 0) return e;
    }
    return -1;
  };
  auto vertex_of = [&](int node) -> VertexId {
    return net.origin.empty() ? node : net.origin[node].vertex;
  };

  std::vector<DirectedPath> paths;
  std::vector<int> position(static_cast<std::size_t>(net.node_count), -1);
  while (next_edge(net.source) >= 0) {
    std::vector<int> nodes{net.source};
    std::vector<int> used;
    position[net.source] = 0;
    int current = net.source;
    while (current != net.sink) {
      int e = next_edge(current);
      if (e < 0) {
        for (int node : nodes) position[node] = -1;
        throw Error(ErrorCode::DecompositionError,
                    "flow stops at node " + std::to_string(current));
      }
      int to = net.edges[e].head;
      if (position[to] >= 0) {
        // Cancel the cycle to -> ... -> current -> to.
        remaining[e] -= 1;
        for (std::size_t i = static_cast<std::size_t>(position[to]); i < used.size(); ++i) {
          remaining[used[i]] -= 1;
        }
        while (static_cast<int>(nodes.size()) > position[to] + 1) {
          position[nodes.back()] = -1;
          nodes.pop_back();
          used.pop_back();
        }
        current = to;
        continue;
      }
      position[to] = static_cast<int>(nodes.size());
      nodes.push_back(to);
      used.push_back(e);
      current = to;
    }
    for (int e : used) remaining[e] -= 1;
    DirectedPath path;
    for (int node : nodes) {
      position[node] = -1;
      VertexId v = vertex_of(node);
      if (v < 0) continue;
      if (path.vertices.empty() || path.vertices.back() != v) path.vertices.push_back(v);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

Fan find_fan(const Digraph& d, std::span<const VertexId> sources, VertexId target) {
  FlowNetwork net = build_fan_network(d, sources, target);
  MaxFlow mf = dinic_max_flow(net);
  if (mf.value < static_cast<Capacity>(sources.size())) {
    throw Error(ErrorCode::FanNotFound, "only " + std::to_string(mf.value) + " of " +
                                            std::to_string(sources.size()) +
                                            " fan paths exist");
  }
  std::vector<DirectedPath> paths = decompose_flow_to_paths(net, mf.flow);
  Fan fan;
  fan.target = target;
  fan.paths.resize(sources.size());
  for (DirectedPath& p : paths) {
    auto it = std::find(sources.begin(), sources.end(), p.front());
    if (it == sources.end() || p.back() != target) {
      throw Error(ErrorCode::InternalContractViolation, "fan path with unexpected endpoints");
    }
    fan.paths[static_cast<std::size_t>(it - sources.begin())] = std::move(p);
  }
  check_disjoint(fan.paths, target, target);
  return fan;
}

Fan find_fan(const Digraph& d, const VertexSet& sources, VertexId target) {
  return find_fan(d, std::span<const VertexId>(sources.members()), target);
}

std::vector<DirectedPath> find_iddp(const Digraph& d, VertexId u, VertexId v, int l) {
  FlowNetwork net = build_iddp_network(d, u, v, l);
  MaxFlow mf = dinic_max_flow(net);
  if (mf.value < l) {
    throw Error(ErrorCode::PathsNotFound, "only " + std::to_string(mf.value) + " of " +
                                              std::to_string(l) +
                                              " internally-disjoint paths exist");
  }
  std::vector<DirectedPath> paths = decompose_flow_to_paths(net, mf.flow);
  std::sort(paths.begin(), paths.end(), [](const DirectedPath& a, const DirectedPath& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  paths.resize(static_cast<std::size_t>(l));
  check_disjoint(paths, v, u);
  return paths;
}

int max_internally_disjoint_paths(const Digraph& d, VertexId u, VertexId v) {
  FlowNetwork net = build_iddp_network(d, u, v, std::max<VertexId>(1, d.vertex_count()));
  return static_cast<int>(dinic_max_flow(net).value);
}

}  // namespace dptree
