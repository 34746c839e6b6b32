#include "dptree/pendant_tree.hpp"

#include <algorithm>
#include <set>

#include "dptree/error.hpp"

namespace dptree {

std::optional<VertexId> OutTree::parent(VertexId v) const {
  auto it = parent_.find(v);
  if (it == parent_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> OutTree::children(VertexId v) const {
  std::vector<VertexId> result;
  for (const auto& [child, par] : parent_) {
    if (par == v) result.push_back(child);
  }
  return result;
}

int OutTree::out_degree(VertexId v) const {
  return static_cast<int>(std::count_if(parent_.begin(), parent_.end(),
                                        [v](const auto& entry) { return entry.second == v; }));
}

std::vector<VertexId> OutTree::vertices() const {
  std::vector<VertexId> result{root_};
  for (const auto& entry : parent_) result.push_back(entry.first);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Arc> OutTree::arcs() const {
  std::vector<Arc> result;
  result.reserve(parent_.size());
  for (const auto& [child, par] : parent_) result.push_back({par, child});
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<VertexId> OutTree::path_from_root(VertexId v) const {
  if (!contains(v)) return {};
  std::vector<VertexId> path{v};
  while (path.back() != root_) path.push_back(parent_.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

TerminalSpec::TerminalSpec(VertexId root, VertexId x, VertexId y) : root_(root), x_(x), y_(y) {
  if (root == x || root == y || x == y) {
    throw Error(ErrorCode::InvalidParameter, "terminals must be three distinct vertices");
  }
}

std::string_view to_string(PendantCondition c) {
  switch (c) {
    case PendantCondition::Ok: return "ok";
    case PendantCondition::WrongRoot: return "wrong_root";
    case PendantCondition::ArcNotInHost: return "arc_not_in_host";
    case PendantCondition::MissingTerminal: return "missing_terminal";
    case PendantCondition::RootOutDegree: return "root_out_degree";
    case PendantCondition::TerminalNotLeaf: return "terminal_not_leaf";
  }
  return "unknown";
}

std::string_view to_string(DisjointnessCondition c) {
  switch (c) {
    case DisjointnessCondition::Ok: return "ok";
    case DisjointnessCondition::SharedArc: return "shared_arc";
    case DisjointnessCondition::SharedVertex: return "shared_vertex";
    case DisjointnessCondition::MissingTerminal: return "missing_terminal";
  }
  return "unknown";
}

PendantDiagnostic is_pendant_tree(const Digraph& host, const OutTree& t, const TerminalSpec& spec) {
  if (t.root() != spec.root()) return {PendantCondition::WrongRoot, t.root(), std::nullopt};
  for (const Arc& a : t.arcs()) {
    if (!host.has_arc(a.tail, a.head)) return {PendantCondition::ArcNotInHost, a.head, a};
  }
  for (VertexId s : {spec.x(), spec.y()}) {
    if (!t.contains(s)) return {PendantCondition::MissingTerminal, s, std::nullopt};
  }
  if (t.out_degree(t.root()) != 1) return {PendantCondition::RootOutDegree, t.root(), std::nullopt};
  for (VertexId s : {spec.x(), spec.y()}) {
    if (t.out_degree(s) != 0) return {PendantCondition::TerminalNotLeaf, s, std::nullopt};
  }
  return {};
}

VertexId branch_vertex(const Digraph& host, const OutTree& t, const TerminalSpec& spec) {
  PendantDiagnostic diag = is_pendant_tree(host, t, spec);
  if (!diag.ok()) {
    throw Error(ErrorCode::NotPendantTree, std::string(to_string(diag.condition)) +
                                               " at vertex " + std::to_string(diag.witness));
  }
  auto px = t.path_from_root(spec.x());
  auto py = t.path_from_root(spec.y());
  std::size_t i = 0;
  while (i + 1 < px.size() && i + 1 < py.size() && px[i + 1] == py[i + 1]) ++i;
  return px[i];
}

DirectedPath tree_path(const OutTree& t, VertexId u, VertexId v) {
  auto from_root = t.path_from_root(v);
  auto it = std::find(from_root.begin(), from_root.end(), u);
  if (it == from_root.end()) {
    throw Error(ErrorCode::NotOnPath, "vertex " + std::to_string(v) +
                                          " is not a descendant of " + std::to_string(u));
  }
  return DirectedPath{std::vector<VertexId>(it, from_root.end())};
}

DisjointnessDiagnostic are_internally_disjoint(const OutTree& t1, const OutTree& t2,
                                               const TerminalSpec& spec) {
  for (VertexId s : spec.terminals()) {
    if (!t1.contains(s) || !t2.contains(s)) {
      return {DisjointnessCondition::MissingTerminal, s, std::nullopt};
    }
  }
  auto a1 = t1.arcs();
  auto a2 = t2.arcs();
  std::vector<Arc> shared_arcs;
  std::set_intersection(a1.begin(), a1.end(), a2.begin(), a2.end(),
                        std::back_inserter(shared_arcs));
  if (!shared_arcs.empty()) {
    return {DisjointnessCondition::SharedArc, shared_arcs.front().head, shared_arcs.front()};
  }
  auto v1 = t1.vertices();
  auto v2 = t2.vertices();
  std::vector<VertexId> shared;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(shared));
  for (VertexId v : shared) {
    if (!spec.is_terminal(v)) return {DisjointnessCondition::SharedVertex, v, std::nullopt};
  }
  return {};
}

FamilyReport verify_family(const TreeFamily& family) {
  FamilyReport report;
  for (const OutTree& t : family.trees) {
    report.trees.push_back(is_pendant_tree(family.host, t, family.spec));
    if (!report.trees.back().ok()) report.valid = false;
  }
  for (std::size_t i = 0; i < family.trees.size(); ++i) {
    for (std::size_t j = i + 1; j < family.trees.size(); ++j) {
      auto diag = are_internally_disjoint(family.trees[i], family.trees[j], family.spec);
      if (!diag.ok()) {
        report.valid = false;
        report.pair_failures.push_back({i, j, diag});
      }
    }
  }
  return report;
}

OutTree assemble_tree(const Digraph& host, VertexId root, std::span<const Arc> arcs) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::NotArborescence, what); };
  if (!host.is_vertex(root)) {
    throw Error(ErrorCode::InvalidVertex, "root " + std::to_string(root));
  }
  OutTree tree(root);
  for (const Arc& a : arcs) {
    if (!host.has_arc(a.tail, a.head)) {
      fail("arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) + " not in host");
    }
    if (a.head == root) fail("arc into root " + std::to_string(root));
    auto [it, inserted] = tree.parent_.emplace(a.head, a.tail);
    if (!inserted) fail("multiple parents for vertex " + std::to_string(a.head));
  }
  // Every vertex must climb back to the root without revisiting anything.
  std::map<VertexId, int> state;  // 1 = on current walk, 2 = reaches root
  for (const auto& entry : tree.parent_) {
    std::vector<VertexId> walk;
    VertexId v = entry.first;
    while (v != root && state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      auto it = tree.parent_.find(v);
      if (it == tree.parent_.end()) {
        fail("vertex " + std::to_string(v) + " is not connected to the root");
      }
      v = it->second;
    }
    if (v != root && state[v] == 1) fail("cycle through vertex " + std::to_string(v));
    for (VertexId w : walk) state[w] = 2;
  }
  return tree;
}

OutTree prune_to_minimal(const Digraph& host, const OutTree& t, const TerminalSpec& spec) {
  std::set<Arc> arcs;
  for (VertexId s : {spec.x(), spec.y()}) {
    auto path = t.path_from_root(s);
    if (path.empty()) {
      throw Error(ErrorCode::NotPendantTree, "terminal " + std::to_string(s) + " missing");
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) arcs.insert({path[i], path[i + 1]});
  }
  std::vector<Arc> list(arcs.begin(), arcs.end());
  return assemble_tree(host, t.root(), list);
}

}  // namespace dptree
