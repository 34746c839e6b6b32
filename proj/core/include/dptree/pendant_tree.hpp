#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dptree/digraph.hpp"
#include "dptree/maxflow.hpp"

namespace dptree {

// Arborescence stored as a child -> parent map. Trees do not own their host;
// every check that needs arcs takes the host digraph explicitly.
class OutTree {
 public:
  explicit OutTree(VertexId root) : root_(root) {}

  VertexId root() const { return root_; }
  const std::map<VertexId, VertexId>& parents() const { return parent_; }

  bool contains(VertexId v) const { return v == root_ || parent_.contains(v); }
  std::optional<VertexId> parent(VertexId v) const;
  std::vector<VertexId> children(VertexId v) const;
  int out_degree(VertexId v) const;
  int in_degree(VertexId v) const { return parent_.contains(v) ? 1 : 0; }

  std::size_t vertex_count() const { return parent_.size() + 1; }
  std::vector<VertexId> vertices() const;  // ascending
  std::vector<Arc> arcs() const;           // ascending

  // Vertices on the root-to-v path, root first.
  std::vector<VertexId> path_from_root(VertexId v) const;

  friend bool operator==(const OutTree&, const OutTree&) = default;

 private:
  friend OutTree assemble_tree(const Digraph& host, VertexId root, std::span<const Arc> arcs);

  VertexId root_;
  std::map<VertexId, VertexId> parent_;
};

// Three distinct terminals {root, x, y}. x and y keep the order they were
// given in; terminals() is sorted.
class TerminalSpec {
 public:
  TerminalSpec(VertexId root, VertexId x, VertexId y);

  VertexId root() const { return root_; }
  VertexId x() const { return x_; }
  VertexId y() const { return y_; }
  VertexSet terminals() const { return VertexSet{root_, x_, y_}; }
  bool is_terminal(VertexId v) const { return v == root_ || v == x_ || v == y_; }

  friend bool operator==(const TerminalSpec&, const TerminalSpec&) = default;

 private:
  VertexId root_;
  VertexId x_;
  VertexId y_;
};

struct TreeFamily {
  Digraph host;
  TerminalSpec spec;
  std::vector<OutTree> trees;
};

enum class PendantCondition {
  Ok,
  WrongRoot,         // tree is rooted elsewhere
  ArcNotInHost,      // witness_arc is not an arc of the host
  MissingTerminal,   // witness terminal absent from the tree
  RootOutDegree,     // root out-degree differs from 1
  TerminalNotLeaf,   // non-root terminal has a child
};

struct PendantDiagnostic {
  PendantCondition condition = PendantCondition::Ok;
  VertexId witness = -1;
  std::optional<Arc> witness_arc;

  bool ok() const { return condition == PendantCondition::Ok; }
};

enum class DisjointnessCondition { Ok, SharedArc, SharedVertex, MissingTerminal };

struct DisjointnessDiagnostic {
  DisjointnessCondition condition = DisjointnessCondition::Ok;
  VertexId witness = -1;
  std::optional<Arc> witness_arc;

  bool ok() const { return condition == DisjointnessCondition::Ok; }
};

std::string_view to_string(PendantCondition c);
std::string_view to_string(DisjointnessCondition c);

PendantDiagnostic is_pendant_tree(const Digraph& host, const OutTree& t, const TerminalSpec& spec);

// Lowest common ancestor of the two non-root terminals. Throws NotPendantTree.
VertexId branch_vertex(const Digraph& host, const OutTree& t, const TerminalSpec& spec);

// Unique tree path u -> v. Throws NotOnPath unless u is an ancestor of v.
DirectedPath tree_path(const OutTree& t, VertexId u, VertexId v);

DisjointnessDiagnostic are_internally_disjoint(const OutTree& t1, const OutTree& t2,
                                               const TerminalSpec& spec);

struct PairFailure {
  std::size_t first = 0;
  std::size_t second = 0;
  DisjointnessDiagnostic diagnostic;
};

struct FamilyReport {
  bool valid = true;
  std::vector<PendantDiagnostic> trees;  // one per family member
  std::vector<PairFailure> pair_failures;
};

FamilyReport verify_family(const TreeFamily& family);

// Builds the arborescence spanned by `arcs` from `root`; rejects arcs outside
// the host, vertices with two parents, cycles, unreachable arcs and arcs into
// the root. Duplicated arcs are rejected as well.
OutTree assemble_tree(const Digraph& host, VertexId root, std::span<const Arc> arcs);

// Union of the tree paths root->x and root->y.
OutTree prune_to_minimal(const Digraph& host, const OutTree& t, const TerminalSpec& spec);

}  // namespace dptree
