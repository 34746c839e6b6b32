#pragma once

#include <string>
#include <vector>

#include "dptree/digraph.hpp"
#include "dptree/pendant_tree.hpp"
#include "dptree/product.hpp"

namespace dptree {

// Packings in the two factors. d_trees are pendant trees for the projected
// terminal triple in D rooted at the root's D-coordinate; they are only read
// when the three terminals have distinct D-coordinates. h_trees likewise for H.
struct FactorCertificates {
  int l = 0;
  int h = 0;
  std::vector<OutTree> d_trees;
  std::vector<OutTree> h_trees;
};

// One ingredient of an output tree: a lifted path, tree, fan path or single
// arc, given by the product arcs it contributed.
struct TracePiece {
  std::string label;
  std::vector<Arc> arcs;
};

struct TreeProvenance {
  std::string name;  // "T'_j" or "T*_i"
  std::vector<TracePiece> pieces;
};

struct ConstructionTrace {
  int sd = 0;            // |S_D|
  int sh = 0;            // |S_H|
  std::string subcase;   // branch identifier, e.g. "sd2.root-layer.shared-leaf"
  std::vector<std::string> notes;
  std::vector<TreeProvenance> trees;
};

struct PhaseTimings {
  double validation_ms = 0;
  double flow_ms = 0;
  double lifting_ms = 0;
  double assembly_ms = 0;

  double total_ms() const { return validation_ms + flow_ms + lifting_ms + assembly_ms; }
};

struct ConstructionResult {
  TreeFamily family;
  ConstructionTrace trace;
  PhaseTimings timings;
};

// Builds l + h pairwise internally-disjoint pendant trees for `spec` in the
// product. Trees come out as T'_1..T'_h followed by T*_1..T*_l.
//
// Throws PreconditionViolated when a factor is not strong, l or h is below 1,
// a factor misses kappa >= k+1 or min semi-degree >= k+2 for its k, or a
// required certificate family is malformed. Throws InternalContractViolation
// (message carries the partial trace) if a flow routine comes up short or a
// composed tree is not an arborescence.
ConstructionResult construct(const Digraph& d, const Digraph& h, const ProductDigraph& p,
                             const TerminalSpec& spec, const FactorCertificates& certs);

// The three branches, dispatched on |S_D|. Each performs the same input checks
// as construct and additionally rejects a spec of the wrong shape.
ConstructionResult case_one_layer(const Digraph& d, const Digraph& h, const ProductDigraph& p,
                                  const TerminalSpec& spec, const FactorCertificates& certs);
ConstructionResult case_two_layers(const Digraph& d, const Digraph& h, const ProductDigraph& p,
                                   const TerminalSpec& spec, const FactorCertificates& certs);
ConstructionResult case_three_layers(const Digraph& d, const Digraph& h,
                                     const ProductDigraph& p, const TerminalSpec& spec,
                                     const FactorCertificates& certs);

// Human-readable dump, used in contract-violation messages.
std::string describe(const ConstructionTrace& trace);

}  // namespace dptree
