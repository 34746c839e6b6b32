#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dptree/digraph.hpp"
#include "dptree/pendant_tree.hpp"

namespace dptree {

struct EnumerationOptions {
  int max_vertices = 14;
  bool force = false;                     // ignore max_vertices
  std::size_t max_candidates = 2'000'000; // guard against path explosion
};

// All trees P(r->alpha) + P(alpha->x) + P(alpha->y) with alpha outside S,
// simple pairwise internally-disjoint paths whose inner vertices avoid S.
// Sorted by size, then by arc list. Throws InstanceTooLarge.
std::vector<OutTree> enumerate_minimal_pendant_trees(const Digraph& host,
                                                     const TerminalSpec& spec,
                                                     const EnumerationOptions& options = {});

struct OracleOptions {
  int max_vertices = 20;
  bool force = false;
  // Stop once this many trees are packed; the value reported is then
  // min(tau, cap). Negative means no cap.
  int cap = -1;
};

struct PackingResult {
  int value = 0;
  std::vector<OutTree> witness;  // `value` trees, each a minimal pendant tree
};

// Exact maximum number of internally-disjoint pendant trees for `spec`.
// Works on internal vertex sets: two minimal trees are internally disjoint
// exactly when their non-terminal vertex sets are, so a subset DP over the
// non-terminals decides feasibility and packing. Throws InstanceTooLarge.
PackingResult tau_s_r(const Digraph& host, const TerminalSpec& spec,
                      const OracleOptions& options = {});

// Same quantity via explicit candidate enumeration and branch-and-bound over
// the conflict relation. Much slower on dense hosts; kept as an independent
// cross-check.
PackingResult tau_s_r_branch_and_bound(const Digraph& host, const TerminalSpec& spec,
                                       const EnumerationOptions& options = {});

struct Tau3Options {
  int max_vertices = 14;
  bool force = false;
  int threads = 1;
};

struct Tau3Result {
  int value = 0;
  std::optional<TerminalSpec> witness_spec;  // lexicographically smallest minimiser
  std::vector<OutTree> witness_family;       // a maximum packing for witness_spec
  bool fast_path = false;                    // decided from min semi-degree alone
};

// min over all 3-sets S and roots r in S. Throws InvalidParameter for fewer
// than three vertices and InstanceTooLarge past the bound.
Tau3Result tau3(const Digraph& host, const Tau3Options& options = {});

struct NecessaryConditionReport {
  int l = 0;
  int kappa = 0;
  int min_semi_degree = 0;
  int kappa_margin = 0;   // kappa - (l + 1)
  int degree_margin = 0;  // min semi-degree - (l + 2)

  bool holds() const { return kappa_margin >= 0 && degree_margin >= 0; }
};

// kappa >= l+1 and min semi-degree >= l+2 must hold whenever tau3 >= l.
// Requires a strong host.
NecessaryConditionReport check_necessary_conditions(const Digraph& host, int l);

}  // namespace dptree
