#pragma once

#include <vector>

#include "dptree/constructor.hpp"
#include "dptree/digraph.hpp"
#include "dptree/oracle.hpp"
#include "dptree/pendant_tree.hpp"
#include "dptree/product.hpp"

namespace dptree {

bool is_complete_symmetric(const Digraph& g);

// k internally-disjoint pendant trees for `spec` in a factor. Complete
// symmetric digraphs get the star-like trees r -> a -> {x, y} over the first
// k non-terminals a; anything else goes through the oracle. Throws
// PreconditionViolated when fewer than k trees exist.
std::vector<OutTree> certify_factor(const Digraph& g, const TerminalSpec& spec, int k,
                                    const OracleOptions& options = {});

// Certificates for the projections of `spec`, filled only where construct
// reads them.
FactorCertificates certificates_for(const Digraph& d, const Digraph& h, const ProductDigraph& p,
                                    const TerminalSpec& spec, int l, int k,
                                    const OracleOptions& options = {});

}  // namespace dptree
