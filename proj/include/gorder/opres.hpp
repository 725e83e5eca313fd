#pragma once

#include <optional>
#include <vector>

#include "gorder/graph.hpp"

namespace gorder {

/// A graph encoding a vertex labelling of its base: the base plus one cycle
/// of each size |base|+3 .. 2|base|+2, cycle i joined to base vertex i by a
/// single edge.
struct OPresentation {
    CanonicalGraph total;        // isomorphism type of the whole gadget
    int base_order = 0;          // n
    LabelledGraph labelled_base; // recovered labelling v_1..v_n
    LabelledGraph total_labelled;     // a labelled copy of the gadget
    std::vector<int> base_vertex;     // total_labelled vertex holding label i (i=1..n)
    std::vector<int> cycle_attach;    // == base_vertex: cycle of size n+i+2 attaches there
};

/// Indicator cycle sizes n+3 .. 2n+2 for n = |g|; domain_error on the
/// 0-vertex graph.
std::vector<int> indicator_cycles(const CanonicalGraph& g);

/// Builds the gadget for a labelled base (|g| >= 1; resource_error when the
/// gadget exceeds the dense vertex limit).
OPresentation build_opres(const LabelledGraph& g);

/// Decodes a gadget back to its labelled base. Cycle lengths are pairwise
/// distinct, so the decoding is unique.
std::optional<OPresentation> recognize_opres(const CanonicalGraph& x);

/// y is an o-presentation of x.
bool psi_opres(const CanonicalGraph& y, const CanonicalGraph& x);

/// x decodes to an o-presentation whose base has edge v_i v_j. Out-of-range
/// or equal indices give false.
bool psi_edge_op(const CanonicalGraph& x, const Natural& i, const Natural& j);

/// x equals y u (all indicator cycles of y) plus exactly |y| more edges,
/// measured by |x| = |z|, ||x|| = ||z|| + |y|, z <=_s x.
bool construct_from_cycles(const CanonicalGraph& x, const CanonicalGraph& y);

}  // namespace gorder
