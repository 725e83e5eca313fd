#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gorder/graph.hpp"

namespace gorder {

/// A graph number code. Either 0 (the empty graph) or a value whose binary
/// expansion starts with 1 and is 1 + m(m-1)/2 bits long for some m >= 1.
using GraphCode = Natural;

/// The code read off a particular labelling: a leading 1 followed by one bit
/// per vertex pair (i,j), j < i, pairs taken in descending lexicographic
/// order of (i,j). The empty graph codes to 0 and the 1-vertex graph to 1.
GraphCode code_of(const LabelledGraph& g);

/// The minimum of code_of over all labellings; injective on isomorphism
/// types. resource_error above kMinCodeMaxVertices.
GraphCode min_code(const CanonicalGraph& g);

/// k -> N_k.
CanonicalGraph graph_of_number(const GraphCode& k);

/// Reads a code back into the labelled graph it describes; nullopt when the
/// value is not of valid code shape.
std::optional<LabelledGraph> decode_code(const GraphCode& code);

/// True iff the value is the *minimum* code of some graph.
bool is_min_code(const GraphCode& code);

/// Edge v_i v_j in the labelling the code describes. domain_error when the
/// code is invalid or an index is outside 1..m.
bool code_edge(const GraphCode& code, int i, int j);

/// Bit length of the value (0 has length 0).
int code_length(const GraphCode& code);

/// length(code) == 1 + m(m-1)/2.
bool code_order_matches(const GraphCode& code, const Natural& m);

/// g -> N_{min_code(g)}; the result is symbolic whenever the index is large.
CanonicalGraph encode_as_natural(const CanonicalGraph& g);

/// A total decision procedure over tuples of graph codes.
struct DecisionProcedure {
    int arity = 1;
    std::function<bool(std::span<const GraphCode>)> decide;
};

/// Pulls a code-level decision procedure back to a graph predicate through
/// the minimum-code map.
std::function<bool(std::span<const CanonicalGraph>)> lift_predicate(DecisionProcedure d);

/// Total order on isomorphism types by minimum code.
bool leq_total(const CanonicalGraph& g, const CanonicalGraph& h);

}  // namespace gorder
