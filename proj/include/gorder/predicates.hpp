#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorder/graph.hpp"

namespace gorder {

/// Named graph families with purely structural membership tests.
/// Boundary conventions (all consequences of the defining formulas, see the
/// corpus): the 0-vertex graph counts as edgeless, forest, tree, path, star,
/// clique, pac, union-of-cliques and connected; it is not a cycle or soc.
enum class Family {
    EmptyG,
    N,
    T,
    P,
    C,
    K,
    S,
    Forest,
    Pac,
    Soc,
    Conn,
    C1,
    C2,
    Bicycle,
    UnionOfCliques,
    Double3star,
};

bool in_family(const CanonicalGraph& g, Family f);
std::optional<Family> family_from_string(const std::string& s);
std::vector<std::pair<std::string, Family>> family_names();

bool is_connected(const CanonicalGraph& g);
bool is_tree(const CanonicalGraph& g);

/// x is a maximal / maximum (under <=_s) component of y; a component of y.
bool maximal_comp(const CanonicalGraph& y, const CanonicalGraph& x);
bool maximal_comp_induced(const CanonicalGraph& y, const CanonicalGraph& x);
bool maximum_comp(const CanonicalGraph& y, const CanonicalGraph& x);
bool comp(const CanonicalGraph& y, const CanonicalGraph& x);

/// x is n disjoint copies of the connected graph y, for some n >= 0 (mult)
/// or exactly n (mult_n). y must be connected and nonempty, else false.
bool mult(const CanonicalGraph& x, const CanonicalGraph& y);
bool mult_n(const CanonicalGraph& x, const CanonicalGraph& y, const Natural& n);

/// Largest n such that n vertex-disjoint copies of y embed into x.
/// domain_error when y is not connected or is empty.
int max_copies(const CanonicalGraph& x, const CanonicalGraph& y);

/// z == x (disjoint union) y, decided by components-multiset equality.
bool disjoint_union_check(const CanonicalGraph& z, const CanonicalGraph& x, const CanonicalGraph& y);

/// x is connected and equals y plus one vertex and one edge (y connected).
bool add_vert(const CanonicalGraph& x, const CanonicalGraph& y);

// Gadget constructors. Cycle parameters are vertex counts (>= 3).
CanonicalGraph make_soc2(int i, int j);
CanonicalGraph make_two_c1s(int i, int j);
CanonicalGraph make_pointed_cycle_sum(int i, int j);
CanonicalGraph make_bicycle(int i, int j);
CanonicalGraph make_cp4c(int i, int j);
CanonicalGraph make_csum(int n);
CanonicalGraph make_psum(int n);
CanonicalGraph make_csum_hook(int n);

bool soc2(const CanonicalGraph& x, int i, int j);
/// Requires 3 < i < j.
bool two_c1s(const CanonicalGraph& x, int i, int j);
bool pointed_cycle_sum(const CanonicalGraph& x, int i, int j);
bool bicycle_of(const CanonicalGraph& x, int i, int j);
/// Requires 3 < i < j.
bool cp4c(const CanonicalGraph& x, int i, int j);

/// x = union of cycles of sizes n+3..2n+2 / paths of sizes n+2..2n+1 /
/// cycles-with-pendant of cycle sizes n+3..2n+2. n >= 1.
bool csum(const CanonicalGraph& x, int n);
bool psum(const CanonicalGraph& x, int n);
bool csum_hook(const CanonicalGraph& x, int n);

/// Depth-two tree: root of degree n whose children all have degree n.
/// Order n^2 + 1. n >= 1.
CanonicalGraph stree(int n);
/// x = N_{a}, y = N_b with a = b^2.
bool psi_sq(const CanonicalGraph& x, const CanonicalGraph& y);

bool psi_plus(const CanonicalGraph& x, const CanonicalGraph& y, const CanonicalGraph& z);
bool psi_times(const CanonicalGraph& x, const CanonicalGraph& y, const CanonicalGraph& z);

bool union_of_cliques(const CanonicalGraph& x);
/// Completes every component to a clique.
CanonicalGraph extend_to_cliques(const CanonicalGraph& x);

Natural count_comps(const CanonicalGraph& x);
/// domain_error on disconnected input.
Natural count_edges_conn(const CanonicalGraph& x);
Natural count_edges(const CanonicalGraph& x);

/// The edge-filling chain c_0 u c_1 u ... u c_m with c_0 = g, c_m complete,
/// each step adding one edge. domain_error unless g is connected, |g| >= 1.
CanonicalGraph build_count_edges_gadget(const CanonicalGraph& g);

}  // namespace gorder
