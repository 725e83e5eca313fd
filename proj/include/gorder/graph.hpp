#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gorder/error.hpp"

namespace gorder {

/// Arbitrary-precision natural number.
using Natural = boost::multiprecision::cpp_int;

/// A simple undirected graph on vertices 1..n with adjacency stored as one
/// 64-bit mask per vertex (bit w-1 set in row v iff vw is an edge).
class LabelledGraph {
public:
    static constexpr int kMaxVertices = 64;

    LabelledGraph() = default;
    explicit LabelledGraph(int n);

    /// Builds from a 1-based edge list. Rejects self-loops, out-of-range
    /// endpoints and duplicate edges.
    static LabelledGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const;

    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Neighbour mask of v (bit w-1 set iff vw edge).
    std::uint64_t neighbours(int v) const { return rows_[v - 1]; }
    int degree(int v) const;
    std::vector<int> degree_sequence() const;  // descending

    /// Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edge_list() const;

    /// Relabels: vertex v becomes perm[v-1] (perm is a permutation of 1..n).
    LabelledGraph relabelled(const std::vector<int>& perm) const;

    /// Subgraph induced by the vertex set given as a bit mask, vertices
    /// renumbered 1..popcount in increasing original order.
    LabelledGraph induced(std::uint64_t vertex_mask) const;
    LabelledGraph without_vertex(int v) const;
    /// Contracts edge uv into a single vertex.
    LabelledGraph contracted(int u, int v) const;

    LabelledGraph complement() const;
    static LabelledGraph disjoint_union(const LabelledGraph& a, const LabelledGraph& b);

    std::vector<std::uint64_t> component_masks() const;
    int component_count() const;
    bool connected() const;  // n <= 1 counts as connected

    bool operator==(const LabelledGraph& other) const = default;

    const std::vector<std::uint64_t>& rows() const { return rows_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// An isomorphism type. Graphs of order <= kMaxVertices are held as a
/// canonical labelled representative; larger graphs are representable only
/// when edgeless (N_k for arbitrary k), stored by vertex count alone.
class CanonicalGraph {
public:
    CanonicalGraph();  // the 0-vertex graph

    static CanonicalGraph of(const LabelledGraph& g);
    /// N_k for any k >= 0.
    static CanonicalGraph edgeless(const Natural& k);
    /// Wraps a labelled graph the caller guarantees is already in canonical
    /// form (e.g. fresh out of min_code_labelling on a whole small graph).
    static CanonicalGraph adopt_canonical(LabelledGraph g);

    bool symbolic() const { return symbolic_; }
    /// Canonical labelled representative; resource_error for symbolic N_k.
    const LabelledGraph& repr() const;

    Natural order_n() const;
    int order() const;  // resource_error if the order exceeds kMaxVertices
    Natural size_n() const { return symbolic_ ? Natural(0) : Natural(repr_.size()); }
    int size() const { return symbolic_ ? 0 : repr_.size(); }

    bool is_empty_graph() const;  // the 0-vertex graph
    bool is_edgeless() const { return symbolic_ || repr_.size() == 0; }

    std::vector<int> degree_sequence() const;

    bool operator==(const CanonicalGraph& other) const;
    bool operator!=(const CanonicalGraph& other) const { return !(*this == other); }
    /// Total order: (vertex count, canonical adjacency rows).
    std::strong_ordering operator<=>(const CanonicalGraph& other) const;

    std::size_t hash() const;

    /// Short human-readable tag (vertex/edge counts), for diagnostics.
    std::string describe() const;

private:
    LabelledGraph repr_;
    Natural sym_order_;
    bool symbolic_ = false;
};

struct CanonicalGraphHash {
    std::size_t operator()(const CanonicalGraph& g) const { return g.hash(); }
};

/// Named one-parameter graph families.
enum class NamedFamily { N, P, C, K, S, C1, C2 };

/// Member of the family at parameter k: N_k, P_k, C_k, K_k, S_k, or the
/// cycle C_k with a pendant vertex (C1, k+1 vertices) / pendant path of two
/// vertices (C2, k+2 vertices). Cycles require k >= 3.
CanonicalGraph make_named(NamedFamily family, int k);
std::optional<NamedFamily> named_family_from_string(const std::string& s);

/// Labelled constructors (1..k labelling as built).
LabelledGraph make_path_labelled(int k);
LabelledGraph make_cycle_labelled(int k);
LabelledGraph make_clique_labelled(int k);
LabelledGraph make_star_labelled(int k);

/// The 6-vertex tree with two adjacent degree-3 vertices.
CanonicalGraph make_double3star();

CanonicalGraph disjoint_union(const CanonicalGraph& a, const CanonicalGraph& b);
/// Connected components as a sorted multiset. resource_error on symbolic N_k.
std::vector<CanonicalGraph> components(const CanonicalGraph& g);
CanonicalGraph complement(const CanonicalGraph& g);

/// Canonical labelling search (order <= kMinCodeMaxVertices): the labelled
/// representative whose adjacency code (see encoding.hpp) is minimal.
constexpr int kMinCodeMaxVertices = 11;
LabelledGraph min_code_labelling(const LabelledGraph& g);

}  // namespace gorder

template <>
struct std::hash<gorder::CanonicalGraph> {
    std::size_t operator()(const gorder::CanonicalGraph& g) const { return g.hash(); }
};
