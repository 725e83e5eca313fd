#pragma once

#include <string>
#include <vector>

#include "gorder/graph.hpp"
#include "gorder/universe.hpp"

namespace gorder {

enum class OrderKind { Subgraph, Induced, Minor };

const char* order_kind_name(OrderKind k);
OrderKind order_kind_from_string(const std::string& s);

/// g <= h in the given order. Memoised process-wide.
bool leq(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h);
bool lt(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h);

/// Cover relation computed by its closed characterisation (no universe):
///  - induced: g < h and |h| = |g|+1;
///  - subgraph: h is g plus one edge, or g plus one isolated vertex;
///  - minor: g < h and no single minor step of h stays strictly above g.
/// Verified against the explicit interposition search (covers) on small
/// universes by the tests.
bool covers_fast(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h);

/// Cover relation by exhaustive interposition search over the universe.
/// Complete because any witness z with g < z < h has |z| <= |h|;
/// domain_error if the universe cannot certify (|h| > universe bound).
bool covers(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h, const Universe& uni);

enum class SubgraphCoverKind { EdgeCover, VertexCover, NotCover };
SubgraphCoverKind cover_kind_s(const CanonicalGraph& g, const CanonicalGraph& h);

/// n-step cover chain g = w_0 <. w_1 <. ... <. w_n = h (n = 0 means g == h).
bool cover_n(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h, int n, const Universe& uni);
bool cover_n_fast(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h, int n);

bool same_card(const CanonicalGraph& g, const CanonicalGraph& h);
bool same_size(const CanonicalGraph& g, const CanonicalGraph& h);

/// g <=_s h tested through the minor order: a witness z with g <=_m z,
/// ||z|| = ||g||, z <=_m h, |z| = |h| is searched in the universe.
bool subgraph_via_minor(const CanonicalGraph& g, const CanonicalGraph& h, const Universe& uni);

/// Dense pairwise comparability and cover tables over a universe.
class OrderMatrix {
public:
    /// OpenMP-parallel build (one row per task).
    static OrderMatrix build(const Universe& uni, OrderKind kind);
    /// Serial reference build, kept for testing the parallel kernel.
    static OrderMatrix build_serial(const Universe& uni, OrderKind kind);

    OrderKind kind() const { return kind_; }
    int size() const { return n_; }
    bool leq(int i, int j) const { return bits_[static_cast<std::size_t>(i) * n_ + j]; }
    bool covers(int i, int j) const { return cover_bits_[static_cast<std::size_t>(i) * n_ + j]; }

    /// JSON document: member list (graph6) plus 0/1 rows.
    std::string to_json(const Universe& uni) const;

private:
    static OrderMatrix build_impl(const Universe& uni, OrderKind kind, bool parallel);
    OrderKind kind_ = OrderKind::Subgraph;
    int n_ = 0;
    std::vector<char> bits_;
    std::vector<char> cover_bits_;
};

/// Process-wide intern table mapping isomorphism types to small ids
/// (concurrent reads, exclusive inserts).
int intern(const CanonicalGraph& g);
const CanonicalGraph& interned(int id);

}  // namespace gorder
