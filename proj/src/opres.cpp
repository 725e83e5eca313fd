#include "gorder/opres.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "gorder/orders.hpp"
#include "gorder/predicates.hpp"

namespace gorder {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

// n from |x| = n^2 + n(n+1)/2 + 3n, if integral.
std::optional<int> base_order_from_total(const Natural& total) {
    for (int n = 1;; ++n) {
        Natural want = Natural(n) * n + Natural(n) * (n + 1) / 2 + 3 * n;
        if (want == total) return n;
        if (want > total) return std::nullopt;
    }
}

// Biconnected components as vertex masks (standard low-link DFS).
std::vector<std::uint64_t> blocks_of(const LabelledGraph& g) {
    int n = g.order();
    std::vector<int> depth(static_cast<std::size_t>(n) + 1, -1), low(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> stack;
    std::vector<std::uint64_t> blocks;

    auto dfs = [&](auto&& self, int v, int parent, int d) -> void {
        depth[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = d;
        std::uint64_t nb = g.neighbours(v);
        while (nb) {
            int w = std::countr_zero(nb) + 1;
            nb &= nb - 1;
            if (w == parent) {
                parent = 0;  // skip the tree edge to the parent once
                continue;
            }
            if (depth[static_cast<std::size_t>(w)] == -1) {
                stack.emplace_back(v, w);
                self(self, w, v, d + 1);
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] >= depth[static_cast<std::size_t>(v)]) {
                    std::uint64_t block = 0;
                    while (!stack.empty()) {
                        auto [a, b] = stack.back();
                        stack.pop_back();
                        block |= bit(a) | bit(b);
                        if (a == v && b == w) break;
                    }
                    blocks.push_back(block);
                }
            } else if (depth[static_cast<std::size_t>(w)] < depth[static_cast<std::size_t>(v)]) {
                stack.emplace_back(v, w);
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], depth[static_cast<std::size_t>(w)]);
            }
        }
    };
    for (int v = 1; v <= n; ++v)
        if (depth[static_cast<std::size_t>(v)] == -1 && g.degree(v) > 0) dfs(dfs, v, 0, 0);
    return blocks;
}

}  // namespace

std::vector<int> indicator_cycles(const CanonicalGraph& g) {
    if (g.order_n() < 1) throw domain_error("indicator cycles need a nonempty base");
    if (g.symbolic()) throw resource_error("indicator cycles: base too large");
    int n = g.order();
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) out.push_back(n + i + 2);
    return out;
}

OPresentation build_opres(const LabelledGraph& g) {
    int n = g.order();
    if (n < 1) throw domain_error("build_opres: base must be nonempty");
    Natural total_order = Natural(n) * n + Natural(n) * (n + 1) / 2 + 3 * n;
    if (total_order > LabelledGraph::kMaxVertices)
        throw resource_error("build_opres: gadget exceeds dense vertex limit");

    LabelledGraph total(static_cast<int>(total_order));
    for (auto [u, v] : g.edge_list()) total.add_edge(u, v);
    int next = n + 1;
    std::vector<int> attach;
    for (int i = 1; i <= n; ++i) {
        int len = n + i + 2;
        int first = next;
        for (int v = 0; v + 1 < len; ++v) total.add_edge(next + v, next + v + 1);
        total.add_edge(first + len - 1, first);
        total.add_edge(first, i);
        attach.push_back(i);
        next += len;
    }

    OPresentation op;
    op.total = CanonicalGraph::of(total);
    op.base_order = n;
    op.labelled_base = g;
    op.total_labelled = std::move(total);
    op.base_vertex.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) op.base_vertex[static_cast<std::size_t>(i - 1)] = i;
    op.cycle_attach = op.base_vertex;
    return op;
}

std::optional<OPresentation> recognize_opres(const CanonicalGraph& x) {
    if (x.symbolic() || x.is_edgeless()) return std::nullopt;
    auto n_opt = base_order_from_total(x.order_n());
    if (!n_opt) return std::nullopt;
    int n = *n_opt;
    const LabelledGraph& g = x.repr();

    // indicator cycles are exactly the blocks that are chordless cycles of
    // the right lengths, attached to the rest by a single edge
    std::map<int, std::uint64_t> cycle_by_len;
    for (auto block : blocks_of(g)) {
        int len = std::popcount(block);
        if (len < n + 3 || len > 2 * n + 2) continue;
        LabelledGraph inner = g.induced(block);
        bool is_cycle = inner.size() == len;
        for (int v = 1; v <= inner.order() && is_cycle; ++v)
            if (inner.degree(v) != 2) is_cycle = false;
        if (!is_cycle) continue;
        if (cycle_by_len.count(len)) return std::nullopt;  // duplicated length
        cycle_by_len[len] = block;
    }
    if (static_cast<int>(cycle_by_len.size()) != n) return std::nullopt;
    for (int i = 1; i <= n; ++i)
        if (!cycle_by_len.count(n + i + 2)) return std::nullopt;

    std::uint64_t cycle_verts = 0;
    for (auto& [len, block] : cycle_by_len) cycle_verts |= block;
    std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    std::uint64_t base_mask = all & ~cycle_verts;
    if (std::popcount(base_mask) != n) return std::nullopt;

    // each cycle must leave by exactly one edge, into the base, and the n
    // attachment points must be distinct
    std::vector<int> attach(static_cast<std::size_t>(n), 0);
    std::uint64_t attach_seen = 0;
    for (auto& [len, block] : cycle_by_len) {
        int out_edges = 0;
        int endpoint = 0;
        for (int v = 1; v <= g.order(); ++v) {
            if (!(block & bit(v))) continue;
            std::uint64_t outside = g.neighbours(v) & ~block;
            out_edges += std::popcount(outside);
            if (outside) endpoint = std::countr_zero(outside) + 1;
        }
        if (out_edges != 1) return std::nullopt;
        if (!(base_mask & bit(endpoint))) return std::nullopt;
        if (attach_seen & bit(endpoint)) return std::nullopt;
        attach_seen |= bit(endpoint);
        attach[static_cast<std::size_t>(len - n - 3)] = endpoint;
    }

    // recover the labelled base: label i = attachment vertex of cycle n+i+2
    std::vector<int> base_list;
    for (int v = 1; v <= g.order(); ++v)
        if (base_mask & bit(v)) base_list.push_back(v);
    LabelledGraph base(n);
    for (std::size_t a = 0; a < base_list.size(); ++a)
        for (std::size_t b = a + 1; b < base_list.size(); ++b)
            if (g.adjacent(base_list[a], base_list[b])) {
                int la = 0, lb = 0;
                for (int i = 0; i < n; ++i) {
                    if (attach[static_cast<std::size_t>(i)] == base_list[a]) la = i + 1;
                    if (attach[static_cast<std::size_t>(i)] == base_list[b]) lb = i + 1;
                }
                base.add_edge(la, lb);
            }

    OPresentation op;
    op.total = x;
    op.base_order = n;
    op.labelled_base = base;
    op.total_labelled = g;
    op.base_vertex = attach;
    op.cycle_attach = attach;

    // the decoded base must reproduce the gadget exactly
    if (build_opres(base).total != x) return std::nullopt;
    return op;
}

bool psi_opres(const CanonicalGraph& y, const CanonicalGraph& x) {
    auto op = recognize_opres(y);
    if (!op) return false;
    return CanonicalGraph::of(op->labelled_base) == x;
}

bool psi_edge_op(const CanonicalGraph& x, const Natural& i, const Natural& j) {
    auto op = recognize_opres(x);
    if (!op) return false;
    if (i < 1 || j < 1 || i > op->base_order || j > op->base_order || i == j) return false;
    return op->labelled_base.adjacent(static_cast<int>(i), static_cast<int>(j));
}

bool construct_from_cycles(const CanonicalGraph& x, const CanonicalGraph& y) {
    if (y.order_n() < 1) return false;
    Natural n = y.order_n();
    Natural z_order = n + n * n + n * (n + 1) / 2 + 2 * n;
    Natural z_size = y.size_n() + n * n + n * (n + 1) / 2 + 2 * n;  // cycles have as many edges as vertices
    if (x.order_n() != z_order || x.size_n() != z_size + n) return false;
    if (y.symbolic() || x.symbolic()) return false;
    if (z_order > LabelledGraph::kMaxVertices)
        throw resource_error("construct_from_cycles: witness exceeds dense vertex limit");
    int ni = static_cast<int>(n);
    LabelledGraph z = y.repr();
    for (int i = 1; i <= ni; ++i)
        z = LabelledGraph::disjoint_union(z, make_cycle_labelled(ni + i + 2));
    return leq(OrderKind::Subgraph, CanonicalGraph::of(z), x);
}

}  // namespace gorder
