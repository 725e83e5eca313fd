#include "gorder/predicates.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <mutex>
#include <shared_mutex>

#include "gorder/orders.hpp"

namespace gorder {

namespace {

bool acyclic(const LabelledGraph& g) { return g.size() == g.order() - g.component_count(); }

bool every_component(const CanonicalGraph& g, bool (*pred)(const LabelledGraph&)) {
    if (g.is_edgeless()) {
        LabelledGraph one(1);
        return g.order_n() == 0 || pred(one);
    }
    for (auto m : g.repr().component_masks())
        if (!pred(g.repr().induced(m))) return false;
    return true;
}

bool is_cycle_component(const LabelledGraph& c) {
    if (c.order() < 3) return false;
    for (int v = 1; v <= c.order(); ++v)
        if (c.degree(v) != 2) return false;
    return true;
}

bool is_clique_component(const LabelledGraph& c) {
    return c.size() == c.order() * (c.order() - 1) / 2;
}

int max_degree(const LabelledGraph& g) {
    int d = 0;
    for (int v = 1; v <= g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

bool star_shaped(const LabelledGraph& g) {
    // some vertex incident to every edge
    if (g.size() == 0) return true;
    for (int v = 1; v <= g.order(); ++v)
        if (g.degree(v) == g.size()) return true;
    return false;
}

bool bicycle_struct(const LabelledGraph& g, bool require_unequal) {
    // two disjoint cycles joined by exactly one edge
    if (!g.connected()) return false;
    int n = g.order();
    if (g.size() != n + 1) return false;
    std::vector<int> deg3;
    for (int v = 1; v <= n; ++v) {
        int d = g.degree(v);
        if (d == 3)
            deg3.push_back(v);
        else if (d != 2)
            return false;
    }
    if (deg3.size() != 2) return false;
    if (!g.adjacent(deg3[0], deg3[1])) return false;
    LabelledGraph cut = g;
    cut.remove_edge(deg3[0], deg3[1]);
    auto comps = cut.component_masks();
    if (comps.size() != 2) return false;
    int a = std::popcount(comps[0]), b = std::popcount(comps[1]);
    if (!is_cycle_component(cut.induced(comps[0])) || !is_cycle_component(cut.induced(comps[1]))) return false;
    return !require_unequal || a != b;
}

}  // namespace

bool is_connected(const CanonicalGraph& g) {
    if (g.is_edgeless()) return g.order_n() <= 1;
    return g.repr().connected();
}

bool is_tree(const CanonicalGraph& g) {
    if (g.is_empty_graph()) return true;
    if (g.symbolic()) return false;
    return g.repr().connected() && acyclic(g.repr());
}

bool in_family(const CanonicalGraph& g, Family f) {
    switch (f) {
        case Family::EmptyG:
            return g.is_empty_graph();
        case Family::N:
            return g.is_edgeless();
        case Family::T:
            return is_tree(g);
        case Family::P:
            // connected, acyclic, max degree <= 2 (so the 0- and 1-vertex
            // graphs and K_2 are paths)
            return is_tree(g) && (g.is_edgeless() || max_degree(g.repr()) <= 2);
        case Family::C:
            return !g.symbolic() && g.order_n() >= 3 && g.repr().connected() && is_cycle_component(g.repr());
        case Family::K:
            return g.is_edgeless() ? g.order_n() <= 1 : is_clique_component(g.repr());
        case Family::S:
            return is_tree(g) && (g.is_edgeless() || star_shaped(g.repr()));
        case Family::Forest:
            return g.is_edgeless() || acyclic(g.repr());
        case Family::Pac:
            return g.is_edgeless() || max_degree(g.repr()) <= 2;
        case Family::Soc:
            return !g.is_empty_graph() && !g.symbolic() && every_component(g, is_cycle_component);
        case Family::Conn:
            return is_connected(g);
        case Family::C1: {
            if (g.symbolic() || !is_connected(g)) return false;
            int n = g.order();
            if (n < 4 || g.size() != n) return false;
            int pendant = 0, hub = 0, ones = 0, threes = 0;
            for (int v = 1; v <= n; ++v) {
                int d = g.repr().degree(v);
                if (d == 1) { ++ones; pendant = v; }
                else if (d == 3) { ++threes; hub = v; }
                else if (d != 2) return false;
            }
            // exactly a cycle plus one pendant: the degree-1 vertex hangs
            // off the unique degree-3 vertex
            return ones == 1 && threes == 1 && g.repr().adjacent(pendant, hub);
        }
        case Family::C2: {
            if (g.symbolic() || !is_connected(g)) return false;
            int n = g.order();
            if (n < 5 || g.size() != n) return false;
            // cycle plus a pendant path of two vertices
            return g == make_named(NamedFamily::C2, n - 2);
        }
        case Family::Bicycle:
            return !g.symbolic() && bicycle_struct(g.repr(), /*require_unequal=*/true);
        case Family::UnionOfCliques:
            return g.is_edgeless() || every_component(g, is_clique_component);
        case Family::Double3star:
            return g == make_double3star();
    }
    return false;
}

std::vector<std::pair<std::string, Family>> family_names() {
    return {
        {"empty", Family::EmptyG}, {"N", Family::N}, {"T", Family::T}, {"P", Family::P},
        {"C", Family::C}, {"K", Family::K}, {"S", Family::S}, {"forest", Family::Forest},
        {"pac", Family::Pac}, {"soc", Family::Soc}, {"conn", Family::Conn}, {"C1", Family::C1},
        {"C2", Family::C2}, {"bicycle", Family::Bicycle}, {"uoc", Family::UnionOfCliques},
        {"double3star", Family::Double3star},
    };
}

std::optional<Family> family_from_string(const std::string& s) {
    for (auto& [name, f] : family_names())
        if (name == s) return f;
    return std::nullopt;
}

bool maximal_comp(const CanonicalGraph& y, const CanonicalGraph& x) {
    if (!is_connected(x) || x.is_empty_graph()) return false;
    auto comps = components(y);
    if (std::find(comps.begin(), comps.end(), x) == comps.end()) return false;
    for (const auto& c : comps)
        if (lt(OrderKind::Subgraph, x, c)) return false;
    return true;
}

bool maximal_comp_induced(const CanonicalGraph& y, const CanonicalGraph& x) {
    if (!is_connected(x) || x.is_empty_graph()) return false;
    auto comps = components(y);
    if (std::find(comps.begin(), comps.end(), x) == comps.end()) return false;
    for (const auto& c : comps)
        if (lt(OrderKind::Induced, x, c)) return false;
    return true;
}

bool maximum_comp(const CanonicalGraph& y, const CanonicalGraph& x) {
    auto comps = components(y);
    if (std::find(comps.begin(), comps.end(), x) == comps.end()) return false;
    for (const auto& c : comps)
        if (!leq(OrderKind::Subgraph, c, x)) return false;
    return true;
}

bool comp(const CanonicalGraph& y, const CanonicalGraph& x) {
    auto comps = components(y);
    return std::find(comps.begin(), comps.end(), x) != comps.end();
}

bool mult(const CanonicalGraph& x, const CanonicalGraph& y) {
    if (!is_connected(y) || y.is_empty_graph()) return false;
    if (x.is_empty_graph()) return true;
    for (const auto& c : components(x))
        if (c != y) return false;
    return true;
}

bool mult_n(const CanonicalGraph& x, const CanonicalGraph& y, const Natural& n) {
    if (!mult(x, y)) return false;
    return x.order_n() == n * y.order_n();
}

namespace {

int max_copies_connected_host(const LabelledGraph& host, const LabelledGraph& pat);

// Enumerate images (vertex sets) of embeddings of pat into host, calling f;
// returns early when f returns false.
template <typename F>
bool for_each_embedding_image(const LabelledGraph& pat, const LabelledGraph& host, F&& f) {
    std::vector<int> order(static_cast<std::size_t>(pat.order()));
    std::iota(order.begin(), order.end(), 1);
    // connectivity-first ordering
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pat.degree(a) > pat.degree(b); });
    std::vector<int> image(static_cast<std::size_t>(pat.order()), 0);
    std::uint64_t used = 0;
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return f(used);
        int v = order[depth];
        for (int w = 1; w <= host.order(); ++w) {
            if (used & (std::uint64_t{1} << (w - 1))) continue;
            if (host.degree(w) < pat.degree(v)) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d)
                if (pat.adjacent(v, order[d]) && !host.adjacent(w, image[static_cast<std::size_t>(order[d] - 1)])) ok = false;
            if (!ok) continue;
            image[static_cast<std::size_t>(v - 1)] = w;
            used |= std::uint64_t{1} << (w - 1);
            if (!self(self, depth + 1)) return false;
            used &= ~(std::uint64_t{1} << (w - 1));
        }
        return true;
    };
    return rec(rec, 0);
}

struct PackingMemo {
    std::shared_mutex mu;
    std::map<std::pair<int, int>, int> map;
};

PackingMemo& packing_memo() {
    static PackingMemo memo;
    return memo;
}

int max_copies_connected_host(const LabelledGraph& host, const LabelledGraph& pat) {
    if (host.order() < pat.order()) return 0;
    auto key = std::make_pair(intern(CanonicalGraph::of(host)), intern(CanonicalGraph::of(pat)));
    auto& memo = packing_memo();
    {
        std::shared_lock lock(memo.mu);
        if (auto it = memo.map.find(key); it != memo.map.end()) return it->second;
    }
    int best = 0;
    for_each_embedding_image(pat, host, [&](std::uint64_t image_mask) {
        std::uint64_t all = host.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << host.order()) - 1;
        LabelledGraph rest = host.induced(all & ~image_mask);
        int sub = 0;
        for (auto m : rest.component_masks()) sub += max_copies_connected_host(rest.induced(m), pat);
        best = std::max(best, 1 + sub);
        return true;
    });
    std::unique_lock lock(memo.mu);
    memo.map.emplace(key, best);
    return best;
}

}  // namespace

int max_copies(const CanonicalGraph& x, const CanonicalGraph& y) {
    if (!is_connected(y) || y.is_empty_graph()) throw domain_error("max_copies: y must be connected and nonempty");
    if (y.order_n() == 1) {
        if (x.order_n() > 1'000'000) throw resource_error("max_copies: count too large");
        return static_cast<int>(x.order_n());
    }
    if (x.is_edgeless()) return 0;  // y is connected with an edge here
    int total = 0;
    for (auto m : x.repr().component_masks())
        total += max_copies_connected_host(x.repr().induced(m), y.repr());
    return total;
}

bool disjoint_union_check(const CanonicalGraph& z, const CanonicalGraph& x, const CanonicalGraph& y) {
    if (z.symbolic() || x.symbolic() || y.symbolic())
        return z.is_edgeless() && x.is_edgeless() && y.is_edgeless() &&
               z.order_n() == x.order_n() + y.order_n();
    auto zc = components(z);
    auto xc = components(x);
    auto yc = components(y);
    xc.insert(xc.end(), yc.begin(), yc.end());
    std::sort(xc.begin(), xc.end());
    return zc == xc;
}

bool add_vert(const CanonicalGraph& x, const CanonicalGraph& y) {
    if (!is_connected(x) || !is_connected(y)) return false;
    if (x.symbolic() || y.symbolic()) return false;
    if (x.order_n() != y.order_n() + 1 || x.size_n() != y.size_n() + 1) return false;
    return leq(OrderKind::Subgraph, y, x);
}

CanonicalGraph make_soc2(int i, int j) {
    if (i < 3 || j < 3) throw domain_error("soc2: cycle sizes must be >= 3");
    return disjoint_union(make_named(NamedFamily::C, i), make_named(NamedFamily::C, j));
}

CanonicalGraph make_two_c1s(int i, int j) {
    if (i < 3 || j < 3) throw domain_error("two_c1s: cycle sizes must be >= 3");
    return disjoint_union(make_named(NamedFamily::C1, i), make_named(NamedFamily::C1, j));
}

namespace {

// the two-cycle gadgets are rebuilt constantly inside formula sweeps
CanonicalGraph gadget_cached(int tag, int i, int j, CanonicalGraph (*build)(int, int)) {
    struct Cache {
        std::shared_mutex mu;
        std::map<std::tuple<int, int, int>, CanonicalGraph> map;
    };
    static Cache cache;
    auto key = std::make_tuple(tag, i, j);
    {
        std::shared_lock lock(cache.mu);
        auto it = cache.map.find(key);
        if (it != cache.map.end()) return it->second;
    }
    CanonicalGraph g = build(i, j);
    std::unique_lock lock(cache.mu);
    return cache.map.emplace(key, std::move(g)).first->second;
}

CanonicalGraph build_pcs(int i, int j) {
    LabelledGraph g(i + j + 1);
    for (int v = 1; v < i; ++v) g.add_edge(v, v + 1);
    g.add_edge(i, 1);
    for (int v = i + 1; v < i + j; ++v) g.add_edge(v, v + 1);
    g.add_edge(i + j, i + 1);
    g.add_edge(1, i + j + 1);
    g.add_edge(i + 1, i + j + 1);
    return CanonicalGraph::of(g);
}

CanonicalGraph build_bicycle(int i, int j) {
    LabelledGraph g(i + j);
    for (int v = 1; v < i; ++v) g.add_edge(v, v + 1);
    g.add_edge(i, 1);
    for (int v = i + 1; v < i + j; ++v) g.add_edge(v, v + 1);
    g.add_edge(i + j, i + 1);
    g.add_edge(1, i + 1);
    return CanonicalGraph::of(g);
}

CanonicalGraph build_cp4c(int i, int j) {
    LabelledGraph g(i + j + 2);
    for (int v = 1; v < i; ++v) g.add_edge(v, v + 1);
    g.add_edge(i, 1);
    for (int v = i + 1; v < i + j; ++v) g.add_edge(v, v + 1);
    g.add_edge(i + j, i + 1);
    int v1 = i + j + 1, v2 = i + j + 2;
    g.add_edge(v1, v2);
    g.add_edge(1, v1);
    g.add_edge(i + 1, v2);
    return CanonicalGraph::of(g);
}

}  // namespace

CanonicalGraph make_pointed_cycle_sum(int i, int j) {
    if (i < 3 || j < 3) throw domain_error("pointed cycle sum: cycle sizes must be >= 3");
    return gadget_cached(0, i, j, build_pcs);
}

CanonicalGraph make_bicycle(int i, int j) {
    if (i < 3 || j < 3) throw domain_error("bicycle: cycle sizes must be >= 3");
    return gadget_cached(1, i, j, build_bicycle);
}

CanonicalGraph make_cp4c(int i, int j) {
    if (i < 3 || j < 3) throw domain_error("cp4c: cycle sizes must be >= 3");
    return gadget_cached(2, i, j, build_cp4c);
}

CanonicalGraph make_csum(int n) {
    if (n < 1) throw domain_error("csum: n >= 1");
    return gadget_cached(3, n, 0, [](int k, int) {
        CanonicalGraph acc;
        for (int i = 1; i <= k; ++i) acc = disjoint_union(acc, make_named(NamedFamily::C, k + i + 2));
        return acc;
    });
}

CanonicalGraph make_psum(int n) {
    if (n < 1) throw domain_error("psum: n >= 1");
    return gadget_cached(4, n, 0, [](int k, int) {
        CanonicalGraph acc;
        for (int i = 1; i <= k; ++i) acc = disjoint_union(acc, make_named(NamedFamily::P, k + i + 1));
        return acc;
    });
}

CanonicalGraph make_csum_hook(int n) {
    if (n < 1) throw domain_error("csum_hook: n >= 1");
    return gadget_cached(5, n, 0, [](int k, int) {
        CanonicalGraph acc;
        for (int i = 1; i <= k; ++i) acc = disjoint_union(acc, make_named(NamedFamily::C1, k + i + 2));
        return acc;
    });
}

bool soc2(const CanonicalGraph& x, int i, int j) {
    if (i < 3 || j < 3) throw domain_error("soc2: cycle sizes must be >= 3");
    return x == make_soc2(i, j);
}

bool two_c1s(const CanonicalGraph& x, int i, int j) {
    if (!(3 < i && i < j)) throw domain_error("two_c1s: needs 3 < i < j");
    return x == make_two_c1s(i, j);
}

bool pointed_cycle_sum(const CanonicalGraph& x, int i, int j) {
    return x == make_pointed_cycle_sum(i, j);
}

bool bicycle_of(const CanonicalGraph& x, int i, int j) { return x == make_bicycle(i, j); }

bool cp4c(const CanonicalGraph& x, int i, int j) {
    if (!(3 < i && i < j)) throw domain_error("cp4c: needs 3 < i < j");
    return x == make_cp4c(i, j);
}

bool csum(const CanonicalGraph& x, int n) {
    if (n < 1) return false;
    if (x.symbolic()) return false;
    return x == make_csum(n);
}

bool psum(const CanonicalGraph& x, int n) {
    if (n < 1) return false;
    return !x.symbolic() && x == make_psum(n);
}

bool csum_hook(const CanonicalGraph& x, int n) {
    if (n < 1) return false;
    return !x.symbolic() && x == make_csum_hook(n);
}

CanonicalGraph stree(int n) {
    if (n < 1) throw domain_error("stree: n >= 1");
    int total = n * n + 1;
    LabelledGraph g(total);
    for (int i = 1; i <= n; ++i) g.add_edge(1, 1 + i);
    int next = n + 2;
    for (int i = 1; i <= n; ++i)
        for (int k = 0; k < n - 1; ++k) g.add_edge(1 + i, next++);
    return CanonicalGraph::of(g);
}

bool psi_sq(const CanonicalGraph& x, const CanonicalGraph& y) {
    if (!x.is_edgeless() || !y.is_edgeless()) return false;
    return x.order_n() == y.order_n() * y.order_n();
}

bool psi_plus(const CanonicalGraph& x, const CanonicalGraph& y, const CanonicalGraph& z) {
    if (!x.is_edgeless() || !y.is_edgeless() || !z.is_edgeless()) return false;
    return x.order_n() + y.order_n() == z.order_n();
}

bool psi_times(const CanonicalGraph& x, const CanonicalGraph& y, const CanonicalGraph& z) {
    if (!x.is_edgeless() || !y.is_edgeless() || !z.is_edgeless()) return false;
    return x.order_n() * y.order_n() == z.order_n();
}

bool union_of_cliques(const CanonicalGraph& x) { return in_family(x, Family::UnionOfCliques); }

CanonicalGraph extend_to_cliques(const CanonicalGraph& x) {
    if (x.is_edgeless()) {
        if (x.symbolic()) return x;
        // isolated vertices are K_1 components already
        return x;
    }
    LabelledGraph g = x.repr();
    for (auto m : g.component_masks()) {
        std::vector<int> verts;
        for (int v = 1; v <= g.order(); ++v)
            if (m & (std::uint64_t{1} << (v - 1))) verts.push_back(v);
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                if (!g.adjacent(verts[a], verts[b])) g.add_edge(verts[a], verts[b]);
    }
    return CanonicalGraph::of(g);
}

Natural count_comps(const CanonicalGraph& x) {
    if (x.is_edgeless()) return x.order_n();
    return x.repr().component_count();
}

Natural count_edges_conn(const CanonicalGraph& x) {
    if (!is_connected(x)) throw domain_error("count_edges_conn: input must be connected");
    return x.size_n();
}

Natural count_edges(const CanonicalGraph& x) { return x.size_n(); }

CanonicalGraph build_count_edges_gadget(const CanonicalGraph& g) {
    if (g.symbolic() || g.order_n() < 1 || !is_connected(g))
        throw domain_error("count_edges gadget: input must be connected and nonempty");
    std::vector<LabelledGraph> chain{g.repr()};
    while (true) {
        const LabelledGraph& cur = chain.back();
        int n = cur.order();
        if (cur.size() == n * (n - 1) / 2) break;
        // add the edge giving the canonically smallest successor
        std::optional<CanonicalGraph> best;
        LabelledGraph best_graph(0);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) {
                if (cur.adjacent(u, v)) continue;
                LabelledGraph cand = cur;
                cand.add_edge(u, v);
                auto c = CanonicalGraph::of(cand);
                if (!best || c < *best) {
                    best = c;
                    best_graph = cand;
                }
            }
        chain.push_back(best_graph);
    }
    LabelledGraph total(0);
    for (const auto& c : chain) total = LabelledGraph::disjoint_union(total, c);
    return CanonicalGraph::of(total);
}

}  // namespace gorder
