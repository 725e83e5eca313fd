#include "gorder/orders.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gorder/graph6.hpp"

namespace gorder {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Backtracking embedding of pattern into host. induced selects between
// subgraph (edges preserved) and induced subgraph (edges and non-edges).
struct EmbedSearch {
    const LabelledGraph& p;
    const LabelledGraph& h;
    bool induced;
    std::vector<int> order;       // pattern vertices in placement order
    std::vector<int> image;       // image[v-1] for pattern v, 0 = unset
    std::uint64_t used = 0;

    EmbedSearch(const LabelledGraph& pattern, const LabelledGraph& host, bool ind)
        : p(pattern), h(host), induced(ind) {
        image.assign(static_cast<std::size_t>(p.order()), 0);
        // Place high-degree vertices first, preferring ones adjacent to an
        // already-placed vertex so candidate masks stay tight.
        std::vector<int> remaining(static_cast<std::size_t>(p.order()));
        for (int v = 1; v <= p.order(); ++v) remaining[static_cast<std::size_t>(v - 1)] = v;
        std::uint64_t placed = 0;
        while (!remaining.empty()) {
            int best_idx = -1;
            long best_key = -1;
            for (std::size_t i = 0; i < remaining.size(); ++i) {
                int v = remaining[i];
                bool attached = (p.neighbours(v) & placed) != 0;
                long key = (attached ? 1000 : 0) + p.degree(v);
                if (key > best_key) {
                    best_key = key;
                    best_idx = static_cast<int>(i);
                }
            }
            int v = remaining[static_cast<std::size_t>(best_idx)];
            remaining.erase(remaining.begin() + best_idx);
            order.push_back(v);
            placed |= bit(v);
        }
    }

    bool run() { return place(0); }

    bool place(std::size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        std::uint64_t cand = full_mask(h.order()) & ~used;
        for (std::size_t d = 0; d < depth; ++d) {
            int w = order[d];
            int img = image[static_cast<std::size_t>(w - 1)];
            if (p.adjacent(v, w))
                cand &= h.neighbours(img);
            else if (induced)
                cand &= ~h.neighbours(img);
        }
        while (cand) {
            int w = std::countr_zero(cand) + 1;
            cand &= cand - 1;
            if (h.degree(w) < p.degree(v)) continue;
            image[static_cast<std::size_t>(v - 1)] = w;
            used |= bit(w);
            if (place(depth + 1)) return true;
            used &= ~bit(w);
            image[static_cast<std::size_t>(v - 1)] = 0;
        }
        return false;
    }
};

bool embeds(const LabelledGraph& pattern, const LabelledGraph& host, bool induced) {
    if (pattern.order() > host.order() || pattern.size() > host.size()) return false;
    if (pattern.order() == 0) return true;
    {
        auto dp = pattern.degree_sequence();
        auto dh = host.degree_sequence();
        for (std::size_t i = 0; i < dp.size(); ++i)
            if (dp[i] > dh[i]) return false;
    }
    return EmbedSearch(pattern, host, induced).run();
}

// --- intern table -----------------------------------------------------------

struct InternTable {
    std::shared_mutex mu;
    std::unordered_map<CanonicalGraph, int, CanonicalGraphHash> ids;
    std::deque<CanonicalGraph> graphs;

    int get(const CanonicalGraph& g) {
        {
            std::shared_lock lock(mu);
            auto it = ids.find(g);
            if (it != ids.end()) return it->second;
        }
        std::unique_lock lock(mu);
        auto [it, inserted] = ids.emplace(g, static_cast<int>(graphs.size()));
        if (inserted) graphs.push_back(g);
        return it->second;
    }
    const CanonicalGraph& at(int id) {
        std::shared_lock lock(mu);
        return graphs[static_cast<std::size_t>(id)];
    }
};

InternTable& intern_table() {
    static InternTable t;
    return t;
}

// --- relation memo ----------------------------------------------------------

struct PairHash {
    std::size_t operator()(const std::pair<long, long>& p) const {
        return std::hash<long>()(p.first * 1000003 + p.second);
    }
};

struct RelationMemo {
    std::shared_mutex mu;
    std::unordered_map<std::pair<long, long>, bool, PairHash> map;

    bool lookup(long key1, long key2, bool& out) {
        std::shared_lock lock(mu);
        auto it = map.find({key1, key2});
        if (it == map.end()) return false;
        out = it->second;
        return true;
    }
    void store(long key1, long key2, bool value) {
        std::unique_lock lock(mu);
        map.emplace(std::make_pair(key1, key2), value);
    }
};

RelationMemo& leq_memo() {
    static RelationMemo m;
    return m;
}

RelationMemo& cover_memo() {
    static RelationMemo m;
    return m;
}

bool leq_dense(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h);

// One-step minor reducts of h, deduplicated by isomorphism type.
std::vector<CanonicalGraph> minor_steps(const LabelledGraph& h) {
    std::vector<CanonicalGraph> out;
    std::unordered_set<CanonicalGraph, CanonicalGraphHash> seen;
    auto push = [&](const LabelledGraph& g) {
        auto c = CanonicalGraph::of(g);
        if (seen.insert(c).second) out.push_back(std::move(c));
    };
    for (int v = 1; v <= h.order(); ++v) push(h.without_vertex(v));
    for (auto [u, v] : h.edge_list()) {
        LabelledGraph del = h;
        del.remove_edge(u, v);
        push(del);
        push(h.contracted(u, v));
    }
    return out;
}

bool minor_leq(const CanonicalGraph& g, const CanonicalGraph& h) {
    if (g == h) return true;
    if (g.order() > h.order() || g.size() > h.size()) return false;
    if (leq_dense(OrderKind::Subgraph, g, h)) return true;
    for (const auto& step : minor_steps(h.repr()))
        if (leq(OrderKind::Minor, g, step)) return true;
    return false;
}

bool leq_dense(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h) {
    switch (kind) {
        case OrderKind::Subgraph:
            return embeds(g.repr(), h.repr(), false);
        case OrderKind::Induced:
            return embeds(g.repr(), h.repr(), true);
        case OrderKind::Minor:
            return minor_leq(g, h);
    }
    return false;
}

}  // namespace

const char* order_kind_name(OrderKind k) {
    switch (k) {
        case OrderKind::Subgraph: return "s";
        case OrderKind::Induced: return "i";
        case OrderKind::Minor: return "m";
    }
    return "?";
}

OrderKind order_kind_from_string(const std::string& s) {
    if (s == "s" || s == "subgraph") return OrderKind::Subgraph;
    if (s == "i" || s == "induced") return OrderKind::Induced;
    if (s == "m" || s == "minor") return OrderKind::Minor;
    throw domain_error("unknown order kind: " + s);
}

int intern(const CanonicalGraph& g) { return intern_table().get(g); }
const CanonicalGraph& interned(int id) { return intern_table().at(id); }

bool leq(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h) {
    if (g.is_edgeless()) {
        if (h.is_edgeless()) return g.order_n() <= h.order_n();
        // Deleting every edge of h is allowed in the subgraph and minor
        // orders, so only the vertex counts matter there. In the induced
        // order N_a <= h asks for an independent set, found by the generic
        // search below.
        if (kind != OrderKind::Induced) return g.order_n() <= h.order_n();
        if (g.symbolic()) return false;  // larger than any dense h
        if (g.order_n() == 0) return true;
    } else if (h.is_edgeless()) {
        return false;  // g has an edge
    }
    if (g.order() > h.order() || g.size() > h.size()) return false;

    long gid = intern(g), hid = intern(h);
    long key1 = static_cast<long>(kind) * 3'000'000'000L + gid;
    bool cached;
    if (leq_memo().lookup(key1, hid, cached)) return cached;
    bool result = leq_dense(kind, g, h);
    leq_memo().store(key1, hid, result);
    return result;
}

bool lt(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h) {
    return g != h && leq(kind, g, h);
}

bool covers_fast_impl(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h);

bool covers_fast(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h) {
    // a cover step adds at most one vertex in every kind (minor covers are
    // single reduction steps, which change the order by at most one)
    if (h.order_n() > g.order_n() + 1 || h.order_n() < g.order_n()) return false;
    if (!g.symbolic() && !h.symbolic() && g.order() <= LabelledGraph::kMaxVertices) {
        long gid = intern(g), hid = intern(h);
        long key1 = (3 + static_cast<long>(kind)) * 3'000'000'000L + gid;
        bool cached;
        if (cover_memo().lookup(key1, hid, cached)) return cached;
        bool result = covers_fast_impl(kind, g, h);
        cover_memo().store(key1, hid, result);
        return result;
    }
    return covers_fast_impl(kind, g, h);
}

bool covers_fast_impl(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h) {
    switch (kind) {
        case OrderKind::Induced:
            // The induced order is graded by vertex count: one vertex
            // deletion per cover step.
            return g.order_n() + 1 == h.order_n() && leq(OrderKind::Induced, g, h);
        case OrderKind::Subgraph: {
            if (g.order_n() == h.order_n())
                return g.size_n() + 1 == h.size_n() && leq(OrderKind::Subgraph, g, h);
            if (g.order_n() + 1 == h.order_n()) {
                // vertex cover: h = g plus an isolated vertex
                if (g.size_n() != h.size_n()) return false;
                if (h.is_edgeless()) return true;
                return CanonicalGraph::of(LabelledGraph::disjoint_union(g.repr(), LabelledGraph(1))) == h;
            }
            return false;
        }
        case OrderKind::Minor: {
            if (!lt(OrderKind::Minor, g, h)) return false;
            if (g.is_edgeless() && h.is_edgeless()) return g.order_n() + 1 == h.order_n();
            for (const auto& step : minor_steps(h.repr()))
                if (step != g && lt(OrderKind::Minor, g, step)) return false;
            return true;
        }
    }
    return false;
}

bool covers(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h, const Universe& uni) {
    if (h.order_n() > uni.max_vertices())
        throw domain_error("covers: universe too small to certify (need n >= " + h.order_n().str() + ")");
    if (!lt(kind, g, h)) return false;
    for (const auto& z : uni.members()) {
        if (z == g || z == h) continue;
        if (lt(kind, g, z) && lt(kind, z, h)) return false;
    }
    return true;
}

SubgraphCoverKind cover_kind_s(const CanonicalGraph& g, const CanonicalGraph& h) {
    if (!covers_fast(OrderKind::Subgraph, g, h)) return SubgraphCoverKind::NotCover;
    return g.order_n() == h.order_n() ? SubgraphCoverKind::EdgeCover : SubgraphCoverKind::VertexCover;
}

bool cover_n_fast(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h, int n) {
    if (n < 0) throw domain_error("cover_n: negative step count");
    if (n == 0) return g == h;
    if (kind == OrderKind::Induced)
        return g.order_n() + n == h.order_n() && leq(OrderKind::Induced, g, h);
    if (n == 1) return covers_fast(kind, g, h);
    // Walk cover-below steps from h.
    std::vector<CanonicalGraph> frontier{h};
    for (int step = 0; step < n; ++step) {
        std::unordered_set<CanonicalGraph, CanonicalGraphHash> next;
        for (const auto& x : frontier) {
            if (x.is_edgeless()) {
                if (x.order_n() >= 1) next.insert(CanonicalGraph::edgeless(x.order_n() - 1));
                continue;
            }
            const auto& lg = x.repr();
            if (kind == OrderKind::Subgraph) {
                for (auto [u, v] : lg.edge_list()) {
                    LabelledGraph y = lg;
                    y.remove_edge(u, v);
                    next.insert(CanonicalGraph::of(y));
                }
                for (int v = 1; v <= lg.order(); ++v)
                    if (lg.degree(v) == 0) {
                        next.insert(CanonicalGraph::of(lg.without_vertex(v)));
                        break;
                    }
            } else {  // Minor: cover-below steps are exactly the covering one-step reducts
                for (const auto& r : minor_steps(lg))
                    if (covers_fast(OrderKind::Minor, r, x)) next.insert(r);
            }
        }
        frontier.assign(next.begin(), next.end());
        if (frontier.empty()) return false;
    }
    return std::find(frontier.begin(), frontier.end(), g) != frontier.end();
}

bool cover_n(OrderKind kind, const CanonicalGraph& g, const CanonicalGraph& h, int n, const Universe& uni) {
    if (h.order_n() > uni.max_vertices())
        throw domain_error("cover_n: universe too small to certify");
    if (n < 0) throw domain_error("cover_n: negative step count");
    if (n == 0) return g == h;
    // Chain search inside the universe, steps certified by covers().
    std::vector<CanonicalGraph> frontier{g};
    for (int step = 0; step < n; ++step) {
        std::unordered_set<CanonicalGraph, CanonicalGraphHash> next;
        for (const auto& x : frontier)
            for (const auto& z : uni.members())
                if (leq(kind, z, h) && covers(kind, x, z, uni)) next.insert(z);
        frontier.assign(next.begin(), next.end());
        if (frontier.empty()) return false;
    }
    return std::find(frontier.begin(), frontier.end(), h) != frontier.end();
}

bool same_card(const CanonicalGraph& g, const CanonicalGraph& h) { return g.order_n() == h.order_n(); }

bool same_size(const CanonicalGraph& g, const CanonicalGraph& h) { return g.size_n() == h.size_n(); }

bool subgraph_via_minor(const CanonicalGraph& g, const CanonicalGraph& h, const Universe& uni) {
    if (h.order_n() > uni.max_vertices())
        throw domain_error("subgraph_via_minor: universe too small for the witness");
    for (const auto& z : uni.members()) {
        if (z.order_n() != h.order_n() || z.size_n() != g.size_n()) continue;
        if (leq(OrderKind::Minor, g, z) && leq(OrderKind::Minor, z, h)) return true;
    }
    return false;
}

OrderMatrix OrderMatrix::build(const Universe& uni, OrderKind kind) { return build_impl(uni, kind, true); }

OrderMatrix OrderMatrix::build_serial(const Universe& uni, OrderKind kind) {
    return build_impl(uni, kind, false);
}

OrderMatrix OrderMatrix::build_impl(const Universe& uni, OrderKind kind, bool parallel) {
    OrderMatrix m;
    m.kind_ = kind;
    m.n_ = static_cast<int>(uni.members().size());
    m.bits_.assign(static_cast<std::size_t>(m.n_) * m.n_, 0);
    m.cover_bits_.assign(static_cast<std::size_t>(m.n_) * m.n_, 0);
    const auto& mem = uni.members();

    auto fill_row = [&](int i) {
        for (int j = 0; j < m.n_; ++j)
            m.bits_[static_cast<std::size_t>(i) * m.n_ + j] = gorder::leq(kind, mem[static_cast<std::size_t>(i)], mem[static_cast<std::size_t>(j)]) ? 1 : 0;
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (int i = 0; i < m.n_; ++i) fill_row(i);
    } else {
        for (int i = 0; i < m.n_; ++i) fill_row(i);
    }

    // covers from the comparability table (interposition over the universe,
    // complete because witnesses are no larger than the upper element)
    auto fill_cover_row = [&](int i) {
        for (int j = 0; j < m.n_; ++j) {
            if (i == j || !m.leq(i, j)) continue;
            bool cov = true;
            for (int z = 0; z < m.n_ && cov; ++z) {
                if (z == i || z == j) continue;
                if (m.leq(i, z) && m.leq(z, j)) cov = false;
            }
            m.cover_bits_[static_cast<std::size_t>(i) * m.n_ + j] = cov ? 1 : 0;
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (int i = 0; i < m.n_; ++i) fill_cover_row(i);
    } else {
        for (int i = 0; i < m.n_; ++i) fill_cover_row(i);
    }
    return m;
}

std::string OrderMatrix::to_json(const Universe& uni) const {
    std::ostringstream os;
    os << "{\n  \"schema\": \"gorder-order-matrix/1\",\n";
    os << "  \"kind\": \"" << order_kind_name(kind_) << "\",\n";
    os << "  \"n\": " << uni.max_vertices() << ",\n  \"members\": [";
    for (int i = 0; i < n_; ++i) {
        if (i) os << ", ";
        os << '"' << to_graph6(uni.members()[static_cast<std::size_t>(i)]) << '"';
    }
    os << "],\n  \"leq_rows\": [";
    for (int i = 0; i < n_; ++i) {
        if (i) os << ", ";
        os << '"';
        for (int j = 0; j < n_; ++j) os << (leq(i, j) ? '1' : '0');
        os << '"';
    }
    os << "],\n  \"cover_rows\": [";
    for (int i = 0; i < n_; ++i) {
        if (i) os << ", ";
        os << '"';
        for (int j = 0; j < n_; ++j) os << (covers(i, j) ? '1' : '0');
        os << '"';
    }
    os << "]\n}\n";
    return os.str();
}

}  // namespace gorder
