#include "gorder/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace gorder {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

}  // namespace

LabelledGraph::LabelledGraph(int n) {
    if (n < 0 || n > kMaxVertices)
        throw resource_error("vertex count out of range: " + std::to_string(n));
    n_ = n;
    rows_.assign(static_cast<std::size_t>(n), 0);
}

void LabelledGraph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw validation_error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

LabelledGraph LabelledGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    LabelledGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int LabelledGraph::size() const {
    int total = 0;
    for (auto r : rows_) total += std::popcount(r);
    return total / 2;
}

bool LabelledGraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u - 1] & bit(v)) != 0;
}

void LabelledGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw validation_error("self-loop at vertex " + std::to_string(u));
    if (rows_[u - 1] & bit(v)) throw validation_error("duplicate edge");
    rows_[u - 1] |= bit(v);
    rows_[v - 1] |= bit(u);
}

void LabelledGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u - 1] &= ~bit(v);
    rows_[v - 1] &= ~bit(u);
}

int LabelledGraph::degree(int v) const {
    check_vertex(v);
    return std::popcount(rows_[v - 1]);
}

std::vector<int> LabelledGraph::degree_sequence() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 1; v <= n_; ++v) d[static_cast<std::size_t>(v - 1)] = std::popcount(rows_[v - 1]);
    std::sort(d.rbegin(), d.rend());
    return d;
}

std::vector<std::pair<int, int>> LabelledGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (rows_[u - 1] & bit(v)) out.emplace_back(u, v);
    return out;
}

LabelledGraph LabelledGraph::relabelled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw validation_error("permutation size mismatch");
    LabelledGraph out(n_);
    for (auto [u, v] : edge_list()) out.add_edge(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)]);
    return out;
}

LabelledGraph LabelledGraph::induced(std::uint64_t vertex_mask) const {
    std::vector<int> keep;
    for (int v = 1; v <= n_; ++v)
        if (vertex_mask & bit(v)) keep.push_back(v);
    LabelledGraph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (rows_[static_cast<std::size_t>(keep[i] - 1)] & bit(keep[j]))
                out.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return out;
}

LabelledGraph LabelledGraph::without_vertex(int v) const {
    check_vertex(v);
    std::uint64_t mask = (n_ == 64 ? ~std::uint64_t{0} : (bit(n_ + 1) - 1)) & ~bit(v);
    return induced(mask);
}

LabelledGraph LabelledGraph::contracted(int u, int v) const {
    if (!adjacent(u, v)) throw domain_error("contracted: uv is not an edge");
    // Merge v into u, then renumber the remaining vertices.
    std::vector<int> newlabel(static_cast<std::size_t>(n_) + 1, 0);
    int next = 0;
    for (int w = 1; w <= n_; ++w)
        if (w != v) newlabel[static_cast<std::size_t>(w)] = ++next;
    LabelledGraph out(n_ - 1);
    for (int a = 1; a <= n_; ++a) {
        if (a == v) continue;
        for (int b = a + 1; b <= n_; ++b) {
            if (b == v) continue;
            bool adj = adjacent(a, b) || (a == u && adjacent(v, b)) || (b == u && adjacent(v, a));
            if (adj) out.add_edge(newlabel[static_cast<std::size_t>(a)], newlabel[static_cast<std::size_t>(b)]);
        }
    }
    return out;
}

LabelledGraph LabelledGraph::complement() const {
    LabelledGraph out(n_);
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (!(rows_[u - 1] & bit(v))) out.add_edge(u, v);
    return out;
}

LabelledGraph LabelledGraph::disjoint_union(const LabelledGraph& a, const LabelledGraph& b) {
    if (a.order() + b.order() > kMaxVertices)
        throw resource_error("disjoint union exceeds max dense order");
    LabelledGraph out(a.order() + b.order());
    for (auto [u, v] : a.edge_list()) out.add_edge(u, v);
    for (auto [u, v] : b.edge_list()) out.add_edge(u + a.order(), v + a.order());
    return out;
}

std::vector<std::uint64_t> LabelledGraph::component_masks() const {
    std::vector<std::uint64_t> comps;
    std::uint64_t seen = 0;
    for (int v = 1; v <= n_; ++v) {
        if (seen & bit(v)) continue;
        std::uint64_t comp = bit(v);
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int w = std::countr_zero(frontier) + 1;
                frontier &= frontier - 1;
                next |= rows_[w - 1] & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

int LabelledGraph::component_count() const { return static_cast<int>(component_masks().size()); }

bool LabelledGraph::connected() const { return component_count() <= 1; }

// ---------------------------------------------------------------------------
// Canonical labelling.
//
// The code of a labelled graph reads the adjacency bits in the tuple order of
// the number encoding (encoding.hpp): pairs (i,j), j<i, by descending (i,j).
// Writing a = n+1-i, b = n+1-j that sequence is exactly the row-major upper
// triangle (a,b), a<b, of the label-reversed graph. The search below therefore
// minimises the row-major string over orderings sigma and reverses at the end.
// ---------------------------------------------------------------------------

namespace {

struct MinCodeSearch {
    const LabelledGraph& g;
    int n;
    int total_bits;
    std::vector<std::uint64_t> twin_class;  // twin-class mask per vertex (0-based)
    std::vector<int> chosen;                // sigma order: chosen[a-1] gets label a
    std::uint64_t used = 0;
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> best_order;
    std::vector<std::uint64_t> partial;  // code bits fixed after each level

    explicit MinCodeSearch(const LabelledGraph& graph) : g(graph), n(graph.order()) {
        total_bits = n * (n - 1) / 2;
        twin_class.assign(static_cast<std::size_t>(n), 0);
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v) {
                if (u == v) {
                    twin_class[static_cast<std::size_t>(u - 1)] |= bit(v);
                    continue;
                }
                std::uint64_t ru = g.neighbours(u) & ~bit(u) & ~bit(v);
                std::uint64_t rv = g.neighbours(v) & ~bit(u) & ~bit(v);
                if (ru == rv) twin_class[static_cast<std::size_t>(u - 1)] |= bit(v);
            }
        partial.assign(static_cast<std::size_t>(n) + 1, 0);
    }

    // Bit position (0 = most significant) of pair (a,b), a<b, 1-based labels.
    int pos(int a, int b) const { return (a - 1) * n - a * (a + 1) / 2 + b - 1; }

    void run() {
        chosen.reserve(static_cast<std::size_t>(n));
        // Label 1 must go to a minimum-degree vertex: its row is the most
        // significant block and a lower degree always wins lexicographically.
        int min_deg = n;
        for (int v = 1; v <= n; ++v) min_deg = std::min(min_deg, g.degree(v));
        std::uint64_t tried_classes = 0;
        for (int v = 1; v <= n; ++v) {
            if (g.degree(v) != min_deg) continue;
            if (tried_classes & bit(v)) continue;
            tried_classes |= twin_class[static_cast<std::size_t>(v - 1)];
            chosen.push_back(v);
            used = bit(v);
            descend(2);
            chosen.pop_back();
        }
    }

    void descend(int label) {
        if (label > n) {
            std::uint64_t code = partial[static_cast<std::size_t>(n)];
            if (code < best) {
                best = code;
                best_order = chosen;
            }
            return;
        }
        struct Cand {
            int v;
            std::uint64_t contrib;
        };
        std::array<Cand, 64> cands{};
        int count = 0;
        std::uint64_t tried_classes = 0;
        for (int v = 1; v <= n; ++v) {
            if (used & bit(v)) continue;
            if (tried_classes & bit(v)) continue;
            tried_classes |= twin_class[static_cast<std::size_t>(v - 1)];
            std::uint64_t contrib = 0;
            for (int a = 1; a < label; ++a)
                if (g.neighbours(v) & bit(chosen[static_cast<std::size_t>(a - 1)]))
                    contrib |= std::uint64_t{1} << (total_bits - 1 - pos(a, label));
            cands[static_cast<std::size_t>(count++)] = {v, contrib};
        }
        std::sort(cands.begin(), cands.begin() + count,
                  [](const Cand& a, const Cand& b) { return a.contrib < b.contrib; });
        for (int idx = 0; idx < count; ++idx) {
            std::uint64_t code = partial[static_cast<std::size_t>(label - 1)] | cands[static_cast<std::size_t>(idx)].contrib;
            // Sound prefix prune: bits (1,2..label) form the leading
            // label-1 bits of the final string on every completion.
            if (label >= 2) {
                int prefix_len = label - 1;
                std::uint64_t cand_prefix = code >> (total_bits - prefix_len);
                std::uint64_t best_prefix = best >> (total_bits - prefix_len);
                if (best != ~std::uint64_t{0} && cand_prefix > best_prefix) continue;
            }
            partial[static_cast<std::size_t>(label)] = code;
            chosen.push_back(cands[static_cast<std::size_t>(idx)].v);
            used |= bit(cands[static_cast<std::size_t>(idx)].v);
            descend(label + 1);
            used &= ~bit(chosen.back());
            chosen.pop_back();
        }
    }
};

// Equitable-refinement canonical labelling for connected graphs of any dense
// order. Branches on the first non-singleton cell and keeps the minimal leaf
// adjacency matrix. Complete and edgeless graphs are handled by the caller.
struct RefineSearch {
    const LabelledGraph& g;
    int n;
    std::vector<std::vector<int>> best_cells;
    bool have_best = false;
    std::vector<std::uint64_t> best_rows;

    explicit RefineSearch(const LabelledGraph& graph) : g(graph), n(graph.order()) {}

    using Partition = std::vector<std::vector<int>>;

    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < p.size(); ++s) {
                std::uint64_t smask = 0;
                for (int v : p[s]) smask |= bit(v);
                for (std::size_t c = 0; c < p.size(); ++c) {
                    if (p[c].size() <= 1) continue;
                    std::vector<std::pair<int, int>> keyed;
                    keyed.reserve(p[c].size());
                    for (int v : p[c]) keyed.emplace_back(std::popcount(g.neighbours(v) & smask), v);
                    std::sort(keyed.begin(), keyed.end());
                    if (keyed.front().first == keyed.back().first) continue;
                    Partition replacement;
                    std::vector<int> cur;
                    int cur_key = keyed.front().first;
                    for (auto [k, v] : keyed) {
                        if (k != cur_key) {
                            replacement.push_back(cur);
                            cur.clear();
                            cur_key = k;
                        }
                        cur.push_back(v);
                    }
                    replacement.push_back(cur);
                    p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
                    p.insert(p.begin() + static_cast<std::ptrdiff_t>(c), replacement.begin(), replacement.end());
                    changed = true;
                    break;
                }
                if (changed) break;
            }
        }
    }

    void search(Partition p) {
        refine(p);
        std::size_t target = p.size();
        for (std::size_t c = 0; c < p.size(); ++c)
            if (p[c].size() > 1) {
                target = c;
                break;
            }
        if (target == p.size()) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < p.size(); ++i) perm[static_cast<std::size_t>(p[i][0] - 1)] = static_cast<int>(i) + 1;
            LabelledGraph cand = g.relabelled(perm);
            if (!have_best || cand.rows() < best_rows) {
                have_best = true;
                best_rows = cand.rows();
                best_cells = p;
            }
            return;
        }
        for (int v : p[target]) {
            Partition q;
            q.reserve(p.size() + 1);
            for (std::size_t c = 0; c < p.size(); ++c) {
                if (c == target) {
                    q.push_back({v});
                    std::vector<int> rest;
                    for (int w : p[c])
                        if (w != v) rest.push_back(w);
                    q.push_back(rest);
                } else {
                    q.push_back(p[c]);
                }
            }
            search(std::move(q));
        }
    }

    LabelledGraph run() {
        Partition p{std::vector<int>(static_cast<std::size_t>(n))};
        std::iota(p[0].begin(), p[0].end(), 1);
        search(std::move(p));
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < best_cells.size(); ++i)
            perm[static_cast<std::size_t>(best_cells[i][0] - 1)] = static_cast<int>(i) + 1;
        return g.relabelled(perm);
    }
};

constexpr int kWholeMinCodeMax = 8;

// Canonical labelling for a connected tree: root at the centre (trying both
// when the centre is an edge), order children by their subtree encodings,
// and label in that traversal order. Linear-ish and immune to the large
// automorphism groups that defeat the refinement search.
struct TreeCanon {
    const LabelledGraph& g;
    explicit TreeCanon(const LabelledGraph& graph) : g(graph) {}

    std::vector<int> centres() const {
        int n = g.order();
        std::vector<int> degree(static_cast<std::size_t>(n) + 1);
        std::vector<int> layer, next;
        std::uint64_t removed = 0;
        for (int v = 1; v <= n; ++v) {
            degree[static_cast<std::size_t>(v)] = g.degree(v);
            if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
        }
        int remaining = n;
        std::vector<int> last = layer;
        while (remaining > 2) {
            for (int v : layer) removed |= std::uint64_t{1} << (v - 1);
            remaining -= static_cast<int>(layer.size());
            next.clear();
            for (int v : layer) {
                std::uint64_t nb = g.neighbours(v) & ~removed;
                while (nb) {
                    int w = std::countr_zero(nb) + 1;
                    nb &= nb - 1;
                    if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
                }
            }
            layer = next;
            last = layer;
        }
        if (remaining == n) {  // nothing peeled: n <= 2
            last.clear();
            for (int v = 1; v <= n; ++v) last.push_back(v);
        }
        return last;
    }

    std::string encode(int v, int parent, std::vector<std::pair<std::string, int>>* order) const {
        std::vector<std::pair<std::string, int>> kids;
        std::uint64_t nb = g.neighbours(v);
        while (nb) {
            int w = std::countr_zero(nb) + 1;
            nb &= nb - 1;
            if (w == parent) continue;
            kids.emplace_back(encode(w, v, nullptr), w);
        }
        std::sort(kids.begin(), kids.end());
        std::string enc = "(";
        for (auto& [e, w] : kids) enc += e;
        enc += ")";
        if (order) *order = std::move(kids);
        return enc;
    }

    void assign(int v, int parent, int& next, std::vector<int>& label) const {
        label[static_cast<std::size_t>(v - 1)] = next++;
        std::vector<std::pair<std::string, int>> kids;
        encode(v, parent, &kids);
        for (auto& [e, w] : kids) assign(w, v, next, label);
    }

    LabelledGraph rooted(int root) const {
        std::vector<int> label(static_cast<std::size_t>(g.order()), 0);
        int next = 1;
        assign(root, 0, next, label);
        return g.relabelled(label);
    }

    LabelledGraph run() const {
        auto cs = centres();
        LabelledGraph best = rooted(cs[0]);
        for (std::size_t i = 1; i < cs.size(); ++i) {
            LabelledGraph cand = rooted(cs[i]);
            if (cand.rows() < best.rows()) best = cand;
        }
        return best;
    }
};

LabelledGraph canonical_connected(const LabelledGraph& g) {
    int n = g.order();
    int m = g.size();
    if (m == 0 || m == n * (n - 1) / 2) return g;  // already canonical under any labelling
    if (n <= kMinCodeMaxVertices) return min_code_labelling(g);
    if (m == n - 1) return TreeCanon(g).run();
    return RefineSearch(g).run();
}

LabelledGraph canonical_form(const LabelledGraph& g) {
    if (g.order() <= kWholeMinCodeMax) return min_code_labelling(g);
    auto masks = g.component_masks();
    std::vector<LabelledGraph> comps;
    comps.reserve(masks.size());
    for (auto m : masks) comps.push_back(canonical_connected(g.induced(m)));
    std::sort(comps.begin(), comps.end(), [](const LabelledGraph& a, const LabelledGraph& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.rows() < b.rows();
    });
    LabelledGraph out(g.order());
    int offset = 0;
    for (const auto& c : comps) {
        for (auto [u, v] : c.edge_list()) out.add_edge(u + offset, v + offset);
        offset += c.order();
    }
    return out;
}

}  // namespace

LabelledGraph min_code_labelling(const LabelledGraph& g) {
    int n = g.order();
    if (n > kMinCodeMaxVertices)
        throw resource_error("min-code labelling limited to " + std::to_string(kMinCodeMaxVertices) + " vertices");
    if (n <= 1 || g.size() == 0 || g.size() == n * (n - 1) / 2) return g;
    MinCodeSearch search(g);
    search.run();
    // search minimised over sigma; the representative labels the vertex with
    // sigma-label a as n+1-a.
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int a = 1; a <= n; ++a) perm[static_cast<std::size_t>(search.best_order[static_cast<std::size_t>(a - 1)] - 1)] = n + 1 - a;
    return g.relabelled(perm);
}

CanonicalGraph::CanonicalGraph() : repr_(0), sym_order_(0), symbolic_(false) {}

CanonicalGraph CanonicalGraph::of(const LabelledGraph& g) {
    CanonicalGraph out;
    out.repr_ = canonical_form(g);
    out.symbolic_ = false;
    return out;
}

CanonicalGraph CanonicalGraph::adopt_canonical(LabelledGraph g) {
    CanonicalGraph out;
    out.repr_ = std::move(g);
    out.symbolic_ = false;
    return out;
}

CanonicalGraph CanonicalGraph::edgeless(const Natural& k) {
    if (k < 0) throw domain_error("edgeless: negative order");
    CanonicalGraph out;
    if (k <= LabelledGraph::kMaxVertices) {
        out.repr_ = LabelledGraph(static_cast<int>(k));
        out.symbolic_ = false;
    } else {
        out.symbolic_ = true;
        out.sym_order_ = k;
    }
    return out;
}

const LabelledGraph& CanonicalGraph::repr() const {
    if (symbolic_) throw resource_error("graph too large for a dense representative");
    return repr_;
}

Natural CanonicalGraph::order_n() const { return symbolic_ ? sym_order_ : Natural(repr_.order()); }

int CanonicalGraph::order() const {
    if (symbolic_) throw resource_error("order exceeds dense limit");
    return repr_.order();
}

bool CanonicalGraph::is_empty_graph() const { return !symbolic_ && repr_.order() == 0; }

std::vector<int> CanonicalGraph::degree_sequence() const {
    if (symbolic_) throw resource_error("degree sequence of symbolic graph");
    return repr_.degree_sequence();
}

bool CanonicalGraph::operator==(const CanonicalGraph& other) const {
    if (symbolic_ != other.symbolic_) return false;
    if (symbolic_) return sym_order_ == other.sym_order_;
    return repr_ == other.repr_;
}

std::strong_ordering CanonicalGraph::operator<=>(const CanonicalGraph& other) const {
    Natural a = order_n(), b = other.order_n();
    if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
    if (symbolic_ || other.symbolic_) return std::strong_ordering::equal;  // equal order, both edgeless
    if (repr_.rows() == other.repr_.rows()) return std::strong_ordering::equal;
    return repr_.rows() < other.repr_.rows() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t CanonicalGraph::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    if (symbolic_) {
        mix(0xfeedfaceull);
        mix(static_cast<std::uint64_t>(sym_order_ % Natural("18446744073709551616")));
        return h;
    }
    mix(static_cast<std::uint64_t>(repr_.order()));
    for (auto r : repr_.rows()) mix(r);
    return h;
}

std::string CanonicalGraph::describe() const {
    std::ostringstream os;
    os << "graph(n=" << order_n() << ", m=" << size_n() << ")";
    return os.str();
}

namespace {

CanonicalGraph make_named_uncached(NamedFamily family, int k);

}  // namespace

CanonicalGraph make_named(NamedFamily family, int k) {
    struct Cache {
        std::shared_mutex mu;
        std::map<std::pair<int, int>, CanonicalGraph> map;
    };
    static Cache cache;
    auto key = std::make_pair(static_cast<int>(family), k);
    {
        std::shared_lock lock(cache.mu);
        auto it = cache.map.find(key);
        if (it != cache.map.end()) return it->second;
    }
    CanonicalGraph g = make_named_uncached(family, k);
    std::unique_lock lock(cache.mu);
    return cache.map.emplace(key, std::move(g)).first->second;
}

namespace {

CanonicalGraph make_named_uncached(NamedFamily family, int k) {
    switch (family) {
        case NamedFamily::N:
            if (k < 0) throw domain_error("N_k needs k >= 0");
            return CanonicalGraph::edgeless(k);
        case NamedFamily::P:
            if (k < 0) throw domain_error("P_k needs k >= 0");
            return CanonicalGraph::of(make_path_labelled(k));
        case NamedFamily::C:
            if (k < 3) throw domain_error("C_k needs k >= 3");
            return CanonicalGraph::of(make_cycle_labelled(k));
        case NamedFamily::K:
            if (k < 0) throw domain_error("K_k needs k >= 0");
            return CanonicalGraph::of(make_clique_labelled(k));
        case NamedFamily::S:
            if (k < 1) throw domain_error("S_k needs k >= 1");
            return CanonicalGraph::of(make_star_labelled(k));
        case NamedFamily::C1: {
            if (k < 3) throw domain_error("cycle-with-pendant needs cycle size >= 3");
            LabelledGraph g = make_cycle_labelled(k);
            LabelledGraph h(k + 1);
            for (auto [u, v] : g.edge_list()) h.add_edge(u, v);
            h.add_edge(1, k + 1);
            return CanonicalGraph::of(h);
        }
        case NamedFamily::C2: {
            if (k < 3) throw domain_error("cycle-with-pendant-path needs cycle size >= 3");
            LabelledGraph g = make_cycle_labelled(k);
            LabelledGraph h(k + 2);
            for (auto [u, v] : g.edge_list()) h.add_edge(u, v);
            h.add_edge(1, k + 1);
            h.add_edge(k + 1, k + 2);
            return CanonicalGraph::of(h);
        }
    }
    throw domain_error("unknown family");
}

}  // namespace

std::optional<NamedFamily> named_family_from_string(const std::string& s) {
    if (s == "N") return NamedFamily::N;
    if (s == "P") return NamedFamily::P;
    if (s == "C") return NamedFamily::C;
    if (s == "K") return NamedFamily::K;
    if (s == "S") return NamedFamily::S;
    if (s == "C1" || s == "C->1") return NamedFamily::C1;
    if (s == "C2" || s == "C->2") return NamedFamily::C2;
    return std::nullopt;
}

LabelledGraph make_path_labelled(int k) {
    LabelledGraph g(k);
    for (int v = 1; v < k; ++v) g.add_edge(v, v + 1);
    return g;
}

LabelledGraph make_cycle_labelled(int k) {
    LabelledGraph g = make_path_labelled(k);
    if (k >= 3) g.add_edge(k, 1);
    return g;
}

LabelledGraph make_clique_labelled(int k) {
    LabelledGraph g(k);
    for (int u = 1; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) g.add_edge(u, v);
    return g;
}

LabelledGraph make_star_labelled(int k) {
    LabelledGraph g(k);
    for (int v = 2; v <= k; ++v) g.add_edge(1, v);
    return g;
}

CanonicalGraph make_double3star() {
    LabelledGraph g(6);
    g.add_edge(1, 2);
    g.add_edge(3, 2);
    g.add_edge(2, 4);
    g.add_edge(4, 5);
    g.add_edge(4, 6);
    return CanonicalGraph::of(g);
}

CanonicalGraph disjoint_union(const CanonicalGraph& a, const CanonicalGraph& b) {
    if (a.is_edgeless() && b.is_edgeless()) return CanonicalGraph::edgeless(a.order_n() + b.order_n());
    if (a.symbolic() || b.symbolic()) throw resource_error("disjoint union too large");
    return CanonicalGraph::of(LabelledGraph::disjoint_union(a.repr(), b.repr()));
}

std::vector<CanonicalGraph> components(const CanonicalGraph& g) {
    if (g.symbolic()) throw resource_error("components of symbolic graph");
    std::vector<CanonicalGraph> out;
    for (auto m : g.repr().component_masks()) out.push_back(CanonicalGraph::of(g.repr().induced(m)));
    std::sort(out.begin(), out.end());
    return out;
}

CanonicalGraph complement(const CanonicalGraph& g) {
    if (g.symbolic()) throw resource_error("complement of symbolic graph");
    return CanonicalGraph::of(g.repr().complement());
}

}  // namespace gorder
