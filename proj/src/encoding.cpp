#include "gorder/encoding.hpp"

#include <algorithm>

namespace gorder {

namespace {

// Pairs (i,j), j < i, in descending lexicographic order of (i,j).
std::vector<std::pair<int, int>> tuple_sequence(int n) {
    std::vector<std::pair<int, int>> seq;
    seq.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = n; i >= 2; --i)
        for (int j = i - 1; j >= 1; --j) seq.emplace_back(i, j);
    return seq;
}

std::optional<int> order_from_length(int len) {
    // len = 1 + m(m-1)/2
    for (int m = 1;; ++m) {
        int want = 1 + m * (m - 1) / 2;
        if (want == len) return m;
        if (want > len) return std::nullopt;
    }
}

}  // namespace

GraphCode code_of(const LabelledGraph& g) {
    int n = g.order();
    if (n == 0) return 0;
    GraphCode code = 1;
    for (auto [i, j] : tuple_sequence(n)) {
        code <<= 1;
        if (g.adjacent(i, j)) code |= 1;
    }
    return code;
}

GraphCode min_code(const CanonicalGraph& g) {
    if (g.symbolic()) throw resource_error("min_code: graph too large");
    int n = g.order();
    if (n == 0) return 0;
    if (g.is_edgeless()) return GraphCode(1) << (n * (n - 1) / 2);
    if (n <= 8) return code_of(g.repr());  // canonical representative attains the minimum
    return code_of(min_code_labelling(g.repr()));
}

CanonicalGraph graph_of_number(const GraphCode& k) { return CanonicalGraph::edgeless(k); }

int code_length(const GraphCode& code) {
    if (code == 0) return 0;
    return static_cast<int>(boost::multiprecision::msb(code)) + 1;
}

std::optional<LabelledGraph> decode_code(const GraphCode& code) {
    if (code == 0) return LabelledGraph(0);
    int len = code_length(code);
    auto m = order_from_length(len);
    if (!m) return std::nullopt;
    if (*m > LabelledGraph::kMaxVertices) return std::nullopt;
    LabelledGraph g(*m);
    auto seq = tuple_sequence(*m);
    for (std::size_t t = 0; t < seq.size(); ++t) {
        // bit below the leading one, most significant first
        int pos = len - 2 - static_cast<int>(t);
        if (boost::multiprecision::bit_test(code, static_cast<unsigned>(pos)))
            g.add_edge(seq[t].first, seq[t].second);
    }
    return g;
}

bool is_min_code(const GraphCode& code) {
    auto g = decode_code(code);
    if (!g) return false;
    if (g->order() > kMinCodeMaxVertices)
        throw resource_error("is_min_code: order beyond minimisation limit");
    return min_code(CanonicalGraph::of(*g)) == code;
}

bool code_edge(const GraphCode& code, int i, int j) {
    auto g = decode_code(code);
    if (!g) throw domain_error("code_edge: value is not a graph code");
    if (i < 1 || i > g->order() || j < 1 || j > g->order())
        throw domain_error("code_edge: index out of range");
    if (i == j) return false;
    return g->adjacent(i, j);
}

bool code_order_matches(const GraphCode& code, const Natural& m) {
    return Natural(code_length(code)) == 1 + m * (m - 1) / 2;
}

CanonicalGraph encode_as_natural(const CanonicalGraph& g) {
    return CanonicalGraph::edgeless(min_code(g));
}

std::function<bool(std::span<const CanonicalGraph>)> lift_predicate(DecisionProcedure d) {
    return [d = std::move(d)](std::span<const CanonicalGraph> graphs) {
        if (static_cast<int>(graphs.size()) != d.arity)
            throw domain_error("lifted predicate: arity mismatch");
        std::vector<GraphCode> codes;
        codes.reserve(graphs.size());
        for (const auto& g : graphs) codes.push_back(min_code(g));
        return d.decide(codes);
    };
}

bool leq_total(const CanonicalGraph& g, const CanonicalGraph& h) {
    return min_code(g) <= min_code(h);
}

}  // namespace gorder
