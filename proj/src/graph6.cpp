#include "gorder/graph6.hpp"

#include <sstream>

namespace gorder {

namespace {
constexpr int kOffset = 63;
}

std::string to_graph6(const LabelledGraph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kOffset));
        out.push_back(static_cast<char>((n & 0x3f) + kOffset));
    }
    int acc = 0, nbits = 0;
    for (int v = 2; v <= n; ++v) {
        for (int u = 1; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kOffset));
    return out;
}

std::string to_graph6(const CanonicalGraph& g) { return to_graph6(g.repr()); }

LabelledGraph from_graph6(const std::string& text) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw validation_error("graph6: truncated input");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < kOffset || c > 126) throw validation_error("graph6: invalid character");
        return c - kOffset;
    };
    int n;
    int first = next();
    if (first == 63) {  // '~'
        int a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = first;
    }
    if (n > LabelledGraph::kMaxVertices)
        throw resource_error("graph6: order " + std::to_string(n) + " exceeds dense limit");
    LabelledGraph g(n);
    int acc = 0, nbits = 0;
    for (int v = 2; v <= n; ++v) {
        for (int u = 1; u < v; ++u) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) g.add_edge(u, v);
            --nbits;
        }
    }
    if (pos != text.size()) throw validation_error("graph6: trailing characters");
    return g;
}

LabelledGraph parse_graph_arg(const std::string& arg) {
    if (arg.rfind("g6:", 0) == 0) return from_graph6(arg.substr(3));
    return from_graph6(arg);
}

std::string to_dot(const LabelledGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 1; v <= g.order(); ++v) os << "  v" << v << ";\n";
    for (auto [u, v] : g.edge_list()) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace gorder
