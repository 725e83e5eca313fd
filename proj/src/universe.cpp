#include "gorder/universe.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gorder/encoding.hpp"
#include "gorder/graph6.hpp"

namespace gorder {

namespace {

std::vector<LabelledGraph> extensions_of(const LabelledGraph& parent) {
    int n = parent.order();
    std::vector<LabelledGraph> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        LabelledGraph child(n + 1);
        for (auto [u, v] : parent.edge_list()) child.add_edge(u, v);
        for (int v = 1; v <= n; ++v)
            if (mask & (std::uint64_t{1} << (v - 1))) child.add_edge(v, n + 1);
        out.push_back(std::move(child));
    }
    return out;
}

}  // namespace

Universe Universe::enumerate(int max_vertices) { return enumerate_impl(max_vertices, true); }

Universe Universe::enumerate_serial(int max_vertices) { return enumerate_impl(max_vertices, false); }

Universe Universe::enumerate_impl(int max_vertices, bool parallel) {
    if (max_vertices < 0) throw domain_error("enumerate: negative bound");
    if (max_vertices > kHardLimit)
        throw resource_error("enumerate: bound exceeds hard limit " + std::to_string(kHardLimit));

    Universe u;
    u.max_vertices_ = max_vertices;
    u.full_ = true;
    u.members_.push_back(CanonicalGraph());  // the 0-vertex graph
    std::vector<CanonicalGraph> layer{CanonicalGraph()};

    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<LabelledGraph> candidates;
        for (const auto& parent : layer) {
            auto ext = extensions_of(parent.symbolic() ? LabelledGraph(0) : parent.repr());
            candidates.insert(candidates.end(), ext.begin(), ext.end());
        }
        std::vector<GraphCode> codes(candidates.size());
        std::vector<LabelledGraph> canon(candidates.size());
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(candidates.size()); ++i) {
                auto idx = static_cast<std::size_t>(i);
                canon[idx] = min_code_labelling(candidates[idx]);
                codes[idx] = code_of(canon[idx]);
            }
        } else {
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                canon[i] = min_code_labelling(candidates[i]);
                codes[i] = code_of(canon[i]);
            }
        }
        std::vector<std::size_t> order(candidates.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return codes[a] < codes[b]; });
        std::vector<CanonicalGraph> next_layer;
        GraphCode last = -1;
        for (std::size_t i : order) {
            if (codes[i] == last) continue;
            last = codes[i];
            next_layer.push_back(CanonicalGraph::adopt_canonical(std::move(canon[i])));
        }
        u.members_.insert(u.members_.end(), next_layer.begin(), next_layer.end());
        layer = std::move(next_layer);
    }
    u.rebuild_index();
    return u;
}

Universe Universe::naturals(int max_k) {
    if (max_k < 0) throw domain_error("naturals: negative bound");
    Universe u;
    u.max_vertices_ = max_k;
    u.full_ = false;
    for (int k = 0; k <= max_k; ++k) u.members_.push_back(CanonicalGraph::edgeless(k));
    u.rebuild_index();
    return u;
}

void Universe::rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i], static_cast<int>(i));
    layer_prefix_.assign(static_cast<std::size_t>(max_vertices_) + 1, 0);
    for (const auto& g : members_) {
        int k = static_cast<int>(g.order_n());
        for (int j = k; j <= max_vertices_; ++j) ++layer_prefix_[static_cast<std::size_t>(j)];
    }
}

std::optional<int> Universe::index_of(const CanonicalGraph& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Universe::count_at(int k) const {
    if (k < 0 || k > max_vertices_) return 0;
    return prefix_size(k) - (k == 0 ? 0 : prefix_size(k - 1));
}

int Universe::prefix_size(int k) const {
    if (k < 0) return 0;
    if (k >= max_vertices_) return static_cast<int>(members_.size());
    return layer_prefix_[static_cast<std::size_t>(k)];
}

void Universe::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw resource_error("cannot open " + path + " for writing");
    out << "# gorder universe v1 n=" << max_vertices_ << " full=" << (full_ ? 1 : 0) << "\n";
    for (const auto& g : members_) out << to_graph6(g) << "\n";
}

Universe Universe::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw resource_error("cannot open " + path);
    std::string header;
    std::getline(in, header);
    int n = -1, full = 1;
    if (std::sscanf(header.c_str(), "# gorder universe v1 n=%d full=%d", &n, &full) != 2)
        throw validation_error("bad universe cache header");
    Universe u;
    u.max_vertices_ = n;
    u.full_ = full != 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        u.members_.push_back(CanonicalGraph::of(from_graph6(line)));
    }
    u.rebuild_index();
    return u;
}

const Universe& Universe::shared(int max_vertices) {
    static std::mutex mu;
    static std::map<int, Universe> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(max_vertices);
    if (it == cache.end()) it = cache.emplace(max_vertices, Universe::enumerate(max_vertices)).first;
    return it->second;
}

}  // namespace gorder
