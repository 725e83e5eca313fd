#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gorder/graph.hpp"

namespace gorder {

/// The finite segment {g : |g| <= n} of all isomorphism types, ordered by
/// (vertex count, canonical code). Immutable after construction.
class Universe {
public:
    static constexpr int kHardLimit = 8;

    /// OpenMP-parallel enumeration by incremental vertex addition with
    /// canonical filtering. resource_error above kHardLimit.
    static Universe enumerate(int max_vertices);
    /// Serial reference enumeration, kept for testing the parallel kernel.
    static Universe enumerate_serial(int max_vertices);

    /// Restricted domain {N_0, ..., N_k}; full() is false.
    static Universe naturals(int max_k);

    int max_vertices() const { return max_vertices_; }
    /// True when the member list is all types up to max_vertices().
    bool full() const { return full_; }

    const std::vector<CanonicalGraph>& members() const { return members_; }
    std::optional<int> index_of(const CanonicalGraph& g) const;
    bool contains(const CanonicalGraph& g) const { return index_of(g).has_value(); }

    /// Number of members with exactly k vertices.
    int count_at(int k) const;
    /// Members with at most k vertices form a prefix; its length.
    int prefix_size(int k) const;

    /// Line-oriented cache: a header line followed by one graph6 per member.
    void save(const std::string& path) const;
    static Universe load(const std::string& path);

    /// Process-wide cache of full universes by size.
    static const Universe& shared(int max_vertices);

private:
    static Universe enumerate_impl(int max_vertices, bool parallel);
    void rebuild_index();

    int max_vertices_ = 0;
    bool full_ = true;
    std::vector<CanonicalGraph> members_;
    std::unordered_map<CanonicalGraph, int, CanonicalGraphHash> index_;
    std::vector<int> layer_prefix_;  // layer_prefix_[k] = #members with order <= k
};

}  // namespace gorder
