#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gorder/encoding.hpp"
#include "gorder/graph.hpp"
#include "gorder/graph6.hpp"
#include "gorder/opres.hpp"
#include "gorder/universe.hpp"

using namespace gorder;

namespace {

// Independent enumeration oracle: sweep every adjacency mask, deduplicate by
// the minimum code over all label permutations (std::next_permutation, no
// shared search code with the library canonicaliser).
std::set<GraphCode> naive_layer_codes(int n) {
    std::set<GraphCode> codes;
    int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairlist;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairlist.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        LabelledGraph g(n);
        for (int b = 0; b < pairs; ++b)
            if (mask & (std::uint64_t{1} << b))
                g.add_edge(pairlist[static_cast<std::size_t>(b)].first, pairlist[static_cast<std::size_t>(b)].second);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        GraphCode best = code_of(g);
        while (std::next_permutation(perm.begin(), perm.end())) {
            GraphCode c = code_of(g.relabelled(perm));
            if (c < best) best = c;
        }
        codes.insert(best);
    }
    return codes;
}

LabelledGraph random_relabel(const LabelledGraph& g, std::mt19937& rng) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabelled(perm);
}

}  // namespace

TEST_CASE("canonical form is constant on isomorphism classes") {
    auto p1 = LabelledGraph::from_edges(3, {{1, 2}, {2, 3}});
    auto p2 = LabelledGraph::from_edges(3, {{2, 1}, {1, 3}});
    CHECK(CanonicalGraph::of(p1) == CanonicalGraph::of(p2));

    CHECK(CanonicalGraph::of(LabelledGraph(0)) == CanonicalGraph());

    // every single-edge labelled graph on three vertices is the same type
    std::set<GraphCode> codes;
    for (int u = 1; u <= 3; ++u)
        for (int v = u + 1; v <= 3; ++v)
            codes.insert(min_code(CanonicalGraph::of(LabelledGraph::from_edges(3, {{u, v}}))));
    CHECK(codes.size() == 1);
}

TEST_CASE("canonical form under random relabellings") {
    std::mt19937 rng(123);
    const Universe& u5 = Universe::shared(5);
    for (const auto& g : u5.members()) {
        if (g.order_n() < 2) continue;
        for (int rep = 0; rep < 8; ++rep) {
            auto h = random_relabel(g.repr(), rng);
            CHECK(CanonicalGraph::of(h) == g);
        }
    }
    // also exercises the refinement path on a large structured graph
    OPresentation op = build_opres(make_star_labelled(4));
    for (int rep = 0; rep < 3; ++rep) {
        auto h = random_relabel(op.total.repr(), rng);
        CHECK(CanonicalGraph::of(h) == op.total);
    }
}

TEST_CASE("canonicalisation is idempotent") {
    const Universe& u4 = Universe::shared(4);
    for (const auto& g : u4.members()) CHECK(CanonicalGraph::of(g.repr()) == g);
}

TEST_CASE("universe layer counts") {
    const Universe& u7 = Universe::shared(7);
    std::vector<int> expected{1, 1, 2, 4, 11, 34, 156, 1044};
    for (int k = 0; k <= 7; ++k) CHECK(u7.count_at(k) == expected[static_cast<std::size_t>(k)]);
    CHECK(u7.members().size() == 1253);
}

TEST_CASE("universe members match the naive sweep up to six vertices") {
    const Universe& u6 = Universe::shared(6);
    for (int n = 1; n <= 6; ++n) {
        auto naive = naive_layer_codes(n);
        std::set<GraphCode> ours;
        for (const auto& g : u6.members())
            if (g.order_n() == n) ours.insert(min_code(g));
        CHECK(ours == naive);
    }
}

TEST_CASE("universe of eight vertices" * doctest::skip()) {
    // slow: run with --no-skip
    Universe u8 = Universe::enumerate(8);
    CHECK(u8.members().size() == 13599);
    CHECK(u8.count_at(8) == 12346);
}

TEST_CASE("universe cache roundtrip") {
    const Universe& u4 = Universe::shared(4);
    std::string path = "universe4.cache";
    u4.save(path);
    Universe loaded = Universe::load(path);
    CHECK(loaded.members().size() == u4.members().size());
    for (std::size_t i = 0; i < loaded.members().size(); ++i) CHECK(loaded.members()[i] == u4.members()[i]);
    std::remove(path.c_str());
}

TEST_CASE("named family members") {
    auto s5 = make_named(NamedFamily::S, 5);
    CHECK(s5.degree_sequence() == std::vector<int>{4, 1, 1, 1, 1});

    auto c7p = make_named(NamedFamily::C1, 7);
    CHECK(c7p.order() == 8);
    CHECK(c7p.size() == 8);

    CHECK(make_named(NamedFamily::N, 11).order_n() == 11);
    CHECK_THROWS_AS(make_named(NamedFamily::C, 2), domain_error);

    auto d3s = make_double3star();
    CHECK(d3s.order() == 6);
    CHECK(d3s.size() == 5);
    CHECK(d3s.degree_sequence() == std::vector<int>{3, 3, 1, 1, 1, 1});
    CHECK(d3s.repr().connected());
}

TEST_CASE("disjoint union and components are mutually inverse") {
    auto k2 = make_named(NamedFamily::K, 2);
    auto k2n1 = disjoint_union(k2, CanonicalGraph::edgeless(1));
    CHECK(k2n1 == CanonicalGraph::of(LabelledGraph::from_edges(3, {{1, 2}})));
    CHECK(disjoint_union(k2, CanonicalGraph()) == k2);

    auto k2k2 = disjoint_union(k2, k2);
    CHECK(k2k2.order() == 4);
    CHECK(k2k2.size() == 2);
    auto comps = components(k2k2);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == k2);
    CHECK(comps[1] == k2);

    const Universe& u5 = Universe::shared(5);
    for (const auto& g : u5.members()) {
        CanonicalGraph acc;
        for (const auto& c : components(g)) acc = disjoint_union(acc, c);
        CHECK(acc == g);
    }
    CHECK(components(CanonicalGraph()).empty());

    auto c5 = make_named(NamedFamily::C, 5);
    auto big = disjoint_union(disjoint_union(CanonicalGraph::edgeless(1), make_named(NamedFamily::P, 3)),
                              disjoint_union(make_named(NamedFamily::K, 3),
                                             disjoint_union(make_named(NamedFamily::S, 4), c5)));
    CHECK(components(big).size() == 5);
}

TEST_CASE("complement") {
    CHECK(complement(CanonicalGraph::edgeless(3)) == make_named(NamedFamily::K, 3));
    CHECK(complement(make_named(NamedFamily::P, 3)) ==
          disjoint_union(make_named(NamedFamily::K, 2), CanonicalGraph::edgeless(1)));
    const Universe& u5 = Universe::shared(5);
    for (const auto& g : u5.members()) {
        CHECK(complement(complement(g)) == g);
        CHECK(complement(g).size_n() == g.order_n() * (g.order_n() - 1) / 2 - g.size_n());
    }
}

TEST_CASE("graph6 encode and decode") {
    CHECK(to_graph6(LabelledGraph(0)) == "?");
    CHECK(from_graph6("?").order() == 0);
    std::mt19937 rng(7);
    const Universe& u6 = Universe::shared(6);
    std::uniform_int_distribution<std::size_t> pick(0, u6.members().size() - 1);
    for (int rep = 0; rep < 50; ++rep) {
        const auto& g = u6.members()[pick(rng)];
        auto text = to_graph6(g);
        CHECK(CanonicalGraph::of(from_graph6(text)) == g);
    }
    CHECK_THROWS_AS(from_graph6("\x01"), validation_error);
    // dense upper limit round trip
    OPresentation op = build_opres(make_star_labelled(4));
    CHECK(CanonicalGraph::of(from_graph6(to_graph6(op.total))) == op.total);
}

TEST_CASE("labelled graph validation") {
    CHECK_THROWS_AS(LabelledGraph::from_edges(2, {{1, 1}}), validation_error);
    CHECK_THROWS_AS(LabelledGraph::from_edges(2, {{1, 3}}), validation_error);
    CHECK_THROWS_AS(LabelledGraph::from_edges(2, {{1, 2}, {2, 1}}), validation_error);
    CHECK_THROWS_AS(Universe::enumerate(9), resource_error);
}

TEST_CASE("dot export mentions every edge") {
    auto g = make_star_labelled(4);
    auto dot = to_dot(g);
    CHECK(dot.find("v1 -- v2") != std::string::npos);
    CHECK(dot.find("v1 -- v4") != std::string::npos);
}
