#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gorder/encoding.hpp"
#include "gorder/predicates.hpp"
#include "gorder/sequences.hpp"
#include "gorder/universe.hpp"

using namespace gorder;

TEST_CASE("labelling codes") {
    // the three labellings of the 3-path
    CHECK(code_of(LabelledGraph::from_edges(3, {{1, 2}, {2, 3}})) == 13);
    CHECK(code_of(LabelledGraph::from_edges(3, {{2, 1}, {1, 3}})) == 11);
    CHECK(code_of(LabelledGraph::from_edges(3, {{2, 3}, {3, 1}})) == 14);

    CHECK(code_of(LabelledGraph(0)) == 0);
    CHECK(code_of(LabelledGraph(1)) == 1);
    CHECK(code_of(LabelledGraph::from_edges(2, {{1, 2}})) == 3);
}

TEST_CASE("minimum code") {
    CHECK(min_code(make_named(NamedFamily::P, 3)) == 11);
    CHECK(min_code(CanonicalGraph::edgeless(2)) == 2);
    CHECK(min_code(CanonicalGraph()) == 0);

    // injective across the whole five-vertex universe
    const Universe& u5 = Universe::shared(5);
    std::set<GraphCode> codes;
    for (const auto& g : u5.members()) codes.insert(min_code(g));
    CHECK(codes.size() == u5.members().size());
}

TEST_CASE("minimality over random labellings") {
    std::mt19937 rng(99);
    const Universe& u5 = Universe::shared(5);
    for (const auto& g : u5.members()) {
        if (g.order_n() < 2) continue;
        GraphCode mc = min_code(g);
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        std::iota(perm.begin(), perm.end(), 1);
        for (int rep = 0; rep < 200; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(mc <= code_of(g.repr().relabelled(perm)));
        }
    }
}

TEST_CASE("number to graph map") {
    CHECK(graph_of_number(11) == CanonicalGraph::edgeless(11));
    CHECK(graph_of_number(0) == CanonicalGraph());
    CHECK(graph_of_number(5) == CanonicalGraph::edgeless(5));
}

TEST_CASE("code validity predicate") {
    CHECK(is_min_code(11));
    CHECK_FALSE(is_min_code(13));  // a non-minimal 3-path labelling
    CHECK(is_min_code(2));
    CHECK(is_min_code(0));
    CHECK(is_min_code(1));
    CHECK_FALSE(is_min_code(5));  // 101: three bits is not 1 + m(m-1)/2
}

TEST_CASE("code edges") {
    CHECK(code_edge(11, 1, 2));
    CHECK(code_edge(11, 1, 3));
    CHECK_FALSE(code_edge(11, 2, 3));
    CHECK_FALSE(code_edge(1, 1, 1));
    CHECK_FALSE(code_edge(2, 1, 2));
    CHECK_THROWS_AS(code_edge(11, 0, 2), domain_error);
    CHECK_THROWS_AS(code_edge(11, 1, 4), domain_error);
    CHECK_THROWS_AS(code_edge(5, 1, 2), domain_error);
}

TEST_CASE("code lengths") {
    CHECK(code_length(11) == 4);
    CHECK(code_length(1) == 1);
    CHECK(code_length(0) == 0);
    CHECK(code_order_matches(11, 3));
    CHECK_FALSE(code_order_matches(11, 4));
    CHECK(code_order_matches(1, 1));
}

TEST_CASE("code roundtrip and length law across the universe") {
    const Universe& u6 = Universe::shared(6);
    for (const auto& g : u6.members()) {
        GraphCode c = min_code(g);
        auto back = decode_code(c);
        REQUIRE(back.has_value());
        CHECK(CanonicalGraph::of(*back) == g);
        CHECK(is_min_code(c));
        if (!g.is_empty_graph())
            CHECK(Natural(code_length(c)) == 1 + g.order_n() * (g.order_n() - 1) / 2);
    }
}

TEST_CASE("graphs as code indices") {
    CHECK(encode_as_natural(make_named(NamedFamily::P, 3)) == CanonicalGraph::edgeless(11));
    CHECK(encode_as_natural(CanonicalGraph()) == CanonicalGraph());
    CHECK(encode_as_natural(CanonicalGraph::edgeless(2)) == CanonicalGraph::edgeless(2));
}

TEST_CASE("lifted decision procedures") {
    auto connected = lift_predicate(DecisionProcedure{
        1, [](std::span<const GraphCode> codes) {
            auto g = decode_code(codes[0]);
            return g && is_connected(CanonicalGraph::of(*g));
        }});
    const Universe& u5 = Universe::shared(5);
    for (const auto& g : u5.members()) {
        CanonicalGraph args[] = {g};
        CHECK(connected(args) == is_connected(g));
    }

    auto always = lift_predicate(DecisionProcedure{1, [](std::span<const GraphCode>) { return true; }});
    CanonicalGraph args[] = {make_named(NamedFamily::C, 4)};
    CHECK(always(args));

    auto even = lift_predicate(
        DecisionProcedure{1, [](std::span<const GraphCode> codes) { return codes[0] % 2 == 0; }});
    CanonicalGraph p3[] = {make_named(NamedFamily::P, 3)};
    CHECK_FALSE(even(p3));  // its code is 11
}

TEST_CASE("total order by code") {
    CHECK(leq_total(CanonicalGraph::edgeless(2), make_named(NamedFamily::K, 2)));
    auto c4 = make_named(NamedFamily::C, 4);
    CHECK(leq_total(c4, c4));
    const Universe& u5 = Universe::shared(5);
    for (const auto& g : u5.members())
        for (const auto& h : u5.members())
            if (leq_total(g, h) && leq_total(h, g)) CHECK(g == h);
}

TEST_CASE("packed sequences") {
    auto s = ExpSequence::from_packed(18);
    CHECK(s.get(1) == 1);
    CHECK(s.get(2) == 2);
    CHECK(s.get(3) == 0);
    CHECK(s.sum() == 3);

    auto t = ExpSequence::from_entries({0, 2, 0, 1, 1});
    CHECK(t.sum() == 4);
    CHECK(t.packed() == Natural(3 * 3) * 7 * 11);

    CHECK(ExpSequence().sum() == 0);
    CHECK(ExpSequence().packed() == 1);
    CHECK(ExpSequence::from_packed(1) == ExpSequence());
}

TEST_CASE("profile transform") {
    auto counts = ExpSequence::from_entries({0, 2, 0, 1, 1});
    auto copies = counts_to_copies(counts);
    CHECK(copies == ExpSequence::from_entries({13, 6, 2, 2, 1}));
    CHECK(copies_to_counts(copies) == counts);

    CHECK(counts_to_copies(ExpSequence::from_entries({1})) == ExpSequence::from_entries({1}));

    // the transform inverts on every sequence with entries <= 3, length <= 5
    std::vector<Natural> entries(5, 0);
    for (int mask = 0; mask < 4 * 4 * 4 * 4 * 4; ++mask) {
        int m = mask;
        for (int i = 0; i < 5; ++i) {
            entries[static_cast<std::size_t>(i)] = m % 4;
            m /= 4;
        }
        auto seq = ExpSequence::from_entries(entries);
        CHECK(copies_to_counts(counts_to_copies(seq)) == seq);
    }

    // values outside the image are rejected
    CHECK_THROWS_AS(copies_to_counts(ExpSequence::from_entries({0, 1})), domain_error);
}

TEST_CASE("profile sum counts components of clique unions") {
    const Universe& u6 = Universe::shared(6);
    for (const auto& g : u6.members()) {
        if (!union_of_cliques(g) || g.is_empty_graph()) continue;
        std::vector<Natural> profile;
        for (int i = 1; i <= g.order(); ++i)
            profile.emplace_back(max_copies(g, make_named(NamedFamily::K, i)));
        auto counts = copies_to_counts(ExpSequence::from_entries(std::move(profile)));
        CHECK(counts.sum() == count_comps(g));
    }
}
