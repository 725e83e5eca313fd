#include <doctest.h>

#include <algorithm>
#include <random>

#include "gorder/orders.hpp"
#include "gorder/predicates.hpp"
#include "gorder/universe.hpp"

using namespace gorder;

namespace {
CanonicalGraph N(int k) { return CanonicalGraph::edgeless(k); }
CanonicalGraph K(int k) { return make_named(NamedFamily::K, k); }
CanonicalGraph P(int k) { return make_named(NamedFamily::P, k); }
CanonicalGraph C(int k) { return make_named(NamedFamily::C, k); }
CanonicalGraph S(int k) { return make_named(NamedFamily::S, k); }
CanonicalGraph U(const CanonicalGraph& a, const CanonicalGraph& b) { return disjoint_union(a, b); }

CanonicalGraph fig9_graph() {
    return U(N(1), U(P(3), U(K(3), U(S(4), C(5)))));
}
}  // namespace

TEST_CASE("family membership") {
    CHECK(in_family(U(C(5), C(3)), Family::Soc));
    CHECK_FALSE(in_family(U(C(5), K(2)), Family::Soc));
    CHECK(in_family(S(4), Family::T));
    CHECK_FALSE(in_family(S(4), Family::P));
    CHECK(in_family(P(4), Family::P));
    CHECK(in_family(U(K(2), N(1)), Family::Pac));
    CHECK(in_family(make_named(NamedFamily::C1, 4), Family::C1));
    CHECK(in_family(make_named(NamedFamily::C2, 4), Family::C2));
    CHECK(in_family(make_double3star(), Family::Double3star));
    CHECK_FALSE(in_family(S(4), Family::Double3star));
}

TEST_CASE("family membership boundary conventions") {
    CanonicalGraph e;
    CHECK(in_family(e, Family::EmptyG));
    CHECK(in_family(e, Family::N));
    CHECK(in_family(e, Family::T));
    CHECK(in_family(e, Family::P));
    CHECK(in_family(e, Family::K));
    CHECK(in_family(e, Family::S));
    CHECK(in_family(e, Family::Conn));
    CHECK(in_family(e, Family::UnionOfCliques));
    CHECK_FALSE(in_family(e, Family::Soc));
    CHECK_FALSE(in_family(e, Family::C));
    CHECK(in_family(N(1), Family::P));
    CHECK(in_family(K(2), Family::P));
    CHECK(in_family(K(2), Family::S));
}

TEST_CASE("family oracles against independent second implementations") {
    const Universe& u6 = Universe::shared(6);
    auto s4 = S(4);
    for (const auto& g : u6.members()) {
        int n = static_cast<int>(g.order_n());
        // soc via per-component 2-regularity == degree profile route
        bool soc2nd = !g.is_empty_graph();
        for (int v = 1; v <= n && soc2nd; ++v)
            if (g.repr().degree(v) != 2) soc2nd = false;
        soc2nd = soc2nd && !g.is_empty_graph() && [&] {
            for (auto m : g.repr().component_masks())
                if (std::popcount(m) < 3) return false;
            return true;
        }();
        CHECK(in_family(g, Family::Soc) == soc2nd);
        // pac via the forbidden-star route
        CHECK(in_family(g, Family::Pac) == !leq(OrderKind::Subgraph, s4, g));
        // forest via the forbidden-cycle route
        bool cyclefree = true;
        for (int k = 3; k <= n && cyclefree; ++k)
            if (leq(OrderKind::Subgraph, C(k), g)) cyclefree = false;
        CHECK(in_family(g, Family::Forest) == cyclefree);
        // the one-of-a-kind families via direct construction
        if (n >= 1) {
            CHECK(in_family(g, Family::P) == (g == P(n)));
            CHECK(in_family(g, Family::K) == (g == K(n)));
            CHECK(in_family(g, Family::S) == (g == S(n)));
            if (n >= 3) CHECK(in_family(g, Family::C) == (g == C(n)));
            if (n >= 4) CHECK(in_family(g, Family::C1) == (g == make_named(NamedFamily::C1, n - 1)));
        }
        // trees: connected with n-1 edges
        CHECK(in_family(g, Family::T) ==
              (g.is_empty_graph() || (is_connected(g) && g.size_n() + 1 == g.order_n())));
        // bicycle via explicit unequal-cycle constructions
        bool bi = false;
        for (int i = 3; i + 3 <= n && !bi; ++i) {
            int j = n - i;
            if (j >= 3 && j != i && g == make_bicycle(i, j)) bi = true;
        }
        CHECK(in_family(g, Family::Bicycle) == bi);
        // clique unions via the completion map's fixed points
        CHECK(in_family(g, Family::UnionOfCliques) == (extend_to_cliques(g) == g));
    }
}

TEST_CASE("component relations") {
    auto fig9 = fig9_graph();
    CHECK(maximal_comp(fig9, C(5)));
    CHECK(comp(fig9, S(4)));
    CHECK(maximum_comp(U(K(2), K(2)), K(2)));
    CHECK(comp(U(K(2), K(2)), K(2)));
    CHECK(comp(P(3), P(3)));
    auto k3p4 = U(K(3), P(4));
    CHECK(maximal_comp(k3p4, K(3)));
    CHECK(maximal_comp(k3p4, P(4)));
    CHECK_FALSE(maximum_comp(k3p4, K(3)));
    CHECK_FALSE(maximum_comp(k3p4, P(4)));
    CHECK_FALSE(maximal_comp(fig9, P(3)));  // P3 < C5 under subgraph
}

TEST_CASE("multiples of a connected graph") {
    CHECK(mult_n(U(K(2), K(2)), K(2), 2));
    CHECK(mult_n(CanonicalGraph(), K(3), 0));
    CHECK_FALSE(mult_n(U(K(2), N(1)), K(2), 1));
    CHECK(mult(U(K(3), K(3)), K(3)));
    CHECK_FALSE(mult(U(K(3), K(2)), K(3)));
    CHECK_FALSE(mult(K(2), U(K(2), K(2))));  // y must be connected
}

TEST_CASE("vertex-disjoint packing counts") {
    auto x = U(K(2), U(K(2), U(K(4), K(5))));
    CHECK(max_copies(x, K(2)) == 6);
    CHECK(max_copies(x, N(1)) == 13);
    CHECK(max_copies(x, K(3)) == 2);
    CHECK(max_copies(x, K(4)) == 2);
    CHECK(max_copies(x, K(5)) == 1);
    CHECK(max_copies(C(5), K(3)) == 0);
    CHECK_THROWS_AS(max_copies(C(5), U(K(2), K(2))), domain_error);
    CHECK_THROWS_AS(max_copies(C(5), CanonicalGraph()), domain_error);
}

TEST_CASE("packing is additive over disjoint unions") {
    const Universe& u5 = Universe::shared(5);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> pick(0, u5.members().size() - 1);
    int done = 0;
    while (done < 500) {
        const auto& x = u5.members()[pick(rng)];
        const auto& y = u5.members()[pick(rng)];
        const auto& c = u5.members()[pick(rng)];
        if (!is_connected(c) || c.is_empty_graph()) continue;
        ++done;
        CHECK(max_copies(disjoint_union(x, y), c) == max_copies(x, c) + max_copies(y, c));
    }
}

TEST_CASE("disjoint union relation") {
    CHECK(disjoint_union_check(U(K(2), K(2)), K(2), K(2)));
    CHECK(disjoint_union_check(U(P(3), N(1)), P(3), N(1)));
    CHECK_FALSE(disjoint_union_check(K(4), K(2), K(2)));
    CHECK(disjoint_union_check(N(5), N(2), N(3)));
}

TEST_CASE("copies profile equality matches component multiset equality") {
    const Universe& u5 = Universe::shared(5);
    for (const auto& g1 : u5.members())
        for (const auto& g2 : u5.members()) {
            bool profiles_equal = true;
            auto check_comps = [&](const CanonicalGraph& a, const CanonicalGraph& b) {
                for (const auto& c : components(a))
                    if (max_copies(a, c) != max_copies(b, c)) return false;
                return true;
            };
            profiles_equal = check_comps(g1, g2) && check_comps(g2, g1);
            CHECK(profiles_equal == (g1 == g2));
        }
}

TEST_CASE("adding one vertex and one edge") {
    CHECK(add_vert(make_named(NamedFamily::C1, 3), K(3)));
    CHECK(add_vert(P(4), P(3)));
    CHECK_FALSE(add_vert(U(K(2), K(2)), U(K(2), N(1))));
    CHECK_FALSE(add_vert(U(K(2), N(1)), K(2)));  // disconnected result
}

TEST_CASE("two-cycle gadgets") {
    CHECK(soc2(U(C(3), C(4)), 3, 4));
    CHECK(soc2(U(C(3), C(3)), 3, 3));
    CHECK_FALSE(soc2(U(C(3), C(4)), 3, 5));

    auto pcs = make_pointed_cycle_sum(3, 4);
    CHECK(pcs.order() == 8);
    CHECK(pcs.size() == 9);
    CHECK(pointed_cycle_sum(pcs, 3, 4));
    CHECK_FALSE(pointed_cycle_sum(pcs, 3, 5));

    auto bi = make_bicycle(3, 4);
    CHECK(bi.order() == 7);
    CHECK(bi.size() == 8);
    CHECK(bicycle_of(bi, 3, 4));
    CHECK(in_family(bi, Family::Bicycle));
    CHECK_FALSE(in_family(make_bicycle(4, 4), Family::Bicycle));  // equal cycles

    auto cp = make_cp4c(4, 5);
    CHECK(cp.order() == 4 + 5 + 2);
    CHECK(cp.size() == 4 + 5 + 3);
    CHECK(cp4c(cp, 4, 5));
    CHECK_THROWS_AS(cp4c(cp, 5, 4), domain_error);
    CHECK_THROWS_AS(two_c1s(cp, 3, 3), domain_error);

    CHECK(two_c1s(U(make_named(NamedFamily::C1, 4), make_named(NamedFamily::C1, 5)), 4, 5));
}

TEST_CASE("cycle and path unions with staircase sizes") {
    CHECK(csum(U(C(5), C(6)), 2));
    CHECK(make_csum(2).order() == 11);
    CHECK(csum(C(4), 1));
    CHECK_FALSE(csum(U(C(5), C(5)), 2));

    CHECK(psum(U(P(4), P(5)), 2));
    CHECK(psum(P(3), 1));

    auto hook2 = make_csum_hook(2);
    CHECK(hook2.order() == 13);
    CHECK(hook2.size() == 13);
    CHECK(csum_hook(hook2, 2));
}

TEST_CASE("square trees") {
    auto t3 = stree(3);
    CHECK(t3.order() == 10);
    CHECK(in_family(t3, Family::T));
    CHECK(t3.degree_sequence().front() == 3);
    CHECK(stree(2) == P(5));
    CHECK(psi_sq(N(9), N(3)));
    CHECK_FALSE(psi_sq(N(8), N(3)));
    CHECK_FALSE(psi_sq(K(4), K(2)));
}

TEST_CASE("arithmetic relations on the edgeless family") {
    CHECK(psi_plus(N(2), N(3), N(5)));
    CHECK(psi_times(N(2), N(3), N(6)));
    CHECK_FALSE(psi_plus(K(2), N(1), N(2)));
    CHECK_FALSE(psi_times(N(2), N(3), N(5)));
}

TEST_CASE("clique completion") {
    CHECK(union_of_cliques(U(K(2), K(2))));
    CHECK_FALSE(union_of_cliques(P(3)));
    CHECK(extend_to_cliques(fig9_graph()) ==
          U(N(1), U(K(3), U(K(3), U(K(4), K(5))))));
    const Universe& u6 = Universe::shared(6);
    for (const auto& g : u6.members()) {
        auto e = extend_to_cliques(g);
        CHECK(extend_to_cliques(e) == e);  // idempotent
        CHECK(count_comps(e) == count_comps(g));
    }
}

TEST_CASE("clique completion is the least clique-union supergraph") {
    const Universe& u5 = Universe::shared(5);
    for (const auto& x : u5.members()) {
        auto e = extend_to_cliques(x);
        CHECK(union_of_cliques(e));
        CHECK(leq(OrderKind::Subgraph, x, e));
        for (const auto& z : u5.members())
            if (union_of_cliques(z) && leq(OrderKind::Subgraph, x, z))
                CHECK(leq(OrderKind::Subgraph, e, z));
    }
}

TEST_CASE("edge and component counting") {
    const Universe& u6 = Universe::shared(6);
    for (const auto& g : u6.members()) {
        CHECK(count_edges(g) == g.size_n());
        CHECK(count_comps(g) == Natural(components(g).size()));
    }
    CHECK(count_edges(N(7)) == 0);
    CHECK(count_edges(S(4)) == 3);
    CHECK(count_comps(U(K(2), U(K(2), U(K(4), K(5))))) == 4);
    CHECK_THROWS_AS(count_edges_conn(U(K(2), K(2))), domain_error);
    CHECK(count_edges_conn(C(5)) == 5);
}

TEST_CASE("edge-filling chains") {
    auto p3_chain = build_count_edges_gadget(P(3));
    auto comps = components(p3_chain);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == P(3));
    CHECK(comps[1] == K(3));

    CHECK(build_count_edges_gadget(K(3)) == K(3));
    CHECK_THROWS_AS(build_count_edges_gadget(U(K(2), K(2))), domain_error);
    CHECK_THROWS_AS(build_count_edges_gadget(CanonicalGraph()), domain_error);

    const Universe& u5 = Universe::shared(5);
    for (const auto& g : u5.members()) {
        if (!is_connected(g) || g.is_empty_graph()) continue;
        auto gadget = build_count_edges_gadget(g);
        Natural expected = g.order_n() * (g.order_n() - 1) / 2 - g.size_n() + 1;
        CHECK(count_comps(gadget) == expected);
        // successive components differ by an edge cover
        auto cs = components(gadget);
        std::sort(cs.begin(), cs.end(),
                  [](const CanonicalGraph& a, const CanonicalGraph& b) { return a.size_n() < b.size_n(); });
        CHECK(cs.front() == g);
        CHECK(cs.back() == K(static_cast<int>(g.order_n())));
        for (std::size_t i = 0; i + 1 < cs.size(); ++i)
            CHECK(cover_kind_s(cs[i], cs[i + 1]) == SubgraphCoverKind::EdgeCover);
    }
}
