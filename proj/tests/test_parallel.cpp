#include <doctest.h>

#include "gorder/harness.hpp"
#include "gorder/orders.hpp"
#include "gorder/universe.hpp"

using namespace gorder;

// The OpenMP kernels must agree with their serial reference implementations
// member for member and bit for bit.

TEST_CASE("parallel enumeration equals the serial reference") {
    for (int n = 0; n <= 6; ++n) {
        Universe par = Universe::enumerate(n);
        Universe ser = Universe::enumerate_serial(n);
        REQUIRE(par.members().size() == ser.members().size());
        for (std::size_t i = 0; i < par.members().size(); ++i)
            CHECK(par.members()[i] == ser.members()[i]);
    }
}

TEST_CASE("parallel matrix build equals the serial reference") {
    const Universe& u4 = Universe::shared(4);
    for (auto kind : {OrderKind::Subgraph, OrderKind::Induced, OrderKind::Minor}) {
        OrderMatrix par = OrderMatrix::build(u4, kind);
        OrderMatrix ser = OrderMatrix::build_serial(u4, kind);
        REQUIRE(par.size() == ser.size());
        for (int i = 0; i < par.size(); ++i)
            for (int j = 0; j < par.size(); ++j) {
                CHECK(par.leq(i, j) == ser.leq(i, j));
                CHECK(par.covers(i, j) == ser.covers(i, j));
            }
    }
}

TEST_CASE("parallel conformance sweeps are deterministic") {
    auto r1 = conformance(fo::builtin_corpus(), "K", "is_K", 5, 0);
    auto r2 = conformance(fo::builtin_corpus(), "K", "is_K", 5, 0);
    CHECK(r1.agreements == r2.agreements);
    CHECK(r1.disagreement_count == r2.disagreement_count);
    CHECK(r1.disagreements == r2.disagreements);
}
