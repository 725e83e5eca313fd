#include <chrono>
#include <iostream>

#include "gorder/fo/corpus.hpp"
#include "gorder/harness.hpp"
#include "gorder/orders.hpp"
#include "gorder/universe.hpp"

using namespace gorder;

// Times each OpenMP kernel against its serial reference implementation.

namespace {

template <typename F>
double time_s(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel) {
    std::printf("%-34s %10.3fs %10.3fs %8.2fx\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    std::printf("%-34s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        double ser = time_s([] { Universe::enumerate_serial(7); });
        double par = time_s([] { Universe::enumerate(7); });
        row("enumerate types up to 7 vertices", ser, par);
    }
    {
        const Universe& u5 = Universe::shared(5);
        double ser = time_s([&] { OrderMatrix::build_serial(u5, OrderKind::Subgraph); });
        double par = time_s([&] { OrderMatrix::build(u5, OrderKind::Subgraph); });
        row("subgraph matrix on U5", ser, par);
    }
    {
        const Universe& u5 = Universe::shared(5);
        double ser = time_s([&] { OrderMatrix::build_serial(u5, OrderKind::Minor); });
        double par = time_s([&] { OrderMatrix::build(u5, OrderKind::Minor); });
        row("minor matrix on U5", ser, par);
    }
    {
        // conformance sweeps parallelise over argument tuples
        double t = time_s([] { conformance(fo::builtin_corpus(), "soc", "is_soc", 5, 1); });
        row("conformance sweep (soc, n=5)", t, t);
    }
    return 0;
}
