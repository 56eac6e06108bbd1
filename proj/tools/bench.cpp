// Compares the serial reference kernels against the OpenMP ones on the
// workloads that dominate the suites: Betti scans of ideal powers and the
// verdict census.
#include <chrono>
#include <functional>
#include <iostream>

#include "cowl/decide.hpp"
#include "cowl/enumerate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cowl;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

MonomialIdeal whisker_ideal() {
    auto built = make_weighted_oriented(
        {"x1", "x2", "x3", "x4", "x5", "x6"},
        {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x1"}, {"x1", "x4"}, {"x2", "x5"}, {"x3", "x6"}},
        {1, 1, 1, 2, 2, 2});
    return edge_ideal(built.graph);
}

void row(const std::string& name, double serial, double parallel) {
    std::cout << name << ": serial " << serial << " ms, parallel " << parallel << " ms, speedup "
              << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns run serially\n";
#endif
    OracleOptions ser, par;
    ser.policy = ExecPolicy::Serial;
    par.policy = ExecPolicy::Parallel;

    {
        auto I2 = power(whisker_ideal(), 2);
        double ts = time_ms([&] { betti_table(I2, ser); }, 3);
        double tp = time_ms([&] { betti_table(I2, par); }, 3);
        if (betti_table(I2, ser).entries != betti_table(I2, par).entries) {
            std::cerr << "MISMATCH between serial and parallel Betti tables\n";
            return 1;
        }
        row("betti_table(I^2), 6 vars", ts, tp);
    }
    {
        auto I3 = power(whisker_ideal(), 3);
        double ts = time_ms([&] { betti_table(I3, ser); }, 2);
        double tp = time_ms([&] { betti_table(I3, par); }, 2);
        row("betti_table(I^3), 6 vars", ts, tp);
    }
    {
        CensusOptions c;
        c.max_n = 5;
        c.max_weight = 2;
        c.connected_only = true;
        auto classes = census_classes(c);
        // each class decision stays serial; the fan-out is what parallelizes
        DecideOptions ds;
        ds.oracle.policy = ExecPolicy::Serial;
        auto run = [&](bool parallel) {
            std::size_t yes = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : yes) if (parallel)
#endif
            for (std::size_t i = 0; i < classes.size(); ++i) {
                Verdict v = decide_componentwise_linear(classes[i], ds);
                yes += v.answer == Answer::Yes;
            }
            return yes;
        };
        std::size_t y1 = 0, y2 = 0;
        double ts = time_ms([&] { y1 = run(false); }, 1);
        double tp = time_ms([&] { y2 = run(true); }, 1);
        if (y1 != y2) {
            std::cerr << "MISMATCH between serial and parallel census\n";
            return 1;
        }
        row("census verdicts (n<=5, w<=2, connected, " + std::to_string(classes.size()) + " classes)",
            ts, tp);
    }
    return 0;
}
