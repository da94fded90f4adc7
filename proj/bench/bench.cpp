// Serial reference vs OpenMP timings for the harness loop and the exhaustive sweeps.
// Usage: bench [trials]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef HFREE_HAVE_OPENMP
#include <omp.h>
#endif

#include "hfree/harness.hpp"

using namespace hfree;

namespace {

double time_it(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, const std::function<void(bool)>& f) {
    double s = time_it([&] { f(false); });
    double p = time_it([&] { f(true); });
    std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx\n", name, s, p, p > 0 ? s / p : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t trials = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200;
#ifdef HFREE_HAVE_OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    for (Problem p : {Problem::C5ColH3, Problem::HamiltonH1, Problem::KidpH2, Problem::Star3}) {
        std::string name = "harness " + to_string(p);
        row(name.c_str(), [&](bool par) {
            auto r = run_harness(p, trials, 12, 1, par);
            if (r.agree != r.trials) std::printf("  disagreement: %zu/%zu\n", r.agree, r.trials);
        });
    }
    row("sweep_reductions(5)", [](bool par) { sweep_reductions(5, par); });
    row("sweep_c5_critical(6)", [](bool par) { sweep_c5_critical(6, par); });
    return 0;
}
