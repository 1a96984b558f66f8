// Benchmark: lifting kernel (parallel) vs. flat enumeration (serial reference).
// Both must agree exactly; the flat path is the oracle the tests use.

#include <chrono>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mzeta/igusa.hpp"

using namespace mzeta::igusa;

namespace {

double seconds(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - from).count();
}

struct Case {
    const char* poly;
    long p;
    long m;
};

}  // namespace

int main() {
    std::vector<Case> cases = {
        {"x^2 + y^3", 5, 4},
        {"x*y*z - 1", 3, 4},
        {"x^2 + y^2 + z^2", 3, 4},
        {"x^3 - y^2", 7, 3},
    };
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    std::cout << "threads: " << threads << "\n";
    std::cout << "poly                 p  m        N_m     flat[s]     lift[s]  speedup\n";
    for (const auto& c : cases) {
        IntPoly f = IntPoly::parse(c.poly);
        auto t0 = std::chrono::steady_clock::now();
        mzeta::Int flat = count_solutions_flat(f, c.p, c.m);
        double t_flat = seconds(t0);
        t0 = std::chrono::steady_clock::now();
        mzeta::Int lift = count_solutions(f, c.p, c.m);
        double t_lift = seconds(t0);
        if (flat != lift) {
            std::cerr << "MISMATCH for " << c.poly << ": flat " << flat.get_str() << " vs lift "
                      << lift.get_str() << "\n";
            return 1;
        }
        printf("%-20s %2ld %2ld %10s %11.3f %11.3f %8.1fx\n", c.poly, c.p, c.m,
               flat.get_str().c_str(), t_flat, t_lift, t_flat / (t_lift > 0 ? t_lift : 1e-9));
    }
    return 0;
}
