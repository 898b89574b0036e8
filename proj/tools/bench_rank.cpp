// Compares the OpenMP elimination kernel against the serial reference on
// seeded random square matrices and checks that both agree.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fatpoints/matrix.hpp"
#include "fatpoints/rng.hpp"

using namespace fatpoints;

namespace {

DenseMatrix random_matrix(std::size_t n, const FieldContext& F, std::uint64_t seed) {
    DenseMatrix m(n, n);
    Xorshift64Star rng(seed);
    for (auto& v : m.a) v = rng.residue(F);
    return m;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const FieldContext F;
    std::size_t max_serial = 1024;
    if (argc > 1) max_serial = static_cast<std::size_t>(std::atoll(argv[1]));

#ifdef _OPENMP
    std::printf("# OpenMP, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("# built without OpenMP\n");
#endif
    std::printf("%8s %14s %14s %10s %8s\n", "n", "parallel [s]", "serial [s]",
                "speedup", "rank");

    for (std::size_t n : {256u, 512u, 1024u, 2000u}) {
        const DenseMatrix m = random_matrix(n, F, 42 + n);

        auto t0 = std::chrono::steady_clock::now();
        const std::size_t r_par = rank(m, F);
        const double t_par = seconds_since(t0);

        double t_ser = -1.0;
        if (n <= max_serial) {
            t0 = std::chrono::steady_clock::now();
            const std::size_t r_ser = rank_serial(m, F);
            t_ser = seconds_since(t0);
            if (r_ser != r_par) {
                std::fprintf(stderr, "rank mismatch at n=%zu: %zu vs %zu\n", n, r_par,
                             r_ser);
                return 1;
            }
        }
        if (t_ser >= 0)
            std::printf("%8zu %14.4f %14.4f %9.1fx %8zu\n", n, t_par, t_ser,
                        t_ser / t_par, r_par);
        else
            std::printf("%8zu %14.4f %14s %10s %8zu\n", n, t_par, "-", "-", r_par);
    }
    return 0;
}
