// Compares the OpenMP kernels against their serial references and reports
// timings plus result agreement.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "orbi/cohomology.hpp"
#include "orbi/fuscat.hpp"
#include "orbi/group.hpp"
#include "orbi/quadform.hpp"

using namespace orbi;
using clk = std::chrono::steady_clock;

static double ms(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

int main() {
#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled (serial build)\n");
#endif

    {
        // pentagon instances for TY(Z/q) grow quickly with q
        const std::int64_t q = 23;
        AbelianGroup A({q});
        Bicharacter chi;
        chi.group = A;
        chi.b.resize(q * q);
        for (std::int64_t x = 0; x < q; ++x)
            for (std::int64_t y = 0; y < q; ++y)
                chi.b[x * q + y] = Phase(x * y, q);
        FusionCategoryData C = build_ty(A, chi, 1);

        auto t0 = clk::now();
        PentagonReport serial = pentagon_check_serial(C);
        auto t1 = clk::now();
        PentagonReport parallel = pentagon_check(C);
        auto t2 = clk::now();
        bool agree = serial.instances == parallel.instances &&
                     serial.violations.size() == parallel.violations.size();
        std::printf("pentagon TY(Z/%lld): %lld instances  serial %.1f ms  "
                    "parallel %.1f ms  agree %s\n",
                    (long long)q, (long long)serial.instances, ms(t0, t1),
                    ms(t1, t2), agree ? "yes" : "NO");
    }

    {
        FiniteGroup G = abelian_embed(AbelianGroup({8}));
        auto t0 = clk::now();
        IntMat serial = coboundary_matrix_serial(G, 3);
        auto t1 = clk::now();
        IntMat parallel = coboundary_matrix(G, 3);
        auto t2 = clk::now();
        std::printf("bar differential d_3 on Z/8: %dx%d  serial %.1f ms  "
                    "parallel %.1f ms  agree %s\n",
                    serial.rows, serial.cols, ms(t0, t1), ms(t1, t2),
                    serial == parallel ? "yes" : "NO");
    }

    {
        AbelianGroup H({2, 4, 8});
        auto t0 = clk::now();
        auto serial = enumerate_quadratic_forms_serial(H);
        auto t1 = clk::now();
        auto parallel = enumerate_quadratic_forms(H);
        auto t2 = clk::now();
        bool agree = serial.size() == parallel.size();
        for (std::size_t i = 0; agree && i < serial.size(); ++i)
            agree = serial[i] == parallel[i];
        std::printf("quadratic forms on Z/2 x Z/4 x Z/8: %zu forms  serial %.1f ms  "
                    "parallel %.1f ms  agree %s\n",
                    serial.size(), ms(t0, t1), ms(t1, t2), agree ? "yes" : "NO");
    }
    return 0;
}
