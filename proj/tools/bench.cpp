// Compares the OpenMP kernels against their serial reference implementations:
// power-series convolution, Monte-Carlo sampling, and the full identity run.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "appell/identities.hpp"
#include "appell/mc.hpp"

using namespace appell;

namespace {

template <typename F>
double time_ms(F&& fn, int repeats = 3) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        auto start = std::chrono::steady_clock::now();
        fn();
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        best = std::min(best, ms);
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel kernels fall back to the serial path\n");
#endif

    {
        const std::size_t order = 20;
        PowerSeries a = series::pow_symbolic(bernoulli_recip_mgf(order), Var::m);
        PowerSeries b = series::pow_symbolic(euler_recip_mgf(order), Var::l);
        PowerSeries ref = series::mul_serial(a, b);
        PowerSeries par = series::mul(a, b);
        if (ref == par) std::printf("series convolution: parallel result matches serial reference\n");
        report("series convolution (N=20)", time_ms([&] { series::mul_serial(a, b); }),
               time_ms([&] { series::mul(a, b); }));
    }

    {
        FamilyCatalog catalog(6);
        McConfig cfg;
        cfg.n = 5;
        cfg.m_int = 3;
        cfg.l = 2;
        cfg.x0 = Rational(7, 10);
        cfg.samples = 4000000;
        McResult ref = mc_check_bernoulli_serial(cfg, catalog);
        McResult par = mc_check_bernoulli(cfg, catalog);
        if (ref.estimate == par.estimate && ref.std_error == par.std_error)
            std::printf("mc sampling: parallel result bit-identical to serial reference\n");
        report("mc sampling (4e6 draws)", time_ms([&] { mc_check_bernoulli_serial(cfg, catalog); }),
               time_ms([&] { mc_check_bernoulli(cfg, catalog); }));
    }

    {
        IdentitySuite suite(10);
        suite.verify_all(1);  // warm the family caches
        double serial = time_ms(
            [&] {
                for (const std::string& name : IdentitySuite::identity_names()) suite.verify(name, 10);
            },
            1);
        double parallel = time_ms([&] { suite.verify_all(10); }, 1);
        report("identity suite (n<=10)", serial, parallel);
    }
    return 0;
}
