// Compares the serial reference kernels against the OpenMP versions and
// prints throughput and speedup. The counts must match bit for bit; a
// mismatch makes the benchmark exit nonzero.

#include <chrono>
#include <cstdio>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spinsim/cqd.hpp"
#include "spinsim/verification.hpp"

using namespace spinsim;
namespace chrono = std::chrono;

namespace {

double seconds_since(chrono::steady_clock::time_point start) {
    return chrono::duration<double>(chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("openmp disabled; parallel paths run serially\n");
#endif

    constexpr std::uint64_t n = 5'000'000;
    constexpr double theta_e = 2.0 * std::numbers::pi / 3.0;

    auto t0 = chrono::steady_clock::now();
    const EnsembleSummary serial = ensemble_collapse_serial(theta_e, n, 0.0, 7);
    const double t_serial = seconds_since(t0);

    t0 = chrono::steady_clock::now();
    const EnsembleSummary parallel = ensemble_collapse(theta_e, n, 0.0, 7);
    const double t_parallel = seconds_since(t0);

    std::printf("ensemble_collapse n=%llu\n", static_cast<unsigned long long>(n));
    std::printf("  serial   %.3f s  (%.1f Msamples/s)\n", t_serial, n / t_serial / 1e6);
    std::printf("  parallel %.3f s  (%.1f Msamples/s)  speedup %.2fx\n", t_parallel,
                n / t_parallel / 1e6, t_serial / t_parallel);
    if (serial.n_up != parallel.n_up || serial.resampled != parallel.resampled) {
        std::printf("  MISMATCH: serial n_up=%llu parallel n_up=%llu\n",
                    static_cast<unsigned long long>(serial.n_up),
                    static_cast<unsigned long long>(parallel.n_up));
        return 1;
    }
    std::printf("  counts identical (n_up=%llu, fraction %.6f, expected %.6f)\n",
                static_cast<unsigned long long>(serial.n_up), serial.fraction_up(),
                serial.expected_fraction());

    // Singularity sweep: same shape, matrix-valued work item.
    constexpr std::size_t sweeps = 200000;
    t0 = chrono::steady_clock::now();
    double worst_serial = 0.0;
    for (std::size_t i = 0; i < sweeps; ++i) {
        const Mat2c rho =
            density_from_bloch(bloch_from_angles(sample_co_quantum(31 + i))).matrix();
        worst_serial = std::max(worst_serial, std::abs((sigma_0() - rho).det()));
    }
    const double t_sweep_serial = seconds_since(t0);

    t0 = chrono::steady_clock::now();
    const CheckReport parallel_sweep = check_singularity(sweeps, 31);
    const double t_sweep_parallel = seconds_since(t0);

    std::printf("singularity sweep n=%zu\n", sweeps);
    std::printf("  serial   %.3f s\n", t_sweep_serial);
    std::printf("  parallel %.3f s  speedup %.2fx\n", t_sweep_parallel,
                t_sweep_serial / t_sweep_parallel);
    if (worst_serial != parallel_sweep.residual) {
        std::printf("  MISMATCH: serial max %.3e parallel max %.3e\n", worst_serial,
                    parallel_sweep.residual);
        return 1;
    }
    std::printf("  residuals identical (max %.3e)\n", worst_serial);
    return 0;
}
