#pragma once

#include <cstdint>

#include "spinsim/states.hpp"

namespace spinsim {

struct DegenerateBranchError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Electron moment direction paired with its nuclear co-quantum direction.
struct CoQuantumPair {
    BlochAngles mu_e;
    BlochAngles mu_n;
};

/// One collapse outcome: mutually exclusive binary coefficients on |+z⟩ and
/// e^{iφe}|−z⟩, plus the phase that tags the electron azimuth.
struct Realization {
    int c_plus = 0;
    int c_minus = 0;
    double phi_e = 0.0;

    Spinor ket() const {
        return {{static_cast<double>(c_plus), 0.0},
                static_cast<double>(c_minus) * std::polar(1.0, phi_e)};
    }
};

/// ⟨r1|r2⟩ evaluated through the binary coefficient structure, so identical
/// realizations give exactly 1.
complexd realization_inner(const Realization& r1, const Realization& r2);

/// Polar angle after traversing |Δφ| of azimuth:
/// 2·arctan[tan(θ0/2)·exp(−sign·k_i·|Δφ|)]. θ0 at a pole is returned
/// unchanged (already collapsed).
double collapse_theta(double theta0, double delta_phi, int sign, double k_i);

/// +1 if θn > θe, 0 if equal, −1 otherwise.
int branch_sign(double theta_n, double theta_e);

/// Collapse outcome for a pair: +z branch when θn > θe, −z branch when
/// θn < θe. Equal angles throw DegenerateBranchError (samplers resample).
Realization predict(const CoQuantumPair& pair);

/// Pre-averaging density operator |ket(r1)⟩⟨ket(r2)| for realizations
/// sharing φe. Rank ≤ 1 with trace exactly 0 or 1.
Mat2c pre_avg_density(const Realization& r1, const Realization& r2);

/// Co-quantum direction drawn uniformly on the unit sphere, deterministic
/// per seed: cos θn uniform on [−1, 1], φn uniform on [0, 2π).
BlochAngles sample_co_quantum(std::uint64_t rng_seed);

struct EnsembleSummary {
    std::uint64_t n = 0;
    std::uint64_t n_up = 0;
    std::uint64_t resampled = 0;
    double theta_e = 0.0;
    double k_i = 0.0;
    std::uint64_t seed = 0;

    double fraction_up() const { return static_cast<double>(n_up) / static_cast<double>(n); }
    /// Born weight cos²(θe/2) = (1 + cos θe)/2.
    double expected_fraction() const { return 0.5 * (1.0 + std::cos(theta_e)); }
    double z_score() const;
};

/// Draws n co-quanta (realization i uses base seed + i, so the result is
/// independent of how the loop is split across threads) and counts collapses
/// to +z. OpenMP-parallel when available.
EnsembleSummary ensemble_collapse(double theta_e, std::uint64_t n, double k_i,
                                  std::uint64_t seed);

/// Single-threaded reference for ensemble_collapse; always agrees with it
/// exactly.
EnsembleSummary ensemble_collapse_serial(double theta_e, std::uint64_t n, double k_i,
                                         std::uint64_t seed);

}  // namespace spinsim
