#include "spinsim/cqd.hpp"

#include <cmath>
#include <numbers>

#include "spinsim/rng.hpp"

namespace spinsim {

namespace {

BlochAngles draw_direction(SplitMix64& rng) {
    const double cos_theta = 2.0 * rng.next_unit() - 1.0;
    const double phi = 2.0 * std::numbers::pi * rng.next_unit();
    return {std::acos(cos_theta), phi};
}

// Branch decision for one realization index; resamples degenerate draws from
// the same stream. Returns +1/-1 and counts resamples.
int draw_branch(std::uint64_t seed, std::uint64_t index, double theta_e,
                std::uint64_t& resampled) {
    SplitMix64 rng{seed + index};
    for (;;) {
        const int sign = branch_sign(draw_direction(rng).theta, theta_e);
        if (sign != 0) return sign;
        ++resampled;
    }
}

}  // namespace

complexd realization_inner(const Realization& r1, const Realization& r2) {
    // C coefficients are exclusive binaries and the phases are unit modulus,
    // so only the relative phase survives: c1+·c2+ + c1-·c2-·e^{i(φ2−φ1)}.
    return static_cast<double>(r1.c_plus * r2.c_plus) +
           static_cast<double>(r1.c_minus * r2.c_minus) *
               std::polar(1.0, r2.phi_e - r1.phi_e);
}

double collapse_theta(double theta0, double delta_phi, int sign, double k_i) {
    if (!(theta0 >= 0.0 && theta0 <= std::numbers::pi))
        throw std::domain_error("collapse_theta: theta0 must lie in [0, pi]");
    if (sign < -1 || sign > 1) throw std::domain_error("collapse_theta: sign must be -1, 0 or +1");
    if (!(k_i >= 0.0)) throw std::domain_error("collapse_theta: k_i must be non-negative");
    if (theta0 == 0.0 || theta0 == std::numbers::pi) return theta0;  // already collapsed
    const double factor = std::exp(-static_cast<double>(sign) * k_i * std::abs(delta_phi));
    return 2.0 * std::atan(std::tan(0.5 * theta0) * factor);
}

int branch_sign(double theta_n, double theta_e) {
    if (theta_n > theta_e) return 1;
    if (theta_n == theta_e) return 0;
    return -1;
}

Realization predict(const CoQuantumPair& pair) {
    const int sign = branch_sign(pair.mu_n.theta, pair.mu_e.theta);
    if (sign == 0)
        throw DegenerateBranchError("predict: theta_n equals theta_e, no branch selected");
    Realization r;
    r.phi_e = pair.mu_e.phi;
    r.c_plus = sign > 0 ? 1 : 0;
    r.c_minus = 1 - r.c_plus;
    return r;
}

Mat2c pre_avg_density(const Realization& r1, const Realization& r2) {
    if (r1.phi_e != r2.phi_e)
        throw std::domain_error("pre_avg_density: realizations must share phi_e");
    // Entries from the binary coefficient structure; the |e^{iφe}|² factor on
    // the lower-right entry is exactly 1 by construction.
    const complexd z = std::polar(1.0, r1.phi_e);
    return {static_cast<double>(r1.c_plus * r2.c_plus) * complexd{1.0, 0.0},
            static_cast<double>(r1.c_plus * r2.c_minus) * std::conj(z),
            static_cast<double>(r1.c_minus * r2.c_plus) * z,
            static_cast<double>(r1.c_minus * r2.c_minus) * complexd{1.0, 0.0}};
}

BlochAngles sample_co_quantum(std::uint64_t rng_seed) {
    SplitMix64 rng{rng_seed};
    return draw_direction(rng);
}

double EnsembleSummary::z_score() const {
    const double p = expected_fraction();
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    return (fraction_up() - p) / sigma;
}

namespace {

void validate_ensemble_args(double theta_e, std::uint64_t n) {
    if (n < 1) throw std::domain_error("ensemble size must be at least 1");
    if (!(theta_e > 0.0 && theta_e < std::numbers::pi))
        throw std::domain_error("theta_e must lie strictly inside (0, pi)");
}

}  // namespace

EnsembleSummary ensemble_collapse_serial(double theta_e, std::uint64_t n, double k_i,
                                         std::uint64_t seed) {
    validate_ensemble_args(theta_e, n);
    std::uint64_t up = 0, resampled = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        if (draw_branch(seed, i, theta_e, resampled) > 0) ++up;
    return {n, up, resampled, theta_e, k_i, seed};
}

EnsembleSummary ensemble_collapse(double theta_e, std::uint64_t n, double k_i,
                                  std::uint64_t seed) {
    validate_ensemble_args(theta_e, n);
    std::uint64_t up = 0, resampled = 0;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for reduction(+ : up, resampled) schedule(static)
    for (long long i = 0; i < count; ++i) {
        std::uint64_t local_resampled = 0;
        if (draw_branch(seed, static_cast<std::uint64_t>(i), theta_e, local_resampled) > 0)
            ++up;
        resampled += local_resampled;
    }
    return {n, up, resampled, theta_e, k_i, seed};
}

}  // namespace spinsim
