#include "spinsim/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spinsim {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_phi(double phi) {
    double w = std::fmod(phi, two_pi);
    if (w < 0.0) w += two_pi;
    // fmod can return exactly two_pi after the correction when phi is a tiny
    // negative number; fold that back to 0.
    if (w >= two_pi) w = 0.0;
    return w;
}

void require_theta_range(double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw std::domain_error("polar angle must lie in [0, pi]");
}

}  // namespace

Vec3 bloch_from_angles(const BlochAngles& a) {
    require_theta_range(a.theta);
    const double phi = wrap_phi(a.phi);
    const double st = std::sin(a.theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(a.theta)};
}

BlochAngles angles_from_bloch(const Vec3& m) {
    const double z = std::clamp(m.z, -1.0, 1.0);
    const double theta = std::acos(z);
    // atan2(0, 0) is 0, so the poles canonicalize to phi = 0 on their own,
    // but guard against -0 components producing phi = pi.
    if (m.x == 0.0 && m.y == 0.0) return {theta, 0.0};
    return {theta, wrap_phi(std::atan2(m.y, m.x))};
}

DensityMatrix density_from_bloch(const Vec3& m) {
    if (std::abs(norm(m) - 1.0) > 1e-10)
        throw std::domain_error("density_from_bloch: Bloch vector must be unit length");
    return DensityMatrix(0.5 * (vec_to_pauli(m) + sigma_0()));
}

Vec3 bloch_from_density(const DensityMatrix& rho) {
    return pauli_vector_part(2.0 * rho.matrix() - sigma_0());
}

Spinor spinor_from_angles(const BlochAngles& a) {
    require_theta_range(a.theta);
    const double phi = wrap_phi(a.phi);
    return {{std::cos(0.5 * a.theta), 0.0}, std::polar(std::sin(0.5 * a.theta), phi)};
}

DensityMatrix density_from_spinor(const Spinor& psi) {
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw std::domain_error("density_from_spinor: spinor must be normalized");
    return DensityMatrix(outer(psi, psi));
}

Spinor spinor_from_density(const DensityMatrix& rho) {
    if (purity(rho) < 1.0 - 1e-8)
        throw PurityError("spinor_from_density: state is not pure");
    const Mat2c& r = rho.matrix();
    // A pure rho is a rank-1 projector; its dominant column, scaled by the
    // square root of the matching diagonal, recovers the spinor.
    const double p00 = std::max(0.0, r(0, 0).real());
    const double p11 = std::max(0.0, r(1, 1).real());
    Spinor psi;
    if (p00 >= p11) {
        const double s = std::sqrt(p00);
        psi = {{s, 0.0}, r(1, 0) * (1.0 / s)};
    } else {
        const double s = std::sqrt(p11);
        psi = {r(0, 1) * (1.0 / s), {s, 0.0}};
    }
    // Gauge: first component with modulus > 1e-8 made real and positive.
    const complexd lead = std::abs(psi.up) > 1e-8 ? psi.up : psi.down;
    psi = psi * (std::conj(lead) * (1.0 / std::abs(lead)));
    const double n = psi.norm();
    return psi * (1.0 / n);
}

double purity(const DensityMatrix& rho) { return purity_of(rho.matrix()); }

double trace_distance(const DensityMatrix& r1, const DensityMatrix& r2) {
    return 0.5 * norm(bloch_from_density(r1) - bloch_from_density(r2));
}

}  // namespace spinsim
