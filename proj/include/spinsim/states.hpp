#pragma once

#include <stdexcept>

#include "spinsim/pauli.hpp"

namespace spinsim {

struct PurityError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Polar/azimuthal angles on the Bloch sphere: theta in [0, π],
/// phi normalized to [0, 2π).
struct BlochAngles {
    double theta = 0.0;
    double phi = 0.0;
};

/// Two-component complex state vector on the {|+z⟩, |−z⟩} basis.
struct Spinor {
    complexd up{};
    complexd down{};

    Spinor operator+(const Spinor& o) const { return {up + o.up, down + o.down}; }
    Spinor operator*(complexd s) const { return {up * s, down * s}; }
    Spinor operator*(double s) const { return {up * s, down * s}; }
    double norm() const { return std::sqrt(std::norm(up) + std::norm(down)); }
};

inline Spinor operator*(double s, const Spinor& p) { return p * s; }

inline complexd inner(const Spinor& a, const Spinor& b) {
    return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

/// Outer product ψφ† as a matrix.
inline Mat2c outer(const Spinor& a, const Spinor& b) {
    return {a.up * std::conj(b.up), a.up * std::conj(b.down),
            a.down * std::conj(b.up), a.down * std::conj(b.down)};
}

// Raw purity tr(ρ²) of an (assumed Hermitian) matrix.
inline double purity_of(const Mat2c& rho) { return (rho * rho).trace().real(); }

/// 2x2 Hermitian unit-trace matrix. Validates Hermiticity and trace within
/// 1e-12 and eigenvalues within [−1e-10, 1+1e-10] at construction. Mixed
/// states are representable; purity is a diagnostic, not an invariant.
class DensityMatrix {
  public:
    explicit DensityMatrix(const Mat2c& rho) : m_(rho) {
        if (hermiticity_defect(rho) > 1e-12)
            throw std::domain_error("DensityMatrix: not Hermitian within 1e-12");
        if (std::abs(rho.trace() - complexd{1.0, 0.0}) > 1e-12)
            throw std::domain_error("DensityMatrix: trace differs from 1 beyond 1e-12");
        // Hermitian 2x2 eigenvalues: ½(tr ± √(tr² − 4det)).
        const double tr = rho.trace().real();
        const double disc = std::max(0.0, tr * tr - 4.0 * rho.det().real());
        const double lo = 0.5 * (tr - std::sqrt(disc));
        const double hi = 0.5 * (tr + std::sqrt(disc));
        if (lo < -1e-10 || hi > 1.0 + 1e-10)
            throw std::domain_error("DensityMatrix: eigenvalues outside [0, 1]");
    }

    const Mat2c& matrix() const { return m_; }

  private:
    Mat2c m_;
};

/// Unit vector (sinθcosφ, sinθsinφ, cosθ). θ outside [0, π] → domain error;
/// φ is wrapped into [0, 2π).
Vec3 bloch_from_angles(const BlochAngles& a);

/// Inverse of bloch_from_angles for unit vectors. At the poles φ is
/// unobservable and comes back as 0.
BlochAngles angles_from_bloch(const Vec3& m);

/// ρ = ½(m·σ + σ0) for unit m (pure states only; |m| must be 1 within 1e-10).
DensityMatrix density_from_bloch(const Vec3& m);

/// m = pauli-vector part of 2ρ − σ0. Length ≤ 1; equals 1 for pure ρ.
Vec3 bloch_from_density(const DensityMatrix& rho);

/// (cos(θ/2), sin(θ/2)·e^{iφ}).
Spinor spinor_from_angles(const BlochAngles& a);

/// ρ = ψψ† for a unit-norm spinor.
DensityMatrix density_from_spinor(const Spinor& psi);

/// Spinor of a pure ρ (purity within 1e-8 of 1, else PurityError), with the
/// global phase fixed so the first component of modulus > 1e-8 is real
/// and positive.
Spinor spinor_from_density(const DensityMatrix& rho);

/// tr(ρ²), in [½, 1] for valid density matrices.
double purity(const DensityMatrix& rho);

/// ½·Σ singular values of r1 − r2; equals ½|m1 − m2| for unit-trace
/// Hermitian 2x2 inputs, which is how it is computed.
double trace_distance(const DensityMatrix& r1, const DensityMatrix& r2);

}  // namespace spinsim
