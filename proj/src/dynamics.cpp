#include "spinsim/dynamics.hpp"

#include <cmath>
#include <utility>

namespace spinsim {

std::string_view law_name(Law law) {
    switch (law) {
        case Law::bloch: return "bloch";
        case Law::llg: return "llg";
        case Law::von_neumann: return "von_neumann";
        case Law::nonlinear_vn: return "nonlinear_vn";
        case Law::schrodinger_pauli: return "schrodinger_pauli";
        case Law::sp_collapse: return "sp_collapse";
    }
    return "?";
}

Law law_from_name(std::string_view name) {
    for (Law law : {Law::bloch, Law::llg, Law::von_neumann, Law::nonlinear_vn,
                    Law::schrodinger_pauli, Law::sp_collapse})
        if (name == law_name(law)) return law;
    throw std::domain_error("unknown law: " + std::string(name));
}

Rep law_rep(Law law) {
    switch (law) {
        case Law::bloch:
        case Law::llg: return Rep::bloch_vector;
        case Law::von_neumann:
        case Law::nonlinear_vn: return Rep::density;
        case Law::schrodinger_pauli:
        case Law::sp_collapse: return Rep::spinor;
    }
    return Rep::bloch_vector;
}

Mat2c hamiltonian(const Vec3& b, const PhysicalParams& p) {
    return vec_to_pauli(b) * (-0.5 * p.hbar * p.gamma);
}

Vec3 bloch_rhs(const Vec3& m, const Vec3& b, const PhysicalParams& p) {
    return p.gamma * cross(m, b);
}

Vec3 llg_rhs(const Vec3& m, const Vec3& b, const PhysicalParams& p) {
    const Vec3 mxb = cross(m, b);
    const double scale = p.gamma / (1.0 + p.k_i * p.k_i);
    return scale * (mxb - p.k_i * cross(m, mxb));
}

Mat2c von_neumann_rhs(const Mat2c& rho, const Mat2c& h, const PhysicalParams& p) {
    return commutator(h, rho) * complexd{0.0, -1.0 / p.hbar};
}

Mat2c nonlinear_vn_rhs(const Mat2c& rho, const Mat2c& h, const PhysicalParams& p) {
    if (std::abs(purity_of(rho) - 1.0) > 1e-6)
        throw PurityError("nonlinear_vn_rhs: density matrix is not pure");
    // The damped commutator equation is algebraically the damped precession
    // law in disguise: map to the Bloch vector, apply it, map back. Feeding
    // llg_rhs the precession vector omega = gamma*B (recovered from
    // H = -(hbar/2)(omega·sigma)) with unit gamma sidesteps gamma = 0.
    const Vec3 m = pauli_vector_part(2.0 * rho - sigma_0());
    const Vec3 omega = pauli_vector_part(h) * (-2.0 / p.hbar);
    PhysicalParams unit_gamma = p;
    unit_gamma.gamma = 1.0;
    return vec_to_pauli(llg_rhs(m, omega, unit_gamma)) * 0.5;
}

Spinor sp_rhs(const Spinor& psi, const Mat2c& h, const PhysicalParams& p) {
    const complexd s{0.0, -1.0 / p.hbar};
    return {s * (h(0, 0) * psi.up + h(0, 1) * psi.down),
            s * (h(1, 0) * psi.up + h(1, 1) * psi.down)};
}

Spinor sp_collapse_rhs(const Spinor& psi, const Mat2c& h, const PhysicalParams& p) {
    // [i*hbar*I - hbar*k_i*(I - rho)]·dpsi/dt = H psi, rho = psi psi†.
    // Eigenvalues i*hbar and hbar*(i - k_i), both nonzero, so Cramer's rule
    // is safe.
    const Mat2c rho = outer(psi, psi);
    const complexd ih{0.0, p.hbar};
    const Mat2c a = Mat2c{ih, 0, 0, ih} - (p.hbar * p.k_i) * (sigma_0() - rho);
    const complexd r0 = h(0, 0) * psi.up + h(0, 1) * psi.down;
    const complexd r1 = h(1, 0) * psi.up + h(1, 1) * psi.down;
    const complexd det = a.det();
    return {(r0 * a(1, 1) - a(0, 1) * r1) / det, (a(0, 0) * r1 - r0 * a(1, 0)) / det};
}

namespace {

// Classical RK4 over any state type with + and scalar *.
template <typename S, typename Rhs>
S rk4(const S& y, double t, double dt, Rhs&& rhs) {
    const S k1 = rhs(y, t);
    const S k2 = rhs(y + (0.5 * dt) * k1, t + 0.5 * dt);
    const S k3 = rhs(y + (0.5 * dt) * k2, t + 0.5 * dt);
    const S k4 = rhs(y + dt * k3, t + dt);
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

Vec3 rk4_step_bloch(Law law, const Vec3& m, double t, double dt, const FieldSpec& field,
                    const PhysicalParams& p) {
    if (law == Law::bloch)
        return rk4(m, t, dt, [&](const Vec3& y, double tt) { return bloch_rhs(y, field.at(tt), p); });
    return rk4(m, t, dt, [&](const Vec3& y, double tt) { return llg_rhs(y, field.at(tt), p); });
}

Mat2c rk4_step_density(Law law, const Mat2c& rho, double t, double dt, const FieldSpec& field,
                       const PhysicalParams& p) {
    if (law == Law::von_neumann)
        return rk4(rho, t, dt, [&](const Mat2c& y, double tt) {
            return von_neumann_rhs(y, hamiltonian(field.at(tt), p), p);
        });
    return rk4(rho, t, dt, [&](const Mat2c& y, double tt) {
        return nonlinear_vn_rhs(y, hamiltonian(field.at(tt), p), p);
    });
}

Spinor rk4_step_spinor(Law law, const Spinor& psi, double t, double dt, const FieldSpec& field,
                       const PhysicalParams& p) {
    if (law == Law::schrodinger_pauli)
        return rk4(psi, t, dt, [&](const Spinor& y, double tt) {
            return sp_rhs(y, hamiltonian(field.at(tt), p), p);
        });
    return rk4(psi, t, dt, [&](const Spinor& y, double tt) {
        return sp_collapse_rhs(y, hamiltonian(field.at(tt), p), p);
    });
}

State rk4_step(Law law, const State& state, double t, double dt, const FieldSpec& field,
               const PhysicalParams& p) {
    if (!(dt > 0.0)) throw std::domain_error("rk4_step: dt must be positive");
    switch (law_rep(law)) {
        case Rep::bloch_vector:
            return rk4_step_bloch(law, std::get<Vec3>(state), t, dt, field, p);
        case Rep::density:
            return rk4_step_density(law, std::get<Mat2c>(state), t, dt, field, p);
        case Rep::spinor:
            return rk4_step_spinor(law, std::get<Spinor>(state), t, dt, field, p);
    }
    throw std::logic_error("unreachable");
}

std::pair<double, double> state_diagnostics(Law law, const State& s) {
    switch (law_rep(law)) {
        case Rep::bloch_vector: {
            const Vec3& m = std::get<Vec3>(s);
            return {norm(m) - 1.0, 0.5 * (1.0 + dot(m, m)) - 1.0};
        }
        case Rep::density: {
            const Mat2c& rho = std::get<Mat2c>(s);
            return {rho.trace().real() - 1.0, purity_of(rho) - 1.0};
        }
        case Rep::spinor: {
            const Spinor& psi = std::get<Spinor>(s);
            const double n2 = std::norm(psi.up) + std::norm(psi.down);
            return {std::sqrt(n2) - 1.0, n2 * n2 - 1.0};
        }
    }
    throw std::logic_error("unreachable");
}

Vec3 bloch_view(Law law, const State& s) {
    switch (law_rep(law)) {
        case Rep::bloch_vector: return std::get<Vec3>(s);
        case Rep::density:
            return pauli_vector_part(2.0 * std::get<Mat2c>(s) - sigma_0());
        case Rep::spinor: {
            const Spinor& psi = std::get<Spinor>(s);
            return pauli_vector_part(2.0 * outer(psi, psi) - sigma_0());
        }
    }
    throw std::logic_error("unreachable");
}

Vec3 TrajectoryRecord::bloch_at(std::size_t i) const {
    switch (law_rep(law)) {
        case Rep::bloch_vector: return bloch[i];
        case Rep::density: return bloch_view(law, State{density[i]});
        case Rep::spinor: return bloch_view(law, State{spinor[i]});
    }
    throw std::logic_error("unreachable");
}

namespace {

bool state_finite(const State& s) {
    if (const auto* v = std::get_if<Vec3>(&s)) return is_finite(*v);
    if (const auto* m = std::get_if<Mat2c>(&s)) return is_finite(*m);
    const Spinor& psi = std::get<Spinor>(s);
    return std::isfinite(psi.up.real()) && std::isfinite(psi.up.imag()) &&
           std::isfinite(psi.down.real()) && std::isfinite(psi.down.imag());
}

State project_to_manifold(Law law, const State& s) {
    switch (law_rep(law)) {
        case Rep::bloch_vector: {
            return normalized(std::get<Vec3>(s));
        }
        case Rep::density: {
            Mat2c rho = std::get<Mat2c>(s);
            rho = 0.5 * (rho + rho.adjoint());
            return rho * (1.0 / rho.trace().real());
        }
        case Rep::spinor: {
            const Spinor& psi = std::get<Spinor>(s);
            return psi * (1.0 / psi.norm());
        }
    }
    throw std::logic_error("unreachable");
}

void record_sample(TrajectoryRecord& rec, Law law, double t, const State& s,
                   std::pair<double, double> diag) {
    rec.times.push_back(t);
    rec.norm_dev.push_back(diag.first);
    rec.purity_dev.push_back(diag.second);
    switch (law_rep(law)) {
        case Rep::bloch_vector: rec.bloch.push_back(std::get<Vec3>(s)); break;
        case Rep::density: rec.density.push_back(std::get<Mat2c>(s)); break;
        case Rep::spinor: rec.spinor.push_back(std::get<Spinor>(s)); break;
    }
}

}  // namespace

std::size_t plan_steps(double t_end, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::domain_error("dt must be positive and finite");
    if (!(t_end > 0.0) || !std::isfinite(t_end))
        throw std::domain_error("t_end must be positive and finite");
    if (t_end / dt > 1e15) throw std::domain_error("t_end/dt is too large for a step count");
    const long long n = std::llround(t_end / dt);
    if (n < 1) throw std::domain_error("t_end shorter than one step");
    if (std::abs(t_end / static_cast<double>(n) - dt) > 0.05 * dt)
        throw std::domain_error("dt does not divide t_end within rounding");
    return static_cast<std::size_t>(n);
}

TrajectoryRecord integrate(Law law, const State& initial, const FieldSpec& field,
                           const PhysicalParams& p, double t_end, double dt, bool renorm) {
    p.validate();
    const std::size_t n = plan_steps(t_end, dt);
    const double dt_eff = t_end / static_cast<double>(n);

    TrajectoryRecord rec;
    rec.law = law;
    rec.times.reserve(n + 1);
    rec.norm_dev.reserve(n + 1);
    rec.purity_dev.reserve(n + 1);

    State s = initial;
    record_sample(rec, law, 0.0, s, state_diagnostics(law, s));
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * dt_eff;
        State next = rk4_step(law, s, t, dt_eff, field, p);
        if (!state_finite(next)) {
            throw NanAbortError("integration produced a non-finite state (law " +
                                    std::string(law_name(law)) + ", t = " + std::to_string(t) +
                                    ", step " + std::to_string(k) + ")",
                                t, k);
        }
        const auto diag = state_diagnostics(law, next);
        if (renorm) next = project_to_manifold(law, next);
        const double t_next =
            k + 1 == n ? t_end : static_cast<double>(k + 1) * dt_eff;
        record_sample(rec, law, t_next, next, diag);
        s = std::move(next);
    }
    return rec;
}

Vec3 exact_precession(const Vec3& m0, const Vec3& b, const PhysicalParams& p, double t) {
    const double bmag = norm(b);
    if (bmag == 0.0) return m0;
    const Vec3 axis = b * (1.0 / bmag);
    const double angle = -p.gamma * bmag * t;
    // Rodrigues rotation about the field axis.
    const double c = std::cos(angle), s = std::sin(angle);
    return c * m0 + s * cross(axis, m0) + (1.0 - c) * dot(axis, m0) * axis;
}

}  // namespace spinsim
