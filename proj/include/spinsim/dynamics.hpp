#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spinsim/field.hpp"
#include "spinsim/states.hpp"

namespace spinsim {

enum class Law {
    bloch,
    llg,
    von_neumann,
    nonlinear_vn,
    schrodinger_pauli,
    sp_collapse,
};

std::string_view law_name(Law law);
Law law_from_name(std::string_view name);

/// Which state representation a law evolves.
enum class Rep { bloch_vector, density, spinor };
Rep law_rep(Law law);

/// State under any of the six laws: a Bloch vector, a density matrix, or a
/// spinor, matching law_rep.
using State = std::variant<Vec3, Mat2c, Spinor>;

/// H = −½·ℏ·γ·(B·σ). Hermitian, traceless.
Mat2c hamiltonian(const Vec3& b, const PhysicalParams& p);

/// dm/dt = γ·(m × B). Orthogonal to m.
Vec3 bloch_rhs(const Vec3& m, const Vec3& b, const PhysicalParams& p);

/// Explicit resolution of the implicit damped precession law:
/// dm/dt = [γ/(1+k_i²)]·(m×B − k_i·m×(m×B)). Reduces to bloch_rhs at k_i = 0.
Vec3 llg_rhs(const Vec3& m, const Vec3& b, const PhysicalParams& p);

/// dρ/dt = [H, ρ]/(iℏ). Hermitian and traceless for Hermitian inputs.
Mat2c von_neumann_rhs(const Mat2c& rho, const Mat2c& h, const PhysicalParams& p);

/// Nonlinear variant for pure ρ: solves iℏ·dρ/dt − ℏk_i·[dρ/dt, ρ] = [H, ρ]
/// exactly by mapping through the Bloch sphere and llg_rhs. Throws
/// PurityError when tr(ρ²) is farther than 1e-6 from 1.
Mat2c nonlinear_vn_rhs(const Mat2c& rho, const Mat2c& h, const PhysicalParams& p);

/// dψ/dt = Hψ/(iℏ).
Spinor sp_rhs(const Spinor& psi, const Mat2c& h, const PhysicalParams& p);

/// dψ/dt from the collapse variant [iℏ·σ0 − ℏ·k_i·(σ0 − ψψ†)]·dψ/dt = Hψ,
/// by direct 2x2 solve. Norm-preserving: Re⟨ψ|dψ/dt⟩ = 0.
Spinor sp_collapse_rhs(const Spinor& psi, const Mat2c& h, const PhysicalParams& p);

/// One classical RK4 step of the selected law. No renormalization.
State rk4_step(Law law, const State& state, double t, double dt, const FieldSpec& field,
               const PhysicalParams& p);

// Typed step helpers for lockstep comparison loops.
Vec3 rk4_step_bloch(Law law, const Vec3& m, double t, double dt, const FieldSpec& field,
                    const PhysicalParams& p);
Mat2c rk4_step_density(Law law, const Mat2c& rho, double t, double dt, const FieldSpec& field,
                       const PhysicalParams& p);
Spinor rk4_step_spinor(Law law, const Spinor& psi, double t, double dt, const FieldSpec& field,
                       const PhysicalParams& p);

/// Raised when a state stops being finite mid-run; carries a snapshot of
/// where the integration stood.
struct NanAbortError : std::runtime_error {
    NanAbortError(std::string msg, double time, std::size_t step_index)
        : std::runtime_error(std::move(msg)), t(time), step(step_index) {}
    double t;
    std::size_t step;
};

/// Time series of states under one law plus per-sample conservation
/// diagnostics. Exactly one of the state vectors is populated, matching
/// law_rep(law). Diagnostics are recorded before any renormalization.
struct TrajectoryRecord {
    Law law = Law::bloch;
    std::vector<double> times;
    std::vector<Vec3> bloch;
    std::vector<Mat2c> density;
    std::vector<Spinor> spinor;
    std::vector<double> norm_dev;    // |m|−1, tr(ρ)−1 or ⟨ψ|ψ⟩−1 by law
    std::vector<double> purity_dev;  // tr(ρ²)−1 of the implied density matrix

    std::size_t samples() const { return times.size(); }

    /// Unified Bloch-picture view of sample i.
    Vec3 bloch_at(std::size_t i) const;
};

/// Step count for a run: n = round(t_end/dt), requiring the effective step
/// t_end/n to sit within 5% of the requested dt.
std::size_t plan_steps(double t_end, double dt);

/// Repeated rk4_step over plan_steps(t_end, dt) uniform steps. With renorm
/// set, states are projected back onto their constraint manifold after each
/// step; the recorded diagnostics are taken before the projection. A
/// non-finite state aborts with NanAbortError.
TrajectoryRecord integrate(Law law, const State& initial, const FieldSpec& field,
                           const PhysicalParams& p, double t_end, double dt,
                           bool renorm = false);

/// Closed-form precession oracle for a constant field: rotates m0 about B̂
/// by −γ|B|t. Exact to roundoff; zero field returns m0.
Vec3 exact_precession(const Vec3& m0, const Vec3& b, const PhysicalParams& p, double t);

// Diagnostics for a raw state under a given law (norm_dev, purity_dev).
std::pair<double, double> state_diagnostics(Law law, const State& s);

// Unified Bloch view of a raw state.
Vec3 bloch_view(Law law, const State& s);

}  // namespace spinsim
