#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinsim/dynamics.hpp"

namespace spinsim {

/// Outcome of one numerical certification. pass is true exactly when
/// residual ≤ tolerance; asserted=false marks report-only comparisons that
/// never gate an exit code.
struct CheckReport {
    std::string check;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool asserted = true;
    nlohmann::ordered_json params;
};

CheckReport make_report(std::string check, double residual, double tolerance,
                        bool asserted = true, nlohmann::ordered_json params = {});

/// Current loop / orbiting point charge used by the torque quadratures.
struct LoopModel {
    double radius = 1.0;
    double current = 1.0;
    double charge = 1.0;
    double mass = 1.0;
    double omega = 1.0;

    void validate() const;
};

struct EquivalenceConfig {
    FieldSpec field = FieldSpec::constant({0.0, 0.0, 1.0});
    PhysicalParams params{};
    BlochAngles initial{};
    double t_end = 1.0;
    double dt = 1e-3;
    std::vector<Law> laws;
    std::string name_prefix = "equivalence";
};

/// Integrates every law in the config lockstep from consistent initial
/// states and reports the max pairwise Bloch-vector deviation over the grid.
/// Pairs involving sp_collapse are report-only; pairs of laws that are
/// algebraically equivalent (the k_i-free triple, the llg/nonlinear_vn pair,
/// anything at k_i = 0) are asserted at 1e-6.
std::vector<CheckReport> check_equivalence(const EquivalenceConfig& config);

/// |det(σ0 − ρ)| ≤ 1e-12 over n_samples random pure states.
CheckReport check_singularity(std::size_t n_samples, std::uint64_t seed);

/// ‖(σ0 − ρ)(iℏψ̇ − Hψ)‖ ≤ 1e-10 along a schrodinger_pauli trajectory, with
/// ψ̇ from sp_rhs and H rebuilt from the field the trajectory was run under.
CheckReport check_sp_residual(const TrajectoryRecord& traj, const FieldSpec& field,
                              const PhysicalParams& p);

/// Midpoint quadrature of the Lorentz torque I·(r·B)·dr around the loop.
/// Converges to πIR²·(ẑ×B).
Vec3 loop_torque_numeric(const LoopModel& loop, const Vec3& b, std::size_t n_segments);

/// Time-average of r×(q·v×B) over one orbit period via midpoint sampling.
/// Converges to ½·q·ω·R²·(ẑ×B).
Vec3 particle_torque_avg(const LoopModel& loop, const Vec3& b, std::size_t n_steps);

/// Classical gyromagnetic ratio q/(2m).
double gyromagnetic_classical(double charge, double mass);

/// Integrates n_elements random differential moments and their vector sum
/// under the precession law; linearity makes the summed trajectory match the
/// trajectory of the summed initial moment within 1e-8.
CheckReport extended_body_consistency(std::size_t n_elements, const Vec3& b,
                                      const PhysicalParams& p, double t_end, double dt,
                                      std::uint64_t seed = 2026);

/// Runs every registered check whose registry entry matches the wildcard
/// filter ('*' and '?'), in parallel where available, and returns the
/// reports sorted by name. A filter matching no entry throws
/// std::domain_error.
std::vector<CheckReport> run_all_checks(const std::string& filter = "*");

/// Registry entry names accepted by run_all_checks filters.
std::vector<std::string> check_names();

bool wildcard_match(std::string_view pattern, std::string_view text);

}  // namespace spinsim
