#include "spinsim/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "spinsim/cqd.hpp"
#include "spinsim/rng.hpp"

namespace spinsim {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace

CheckReport make_report(std::string check, double residual, double tolerance, bool asserted,
                        nlohmann::ordered_json params) {
    CheckReport r;
    r.check = std::move(check);
    r.residual = residual;
    r.tolerance = tolerance;
    r.pass = residual <= tolerance;
    r.asserted = asserted;
    r.params = std::move(params);
    return r;
}

void LoopModel::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::domain_error("loop radius must be positive");
    if (!(mass > 0.0) || !std::isfinite(mass)) throw std::domain_error("mass must be positive");
    if (!std::isfinite(current) || !std::isfinite(charge) || !std::isfinite(omega))
        throw std::domain_error("loop parameters must be finite");
}

bool wildcard_match(std::string_view pattern, std::string_view text) {
    // Iterative glob with '*' backtracking.
    std::size_t p = 0, t = 0;
    std::size_t star = std::string_view::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

// ---------------------------------------------------------------------------
// Equivalence runs
// ---------------------------------------------------------------------------

namespace {

// Two laws are asserted against each other when they are algebraically the
// same dynamics: the k_i-free triple among themselves, llg with
// nonlinear_vn, and everything (except sp_collapse) once k_i = 0.
bool pair_asserted(Law a, Law b, double k_i) {
    if (a == Law::sp_collapse || b == Law::sp_collapse) return false;
    const auto damped = [](Law l) { return l == Law::llg || l == Law::nonlinear_vn; };
    if (damped(a) == damped(b)) return true;
    return k_i == 0.0;
}

State initial_state_for(Law law, const BlochAngles& angles) {
    switch (law_rep(law)) {
        case Rep::bloch_vector: return bloch_from_angles(angles);
        case Rep::density: return density_from_bloch(bloch_from_angles(angles)).matrix();
        case Rep::spinor: return spinor_from_angles(angles);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::vector<CheckReport> check_equivalence(const EquivalenceConfig& config) {
    config.params.validate();
    if (config.laws.size() < 2)
        throw std::domain_error("equivalence check needs at least two laws");
    const std::size_t n = plan_steps(config.t_end, config.dt);
    const double dt_eff = config.t_end / static_cast<double>(n);
    const std::size_t nlaws = config.laws.size();

    std::vector<State> states;
    states.reserve(nlaws);
    for (Law law : config.laws) states.push_back(initial_state_for(law, config.initial));

    std::vector<Vec3> views(nlaws);
    std::vector<double> maxdev(nlaws * nlaws, 0.0);
    const auto update_devs = [&] {
        for (std::size_t i = 0; i < nlaws; ++i) views[i] = bloch_view(config.laws[i], states[i]);
        for (std::size_t i = 0; i < nlaws; ++i)
            for (std::size_t j = i + 1; j < nlaws; ++j)
                maxdev[i * nlaws + j] =
                    std::max(maxdev[i * nlaws + j], norm(views[i] - views[j]));
    };

    update_devs();
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * dt_eff;
        for (std::size_t i = 0; i < nlaws; ++i)
            states[i] = rk4_step(config.laws[i], states[i], t, dt_eff, config.field, config.params);
        update_devs();
    }

    nlohmann::ordered_json params{{"field", std::string(config.field.kind())},
                                  {"gamma", config.params.gamma},
                                  {"hbar", config.params.hbar},
                                  {"k_i", config.params.k_i},
                                  {"theta0", config.initial.theta},
                                  {"phi0", config.initial.phi},
                                  {"t_end", config.t_end},
                                  {"dt", config.dt}};
    std::vector<CheckReport> reports;
    for (std::size_t i = 0; i < nlaws; ++i) {
        for (std::size_t j = i + 1; j < nlaws; ++j) {
            const Law a = config.laws[i], b = config.laws[j];
            const bool asserted = pair_asserted(a, b, config.params.k_i);
            const std::string name = config.name_prefix + "/" + std::string(law_name(a)) +
                                     "_vs_" + std::string(law_name(b));
            const double tol =
                asserted ? 1e-6 : std::numeric_limits<double>::infinity();
            reports.push_back(make_report(name, maxdev[i * nlaws + j], tol, asserted, params));
        }
    }
    return reports;
}

// ---------------------------------------------------------------------------
// Algebraic sweeps
// ---------------------------------------------------------------------------

CheckReport check_singularity(std::size_t n_samples, std::uint64_t seed) {
    if (n_samples < 1) throw std::domain_error("check_singularity needs at least one sample");
    double worst = 0.0;
    const auto count = static_cast<long long>(n_samples);
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (long long i = 0; i < count; ++i) {
        const BlochAngles a = sample_co_quantum(seed + static_cast<std::uint64_t>(i));
        const Mat2c rho = density_from_bloch(bloch_from_angles(a)).matrix();
        worst = std::max(worst, std::abs((sigma_0() - rho).det()));
    }
    return make_report("singularity/pure_states", worst, 1e-12, true,
                       {{"n_samples", n_samples}, {"seed", seed}});
}

namespace {

CheckReport check_preavg_singularity(std::size_t n_pairs, std::uint64_t seed) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_pairs; ++i) {
        // Wide per-pair seed stride leaves room for degenerate-draw retries.
        const std::uint64_t base = seed + static_cast<std::uint64_t>(i) * 1024;
        const BlochAngles mu_e = sample_co_quantum(base);
        std::uint64_t sub = 1;
        while (branch_sign(sample_co_quantum(base + sub).theta, mu_e.theta) == 0) ++sub;
        const Realization r1 = predict({mu_e, sample_co_quantum(base + sub)});
        // Unit-trace pairs only: redraw the second co-quantum until it lands
        // on the same branch.
        Realization r2 = r1;
        for (std::uint64_t j = sub + 1; j < 1024; ++j) {
            const CoQuantumPair pair{mu_e, sample_co_quantum(base + j)};
            if (branch_sign(pair.mu_n.theta, pair.mu_e.theta) == 0) continue;
            const Realization cand = predict(pair);
            if (cand.c_plus == r1.c_plus) {
                r2 = cand;
                break;
            }
        }
        const Mat2c rho0 = pre_avg_density(r1, r2);
        worst = std::max(worst, std::abs((sigma_0() - rho0).det()));
    }
    return make_report("singularity/preavg_pairs", worst, 1e-12, true,
                       {{"n_pairs", n_pairs}, {"seed", seed}});
}

CheckReport check_pauli_identity(std::size_t n_pairs, std::uint64_t seed) {
    double worst = 0.0;
    const auto count = static_cast<long long>(n_pairs);
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (long long i = 0; i < count; ++i) {
        SplitMix64 rng{seed + static_cast<std::uint64_t>(i)};
        const Vec3 a{rng.next_symmetric(), rng.next_symmetric(), rng.next_symmetric()};
        const Vec3 b{rng.next_symmetric(), rng.next_symmetric(), rng.next_symmetric()};
        worst = std::max(worst, pauli_identity_residual(a, b));
    }
    return make_report("pauli/vector_identity", worst, 1e-13, true,
                       {{"n_pairs", n_pairs}, {"seed", seed}});
}

}  // namespace

CheckReport check_sp_residual(const TrajectoryRecord& traj, const FieldSpec& field,
                              const PhysicalParams& p) {
    if (traj.law != Law::schrodinger_pauli)
        throw std::domain_error("check_sp_residual: trajectory law must be schrodinger_pauli");
    const complexd ih{0.0, p.hbar};
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.samples(); ++i) {
        const Spinor& psi = traj.spinor[i];
        const Mat2c h = hamiltonian(field.at(traj.times[i]), p);
        const Spinor dpsi = sp_rhs(psi, h, p);
        const Spinor defect{ih * dpsi.up - (h(0, 0) * psi.up + h(0, 1) * psi.down),
                            ih * dpsi.down - (h(1, 0) * psi.up + h(1, 1) * psi.down)};
        const Mat2c proj = sigma_0() - outer(psi, psi);
        const Spinor r{proj(0, 0) * defect.up + proj(0, 1) * defect.down,
                       proj(1, 0) * defect.up + proj(1, 1) * defect.down};
        worst = std::max(worst, r.norm());
    }
    return make_report("sp/residual", worst, 1e-10, true,
                       {{"samples", traj.samples()}, {"field", std::string(field.kind())}});
}

// ---------------------------------------------------------------------------
// Torque derivations
// ---------------------------------------------------------------------------

Vec3 loop_torque_numeric(const LoopModel& loop, const Vec3& b, std::size_t n_segments) {
    loop.validate();
    if (n_segments < 8) throw std::domain_error("loop torque needs at least 8 segments");
    const double dphi = two_pi / static_cast<double>(n_segments);
    Vec3 tau{};
    for (std::size_t k = 0; k < n_segments; ++k) {
        const double phi = (static_cast<double>(k) + 0.5) * dphi;
        const Vec3 r{loop.radius * std::cos(phi), loop.radius * std::sin(phi), 0.0};
        const Vec3 dr{-loop.radius * std::sin(phi), loop.radius * std::cos(phi), 0.0};
        tau += (loop.current * dot(r, b) * dphi) * dr;
    }
    return tau;
}

Vec3 particle_torque_avg(const LoopModel& loop, const Vec3& b, std::size_t n_steps) {
    loop.validate();
    if (n_steps < 8) throw std::domain_error("particle torque needs at least 8 steps");
    if (loop.omega == 0.0) throw std::domain_error("particle torque needs a nonzero omega");
    const double period = two_pi / std::abs(loop.omega);
    const double dt = period / static_cast<double>(n_steps);
    Vec3 tau{};
    for (std::size_t k = 0; k < n_steps; ++k) {
        const double t = (static_cast<double>(k) + 0.5) * dt;
        const double c = std::cos(loop.omega * t), s = std::sin(loop.omega * t);
        const Vec3 r{loop.radius * c, loop.radius * s, 0.0};
        const Vec3 v{-loop.radius * loop.omega * s, loop.radius * loop.omega * c, 0.0};
        tau += cross(r, loop.charge * cross(v, b));
    }
    return tau * (1.0 / static_cast<double>(n_steps));
}

double gyromagnetic_classical(double charge, double mass) {
    if (!(mass > 0.0)) throw std::domain_error("gyromagnetic_classical: mass must be positive");
    return charge / (2.0 * mass);
}

CheckReport extended_body_consistency(std::size_t n_elements, const Vec3& b,
                                      const PhysicalParams& p, double t_end, double dt,
                                      std::uint64_t seed) {
    if (n_elements < 1) throw std::domain_error("extended body needs at least one element");
    p.validate();
    const FieldSpec field = FieldSpec::constant(b);
    std::vector<Vec3> elements(n_elements);
    for (std::size_t i = 0; i < n_elements; ++i)
        elements[i] = bloch_from_angles(sample_co_quantum(seed + i));
    Vec3 total{};
    for (const Vec3& m : elements) total += m;

    const std::size_t n = plan_steps(t_end, dt);
    const double dt_eff = t_end / static_cast<double>(n);
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * dt_eff;
        for (Vec3& m : elements) m = rk4_step_bloch(Law::bloch, m, t, dt_eff, field, p);
        total = rk4_step_bloch(Law::bloch, total, t, dt_eff, field, p);
        Vec3 sum{};
        for (const Vec3& m : elements) sum += m;
        worst = std::max(worst, norm(sum - total));
    }
    return make_report("extended_body/linearity", worst, 1e-8, true,
                       {{"n_elements", n_elements},
                        {"t_end", t_end},
                        {"dt", dt},
                        {"seed", seed}});
}

// ---------------------------------------------------------------------------
// Registry checks
// ---------------------------------------------------------------------------

namespace {

EquivalenceConfig standard_run(std::vector<Law> laws, double k_i, std::string prefix) {
    EquivalenceConfig cfg;
    cfg.field = FieldSpec::constant({0.0, 0.0, 1.0});
    cfg.params = {1.0, 1.0, k_i};
    cfg.initial = {pi / 3.0, 0.0};
    cfg.t_end = 100.0 * two_pi;
    cfg.dt = 1e-3;
    cfg.laws = std::move(laws);
    cfg.name_prefix = std::move(prefix);
    return cfg;
}

std::vector<CheckReport> run_polar_decay() {
    const double k_i = 0.05;
    const PhysicalParams p{1.0, 1.0, k_i};
    const FieldSpec field = FieldSpec::constant({0.0, 0.0, 1.0});
    // dphi/dt = -gamma*B/(1+k_i^2); run until |delta phi| = 4*pi.
    const double t_end = 4.0 * pi * (1.0 + k_i * k_i);
    const auto traj =
        integrate(Law::llg, State{bloch_from_angles({pi / 2.0, 0.0})}, field, p, t_end, 1e-3);

    // Unwrap phi and regress ln tan(theta/2) on |delta phi|.
    std::vector<double> xs, ys;
    xs.reserve(traj.samples());
    ys.reserve(traj.samples());
    double prev_raw = 0.0, acc = 0.0;
    for (std::size_t i = 0; i < traj.samples(); ++i) {
        const Vec3& m = traj.bloch[i];
        const double theta = std::acos(std::clamp(m.z, -1.0, 1.0));
        const double raw = std::atan2(m.y, m.x);
        if (i > 0) {
            double jump = raw - prev_raw;
            while (jump > pi) jump -= two_pi;
            while (jump <= -pi) jump += two_pi;
            acc += jump;
        }
        prev_raw = raw;
        xs.push_back(std::abs(acc));
        ys.push_back(std::log(std::tan(0.5 * theta)));
    }
    double xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= static_cast<double>(xs.size());
    ybar /= static_cast<double>(ys.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
    }
    const double slope = sxy / sxx;
    const double residual = std::abs(slope - (-k_i)) / k_i;
    return {make_report("llg/polar_decay_slope", residual, 1e-4, true,
                        {{"k_i", k_i}, {"slope", slope}, {"t_end", t_end}})};
}

std::vector<CheckReport> run_rk4_order() {
    const Vec3 m0{1.0, 0.0, 0.0};
    const Vec3 b{0.0, 0.0, 1.0};
    const PhysicalParams p{};
    const FieldSpec field = FieldSpec::constant(b);
    const auto global_error = [&](double dt) {
        const auto traj = integrate(Law::bloch, State{m0}, field, p, two_pi, dt);
        return norm(traj.bloch.back() - exact_precession(m0, b, p, two_pi));
    };
    const double e1 = global_error(two_pi / 100.0);
    const double e2 = global_error(two_pi / 200.0);
    const double ratio = e1 / e2;
    return {make_report("integrator/rk4_order", std::abs(ratio - 16.0), 1.0, true,
                        {{"error_coarse", e1}, {"error_fine", e2}, {"ratio", ratio}})};
}

std::vector<CheckReport> run_born_statistics() {
    constexpr std::uint64_t n = 100000, seed = 7;
    const struct {
        const char* tag;
        double theta_e;
    } cases[] = {{"theta_60deg", pi / 3.0}, {"theta_90deg", pi / 2.0}, {"theta_120deg", 2.0 * pi / 3.0}};
    std::vector<CheckReport> reports;
    for (const auto& c : cases) {
        const EnsembleSummary s = ensemble_collapse(c.theta_e, n, 0.0, seed);
        const double expect = s.expected_fraction();
        const double tol = 3.0 * std::sqrt(expect * (1.0 - expect) / static_cast<double>(n));
        reports.push_back(make_report(std::string("cqd/born/") + c.tag,
                                      std::abs(s.fraction_up() - expect), tol, true,
                                      {{"n", n},
                                       {"seed", seed},
                                       {"theta_e", c.theta_e},
                                       {"fraction_up", s.fraction_up()},
                                       {"expected", expect},
                                       {"z_score", s.z_score()}}));
    }
    return reports;
}

std::vector<CheckReport> run_torque_loop() {
    const LoopModel loop{};
    const Vec3 b{1.0, 0.0, 0.0};
    const Vec3 tau = loop_torque_numeric(loop, b, 10000);
    const Vec3 expect = pi * loop.current * loop.radius * loop.radius * cross({0, 0, 1}, b);
    const double residual = norm(tau - expect) / norm(expect);
    return {make_report("torque/current_loop", residual, 1e-8, true,
                        {{"segments", 10000}, {"tau_y", tau.y}})};
}

std::vector<CheckReport> run_torque_particle() {
    const LoopModel loop{};
    const Vec3 b{1.0, 0.0, 0.0};
    const Vec3 tau = particle_torque_avg(loop, b, 10000);
    const Vec3 expect =
        0.5 * loop.charge * loop.omega * loop.radius * loop.radius * cross({0, 0, 1}, b);
    const double residual = norm(tau - expect) / norm(expect);
    return {make_report("torque/point_particle", residual, 1e-6, true,
                        {{"steps", 10000}, {"tau_y", tau.y}})};
}

std::vector<CheckReport> run_torque_cross_model() {
    // Same magnetic moment both ways: mu = I*pi*R^2 = q*omega*R^2/2 = pi.
    LoopModel particle{};
    particle.charge = two_pi;
    const Vec3 b{1.0, 0.0, 0.0};
    const Vec3 tau_loop = loop_torque_numeric(LoopModel{}, b, 10000);
    const Vec3 tau_particle = particle_torque_avg(particle, b, 10000);
    const double residual = norm(tau_loop - tau_particle) / norm(tau_loop);
    return {make_report("torque/cross_model", residual, 1e-6, true,
                        {{"mu", pi}, {"tau_loop_y", tau_loop.y}, {"tau_particle_y", tau_particle.y}})};
}

std::vector<CheckReport> run_gyromagnetic() {
    std::vector<CheckReport> reports;
    constexpr double q = 1.602176634e-19, mass = 9.1093837015e-31;
    constexpr double reference = 8.7941e10;
    const double gamma = gyromagnetic_classical(q, mass);
    reports.push_back(make_report("gyromagnetic/electron",
                                  std::abs(gamma - reference) / reference, 1e-4, true,
                                  {{"gamma", gamma}, {"reference", reference}}));

    // Both derivations reduce to q/(2m); evaluate them literally for random
    // radii and angular velocities.
    double worst = 0.0;
    SplitMix64 rng{1234};
    for (int i = 0; i < 10; ++i) {
        const double radius = 0.5 + rng.next_unit();
        const double omega = 0.5 + rng.next_unit();
        const double current = q * omega / two_pi;
        const double loop_gamma = (current * pi * radius * radius) / (mass * radius * radius * omega);
        const double v = omega * radius;
        const double particle_gamma = (0.5 * q * v * radius) / (mass * v * radius);
        const double direct = gyromagnetic_classical(q, mass);
        worst = std::max({worst, std::abs(loop_gamma - direct) / std::abs(direct),
                          std::abs(particle_gamma - direct) / std::abs(direct)});
    }
    reports.push_back(make_report("gyromagnetic/model_agreement", worst, 1e-12, true,
                                  {{"trials", 10}}));
    return reports;
}

std::vector<CheckReport> run_sp_collapse_norm_drift() {
    const PhysicalParams p{1.0, 1.0, 0.1};
    const FieldSpec field = FieldSpec::constant({0.0, 0.0, 1.0});
    const auto traj = integrate(Law::sp_collapse, State{spinor_from_angles({pi / 3.0, 0.0})},
                                field, p, 100.0, 1e-3);
    double worst = 0.0;
    for (double d : traj.norm_dev) worst = std::max(worst, std::abs(d));
    return {make_report("sp_collapse/norm_drift", worst, 1e-8, true,
                        {{"k_i", p.k_i}, {"steps", traj.samples() - 1}, {"dt", 1e-3}})};
}

std::vector<CheckReport> run_sp_collapse_reduction() {
    EquivalenceConfig cfg;
    cfg.params = {1.0, 1.0, 0.0};
    cfg.initial = {pi / 3.0, 0.0};
    cfg.t_end = 100.0;
    cfg.dt = 1e-3;
    cfg.laws = {Law::schrodinger_pauli, Law::sp_collapse};
    CheckReport rep = check_equivalence(cfg).at(0);
    rep.check = "sp_collapse/reduction_ki0";
    rep.tolerance = 1e-9;
    rep.asserted = true;
    rep.pass = rep.residual <= rep.tolerance;
    return {rep};
}

std::vector<CheckReport> run_sp_residual_checks() {
    std::vector<CheckReport> reports;
    const PhysicalParams p{};
    {
        const FieldSpec field = FieldSpec::constant({0.0, 0.0, 1.0});
        const auto traj = integrate(Law::schrodinger_pauli,
                                    State{spinor_from_angles({pi / 3.0, 0.0})}, field, p,
                                    10.0 * pi, 1e-3);
        CheckReport rep = check_sp_residual(traj, field, p);
        rep.check = "sp/residual_constant";
        reports.push_back(std::move(rep));
    }
    {
        const FieldSpec field = FieldSpec::rotating(0.2, 0.7, {0.0, 0.0, 1.0}, 1.0);
        const auto traj = integrate(Law::schrodinger_pauli,
                                    State{spinor_from_angles({pi / 3.0, 0.4})}, field, p, 20.0,
                                    1e-3);
        CheckReport rep = check_sp_residual(traj, field, p);
        rep.check = "sp/residual_rotating";
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<CheckReport> run_extended_body() {
    return {extended_body_consistency(16, {0.0, 0.0, 1.0}, PhysicalParams{}, two_pi, 1e-3)};
}

std::vector<CheckReport> run_recompute_determinism() {
    const EnsembleSummary s1 = ensemble_collapse(pi / 2.0, 10000, 0.0, 42);
    const EnsembleSummary s2 = ensemble_collapse(pi / 2.0, 10000, 0.0, 42);
    bool equal = s1.n_up == s2.n_up && s1.resampled == s2.resampled;

    const FieldSpec field = FieldSpec::constant({0.0, 0.0, 1.0});
    const auto t1 = integrate(Law::bloch, State{Vec3{1, 0, 0}}, field, PhysicalParams{}, 1.0, 1e-3);
    const auto t2 = integrate(Law::bloch, State{Vec3{1, 0, 0}}, field, PhysicalParams{}, 1.0, 1e-3);
    const Vec3 a = t1.bloch.back(), b = t2.bloch.back();
    equal = equal && a.x == b.x && a.y == b.y && a.z == b.z;
    return {make_report("determinism/recompute", equal ? 0.0 : 1.0, 0.5, true,
                        {{"ensemble_n", 10000}, {"seed", 42}})};
}

struct RegistryEntry {
    std::string name;
    std::function<std::vector<CheckReport>()> run;
};

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> entries = {
        {"pauli/vector_identity", [] { return std::vector<CheckReport>{check_pauli_identity(1000, 11)}; }},
        {"singularity/pure_states", [] { return std::vector<CheckReport>{check_singularity(1000, 17)}; }},
        {"singularity/preavg_pairs", [] { return std::vector<CheckReport>{check_preavg_singularity(100, 23)}; }},
        {"equivalence/triple",
         [] {
             return check_equivalence(standard_run(
                 {Law::bloch, Law::von_neumann, Law::schrodinger_pauli}, 0.0, "equivalence/triple"));
         }},
        {"equivalence/ki_0.01",
         [] {
             return check_equivalence(standard_run(
                 {Law::llg, Law::nonlinear_vn, Law::sp_collapse}, 0.01, "equivalence/ki_0.01"));
         }},
        {"equivalence/ki_0.1",
         [] {
             return check_equivalence(standard_run(
                 {Law::llg, Law::nonlinear_vn, Law::sp_collapse}, 0.1, "equivalence/ki_0.1"));
         }},
        {"equivalence/ki_1",
         [] {
             return check_equivalence(standard_run(
                 {Law::llg, Law::nonlinear_vn, Law::sp_collapse}, 1.0, "equivalence/ki_1"));
         }},
        {"llg/polar_decay_slope", run_polar_decay},
        {"integrator/rk4_order", run_rk4_order},
        {"cqd/born", run_born_statistics},
        {"torque/current_loop", run_torque_loop},
        {"torque/point_particle", run_torque_particle},
        {"torque/cross_model", run_torque_cross_model},
        {"gyromagnetic", run_gyromagnetic},
        {"sp_collapse/norm_drift", run_sp_collapse_norm_drift},
        {"sp_collapse/reduction_ki0", run_sp_collapse_reduction},
        {"sp/residual", run_sp_residual_checks},
        {"extended_body/linearity", run_extended_body},
        {"determinism/recompute", run_recompute_determinism},
    };
    return entries;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    names.reserve(registry().size());
    for (const auto& e : registry()) names.push_back(e.name);
    return names;
}

std::vector<CheckReport> run_all_checks(const std::string& filter) {
    std::vector<const RegistryEntry*> selected;
    for (const auto& e : registry())
        if (wildcard_match(filter, e.name)) selected.push_back(&e);
    if (selected.empty())
        throw std::domain_error("filter '" + filter + "' matches no registered check");

    std::vector<std::vector<CheckReport>> slots(selected.size());
    const auto count = static_cast<long long>(selected.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            slots[idx] = selected[idx]->run();
        } catch (const std::exception& e) {
            // A throwing check is a failing check, not a crashed suite.
            slots[idx] = {make_report(selected[idx]->name + "/exception",
                                      std::numeric_limits<double>::infinity(), 0.0, true,
                                      {{"error", e.what()}})};
        }
    }

    std::vector<CheckReport> reports;
    for (auto& slot : slots)
        for (auto& rep : slot) reports.push_back(std::move(rep));
    std::sort(reports.begin(), reports.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; });
    return reports;
}

}  // namespace spinsim
