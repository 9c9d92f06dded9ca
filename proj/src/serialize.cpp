#include "spinsim/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace spinsim {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

void append_row(std::string& out, const std::vector<double>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out.push_back(',');
        out += format_double(cols[i]);
    }
    out.push_back('\n');
}

}  // namespace

std::string trajectory_csv(const TrajectoryRecord& traj) {
    std::string out;
    out.reserve(64 * (traj.samples() + 1));
    std::vector<double> cols;
    switch (law_rep(traj.law)) {
        case Rep::bloch_vector:
            out += "t,mx,my,mz,norm_dev,purity_dev\n";
            for (std::size_t i = 0; i < traj.samples(); ++i) {
                const Vec3& m = traj.bloch[i];
                cols = {traj.times[i], m.x, m.y, m.z, traj.norm_dev[i], traj.purity_dev[i]};
                append_row(out, cols);
            }
            break;
        case Rep::density:
            out += "t,rho00_re,rho00_im,rho01_re,rho01_im,rho10_re,rho10_im,rho11_re,rho11_im,"
                   "norm_dev,purity_dev\n";
            for (std::size_t i = 0; i < traj.samples(); ++i) {
                const Mat2c& r = traj.density[i];
                cols = {traj.times[i],       r(0, 0).real(), r(0, 0).imag(), r(0, 1).real(),
                        r(0, 1).imag(),      r(1, 0).real(), r(1, 0).imag(), r(1, 1).real(),
                        r(1, 1).imag(),      traj.norm_dev[i], traj.purity_dev[i]};
                append_row(out, cols);
            }
            break;
        case Rep::spinor:
            out += "t,psi_up_re,psi_up_im,psi_down_re,psi_down_im,norm_dev,purity_dev\n";
            for (std::size_t i = 0; i < traj.samples(); ++i) {
                const Spinor& p = traj.spinor[i];
                cols = {traj.times[i],   p.up.real(),   p.up.imag(), p.down.real(),
                        p.down.imag(),   traj.norm_dev[i], traj.purity_dev[i]};
                append_row(out, cols);
            }
            break;
    }
    return out;
}

nlohmann::ordered_json field_json(const FieldSpec& field) {
    return field.visit([](const auto& f) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ConstantField>) {
            return {{"type", "constant"}, {"b", {f.b.x, f.b.y, f.b.z}}};
        } else if constexpr (std::is_same_v<T, RotatingField>) {
            return {{"type", "rotating"},
                    {"amplitude", f.amplitude},
                    {"omega", f.omega},
                    {"normal", {f.normal.x, f.normal.y, f.normal.z}},
                    {"b_static", f.b_static}};
        } else {
            return {{"type", "tabulated"}, {"samples", f.times.size()}};
        }
    });
}

nlohmann::ordered_json run_summary_json(const RunConfig& cfg, const TrajectoryRecord& traj) {
    const std::size_t n = traj.samples() - 1;
    double max_norm_dev = 0.0, max_purity_dev = 0.0;
    for (double d : traj.norm_dev) max_norm_dev = std::max(max_norm_dev, std::abs(d));
    for (double d : traj.purity_dev) max_purity_dev = std::max(max_purity_dev, std::abs(d));
    const Vec3 final_bloch = traj.bloch_at(traj.samples() - 1);
    return {{"command", "simulate"},
            {"law", std::string(law_name(traj.law))},
            {"field", field_json(cfg.field)},
            {"params", {{"gamma", cfg.params.gamma}, {"hbar", cfg.params.hbar}, {"k_i", cfg.params.k_i}}},
            {"initial", {{"theta", cfg.initial.theta}, {"phi", cfg.initial.phi}}},
            {"t_end", cfg.t_end},
            {"dt", cfg.dt},
            {"dt_effective", traj.samples() > 1 ? traj.times[1] - traj.times[0] : 0.0},
            {"steps", n},
            {"renorm", cfg.renorm},
            {"seed", cfg.seed},
            {"max_norm_dev", max_norm_dev},
            {"max_purity_dev", max_purity_dev},
            {"final_bloch", {final_bloch.x, final_bloch.y, final_bloch.z}}};
}

nlohmann::ordered_json reports_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    bool all_pass = true;
    for (const CheckReport& r : reports) {
        nlohmann::ordered_json e{{"check", r.check},
                                 {"status", r.pass ? "pass" : "fail"},
                                 {"residual", r.residual},
                                 {"tolerance", std::isfinite(r.tolerance)
                                                   ? nlohmann::ordered_json(r.tolerance)
                                                   : nlohmann::ordered_json(nullptr)},
                                 {"asserted", r.asserted}};
        if (!r.params.is_null()) e["params"] = r.params;
        entries.push_back(std::move(e));
        if (r.asserted && !r.pass) all_pass = false;
    }
    return {{"checks", entries}, {"all_asserted_pass", all_pass}};
}

nlohmann::ordered_json ensemble_json(const EnsembleSummary& s) {
    const double z = s.z_score();
    return {{"command", "collapse"},
            {"theta_e", s.theta_e},
            {"n", s.n},
            {"k_i", s.k_i},
            {"seed", s.seed},
            {"n_up", s.n_up},
            {"n_down", s.n - s.n_up},
            {"resampled", s.resampled},
            {"fraction_up", s.fraction_up()},
            {"expected", s.expected_fraction()},
            {"z_score", z},
            {"status", std::abs(z) <= 3.0 ? "pass" : "fail"}};
}

std::string render_json(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out << content;
        if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
}

}  // namespace spinsim
