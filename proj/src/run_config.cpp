#include "spinsim/run_config.hpp"

#include <fstream>
#include <set>

namespace spinsim {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& item : obj.items())
        if (!allowed.contains(item.key()))
            throw ConfigError("unknown key '" + item.key() + "' in " + where);
}

double as_number(const json& v, const std::string& what) {
    if (!v.is_number()) throw ConfigError(what + " must be a number");
    return v.get<double>();
}

std::uint64_t as_count(const json& v, const std::string& what) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ConfigError(what + " must be a non-negative integer");
    return v.get<std::uint64_t>();
}

Vec3 as_vec3(const json& v, const std::string& what) {
    if (!v.is_array() || v.size() != 3)
        throw ConfigError(what + " must be an array of three numbers");
    return {as_number(v[0], what), as_number(v[1], what), as_number(v[2], what)};
}

FieldSpec parse_field(const json& f) {
    if (!f.is_object()) throw ConfigError("field must be an object");
    if (!f.contains("type")) throw ConfigError("field.type is required");
    const std::string type = f["type"].get<std::string>();
    if (type == "constant") {
        reject_unknown_keys(f, {"type", "b"}, "field");
        if (!f.contains("b")) throw ConfigError("constant field requires 'b'");
        return FieldSpec::constant(as_vec3(f["b"], "field.b"));
    }
    if (type == "rotating") {
        reject_unknown_keys(f, {"type", "amplitude", "omega", "normal", "b_static"}, "field");
        if (!f.contains("amplitude") || !f.contains("omega"))
            throw ConfigError("rotating field requires 'amplitude' and 'omega'");
        const Vec3 normal =
            f.contains("normal") ? as_vec3(f["normal"], "field.normal") : Vec3{0.0, 0.0, 1.0};
        const double b_static =
            f.contains("b_static") ? as_number(f["b_static"], "field.b_static") : 0.0;
        return FieldSpec::rotating(as_number(f["amplitude"], "field.amplitude"),
                                   as_number(f["omega"], "field.omega"), normal, b_static);
    }
    if (type == "tabulated") {
        reject_unknown_keys(f, {"type", "times", "values"}, "field");
        if (!f.contains("times") || !f.contains("values"))
            throw ConfigError("tabulated field requires 'times' and 'values'");
        if (!f["times"].is_array() || !f["values"].is_array())
            throw ConfigError("tabulated field times/values must be arrays");
        std::vector<double> times;
        std::vector<Vec3> values;
        for (const auto& t : f["times"]) times.push_back(as_number(t, "field.times entry"));
        for (const auto& v : f["values"]) values.push_back(as_vec3(v, "field.values entry"));
        return FieldSpec::tabulated(std::move(times), std::move(values));
    }
    throw ConfigError("unknown field type '" + type + "'");
}

PhysicalParams parse_params(const json& p) {
    if (!p.is_object()) throw ConfigError("params must be an object");
    reject_unknown_keys(p, {"gamma", "hbar", "k_i"}, "params");
    PhysicalParams out;
    if (p.contains("gamma")) out.gamma = as_number(p["gamma"], "params.gamma");
    if (p.contains("hbar")) out.hbar = as_number(p["hbar"], "params.hbar");
    if (p.contains("k_i")) out.k_i = as_number(p["k_i"], "params.k_i");
    out.validate();
    return out;
}

BlochAngles parse_initial(const json& a) {
    if (!a.is_object()) throw ConfigError("initial must be an object");
    reject_unknown_keys(a, {"theta", "phi"}, "initial");
    BlochAngles out{std::numbers::pi / 2.0, 0.0};
    if (a.contains("theta")) out.theta = as_number(a["theta"], "initial.theta");
    if (a.contains("phi")) out.phi = as_number(a["phi"], "initial.phi");
    if (!(out.theta >= 0.0 && out.theta <= std::numbers::pi))
        throw ConfigError("initial.theta must lie in [0, pi]");
    return out;
}

std::vector<Law> parse_laws(const json& doc) {
    std::vector<Law> laws;
    const auto add = [&](const json& v) {
        if (!v.is_string()) throw ConfigError("law names must be strings");
        try {
            laws.push_back(law_from_name(v.get<std::string>()));
        } catch (const std::domain_error& e) {
            throw ConfigError(e.what());
        }
    };
    if (doc.contains("law")) add(doc["law"]);
    if (doc.contains("laws")) {
        if (!doc["laws"].is_array()) throw ConfigError("laws must be an array");
        for (const auto& v : doc["laws"]) add(v);
    }
    return laws;
}

std::set<std::string> allowed_root_keys(Command cmd) {
    switch (cmd) {
        case Command::simulate:
            return {"law", "laws", "field", "params", "initial", "t_end",
                    "dt",  "renorm", "seed", "out", "format"};
        case Command::compare:
            return {"laws", "field", "params", "initial", "t_end", "dt", "seed", "out"};
        case Command::collapse:
            return {"ensemble", "theta_e", "params", "seed", "out"};
        case Command::verify: return {};
    }
    return {};
}

void check_tabulated_coverage(const FieldSpec& field, double t_end) {
    // A tabulated grid that cannot cover the run is a config defect, not a
    // runtime surprise.
    if (field.kind() != "tabulated") return;
    field.visit([&](const auto& f) {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, TabulatedField>) {
            if (f.times.front() > 0.0 || f.times.back() < t_end)
                throw ConfigError("tabulated field grid does not cover [0, t_end]");
        }
    });
}

}  // namespace

RunConfig parse_run_config(const json& doc, Command cmd) {
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");
    reject_unknown_keys(doc, allowed_root_keys(cmd), "config");

    RunConfig cfg;
    try {
        cfg.laws = parse_laws(doc);
        if (doc.contains("field")) cfg.field = parse_field(doc["field"]);
        if (doc.contains("params")) cfg.params = parse_params(doc["params"]);
        if (doc.contains("initial")) cfg.initial = parse_initial(doc["initial"]);
        if (doc.contains("t_end")) cfg.t_end = as_number(doc["t_end"], "t_end");
        if (doc.contains("dt")) cfg.dt = as_number(doc["dt"], "dt");
        if (doc.contains("renorm")) {
            if (!doc["renorm"].is_boolean()) throw ConfigError("renorm must be a boolean");
            cfg.renorm = doc["renorm"].get<bool>();
        }
        if (doc.contains("seed")) cfg.seed = as_count(doc["seed"], "seed");
        if (doc.contains("ensemble")) cfg.ensemble = as_count(doc["ensemble"], "ensemble");
        if (doc.contains("theta_e")) cfg.theta_e = as_number(doc["theta_e"], "theta_e");
        if (doc.contains("out")) cfg.out = doc["out"].get<std::string>();
        if (doc.contains("format")) cfg.format = doc["format"].get<std::string>();
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }

    switch (cmd) {
        case Command::simulate:
            if (cfg.laws.size() != 1)
                throw ConfigError("simulate requires exactly one law");
            if (cfg.format != "csv")
                throw ConfigError("unsupported trajectory format '" + cfg.format + "'");
            break;
        case Command::compare:
            if (cfg.laws.size() < 2) throw ConfigError("compare requires at least two laws");
            break;
        case Command::collapse:
            if (cfg.ensemble < 1) throw ConfigError("collapse requires ensemble >= 1");
            if (!(cfg.theta_e > 0.0 && cfg.theta_e < std::numbers::pi))
                throw ConfigError("theta_e must lie strictly inside (0, pi)");
            return cfg;
        case Command::verify: return cfg;
    }

    // Grid validation shared by simulate and compare.
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw ConfigError("dt must be positive");
    if (!(cfg.t_end >= cfg.dt) || !std::isfinite(cfg.t_end))
        throw ConfigError("t_end must be at least dt");
    try {
        plan_steps(cfg.t_end, cfg.dt);
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
    check_tabulated_coverage(cfg.field, cfg.t_end);
    return cfg;
}

RunConfig load_run_config(const std::string& path, Command cmd) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error: " + std::string(e.what()));
    }
    return parse_run_config(doc, cmd);
}

}  // namespace spinsim
