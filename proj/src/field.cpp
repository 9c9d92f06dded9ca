#include "spinsim/field.hpp"

#include <algorithm>
#include <cmath>

namespace spinsim {

PhysicalParams electron_params_si() {
    constexpr double charge = -1.602176634e-19;  // C
    constexpr double mass = 9.1093837015e-31;    // kg
    constexpr double hbar = 1.054571817e-34;     // J·s
    return {charge / (2.0 * mass), hbar, 0.0};
}

FieldSpec FieldSpec::constant(const Vec3& b) {
    if (!is_finite(b)) throw std::domain_error("constant field must be finite");
    return FieldSpec{ConstantField{b}};
}

FieldSpec FieldSpec::rotating(double amplitude, double omega, const Vec3& normal,
                              double b_static) {
    if (!std::isfinite(amplitude) || !std::isfinite(omega) || !std::isfinite(b_static))
        throw std::domain_error("rotating field parameters must be finite");
    if (norm(normal) == 0.0)
        throw std::domain_error("rotating field plane normal must be nonzero");
    return FieldSpec{RotatingField{amplitude, omega, normalized(normal), b_static}};
}

FieldSpec FieldSpec::tabulated(std::vector<double> times, std::vector<Vec3> values) {
    if (times.size() < 2) throw std::domain_error("tabulated field needs at least two samples");
    if (times.size() != values.size())
        throw std::domain_error("tabulated field time/value lengths differ");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw std::domain_error("tabulated field time grid must be strictly increasing");
    return FieldSpec{TabulatedField{std::move(times), std::move(values)}};
}

namespace {

// Deterministic orthonormal frame (e1, e2) spanning the plane normal to n.
void plane_frame(const Vec3& n, Vec3& e1, Vec3& e2) {
    const Vec3 seed = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    e1 = normalized(seed - dot(seed, n) * n);
    e2 = cross(n, e1);
}

struct EvalAt {
    double t;

    Vec3 operator()(const ConstantField& f) const { return f.b; }

    Vec3 operator()(const RotatingField& f) const {
        Vec3 e1, e2;
        plane_frame(f.normal, e1, e2);
        return f.amplitude * (std::cos(f.omega * t) * e1 + std::sin(f.omega * t) * e2) +
               f.b_static * f.normal;
    }

    Vec3 operator()(const TabulatedField& f) const {
        const double lo = f.times.front();
        const double hi = f.times.back();
        // Tiny slack so grids built from repeated addition still cover their
        // own endpoints.
        const double slack = 1e-9 * (hi - lo);
        double tq = t;
        if (tq < lo - slack || tq > hi + slack)
            throw std::domain_error("tabulated field evaluated outside its time grid");
        tq = std::clamp(tq, lo, hi);
        const auto it = std::upper_bound(f.times.begin(), f.times.end(), tq);
        const std::size_t i = it == f.times.end()
                                  ? f.times.size() - 1
                                  : std::max<std::size_t>(1, static_cast<std::size_t>(
                                                                 it - f.times.begin()));
        const double t0 = f.times[i - 1], t1 = f.times[i];
        const double w = (tq - t0) / (t1 - t0);
        return (1.0 - w) * f.values[i - 1] + w * f.values[i];
    }
};

}  // namespace

Vec3 FieldSpec::at(double t) const { return std::visit(EvalAt{t}, spec_); }

std::string_view FieldSpec::kind() const {
    struct Kind {
        std::string_view operator()(const ConstantField&) const { return "constant"; }
        std::string_view operator()(const RotatingField&) const { return "rotating"; }
        std::string_view operator()(const TabulatedField&) const { return "tabulated"; }
    };
    return std::visit(Kind{}, spec_);
}

}  // namespace spinsim
