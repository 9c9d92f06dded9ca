#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "spinsim/pauli.hpp"

namespace spinsim {

/// Gyromagnetic ratio, reduced Planck constant, induction factor.
/// Scale-free convention: hbar defaults to 1 and gamma·|B| is an angular
/// frequency in rad per time unit. gamma is signed.
struct PhysicalParams {
    double gamma = 1.0;
    double hbar = 1.0;
    double k_i = 0.0;

    void validate() const {
        if (!(hbar > 0.0) || !std::isfinite(hbar))
            throw std::domain_error("hbar must be positive and finite");
        if (!(k_i >= 0.0) || !std::isfinite(k_i))
            throw std::domain_error("k_i must be non-negative and finite");
        if (!std::isfinite(gamma)) throw std::domain_error("gamma must be finite");
    }
};

/// SI preset: gamma = q/(2m) for the electron (negative charge, so gamma < 0),
/// hbar in J·s.
PhysicalParams electron_params_si();

struct ConstantField {
    Vec3 b;
};

/// amplitude·(cos(ωt)·e1 + sin(ωt)·e2) + b_static·n̂, with (e1, e2, n̂) an
/// orthonormal frame built deterministically around the plane normal.
struct RotatingField {
    double amplitude = 0.0;
    double omega = 0.0;
    Vec3 normal{0.0, 0.0, 1.0};
    double b_static = 0.0;
};

/// Strictly increasing time grid with linear interpolation between samples.
/// No extrapolation: evaluation outside the grid throws.
struct TabulatedField {
    std::vector<double> times;
    std::vector<Vec3> values;
};

class FieldSpec {
  public:
    static FieldSpec constant(const Vec3& b);
    static FieldSpec rotating(double amplitude, double omega, const Vec3& normal,
                              double b_static);
    static FieldSpec tabulated(std::vector<double> times, std::vector<Vec3> values);

    Vec3 at(double t) const;
    bool is_constant() const { return std::holds_alternative<ConstantField>(spec_); }
    std::string_view kind() const;

    template <typename Visitor>
    decltype(auto) visit(Visitor&& v) const {
        return std::visit(std::forward<Visitor>(v), spec_);
    }

  private:
    explicit FieldSpec(std::variant<ConstantField, RotatingField, TabulatedField> s)
        : spec_(std::move(s)) {}
    std::variant<ConstantField, RotatingField, TabulatedField> spec_;
};

}  // namespace spinsim
