#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace spinsim {

using complexd = std::complex<double>;

// Real 3-vector. Dimensionless for moment directions, field units for B.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    if (n == 0.0) throw std::domain_error("cannot normalize zero vector");
    return v * (1.0 / n);
}

inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Dense complex 2x2 matrix, row-major [m00, m01, m10, m11].
struct Mat2c {
    std::array<complexd, 4> m{};

    Mat2c() = default;
    Mat2c(complexd m00, complexd m01, complexd m10, complexd m11) : m{m00, m01, m10, m11} {}

    complexd& operator()(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }
    const complexd& operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }

    Mat2c operator+(const Mat2c& o) const {
        return {m[0] + o.m[0], m[1] + o.m[1], m[2] + o.m[2], m[3] + o.m[3]};
    }
    Mat2c operator-(const Mat2c& o) const {
        return {m[0] - o.m[0], m[1] - o.m[1], m[2] - o.m[2], m[3] - o.m[3]};
    }
    Mat2c operator-() const { return {-m[0], -m[1], -m[2], -m[3]}; }
    Mat2c operator*(const Mat2c& o) const {
        return {m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]};
    }
    Mat2c operator*(complexd s) const { return {m[0] * s, m[1] * s, m[2] * s, m[3] * s}; }
    Mat2c operator*(double s) const { return {m[0] * s, m[1] * s, m[2] * s, m[3] * s}; }
    Mat2c& operator+=(const Mat2c& o) {
        for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(i)] += o.m[static_cast<std::size_t>(i)];
        return *this;
    }

    Mat2c adjoint() const {
        return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
    }
    complexd trace() const { return m[0] + m[3]; }
    complexd det() const { return m[0] * m[3] - m[1] * m[2]; }
};

inline Mat2c operator*(complexd s, const Mat2c& a) { return a * s; }
inline Mat2c operator*(double s, const Mat2c& a) { return a * s; }

inline Mat2c sigma_x() { return {{0, 0}, {1, 0}, {1, 0}, {0, 0}}; }
inline Mat2c sigma_y() { return {{0, 0}, {0, -1}, {0, 1}, {0, 0}}; }
inline Mat2c sigma_z() { return {{1, 0}, {0, 0}, {0, 0}, {-1, 0}}; }
inline Mat2c sigma_0() { return {{1, 0}, {0, 0}, {0, 0}, {1, 0}}; }

/// The Pauli basis in the order σx, σy, σz, σ0.
inline std::array<Mat2c, 4> pauli_basis() { return {sigma_x(), sigma_y(), sigma_z(), sigma_0()}; }

// Largest entry-wise modulus.
inline double max_abs(const Mat2c& a) {
    double r = 0.0;
    for (const auto& e : a.m) r = std::max(r, std::abs(e));
    return r;
}

inline double hermiticity_defect(const Mat2c& a) { return max_abs(a - a.adjoint()); }

inline bool is_finite(const Mat2c& a) {
    for (const auto& e : a.m)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

/// v ↦ v·σ⃗. Hermitian and traceless for real v.
inline Mat2c vec_to_pauli(const Vec3& v) {
    return {{v.z, 0.0}, {v.x, -v.y}, {v.x, v.y}, {-v.z, 0.0}};
}

// Unvalidated projection onto the Pauli basis (vk = ½·tr(σk·M)); used where
// the caller already knows the matrix is (numerically) Hermitian, e.g. inside
// integration loops.
inline Vec3 pauli_vector_part(const Mat2c& a) {
    return {0.5 * (a(0, 1) + a(1, 0)).real(),
            0.5 * (a(1, 0).imag() - a(0, 1).imag()),
            0.5 * (a(0, 0) - a(1, 1)).real()};
}

/// Inverse of vec_to_pauli via vk = ½·tr(σk·M). Requires M Hermitian and
/// traceless within 1e-10; throws std::domain_error otherwise.
inline Vec3 pauli_to_vec(const Mat2c& a) {
    constexpr double tol = 1e-10;
    if (hermiticity_defect(a) > tol)
        throw std::domain_error("pauli_to_vec: matrix is not Hermitian");
    if (std::abs(a.trace()) > tol)
        throw std::domain_error("pauli_to_vec: matrix is not traceless");
    return pauli_vector_part(a);
}

inline Mat2c commutator(const Mat2c& a, const Mat2c& b) { return a * b - b * a; }

/// Max entry-wise modulus of (a·σ)(b·σ) − [(a·b)σ0 + i(a×b)·σ].
inline double pauli_identity_residual(const Vec3& a, const Vec3& b) {
    const Mat2c lhs = vec_to_pauli(a) * vec_to_pauli(b);
    const Mat2c rhs = dot(a, b) * sigma_0() + complexd{0, 1} * vec_to_pauli(cross(a, b));
    return max_abs(lhs - rhs);
}

}  // namespace spinsim
