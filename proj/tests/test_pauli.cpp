#include <doctest.h>

#include <numbers>

#include "spinsim/pauli.hpp"
#include "spinsim/rng.hpp"

using namespace spinsim;

namespace {

double max_entry_diff(const Mat2c& a, const Mat2c& b) { return max_abs(a - b); }

Vec3 random_box_vec(SplitMix64& rng) {
    return {rng.next_symmetric(), rng.next_symmetric(), rng.next_symmetric()};
}

}  // namespace

TEST_SUITE("pauli") {

TEST_CASE("basis matrices match their definitions") {
    const auto [sx, sy, sz, s0] = pauli_basis();
    CHECK(sz(0, 0) == complexd{1, 0});
    CHECK(sz(1, 1) == complexd{-1, 0});
    CHECK(sz(0, 1) == complexd{0, 0});
    CHECK(s0(0, 0) == complexd{1, 0});
    CHECK(s0(0, 1) == complexd{0, 0});
    CHECK(s0(1, 1) == complexd{1, 0});
    CHECK(sy(0, 1) == complexd{0, -1});
    CHECK(sy(1, 0) == complexd{0, 1});
    CHECK(sx(0, 1) == complexd{1, 0});

    // Involution: each sigma squares to the identity.
    for (const Mat2c& s : {sx, sy, sz})
        CHECK(max_entry_diff(s * s, s0) == 0.0);
}

TEST_CASE("traces") {
    CHECK(sigma_x().trace() == complexd{0, 0});
    CHECK(sigma_y().trace() == complexd{0, 0});
    CHECK(sigma_z().trace() == complexd{0, 0});
    CHECK(sigma_0().trace() == complexd{2, 0});
}

TEST_CASE("vec_to_pauli basics") {
    CHECK(max_entry_diff(vec_to_pauli({0, 0, 1}), sigma_z()) == 0.0);
    CHECK(max_abs(vec_to_pauli({0, 0, 0})) == 0.0);
    CHECK(max_entry_diff(vec_to_pauli({1, 1, 0}), sigma_x() + sigma_y()) == 0.0);

    SplitMix64 rng{5};
    for (int i = 0; i < 50; ++i) {
        const Vec3 v = random_box_vec(rng);
        const Mat2c m = vec_to_pauli(v);
        CHECK(hermiticity_defect(m) == 0.0);
        CHECK(std::abs(m.trace()) == 0.0);
    }
}

TEST_CASE("pauli_to_vec inverts the basis map") {
    const Vec3 z = pauli_to_vec(sigma_z());
    CHECK(z.x == 0.0);
    CHECK(z.y == 0.0);
    CHECK(z.z == 1.0);
    const Vec3 xy = pauli_to_vec(sigma_x() + sigma_y());
    CHECK(xy.x == 1.0);
    CHECK(xy.y == 1.0);
    CHECK(xy.z == 0.0);

    CHECK_THROWS_AS(pauli_to_vec(sigma_0()), std::domain_error);
    Mat2c skew{};
    skew(0, 1) = {0.5, 0.0};  // not Hermitian
    skew(1, 0) = {-0.5, 0.0};
    CHECK_THROWS_AS(pauli_to_vec(skew), std::domain_error);

    SplitMix64 rng{7};
    for (int i = 0; i < 200; ++i) {
        const Vec3 v = random_box_vec(rng) * 10.0;
        const Vec3 back = pauli_to_vec(vec_to_pauli(v));
        CHECK(norm(back - v) <= 1e-13);
    }
}

TEST_CASE("commutator") {
    // sigma_x sigma_y = i sigma_z, sigma_y sigma_x = -i sigma_z.
    const Mat2c expected = complexd{0, 2} * sigma_z();
    CHECK(max_entry_diff(commutator(sigma_x(), sigma_y()), expected) == 0.0);

    SplitMix64 rng{9};
    for (int i = 0; i < 20; ++i) {
        Mat2c a;
        for (auto& e : a.m) e = {rng.next_symmetric(), rng.next_symmetric()};
        CHECK(max_abs(commutator(a, a)) == 0.0);
    }
    CHECK(max_abs(commutator(sigma_z(), sigma_0())) == 0.0);
}

TEST_CASE("commutator of pauli vectors is the cross product rule") {
    SplitMix64 rng{11};
    for (int i = 0; i < 200; ++i) {
        const Vec3 a = random_box_vec(rng);
        const Vec3 b = random_box_vec(rng);
        const Mat2c lhs = commutator(vec_to_pauli(a), vec_to_pauli(b));
        const Mat2c rhs = complexd{0, 2} * vec_to_pauli(cross(a, b));
        CHECK(max_entry_diff(lhs, rhs) <= 1e-13);
    }
}

TEST_CASE("pauli vector identity") {
    CHECK(pauli_identity_residual({1, 0, 0}, {0, 1, 0}) <= 1e-15);
    CHECK(pauli_identity_residual({0, 0, 1}, {0, 0, 1}) <= 1e-15);

    // Serial sweep; the verification suite runs the same check in parallel.
    SplitMix64 rng{13};
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Vec3 a = random_box_vec(rng);
        const Vec3 b = random_box_vec(rng);
        worst = std::max(worst, pauli_identity_residual(a, b));
    }
    CHECK(worst <= 1e-13);

    // The residual contract holds up to |a|, |b| = 10.
    for (int i = 0; i < 500; ++i) {
        const Vec3 a = random_box_vec(rng) * 10.0;
        const Vec3 b = random_box_vec(rng) * 10.0;
        CHECK(pauli_identity_residual(a, b) <= 1e-13);
    }
}

TEST_CASE("unit pauli vectors square to the identity") {
    SplitMix64 rng{15};
    for (int i = 0; i < 200; ++i) {
        Vec3 v = random_box_vec(rng);
        if (norm(v) < 1e-3) continue;
        v = normalized(v);
        const Mat2c m = vec_to_pauli(v);
        CHECK(max_entry_diff(m * m, sigma_0()) <= 1e-13);
    }
}

}  // TEST_SUITE
