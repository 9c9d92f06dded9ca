#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinsim/cqd.hpp"

using namespace spinsim;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_SUITE("cqd") {

TEST_CASE("collapse_theta evaluates the induction trend") {
    const double expect = 2.0 * std::atan(std::exp(-0.1 * pi));
    CHECK(std::abs(collapse_theta(pi / 2, 2.0 * pi, +1, 0.05) - expect) <= 1e-15);
    CHECK(std::abs(expect - 1.2616808113573540) <= 1e-12);

    CHECK(collapse_theta(0.8, 100.0, +1, 0.0) == 0.8);
    CHECK(collapse_theta(0.8, 100.0, 0, 0.3) == 0.8);

    // Opposite sign mirrors the angle: 2*atan(1/x) = pi - 2*atan(x).
    const double mirrored = collapse_theta(pi / 2, 2.0 * pi, -1, 0.05);
    CHECK(std::abs(mirrored - (pi - expect)) <= 1e-12);

    // Poles are already collapsed.
    CHECK(collapse_theta(0.0, 5.0, +1, 0.2) == 0.0);
    CHECK(collapse_theta(pi, 5.0, +1, 0.2) == pi);

    CHECK_THROWS_AS(collapse_theta(-0.1, 1.0, +1, 0.1), std::domain_error);
    CHECK_THROWS_AS(collapse_theta(0.5, 1.0, +2, 0.1), std::domain_error);
    CHECK_THROWS_AS(collapse_theta(0.5, 1.0, +1, -0.1), std::domain_error);
}

TEST_CASE("collapse_theta composes additively in |delta phi|") {
    for (int sign : {-1, +1}) {
        for (double theta0 : {0.3, 1.2, 2.8}) {
            for (double k_i : {0.02, 0.4}) {
                const double once = collapse_theta(theta0, 5.5, sign, k_i);
                const double stepped =
                    collapse_theta(collapse_theta(theta0, 2.0, sign, k_i), 3.5, sign, k_i);
                CHECK(std::abs(once - stepped) <= 1e-12);
            }
        }
    }
}

TEST_CASE("branch_sign") {
    CHECK(branch_sign(0.8, 0.3) == 1);
    CHECK(branch_sign(0.3, 0.3) == 0);
    CHECK(branch_sign(0.1, 0.5) == -1);
}

TEST_CASE("predict picks the branch and phase") {
    const Realization up = predict({{0.3, 1.0}, {0.8, 2.2}});
    CHECK(up.c_plus == 1);
    CHECK(up.c_minus == 0);
    CHECK(up.ket().up == complexd{1, 0});
    CHECK(std::abs(up.ket().down) == 0.0);

    const Realization down = predict({{0.5, pi / 2}, {0.1, 0.4}});
    CHECK(down.c_plus == 0);
    CHECK(down.c_minus == 1);
    CHECK(std::abs(down.ket().down - complexd{0, 1}) <= 1e-15);

    CHECK_THROWS_AS(predict({{0.4, 0.0}, {0.4, 1.0}}), DegenerateBranchError);
}

TEST_CASE("realization coefficient invariants") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const BlochAngles mu_e = sample_co_quantum(s);
        const BlochAngles mu_n = sample_co_quantum(s + 1000);
        if (branch_sign(mu_n.theta, mu_e.theta) == 0) continue;
        const Realization r = predict({mu_e, mu_n});
        CHECK(r.c_plus * r.c_minus == 0);
        CHECK(r.c_plus + r.c_minus == 1);
        CHECK(std::abs(r.ket().norm() - 1.0) <= 1e-12);
        CHECK(realization_inner(r, r) == complexd{1.0, 0.0});  // exact
    }
}

TEST_CASE("pre_avg_density") {
    Realization plus{1, 0, 0.7};
    Realization minus{0, 1, 0.7};

    const Mat2c both_up = pre_avg_density(plus, plus);
    CHECK(both_up(0, 0) == complexd{1, 0});
    CHECK(both_up.trace() == complexd{1, 0});  // exactly
    CHECK(both_up.det() == complexd{0, 0});    // rank 1
    CHECK((sigma_0() - both_up).det() == complexd{0, 0});

    Realization plus0{1, 0, 0.0};
    Realization minus0{0, 1, 0.0};
    const Mat2c cross_term = pre_avg_density(plus0, minus0);
    CHECK(cross_term(0, 1) == complexd{1, 0});
    CHECK(cross_term(0, 0) == complexd{0, 0});
    CHECK(cross_term.trace() == complexd{0, 0});
    CHECK(cross_term.det() == complexd{0, 0});

    const Mat2c both_down = pre_avg_density(minus, minus);
    CHECK(both_down.trace() == complexd{1, 0});  // |e^{i phi}|^2 never computed in floats
    CHECK((sigma_0() - both_down).det() == complexd{0, 0});

    Realization other_phase{1, 0, 0.9};
    CHECK_THROWS_AS(pre_avg_density(plus, other_phase), std::domain_error);
}

TEST_CASE("pre_avg_density averaged over many pairs stays near the mean projector") {
    // Report-style sanity run: the empirical mean over same-electron pairs is
    // diagonal with the Born weights; no equality to the quantum rho is
    // asserted, only boundedness and hermiticity of the average.
    const double theta_e = 1.1;
    Mat2c mean{};
    const int n = 2000;
    int used = 0;
    for (int i = 0; i < n; ++i) {
        const BlochAngles n1 = sample_co_quantum(9000 + 3 * i);
        const BlochAngles n2 = sample_co_quantum(9001 + 3 * i);
        if (branch_sign(n1.theta, theta_e) == 0 || branch_sign(n2.theta, theta_e) == 0) continue;
        const Realization r1 = predict({{theta_e, 0.25}, n1});
        const Realization r2 = predict({{theta_e, 0.25}, n2});
        mean += pre_avg_density(r1, r2);
        ++used;
    }
    mean = mean * (1.0 / used);
    CHECK(hermiticity_defect(mean) <= 0.1);  // statistical, not algebraic
    CHECK(mean(0, 0).real() >= 0.0);
    CHECK(mean(0, 0).real() <= 1.0);
}

TEST_CASE("sample_co_quantum is deterministic and uniform") {
    const BlochAngles a = sample_co_quantum(42);
    const BlochAngles b = sample_co_quantum(42);
    CHECK(a.theta == b.theta);
    CHECK(a.phi == b.phi);

    const int n = 100000;
    double mean_cos = 0.0;
    int below_equator = 0;
    for (int i = 0; i < n; ++i) {
        const BlochAngles s = sample_co_quantum(1000 + static_cast<std::uint64_t>(i));
        mean_cos += std::cos(s.theta);
        if (s.theta < pi / 2) ++below_equator;
        CHECK(s.theta >= 0.0);
        CHECK(s.theta <= pi);
        CHECK(s.phi >= 0.0);
        CHECK(s.phi < 2.0 * pi);
    }
    mean_cos /= n;
    // cos(theta) uniform on [-1,1]: sd = 1/sqrt(3).
    CHECK(std::abs(mean_cos) <= 3.0 / (std::sqrt(3.0) * std::sqrt(double(n))));
    CHECK(std::abs(below_equator / double(n) - 0.5) <= 0.005);
}

TEST_CASE("ensemble_collapse reproduces the Born weights") {
    const auto mid = ensemble_collapse(pi / 2, 100000, 0.0, 7);
    CHECK(std::abs(mid.fraction_up() - 0.5) <= 0.005);

    const auto tilted = ensemble_collapse(2.0 * pi / 3.0, 100000, 0.0, 7);
    CHECK(std::abs(tilted.fraction_up() - 0.25) <= 0.0041);

    const auto nearly_up = ensemble_collapse(0.01, 10000, 0.0, 3);
    CHECK(nearly_up.fraction_up() >= 0.99);

    const auto single = ensemble_collapse(pi / 2, 1, 0.0, 5);
    CHECK((single.fraction_up() == 0.0 || single.fraction_up() == 1.0));

    CHECK_THROWS_AS(ensemble_collapse(0.0, 100, 0.0, 1), std::domain_error);
    CHECK_THROWS_AS(ensemble_collapse(pi, 100, 0.0, 1), std::domain_error);
    CHECK_THROWS_AS(ensemble_collapse(pi / 2, 0, 0.0, 1), std::domain_error);
}

TEST_CASE("parallel ensemble agrees with the serial reference exactly") {
    for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) {
        for (std::uint64_t n : {1ULL, 1000ULL, 30000ULL}) {
            const auto par = ensemble_collapse(1.0, n, 0.2, seed);
            const auto ser = ensemble_collapse_serial(1.0, n, 0.2, seed);
            CHECK(par.n_up == ser.n_up);
            CHECK(par.resampled == ser.resampled);
            CHECK(par.n == ser.n);
        }
    }
}

TEST_CASE("z_score is centered for matching statistics") {
    const auto s = ensemble_collapse(pi / 3, 100000, 0.0, 7);
    CHECK(std::abs(s.z_score()) <= 3.0);
    CHECK(std::abs(s.expected_fraction() - 0.75) <= 1e-12);
}

}  // TEST_SUITE
