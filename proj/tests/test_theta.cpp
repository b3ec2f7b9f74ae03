#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "thetaloc/errors.hpp"
#include "thetaloc/siegel.hpp"
#include "thetaloc/theta.hpp"

using namespace thetaloc;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using std::complex;
using namespace std::complex_literals;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Independent oracle: plain boxed summation of the defining series over
// |m_j| <= box. For the matrices below (lambda_min(Im) ~ 1) the omitted terms
// are below e^{-100}, far under every tolerance compared against.
complex<double> direct_theta(const Characteristic& d, const MatrixXcd& omega,
                             const VectorXcd& z, int box) {
    const int g = d.genus();
    std::vector<int> m(g, -box);
    complex<double> sum = 0.0;
    while (true) {
        complex<double> q = 0.0, lin = 0.0;
        for (int j = 0; j < g; ++j) {
            const double uj = m[j] + d.top_half(j);
            for (int k = 0; k < g; ++k)
                q += uj * omega(j, k) * (m[k] + d.top_half(k));
            lin += uj * (z[j] + d.bottom_half(j));
        }
        sum += std::exp(complex<double>(0.0, kPi) * (q + 2.0 * lin));
        int j = 0;
        while (j < g && ++m[j] > box) m[j++] = -box;
        if (j == g) break;
    }
    return sum;
}

struct DirectJet {
    complex<double> value;
    Eigen::VectorXcd grad;
    Eigen::MatrixXcd hess;
};

// Term-wise differentiated boxed sum at z = 0.
DirectJet direct_jet(const Characteristic& d, const MatrixXcd& omega, int box) {
    const int g = d.genus();
    DirectJet out{0.0, Eigen::VectorXcd::Zero(g), Eigen::MatrixXcd::Zero(g, g)};
    std::vector<int> m(g, -box);
    while (true) {
        Eigen::VectorXd u(g);
        for (int j = 0; j < g; ++j) u[j] = m[j] + d.top_half(j);
        complex<double> q = 0.0, lin = 0.0;
        for (int j = 0; j < g; ++j) {
            for (int k = 0; k < g; ++k) q += u[j] * omega(j, k) * u[k];
            lin += u[j] * d.bottom_half(j);
        }
        complex<double> term = std::exp(complex<double>(0.0, kPi) * (q + 2.0 * lin));
        out.value += term;
        for (int j = 0; j < g; ++j) {
            out.grad[j] += complex<double>(0.0, 2.0 * kPi) * u[j] * term;
            for (int k = 0; k < g; ++k)
                out.hess(j, k) += -4.0 * kPi * kPi * u[j] * u[k] * term;
        }
        int j = 0;
        while (j < g && ++m[j] > box) m[j++] = -box;
        if (j == g) break;
    }
    return out;
}

MatrixXcd genus2_case() {
    MatrixXcd w(2, 2);
    w << 0.3 + 1.1i, 0.1 + 0.2i, 0.1 + 0.2i, -0.2 + 0.9i;
    return w;
}

MatrixXcd genus3_case() {
    MatrixXcd w(3, 3);
    w << 0.1 + 1.2i, 0.02 + 0.1i, 0.01 + 0.05i,   //
        0.02 + 0.1i, 0.2 + 1.1i, 0.03 + 0.08i,    //
        0.01 + 0.05i, 0.03 + 0.08i, 0.3 + 1.3i;
    return w;
}

}  // namespace

TEST_SUITE("theta") {

TEST_CASE("genus-1 thetanull at tau = i matches the classical constant") {
    // theta(0, i) = pi^{1/4} / Gamma(3/4) = 1.086434811213308...
    PeriodMatrix tau(MatrixXcd::Identity(1, 1) * 1.0i);
    ThetaOptions opts;
    opts.tol = 1e-13;
    ThetaValue v = eval_thetanull(Characteristic(1), tau, opts);
    CHECK(std::abs(v.value - 1.0864348112133080146) < 1e-13);
    CHECK(std::abs(v.value.imag()) < 1e-13);
    CHECK(v.tail_bound <= 1e-13);
    CHECK(v.n_points > 0);

    VectorXcd z0 = VectorXcd::Zero(1);
    CHECK(std::abs(v.value - direct_theta(Characteristic(1), tau.matrix(), z0, 20)) <
          1e-13);
}

TEST_CASE("genus-1 general characteristic and argument against direct sum") {
    MatrixXcd w(1, 1);
    w << 0.3 + 1.1i;
    PeriodMatrix tau(w);
    VectorXcd z(1);
    z << 0.2 + 0.1i;
    ThetaOptions opts;
    opts.tol = 1e-12;
    for (const auto& d : enumerate_characteristics(1)) {
        ThetaValue v = eval_theta(d, tau, z, opts);
        CHECK(std::abs(v.value - direct_theta(d, w, z, 20)) < 1e-10);
    }
}

TEST_CASE("genus-2 evaluation matches the direct sum for all 16 characteristics") {
    MatrixXcd w = genus2_case();
    PeriodMatrix omega(w);
    VectorXcd z(2);
    z << 0.1 - 0.05i, -0.2 + 0.15i;
    ThetaOptions opts;
    opts.tol = 1e-11;
    for (const auto& d : enumerate_characteristics(2)) {
        ThetaValue v = eval_theta(d, omega, z, opts);
        complex<double> want = direct_theta(d, w, z, 12);
        CHECK(std::abs(v.value - want) < 1e-9);
        // the certified bound must cover the actual error
        CHECK(std::abs(v.value - want) <= v.tail_bound + 1e-12);
    }
}

TEST_CASE("genus-3 evaluation matches the direct sum") {
    MatrixXcd w = genus3_case();
    PeriodMatrix omega(w);
    VectorXcd z(3);
    z << 0.05 + 0.02i, -0.04 + 0.01i, 0.03 - 0.06i;
    ThetaOptions opts;
    opts.tol = 1e-11;
    Characteristic d({1, 1, 0}, {1, 1, 0});  // even
    ThetaValue v = eval_theta(d, omega, z, opts);
    CHECK(std::abs(v.value - direct_theta(d, w, z, 8)) < 1e-9);

    Characteristic zero(3);
    ThetaValue v0 = eval_theta(zero, omega, z, opts);
    CHECK(std::abs(v0.value - direct_theta(zero, w, z, 8)) < 1e-9);
}

TEST_CASE("odd thetanulls vanish to rounding level") {
    // genus 1: the single odd characteristic
    PeriodMatrix tau(genus2_case().block(0, 0, 1, 1));
    ThetaValue v1 = eval_thetanull(Characteristic({1}, {1}), tau);
    CHECK(v1.normalized_magnitude() < 1e-10);

    // genus 3, generic sheared points, every odd characteristic
    for (std::uint64_t seed : {101ull, 102ull}) {
        PeriodMatrix omega = sample_generic(3, seed);
        for (const auto& d : enumerate_characteristics(3, Parity::Odd)) {
            ThetaValue v = eval_thetanull(d, omega);
            CHECK(v.normalized_magnitude() < 1e-8);
        }
    }
}

TEST_CASE("parity symmetry in the argument: theta(-z) = +-theta(z)") {
    MatrixXcd w = genus2_case();
    PeriodMatrix omega(w);
    VectorXcd z(2);
    z << 0.13 + 0.07i, -0.21 + 0.04i;
    for (const auto& d : enumerate_characteristics(2)) {
        ThetaValue plus = eval_theta(d, omega, z, {});
        ThetaValue minus = eval_theta(d, omega, -z, {});
        double sign = d.is_even() ? 1.0 : -1.0;
        CHECK(std::abs(minus.value - sign * plus.value) < 1e-9);
    }
}

TEST_CASE("integer shifts of z multiply by the top-half phase") {
    // z -> z + e_j scales every term by e^{2 pi i (m_j + delta'_j)}.
    MatrixXcd w = genus2_case();
    PeriodMatrix omega(w);
    VectorXcd z(2);
    z << 0.11 - 0.03i, 0.02 + 0.08i;
    Characteristic d({1, 0}, {0, 1});
    VectorXcd ze = z;
    ze[0] += 1.0;
    ThetaValue base = eval_theta(d, omega, z, {});
    ThetaValue shifted = eval_theta(d, omega, ze, {});
    complex<double> phase = std::exp(complex<double>(0.0, 2.0 * kPi * d.top_half(0)));
    CHECK(std::abs(shifted.value - phase * base.value) < 1e-9);
}

TEST_CASE("jet at zero matches the differentiated direct sums") {
    MatrixXcd w = genus2_case();
    PeriodMatrix omega(w);
    ThetaOptions opts;
    opts.tol = 1e-11;
    for (const auto& d : enumerate_characteristics(2)) {
        JetAtZero jet = jet_at_zero(d, omega, opts);
        DirectJet want = direct_jet(d, w, 12);
        CHECK(std::abs(jet.value - want.value) < 1e-9);
        for (int j = 0; j < 2; ++j) {
            CHECK(std::abs(jet.gradient[j] - want.grad[j]) < 1e-8);
            for (int k = 0; k < 2; ++k)
                CHECK(std::abs(jet.hessian(j, k) - want.hess(j, k)) < 1e-7);
        }
        CHECK(jet.hessian(0, 1) == jet.hessian(1, 0));
    }
}

TEST_CASE("heat identity holds with the (1 + delta_jk) normalization") {
    PeriodMatrix tau(MatrixXcd::Identity(1, 1) * (0.2 + 1.0i));
    Characteristic d(1);
    ThetaOptions opts;
    opts.tol = 1e-11;

    JetAtZero jet = jet_at_zero(d, tau, opts);
    const double scale = std::abs(jet.hessian(0, 0));
    REQUIRE(scale > 0.1);
    CHECK(heat_residual(d, tau, 0, 0, opts) < 1e-5 * scale);

    // The factor is pinned: dropping the diagonal doubling leaves half of H.
    const double eps = opts.fd_step;
    MatrixXcd up = tau.matrix(), dn = tau.matrix();
    up(0, 0) += eps;
    dn(0, 0) -= eps;
    ThetaOptions tight = opts;
    tight.tol = 1e-13;
    complex<double> fd = (eval_thetanull(d, PeriodMatrix(up), tight).value -
                          eval_thetanull(d, PeriodMatrix(dn), tight).value) /
                         (2.0 * eps);
    complex<double> two_pi_i(0.0, 2.0 * kPi);
    CHECK(std::abs(2.0 * two_pi_i * fd - jet.hessian(0, 0)) < 1e-5 * scale);
    CHECK(std::abs(1.0 * two_pi_i * fd - jet.hessian(0, 0)) > 0.25 * scale);
}

TEST_CASE("heat identity across genera and index pairs") {
    ThetaOptions opts;
    for (int g = 1; g <= 3; ++g) {
        PeriodMatrix omega = sample_generic(g, 400 + g);
        Characteristic d = enumerate_characteristics(g, Parity::Even)[1 % g];
        for (int j = 0; j < g; ++j)
            for (int k = j; k < g; ++k) {
                JetAtZero jet = jet_at_zero(d, omega, opts);
                double scale = std::max(jet.hessian_peak(j, k), 1e-300);
                CHECK(heat_residual(d, omega, j, k, opts) < 1e-4 * scale);
            }
    }
}

TEST_CASE("heat_residual validates its inputs") {
    PeriodMatrix tau(MatrixXcd::Identity(1, 1) * 1.0i);
    Characteristic d(1);
    CHECK_THROWS_AS(heat_residual(d, tau, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(heat_residual(d, tau, 0, -1), std::invalid_argument);
    ThetaOptions opts;
    opts.fd_step = 0.0;
    CHECK_THROWS_AS(heat_residual(d, tau, 0, 0, opts), std::invalid_argument);
}

TEST_CASE("vanishing order classification at z = 0") {
    PeriodMatrix tau(MatrixXcd::Identity(1, 1) * (0.1 + 0.9i));
    auto even = vanishing_order_at_zero(Characteristic({0}, {0}), tau);
    CHECK(even.order == VanishingOrder::Order0);
    CHECK_FALSE(even.indeterminate);
    CHECK(even.value_magnitude > 1e-4);

    auto odd = vanishing_order_at_zero(Characteristic({1}, {1}), tau);
    CHECK(odd.order == VanishingOrder::Order1);
    CHECK_FALSE(odd.indeterminate);
    CHECK(odd.value_magnitude < 1e-8);
    CHECK(odd.gradient_magnitude > 1e-4);

    // odd x odd on a split surface vanishes to second order
    PeriodMatrix o2 = block_sum({sample_generic(1, 61), sample_generic(1, 62)});
    Characteristic oo = direct_sum({Characteristic({1}, {1}), Characteristic({1}, {1})});
    auto second = vanishing_order_at_zero(oo, o2);
    CHECK(second.order == VanishingOrder::Order2);
    CHECK_FALSE(second.indeterminate);
    CHECK(second.hessian_magnitude > 1e-4);
}

TEST_CASE("shift relation: the compensated ratio is constant in z") {
    PeriodMatrix omega = sample_generic(2, 77);
    std::vector<VectorXcd> samples;
    VectorXcd a(2), b(2), c(2);
    a << 0.10 + 0.05i, -0.08 + 0.02i;
    b << -0.20 + 0.10i, 0.30 + 0.00i;
    c << 0.05 + 0.00i, 0.00 - 0.10i;
    samples = {a, b, c};
    for (const auto& d : {Characteristic({1, 0}, {0, 1}), Characteristic({1, 1}, {1, 1})}) {
        double dev = shift_ratio_check(d, omega, samples);
        CHECK(dev < 1e-6);
    }
    CHECK_THROWS_AS(shift_ratio_check(Characteristic(2), omega, {a}),
                    std::invalid_argument);
}

TEST_CASE("unreachable tolerance raises truncation_error with an honest bound") {
    PeriodMatrix omega = sample_generic(2, 88);
    ThetaOptions opts;
    opts.tol = 1e-30;  // below double rounding, cannot be certified
    bool threw = false;
    try {
        eval_thetanull(Characteristic(2), omega, opts);
    } catch (const truncation_error& e) {
        threw = true;
        CHECK(e.best_bound > 0.0);
        CHECK(e.best_bound < 1e-10);  // still an excellent evaluation
    }
    CHECK(threw);
}

TEST_CASE("near-degenerate imaginary part is refused") {
    MatrixXcd flat = MatrixXcd::Identity(1, 1) * 5e-9i;
    PeriodMatrix tau(flat);  // passes membership, fails the evaluation gate
    CHECK_THROWS_AS(eval_thetanull(Characteristic(1), tau), degeneracy_error);
}

TEST_CASE("lattice budget exhaustion raises truncation_error") {
    ThetaOptions opts;
    opts.max_points = 10;
    CHECK_THROWS_AS(eval_thetanull(Characteristic(3), sample_generic(3, 5), opts),
                    truncation_error);
}

TEST_CASE("fixed_radius bypasses the automatic choice") {
    PeriodMatrix tau(MatrixXcd::Identity(1, 1) * 1.0i);
    ThetaOptions opts;
    opts.fixed_radius = 0.75;  // too small for any tail certificate
    ThetaValue v = eval_thetanull(Characteristic(1), tau, opts);
    CHECK(v.radius == 0.75);
    CHECK(std::isinf(v.tail_bound));

    opts.fixed_radius = 8.0;
    ThetaValue w = eval_thetanull(Characteristic(1), tau, opts);
    CHECK(w.radius == 8.0);
    CHECK(w.tail_bound < 1e-13);
    CHECK(std::abs(w.value - 1.0864348112133080146) < 1e-12);
}

TEST_CASE("doubling the radius moves the value by less than the tail bound") {
    for (std::uint64_t seed : {301ull, 302ull, 303ull}) {
        PeriodMatrix omega = sample_generic(2, seed);
        ThetaOptions opts;
        opts.tol = 1e-8;
        VectorXcd z(2);
        z << 0.1 + 0.05i, -0.07 + 0.02i;
        Characteristic d({0, 1}, {1, 0});
        ThetaValue v = eval_theta(d, omega, z, opts);
        ThetaOptions refined = opts;
        refined.fixed_radius = 2.0 * v.radius;
        ThetaValue r = eval_theta(d, omega, z, refined);
        CHECK(std::abs(v.value - r.value) <= v.tail_bound);
    }
}

TEST_CASE("theta on a block-diagonal matrix factors over the blocks") {
    PeriodMatrix o1 = sample_generic(2, 91);
    PeriodMatrix o2 = sample_generic(1, 92);
    PeriodMatrix joint = block_sum({o1, o2});
    VectorXcd z(3);
    z << 0.07 + 0.02i, -0.05 + 0.04i, 0.11 - 0.03i;
    VectorXcd z1 = z.head(2), z2 = z.tail(1);
    for (const auto& d : enumerate_characteristics(3)) {
        auto parts = split(d, {2, 1});
        complex<double> lhs = eval_theta(d, joint, z, {}).value;
        complex<double> rhs = eval_theta(parts[0], o1, z1, {}).value *
                              eval_theta(parts[1], o2, z2, {}).value;
        CHECK(std::abs(lhs - rhs) < 1e-8);
    }
}

TEST_CASE("genus mismatches are rejected") {
    PeriodMatrix omega = sample_generic(2, 99);
    VectorXcd z3 = VectorXcd::Zero(3);
    CHECK_THROWS_AS(eval_theta(Characteristic(3), omega, z3, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_theta(Characteristic(2), omega, z3, {}),
                    std::invalid_argument);
}

}  // TEST_SUITE
