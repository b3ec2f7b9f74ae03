#include "thetaloc/theta.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "thetaloc/errors.hpp"

namespace thetaloc {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

struct YStats {
    Eigen::MatrixXd chol_u;  // upper-triangular U with Y = UᵀU
    double lam_min = 0, lam_max = 0;
    double sqrt_det = 0;
    double h = 0;  // sup of the Y-norm over the half-unit cube: (√g/2)√λ_max
};

YStats analyze_y(const Eigen::MatrixXd& y) {
    YStats s;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(y, Eigen::EigenvaluesOnly);
    s.lam_min = es.eigenvalues().minCoeff();
    s.lam_max = es.eigenvalues().maxCoeff();
    Eigen::LLT<Eigen::MatrixXd> llt(y);
    if (llt.info() != Eigen::Success)
        throw degeneracy_error("Im Ω is numerically not positive definite");
    s.chol_u = llt.matrixU();
    s.sqrt_det = s.chol_u.diagonal().prod();
    s.h = 0.5 * std::sqrt(static_cast<double>(y.rows())) * std::sqrt(s.lam_max);
    return s;
}

// I_k(T) = ∫_T^∞ t^k e^{−πt²} dt, by the recursion
// I_k = T^{k−1} e^{−πT²}/(2π) + (k−1)/(2π) I_{k−2}.
double gauss_moment(int k, double t) {
    if (k == 0) return 0.5 * std::erfc(std::sqrt(kPi) * t);
    if (k == 1) return std::exp(-kPi * t * t) / (2 * kPi);
    return std::pow(t, k - 1) * std::exp(-kPi * t * t) / (2 * kPi) +
           (k - 1) / (2 * kPi) * gauss_moment(k - 2, t);
}

std::vector<double> poly_mul(const std::vector<double>& a,
                             const std::vector<double>& b) {
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Certified bound on Σ_{q(m+t) > R²} pref_p(u)·|term(u)| where
//   |term(u)| = e^{−π q(u) − 2π u·Im z} ≤ e^{πc²} e^{−π(s−c)²},
//   s = ‖u‖_Y, c = ‖Im z‖_{Y⁻¹} (Cauchy–Schwarz in the Y inner product),
// and the derivative prefactors are bounded through λ_min(Y):
//   p=0: 1,  p=1: 2π·max_j|u_j| ≤ 2π s/√λ_min,  p=2: 4π²|u_j u_k| ≤ 4π² s²/λ_min.
//
// Each omitted lattice point u owns the unit cube u + [−½,½]^g (disjoint
// cubes, Y-diameter ≤ 2h), so the sum is dominated by the integral of the
// decreasing radial envelope over {‖x‖_Y > R−h}:
//   e^{πc²}·pref·(S_g/√det Y)·∫_{R−h}^∞ ((r+h)/norm)^p e^{−π(r−h−c)²} r^{g−1} dr,
// S_g = 2π^{g/2}/Γ(g/2). Substituting t = r−h−c turns the integrand into a
// polynomial times e^{−πt²}, handled by gauss_moment. The envelope
// s^p e^{−π(s−c)²} is decreasing for s−c ≥ 1 and p ≤ 2, so the bound is valid
// for T = R − 2h − c ≥ 1; smaller radii report +inf (no certificate).
double lattice_tail(int p, double radius, double c, const YStats& ys, int g) {
    const double t0 = radius - 2 * ys.h - c;
    if (!(t0 >= 1.0)) return std::numeric_limits<double>::infinity();
    double pref = 1.0;
    if (p == 1) pref = 2 * kPi / std::sqrt(ys.lam_min);
    if (p == 2) pref = 4 * kPi * kPi / ys.lam_min;
    const double a = 2 * ys.h + c;  // s ≤ t + a on the cube around u
    const double b = ys.h + c;      // r = t + b
    std::vector<double> poly{1.0};
    for (int i = 0; i < g - 1; ++i) poly = poly_mul(poly, {b, 1.0});
    for (int i = 0; i < p; ++i) poly = poly_mul(poly, {a, 1.0});
    double integral = 0.0;
    for (std::size_t k = 0; k < poly.size(); ++k)
        integral += poly[k] * gauss_moment(static_cast<int>(k), t0);
    const double s_g = 2 * std::pow(kPi, g / 2.0) / std::tgamma(g / 2.0);
    return pref * std::exp(kPi * c * c) * s_g / ys.sqrt_det * integral;
}

struct Accum {
    std::complex<long double> value{0, 0};
    std::vector<std::complex<long double>> grad;  // size g
    std::vector<std::complex<long double>> hess;  // size g*g, row major
    double peak0 = 0, sumabs0 = 0, wacc0 = 0;
    Eigen::VectorXd peak1;
    double sumabs1 = 0, wacc1 = 0;
    Eigen::MatrixXd peak2;
    double sumabs2 = 0, wacc2 = 0;
    std::size_t n = 0;
};

// Accumulated-rounding bound: long-double accumulation contributes
// n·ε₈₀·Σ|term|; forming each term costs a few ulps amplified by the size of
// the exponent and the angle (|sin/cos argument| ε per ulp of argument).
double rounding_bound(double sumabs, double wacc, std::size_t n) {
    constexpr double eps64 = std::numeric_limits<double>::epsilon();
    constexpr double eps80 = 1.1e-19;  // x86 extended precision
    return eps64 * (4 * sumabs + wacc) + static_cast<double>(n) * eps80 * sumabs;
}

// Enumerate every m ∈ Z^g with ‖U(m+t)‖² ≤ rsq (Y = UᵀU upper Cholesky).
// The per-level intervals are widened slightly and the exact filter is applied
// at the leaf on q = Σ s_j², which is computed through operations that negate
// exactly under u ↦ −u; hence the retained set is exactly symmetric under
// that involution and the pair cancellations of odd characteristics survive
// truncation to rounding level.
template <typename Visit>
void enumerate_ellipsoid(const Eigen::MatrixXd& u, const Eigen::VectorXd& t,
                         double rsq, std::size_t max_points, Visit&& visit) {
    const int g = static_cast<int>(t.size());
    Eigen::VectorXd uvec(g);
    const double slack = 1e-9 * (1.0 + rsq);
    std::size_t count = 0;
    auto rec = [&](auto&& self, int j, double qacc) -> void {
        if (j < 0) {
            if (qacc <= rsq) {
                if (++count > max_points)
                    throw truncation_error("lattice point budget exceeded",
                                           std::numeric_limits<double>::infinity());
                visit(uvec, qacc);
            }
            return;
        }
        double cj = 0;
        for (int k = j + 1; k < g; ++k) cj += u(j, k) * uvec[k];
        const double rem = rsq + slack - qacc;
        if (rem < 0) return;
        const double r = std::sqrt(rem);
        const double ujj = u(j, j);
        const double lo = (-r - cj) / ujj - t[j];
        const double hi = (r - cj) / ujj - t[j];
        const long mlo = static_cast<long>(std::ceil(lo - 1e-9));
        const long mhi = static_cast<long>(std::floor(hi + 1e-9));
        for (long m = mlo; m <= mhi; ++m) {
            uvec[j] = static_cast<double>(m) + t[j];
            const double sj = ujj * uvec[j] + cj;
            const double q2 = qacc + sj * sj;
            if (q2 > rsq + slack) continue;
            self(self, j - 1, q2);
        }
    };
    rec(rec, g - 1, 0.0);
}

struct CoreSum {
    Accum acc;
    double radius = 0;
    double c = 0;
    YStats ys;
};

// Shared evaluation core: chooses the truncation radius from the requested
// tolerance (unless forced), enumerates the ellipsoid and accumulates the
// series (plus the differentiated series when want_jet).
CoreSum core_sum(const Characteristic& delta, const PeriodMatrix& omega,
                 const Eigen::VectorXcd& z, const ThetaOptions& opts,
                 bool want_jet) {
    const int g = omega.genus();
    if (delta.genus() != g)
        throw std::invalid_argument("characteristic/period matrix genus mismatch");
    if (z.size() != g)
        throw std::invalid_argument("z has wrong dimension");
    if (omega.min_imag_eigenvalue() < 10 * kMemberTol)
        throw degeneracy_error(
            "Im Ω too close to singular for certified summation (λ_min = " +
            std::to_string(omega.min_imag_eigenvalue()) + ")");

    CoreSum out;
    out.ys = analyze_y(omega.imag_part());
    const YStats& ys = out.ys;

    Eigen::VectorXd tvec(g), rvec(g), ivec(g);
    for (int j = 0; j < g; ++j) {
        tvec[j] = delta.top_half(j);
        rvec[j] = z[j].real() + delta.bottom_half(j);
        ivec[j] = z[j].imag();
    }
    // c = ‖Im z‖_{Y⁻¹} = ‖U⁻ᵀ Im z‖
    out.c = ys.chol_u.transpose()
                .triangularView<Eigen::Lower>()
                .solve(ivec)
                .norm();

    const int pmax = want_jet ? 2 : 0;
    double radius;
    if (opts.fixed_radius > 0) {
        radius = opts.fixed_radius;
    } else {
        radius = 2 * ys.h + out.c + 2.0;
        while (lattice_tail(pmax, radius, out.c, ys, g) > 0.5 * opts.tol) {
            radius += 0.5;
            if (radius / std::sqrt(ys.lam_min) > opts.box_cap) {
                const double best = lattice_tail(pmax, radius, out.c, ys, g);
                throw truncation_error(
                    "tolerance " + std::to_string(opts.tol) +
                        " unachievable within radius cap; best tail bound " +
                        std::to_string(best),
                    best);
            }
        }
    }
    out.radius = radius;

    Accum& acc = out.acc;
    if (want_jet) {
        acc.grad.assign(g, {0, 0});
        acc.hess.assign(static_cast<std::size_t>(g) * g, {0, 0});
        acc.peak1 = Eigen::VectorXd::Zero(g);
        acc.peak2 = Eigen::MatrixXd::Zero(g, g);
    }
    const Eigen::MatrixXd x = omega.real_part();

    enumerate_ellipsoid(
        ys.chol_u, tvec, radius * radius, opts.max_points,
        [&](const Eigen::VectorXd& u, double q) {
            double xq = 0, ur = 0, ui = 0, usq = 0;
            for (int j = 0; j < g; ++j) {
                double xu = 0;
                for (int k = 0; k < g; ++k) xu += x(j, k) * u[k];
                xq += u[j] * xu;
                ur += u[j] * rvec[j];
                ui += u[j] * ivec[j];
                usq += u[j] * u[j];
            }
            const double re = -kPi * (q + 2 * ui);
            const double ang = kPi * (xq + 2 * ur);
            const double w = std::exp(re);
            const std::complex<double> term{w * std::cos(ang), w * std::sin(ang)};
            const double weight = 4 + std::abs(re) + std::abs(ang);

            acc.value += term;
            acc.peak0 = std::max(acc.peak0, w);
            acc.sumabs0 += w;
            acc.wacc0 += w * weight;
            acc.n += 1;

            if (want_jet) {
                const double unorm = std::sqrt(usq);
                for (int j = 0; j < g; ++j) {
                    // (2πi u_j)·term
                    const double gj = 2 * kPi * u[j];
                    acc.grad[j] += std::complex<double>(-gj * term.imag(),
                                                        gj * term.real());
                    acc.peak1[j] = std::max(acc.peak1[j], std::abs(gj) * w);
                }
                acc.sumabs1 += 2 * kPi * unorm * w;
                acc.wacc1 += 2 * kPi * unorm * w * weight;
                for (int j = 0; j < g; ++j)
                    for (int k = j; k < g; ++k) {
                        // (2πi u_j)(2πi u_k)·term = −4π² u_j u_k·term
                        const double hjk = -4 * kPi * kPi * u[j] * u[k];
                        acc.hess[static_cast<std::size_t>(j) * g + k] +=
                            hjk * term;
                        acc.peak2(j, k) =
                            std::max(acc.peak2(j, k), std::abs(hjk) * w);
                    }
                acc.sumabs2 += 4 * kPi * kPi * usq * w;
                acc.wacc2 += 4 * kPi * kPi * usq * w * weight;
            }
        });
    return out;
}

std::complex<double> narrow(const std::complex<long double>& v) {
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace

ThetaValue eval_theta(const Characteristic& delta, const PeriodMatrix& omega,
                      const Eigen::VectorXcd& z, const ThetaOptions& opts) {
    CoreSum cs = core_sum(delta, omega, z, opts, /*want_jet=*/false);
    const double trunc =
        lattice_tail(0, cs.radius, cs.c, cs.ys, omega.genus());
    const double bound =
        trunc + rounding_bound(cs.acc.sumabs0, cs.acc.wacc0, cs.acc.n);
    if (opts.fixed_radius <= 0 && bound > opts.tol)
        throw truncation_error(
            "certified bound " + std::to_string(bound) +
                " exceeds requested tolerance (rounding-limited)",
            bound);
    return ThetaValue{narrow(cs.acc.value), bound, cs.radius, cs.acc.peak0,
                      cs.acc.n};
}

ThetaValue eval_thetanull(const Characteristic& delta, const PeriodMatrix& omega,
                          const ThetaOptions& opts) {
    return eval_theta(delta, omega, Eigen::VectorXcd::Zero(omega.genus()), opts);
}

JetAtZero jet_at_zero(const Characteristic& delta, const PeriodMatrix& omega,
                      const ThetaOptions& opts) {
    const int g = omega.genus();
    CoreSum cs = core_sum(delta, omega, Eigen::VectorXcd::Zero(g), opts,
                          /*want_jet=*/true);
    JetAtZero jet;
    jet.value = narrow(cs.acc.value);
    jet.gradient = Eigen::VectorXcd(g);
    jet.hessian = Eigen::MatrixXcd(g, g);
    for (int j = 0; j < g; ++j) {
        jet.gradient[j] = narrow(cs.acc.grad[j]);
        for (int k = j; k < g; ++k) {
            const auto h = narrow(cs.acc.hess[static_cast<std::size_t>(j) * g + k]);
            jet.hessian(j, k) = h;
            jet.hessian(k, j) = h;
            cs.acc.peak2(k, j) = cs.acc.peak2(j, k);
        }
    }
    jet.value_tail = lattice_tail(0, cs.radius, cs.c, cs.ys, g) +
                     rounding_bound(cs.acc.sumabs0, cs.acc.wacc0, cs.acc.n);
    jet.gradient_tail = lattice_tail(1, cs.radius, cs.c, cs.ys, g) +
                        rounding_bound(cs.acc.sumabs1, cs.acc.wacc1, cs.acc.n);
    jet.hessian_tail = lattice_tail(2, cs.radius, cs.c, cs.ys, g) +
                       rounding_bound(cs.acc.sumabs2, cs.acc.wacc2, cs.acc.n);
    jet.value_peak = cs.acc.peak0;
    jet.gradient_peak = cs.acc.peak1;
    jet.hessian_peak = cs.acc.peak2;
    jet.radius = cs.radius;
    jet.n_points = cs.acc.n;
    const double worst =
        std::max({jet.value_tail, jet.gradient_tail, jet.hessian_tail});
    if (opts.fixed_radius <= 0 && worst > opts.tol)
        throw truncation_error("certified jet bound " + std::to_string(worst) +
                                   " exceeds requested tolerance",
                               worst);
    return jet;
}

double heat_residual(const Characteristic& delta, const PeriodMatrix& omega,
                     int j, int k, const ThetaOptions& opts) {
    const int g = omega.genus();
    if (j < 0 || j >= g || k < 0 || k >= g)
        throw std::invalid_argument("heat_residual: index out of range");
    if (!(opts.fd_step > 0))
        throw std::invalid_argument("heat_residual: fd_step must be positive");

    const JetAtZero jet = jet_at_zero(delta, omega, opts);
    const std::complex<double> hess_jk = jet.hessian(j, k);

    // Central difference along the real direction: holomorphy of ϑ in Ω_jk
    // makes this the complex partial; real steps never leave the Siegel space
    // (membership is still validated to keep the error contract honest).
    Eigen::MatrixXcd up = omega.matrix(), down = omega.matrix();
    up(j, k) += opts.fd_step;
    down(j, k) -= opts.fd_step;
    if (j != k) {
        up(k, j) += opts.fd_step;
        down(k, j) -= opts.fd_step;
    }
    if (!is_member(up) || !is_member(down))
        throw degeneracy_error("finite-difference step leaves the Siegel space");
    // The quotient amplifies the stencil's absolute error by 1/(2·fd_step),
    // so evaluate the two endpoints tighter than the jet. The floor keeps the
    // request above the double-precision rounding budget of the lattice sum.
    ThetaOptions fd_opts = opts;
    fd_opts.tol = std::max(opts.tol * 1e-3, 5e-14);
    const ThetaValue tp = eval_thetanull(delta, PeriodMatrix(up), fd_opts);
    const ThetaValue tm = eval_thetanull(delta, PeriodMatrix(down), fd_opts);
    const std::complex<double> domega =
        (tp.value - tm.value) / (2 * opts.fd_step);

    const double kron = (j == k) ? 1.0 : 0.0;
    const std::complex<double> lhs =
        std::complex<double>(0, 2 * kPi) * (1.0 + kron) * domega;
    return std::abs(lhs - hess_jk);
}

VanishingOrderResult vanishing_order_at_zero(const Characteristic& delta,
                                             const PeriodMatrix& omega,
                                             const ThetaOptions& opts) {
    const JetAtZero jet = jet_at_zero(delta, omega, opts);
    const int g = omega.genus();
    auto normalized = [](double mag, double peak) {
        return peak > 0 ? mag / peak : 0.0;
    };
    VanishingOrderResult res{};
    res.value_magnitude = normalized(std::abs(jet.value), jet.value_peak);
    res.gradient_magnitude = 0;
    for (int j = 0; j < g; ++j)
        res.gradient_magnitude =
            std::max(res.gradient_magnitude,
                     normalized(std::abs(jet.gradient[j]), jet.gradient_peak[j]));
    res.hessian_magnitude = 0;
    for (int j = 0; j < g; ++j)
        for (int k = 0; k < g; ++k)
            res.hessian_magnitude =
                std::max(res.hessian_magnitude,
                         normalized(std::abs(jet.hessian(j, k)),
                                    jet.hessian_peak(j, k)));

    enum Level { Zero, Gap, Nonzero };
    auto classify = [&](double mag) {
        if (mag < opts.zero_margin) return Zero;
        if (mag > opts.nonzero_margin) return Nonzero;
        return Gap;
    };
    const Level lv = classify(res.value_magnitude);
    if (lv == Nonzero) {
        res.order = VanishingOrder::Order0;
        return res;
    }
    if (lv == Gap) {
        res.order = VanishingOrder::HigherOrIndeterminate;
        res.indeterminate = true;
        return res;
    }
    const Level lg = classify(res.gradient_magnitude);
    if (lg == Nonzero) {
        res.order = VanishingOrder::Order1;
        return res;
    }
    if (lg == Gap) {
        res.order = VanishingOrder::HigherOrIndeterminate;
        res.indeterminate = true;
        return res;
    }
    const Level lh = classify(res.hessian_magnitude);
    if (lh == Nonzero) {
        res.order = VanishingOrder::Order2;
        return res;
    }
    res.order = VanishingOrder::HigherOrIndeterminate;
    res.indeterminate = (lh == Gap);
    return res;
}

double shift_ratio_check(const Characteristic& delta, const PeriodMatrix& omega,
                         const std::vector<Eigen::VectorXcd>& z_samples,
                         const ThetaOptions& opts) {
    if (z_samples.size() < 2)
        throw std::invalid_argument("shift_ratio_check needs >= 2 samples");
    const int g = omega.genus();
    const Characteristic zero(g);
    Eigen::VectorXcd dprime(g);
    for (int j = 0; j < g; ++j) dprime[j] = delta.top_half(j);
    const Eigen::VectorXcd shift_base = omega.matrix() * dprime;  // δ′Ω (symmetric Ω)

    std::vector<std::complex<double>> ratios;
    for (std::size_t s = 0; s < z_samples.size(); ++s) {
        const Eigen::VectorXcd& z = z_samples[s];
        if (z.size() != g)
            throw std::invalid_argument("z sample has wrong dimension");
        Eigen::VectorXcd shifted = z + shift_base;
        for (int j = 0; j < g; ++j) shifted[j] += delta.bottom_half(j);
        const ThetaValue num = eval_theta(delta, omega, z, opts);
        const ThetaValue den = eval_theta(zero, omega, shifted, opts);
        if (den.normalized_magnitude() < opts.nonzero_margin)
            throw resample_error(
                "shift-ratio denominator below margin at sample " +
                std::to_string(s) + "; resample z");
        std::complex<double> dz = 0;
        for (int j = 0; j < g; ++j) dz += dprime[j] * z[j];
        const std::complex<double> compensator =
            std::exp(std::complex<double>(0, -2 * kPi) * dz);
        ratios.push_back(num.value * compensator / den.value);
    }
    double dev = 0;
    for (std::size_t a = 0; a < ratios.size(); ++a) {
        const double mag = std::abs(ratios[a]);
        if (mag < 1e-300)
            throw resample_error("shift-ratio sample vanished; resample z");
        for (std::size_t b = 0; b < ratios.size(); ++b) {
            if (a == b) continue;
            dev = std::max(dev, std::abs(ratios[a] - ratios[b]) / mag);
        }
    }
    return dev;
}

}  // namespace thetaloc
