#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "thetaloc/characteristic.hpp"
#include "thetaloc/siegel.hpp"

namespace thetaloc {

struct ThetaOptions {
    // Requested certified bound on |returned − true sum| (truncation plus
    // floating-point rounding). The evaluator grows the truncation radius
    // until the analytic tail is below tol/2 and then verifies that the
    // rounding contribution keeps the total below tol.
    double tol = 1e-10;

    // Resource caps. box_cap limits R/√λ_min(Im Ω) — the per-axis extent of
    // the integer search box; max_points limits the number of lattice points.
    // Exhausting either raises truncation_error carrying the best bound.
    double box_cap = 40.0;
    std::size_t max_points = 4'000'000;

    // Testing hook: force the truncation radius (in the Y-metric) instead of
    // choosing it from tol. 0 means automatic.
    double fixed_radius = 0.0;

    // Two-threshold classification of normalized magnitudes: below zero_margin
    // is "zero", above nonzero_margin is "nonzero", the gap is indeterminate.
    double zero_margin = 1e-8;
    double nonzero_margin = 1e-4;

    // Central finite-difference step for Ω-derivatives.
    double fd_step = 1e-5;
};

struct ThetaValue {
    std::complex<double> value;
    double tail_bound;     // certified |returned − true sum|
    double radius;         // truncation radius in the Y-metric
    double peak_term;      // largest retained |term|, the normalization scale
    std::size_t n_points;  // lattice points summed

    // Magnitude after normalizing by the largest retained term.
    double normalized_magnitude() const {
        return peak_term > 0 ? std::abs(value) / peak_term : 0.0;
    }
};

struct JetAtZero {
    std::complex<double> value;
    Eigen::VectorXcd gradient;  // ∂ϑ/∂z_j at z=0
    Eigen::MatrixXcd hessian;   // ∂²ϑ/∂z_j∂z_k at z=0
    double value_tail, gradient_tail, hessian_tail;
    double value_peak;             // largest retained |term| of the value sum
    Eigen::VectorXd gradient_peak; // per-component largest |term|
    Eigen::MatrixXd hessian_peak;
    double radius;
    std::size_t n_points;
};

// ϑ_δ(Ω,z) = Σ_{m∈Z^g} exp(πi((m+δ′)Ω(m+δ′)ᵀ + 2(m+δ′)(z+δ″)ᵀ)), summed
// over the ellipsoid (m+δ′)·Im Ω·(m+δ′)ᵀ ≤ R² with a certified bound on the
// omitted terms (see src/theta.cpp for the bound's derivation). Throws
// truncation_error when tol is unachievable within the caps, degeneracy_error
// when λ_min(Im Ω) < 10·kMemberTol.
ThetaValue eval_theta(const Characteristic& delta, const PeriodMatrix& omega,
                      const Eigen::VectorXcd& z, const ThetaOptions& opts = {});

// The thetanull ϑ_δ(Ω, 0).
ThetaValue eval_thetanull(const Characteristic& delta, const PeriodMatrix& omega,
                          const ThetaOptions& opts = {});

// Value, z-gradient and z-Hessian at z = 0 from the term-wise differentiated
// series, each with its own certified tail bound.
JetAtZero jet_at_zero(const Characteristic& delta, const PeriodMatrix& omega,
                      const ThetaOptions& opts = {});

// |2πi(1+δ_jk)·∂ϑ_δ/∂Ω_jk − ∂²ϑ_δ/∂z_j∂z_k| at z = 0, with the Ω-derivative
// from central finite differences (stepping Ω_jk and Ω_kj together along the
// real direction, step opts.fd_step) and the z-Hessian from jet_at_zero — two
// independent computational paths. Indices are 0-based.
double heat_residual(const Characteristic& delta, const PeriodMatrix& omega,
                     int j, int k, const ThetaOptions& opts = {});

enum class VanishingOrder { Order0, Order1, Order2, HigherOrIndeterminate };

struct VanishingOrderResult {
    VanishingOrder order;
    // Normalized magnitudes backing the decision (value, max gradient entry,
    // max Hessian entry; each relative to its own largest retained term).
    double value_magnitude;
    double gradient_magnitude;
    double hessian_magnitude;
    // True when some magnitude fell in the gap between the two thresholds, so
    // HigherOrIndeterminate means "could not decide" rather than "order ≥ 3".
    bool indeterminate;
};

// Order of vanishing of z ↦ ϑ_δ(Ω,z) at z = 0, decided by the two-threshold
// rule on the jet. Indeterminacy is a return value, never an exception.
VanishingOrderResult vanishing_order_at_zero(const Characteristic& delta,
                                             const PeriodMatrix& omega,
                                             const ThetaOptions& opts = {});

// Constancy check for the shift relation. Expanding the defining series gives
//   ϑ_δ(Ω,z) = e^{πiδ′Ωδ′ᵀ + 2πiδ′(z+δ″)ᵀ} · ϑ₀(Ω, z + δ″ + δ′Ω),
// so r(z) = ϑ_δ(Ω,z)·e^{−2πiδ′·z} / ϑ₀(Ω, z + δ″ + δ′Ω) is independent of z
// (the remaining multiple e^{πiδ′Ωδ′ᵀ + 2πiδ′δ″ᵀ} is a nonzero constant).
// Returns the max over ordered sample pairs of |r(z_a) − r(z_b)| / |r(z_a)|.
// Throws resample_error when a denominator sample is below the nonzero margin.
double shift_ratio_check(const Characteristic& delta, const PeriodMatrix& omega,
                         const std::vector<Eigen::VectorXcd>& z_samples,
                         const ThetaOptions& opts = {});

}  // namespace thetaloc
