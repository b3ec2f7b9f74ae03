#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace thetaloc {

// Default tolerance for Siegel-space membership: symmetry residual and the
// smallest eigenvalue of Im Ω are both compared against this.
inline constexpr double kMemberTol = 1e-9;

// True iff Ω is square, symmetric to `tol`, and Im Ω has smallest eigenvalue
// > tol. Throws std::invalid_argument on a non-square input.
bool is_member(const Eigen::MatrixXcd& omega, double tol = kMemberTol);

// A point Ω of the Siegel upper half space: complex symmetric with
// positive-definite imaginary part. Construction symmetrizes asymmetry up to
// `tol` (and rejects anything worse), then validates positive-definiteness.
class PeriodMatrix {
public:
    explicit PeriodMatrix(Eigen::MatrixXcd omega, double tol = kMemberTol);

    int genus() const { return static_cast<int>(omega_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return omega_; }
    Eigen::MatrixXd real_part() const { return omega_.real(); }
    Eigen::MatrixXd imag_part() const { return omega_.imag(); }

    // Smallest eigenvalue of Im Ω (cached at construction).
    double min_imag_eigenvalue() const { return min_imag_eig_; }

private:
    Eigen::MatrixXcd omega_;
    double min_imag_eig_;
};

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// An element of Sp_g(Z): 2g×2g integer matrix with MᵀJM = J for
// J = [[0, I], [-I, 0]], checked in exact integer arithmetic at construction.
class SymplecticMatrix {
public:
    explicit SymplecticMatrix(IntMatrix entries);

    int genus() const { return static_cast<int>(entries_.rows()) / 2; }
    const IntMatrix& matrix() const { return entries_; }
    IntMatrix block_a() const;
    IntMatrix block_b() const;
    IntMatrix block_c() const;
    IntMatrix block_d() const;

    static SymplecticMatrix identity(int genus);
    static IntMatrix standard_form(int genus);  // J

    // Exact product with overflow detection (throws std::overflow_error).
    SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;

    bool operator==(const SymplecticMatrix& rhs) const {
        return entries_ == rhs.entries_;
    }

private:
    IntMatrix entries_;
};

// M ≡ I (mod 2), entrywise. Exposed as a checkable predicate; no operation
// in this library depends on it.
bool is_level2_congruent(const SymplecticMatrix& m);

// The action M·Ω = (AΩ+B)(CΩ+D)⁻¹ on the Siegel space. Throws
// degeneracy_error if CΩ+D is singular beyond tolerance (cannot happen for
// exact inputs, but the check is kept for numerically borderline ones).
PeriodMatrix act(const SymplecticMatrix& m, const PeriodMatrix& omega);

// Block-diagonal assembly Ω₁ ⊕ ... ⊕ Ω_n.
PeriodMatrix block_sum(const std::vector<PeriodMatrix>& parts);

// True iff all entries outside the consecutive diagonal blocks of the given
// sizes are ≤ tol in magnitude.
bool is_block_diagonal(const PeriodMatrix& omega, const std::vector<int>& sizes,
                       double tol = kMemberTol);

// Deterministic pseudo-random point of the Siegel space:
//   Ω = X + iY, X symmetric with entries uniform in [-1,1] (upper triangle
//   drawn row-major, diagonal included, then mirrored), Y = I + LᵀL with L a
//   g×g matrix of entries uniform in [-1/2, 1/2] drawn row-major.
// All draws come from the SplitMix64 stream seeded with `seed` (see rng.hpp),
// so the matrix is reproducible bit-for-bit from the seed alone.
PeriodMatrix sample_generic(int genus, std::uint64_t seed);

// Direct sum embedding Sp_{g1}(Z) × Sp_{g2}(Z) → Sp_{g1+g2}(Z) (blockwise on
// A, B, C, D).
SymplecticMatrix symplectic_direct_sum(const SymplecticMatrix& m1,
                                       const SymplecticMatrix& m2);

// A standard generating set of Sp_g(Z) for g ≤ 4: the inversion J,
// translations Ω ↦ Ω + B for B = E_jj and E_jk + E_kj, and GL_g(Z) embeddings
// U ↦ diag(U, U⁻ᵀ) for U a transposition, a sign flip, and a shear I + E_01.
std::vector<SymplecticMatrix> standard_generators(int genus);

// Product of `length` generators chosen uniformly (multiply-shift reduction of
// the SplitMix64 stream) from standard_generators(genus). length 0 gives the
// identity. Entry overflow on very long words raises std::overflow_error.
SymplecticMatrix random_word(int genus, int length, std::uint64_t seed);

}  // namespace thetaloc
