#include "thetaloc/siegel.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>
#include <string>

#include "thetaloc/errors.hpp"
#include "thetaloc/rng.hpp"

namespace thetaloc {

namespace {

double symmetry_residual(const Eigen::MatrixXcd& omega) {
    return (omega - omega.transpose()).cwiseAbs().maxCoeff();
}

double min_eigenvalue_sym(const Eigen::MatrixXd& y) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(y, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in symplectic matrix product");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in symplectic matrix product");
    return r;
}

IntMatrix checked_product(const IntMatrix& a, const IntMatrix& b) {
    const auto n = a.rows();
    IntMatrix r(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (Eigen::Index k = 0; k < n; ++k)
                acc = checked_add(acc, checked_mul(a(i, k), b(k, j)));
            r(i, j) = acc;
        }
    return r;
}

}  // namespace

bool is_member(const Eigen::MatrixXcd& omega, double tol) {
    if (omega.rows() != omega.cols())
        throw std::invalid_argument("period matrix must be square");
    if (omega.rows() < 1) throw std::invalid_argument("period matrix is empty");
    if (symmetry_residual(omega) > tol) return false;
    return min_eigenvalue_sym(omega.imag()) > tol;
}

PeriodMatrix::PeriodMatrix(Eigen::MatrixXcd omega, double tol) {
    if (omega.rows() != omega.cols())
        throw std::invalid_argument("period matrix must be square");
    if (omega.rows() < 1) throw std::invalid_argument("period matrix is empty");
    const double asym = symmetry_residual(omega);
    if (asym > tol)
        throw std::invalid_argument("period matrix asymmetry " + std::to_string(asym) +
                                    " exceeds tolerance");
    omega_ = 0.5 * (omega + omega.transpose().eval());  // exact symmetry from here on
    min_imag_eig_ = min_eigenvalue_sym(omega_.imag());
    if (!(min_imag_eig_ > tol))
        throw std::invalid_argument(
            "imaginary part not positive definite: min eigenvalue " +
            std::to_string(min_imag_eig_));
}

IntMatrix SymplecticMatrix::standard_form(int genus) {
    IntMatrix j = IntMatrix::Zero(2 * genus, 2 * genus);
    for (int k = 0; k < genus; ++k) {
        j(k, genus + k) = 1;
        j(genus + k, k) = -1;
    }
    return j;
}

SymplecticMatrix::SymplecticMatrix(IntMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 2 ||
        entries_.rows() % 2 != 0)
        throw std::invalid_argument("symplectic matrix must be 2g x 2g");
    const int g = static_cast<int>(entries_.rows()) / 2;
    const IntMatrix j = standard_form(g);
    const IntMatrix mtjm =
        checked_product(checked_product(entries_.transpose(), j), entries_);
    if (mtjm != j)
        throw std::invalid_argument("matrix is not symplectic (MᵀJM != J)");
}

SymplecticMatrix SymplecticMatrix::identity(int genus) {
    return SymplecticMatrix(IntMatrix::Identity(2 * genus, 2 * genus));
}

IntMatrix SymplecticMatrix::block_a() const {
    const int g = genus();
    return entries_.topLeftCorner(g, g);
}
IntMatrix SymplecticMatrix::block_b() const {
    const int g = genus();
    return entries_.topRightCorner(g, g);
}
IntMatrix SymplecticMatrix::block_c() const {
    const int g = genus();
    return entries_.bottomLeftCorner(g, g);
}
IntMatrix SymplecticMatrix::block_d() const {
    const int g = genus();
    return entries_.bottomRightCorner(g, g);
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
    if (genus() != rhs.genus())
        throw std::invalid_argument("symplectic product: genus mismatch");
    return SymplecticMatrix(checked_product(entries_, rhs.entries_));
}

bool is_level2_congruent(const SymplecticMatrix& m) {
    const auto& e = m.matrix();
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j) {
            const std::int64_t want = (i == j) ? 1 : 0;
            if (((e(i, j) - want) % 2) != 0) return false;
        }
    return true;
}

PeriodMatrix act(const SymplecticMatrix& m, const PeriodMatrix& omega) {
    if (m.genus() != omega.genus())
        throw std::invalid_argument("act: genus mismatch");
    const int g = omega.genus();
    const Eigen::MatrixXcd om = omega.matrix();
    const Eigen::MatrixXcd a = m.block_a().cast<double>().cast<std::complex<double>>();
    const Eigen::MatrixXcd b = m.block_b().cast<double>().cast<std::complex<double>>();
    const Eigen::MatrixXcd c = m.block_c().cast<double>().cast<std::complex<double>>();
    const Eigen::MatrixXcd d = m.block_d().cast<double>().cast<std::complex<double>>();

    const Eigen::MatrixXcd denom = c * om + d;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(denom);
    // |det| is bounded well away from 0 for genuine inputs; treat anything
    // tiny relative to the matrix scale as numerical degeneracy.
    const double scale = std::max(1.0, denom.cwiseAbs().maxCoeff());
    if (!lu.isInvertible() ||
        std::abs(lu.determinant()) < 1e-12 * std::pow(scale, g))
        throw degeneracy_error("CΩ+D numerically singular in symplectic action");
    const Eigen::MatrixXcd result = (a * om + b) * lu.inverse();
    // result is symmetric up to roundoff; the explicit average below is exactly
    // symmetric entrywise, so the constructor's membership check is purely
    // about positive-definiteness
    return PeriodMatrix(0.5 * (result + result.transpose().eval()));
}

PeriodMatrix block_sum(const std::vector<PeriodMatrix>& parts) {
    if (parts.empty()) throw std::invalid_argument("block_sum of empty list");
    int g = 0;
    for (const auto& p : parts) g += p.genus();
    Eigen::MatrixXcd om = Eigen::MatrixXcd::Zero(g, g);
    int at = 0;
    for (const auto& p : parts) {
        om.block(at, at, p.genus(), p.genus()) = p.matrix();
        at += p.genus();
    }
    return PeriodMatrix(std::move(om));
}

bool is_block_diagonal(const PeriodMatrix& omega, const std::vector<int>& sizes,
                       double tol) {
    int total = 0;
    for (int s : sizes) {
        if (s <= 0) throw std::invalid_argument("block sizes must be positive");
        total += s;
    }
    if (total != omega.genus())
        throw std::invalid_argument("block sizes do not sum to genus");
    const auto& om = omega.matrix();
    int at = 0;
    for (int s : sizes) {
        for (int i = at; i < at + s; ++i)
            for (int j = 0; j < omega.genus(); ++j) {
                const bool inside = (j >= at && j < at + s);
                if (!inside && std::abs(om(i, j)) > tol) return false;
            }
        at += s;
    }
    return true;
}

PeriodMatrix sample_generic(int genus, std::uint64_t seed) {
    if (genus < 1) throw std::invalid_argument("genus must be positive");
    SplitMix64 rng(seed);
    Eigen::MatrixXd x(genus, genus);
    for (int j = 0; j < genus; ++j)
        for (int k = j; k < genus; ++k) {
            const double v = rng.uniform(-1.0, 1.0);
            x(j, k) = v;
            x(k, j) = v;
        }
    Eigen::MatrixXd l(genus, genus);
    for (int j = 0; j < genus; ++j)
        for (int k = 0; k < genus; ++k) l(j, k) = rng.uniform(-0.5, 0.5);
    const Eigen::MatrixXd y =
        Eigen::MatrixXd::Identity(genus, genus) + l.transpose() * l;
    Eigen::MatrixXcd om =
        x.cast<std::complex<double>>() +
        std::complex<double>(0, 1) * y.cast<std::complex<double>>();
    return PeriodMatrix(std::move(om));
}

SymplecticMatrix symplectic_direct_sum(const SymplecticMatrix& m1,
                                       const SymplecticMatrix& m2) {
    const int g1 = m1.genus(), g2 = m2.genus(), g = g1 + g2;
    IntMatrix e = IntMatrix::Zero(2 * g, 2 * g);
    e.block(0, 0, g1, g1) = m1.block_a();
    e.block(0, g, g1, g1) = m1.block_b();
    e.block(g, 0, g1, g1) = m1.block_c();
    e.block(g, g, g1, g1) = m1.block_d();
    e.block(g1, g1, g2, g2) = m2.block_a();
    e.block(g1, g + g1, g2, g2) = m2.block_b();
    e.block(g + g1, g1, g2, g2) = m2.block_c();
    e.block(g + g1, g + g1, g2, g2) = m2.block_d();
    return SymplecticMatrix(std::move(e));
}

std::vector<SymplecticMatrix> standard_generators(int genus) {
    if (genus < 1 || genus > 4)
        throw std::invalid_argument("generators available for 1 <= genus <= 4");
    const int g = genus;
    std::vector<SymplecticMatrix> gens;

    // the inversion J
    gens.emplace_back(SymplecticMatrix::standard_form(g));

    // translations [[I, B], [0, I]] for a basis of symmetric integer matrices
    auto translation = [&](const IntMatrix& b) {
        IntMatrix e = IntMatrix::Identity(2 * g, 2 * g);
        e.block(0, g, g, g) = b;
        return SymplecticMatrix(std::move(e));
    };
    for (int j = 0; j < g; ++j)
        for (int k = j; k < g; ++k) {
            IntMatrix b = IntMatrix::Zero(g, g);
            b(j, k) = 1;
            b(k, j) = 1;
            if (j == k) b(j, j) = 1;
            gens.push_back(translation(b));
        }

    // GL_g(Z) embeddings diag(U, U⁻ᵀ)
    auto gl_embed = [&](const IntMatrix& u, const IntMatrix& u_inv) {
        IntMatrix e = IntMatrix::Zero(2 * g, 2 * g);
        e.block(0, 0, g, g) = u;
        e.block(g, g, g, g) = u_inv.transpose();
        return SymplecticMatrix(std::move(e));
    };
    {
        IntMatrix flip = IntMatrix::Identity(g, g);
        flip(0, 0) = -1;
        gens.push_back(gl_embed(flip, flip));  // self-inverse
    }
    for (int j = 0; j + 1 < g; ++j) {
        IntMatrix perm = IntMatrix::Identity(g, g);
        perm(j, j) = perm(j + 1, j + 1) = 0;
        perm(j, j + 1) = perm(j + 1, j) = 1;
        gens.push_back(gl_embed(perm, perm));  // self-inverse
    }
    if (g >= 2) {
        IntMatrix shear = IntMatrix::Identity(g, g);
        shear(0, 1) = 1;
        IntMatrix shear_inv = IntMatrix::Identity(g, g);
        shear_inv(0, 1) = -1;
        gens.push_back(gl_embed(shear, shear_inv));
    }
    return gens;
}

SymplecticMatrix random_word(int genus, int length, std::uint64_t seed) {
    if (length < 0) throw std::invalid_argument("word length must be >= 0");
    const auto gens = standard_generators(genus);
    SplitMix64 rng(seed);
    SymplecticMatrix word = SymplecticMatrix::identity(genus);
    for (int i = 0; i < length; ++i)
        word = word * gens[static_cast<std::size_t>(rng.below(gens.size()))];
    return word;
}

}  // namespace thetaloc
