#include "doctest.h"

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

#include "thetaloc/errors.hpp"
#include "thetaloc/rng.hpp"
#include "thetaloc/siegel.hpp"

using namespace thetaloc;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using namespace std::complex_literals;

namespace {

// Reference outputs of the SplitMix64 mixer for seed 0, from the published
// reference implementation. These pin the RNG contract bit-for-bit.
constexpr std::uint64_t kSeed0Outputs[3] = {
    0xE220A8397B1DCDAFull, 0x6E789E6AA1B965F4ull, 0x06C45D188009454Full};

MatrixXcd random_symmetric_siegel(int g, std::uint64_t seed) {
    return sample_generic(g, seed).matrix();
}

}  // namespace

TEST_SUITE("siegel") {

TEST_CASE("SplitMix64 matches the published reference stream") {
    SplitMix64 s(0);
    for (auto want : kSeed0Outputs) CHECK(s.next() == want);
    SplitMix64 t(0);
    CHECK(t.uniform01() ==
          static_cast<double>(kSeed0Outputs[0] >> 11) * 0x1.0p-53);
    SplitMix64 u(0);
    // multiply-shift reduction: high 64 bits of output * n
    CHECK(u.below(6) == static_cast<std::uint64_t>(
                            (static_cast<unsigned __int128>(kSeed0Outputs[0]) * 6) >> 64));
}

TEST_CASE("is_member accepts the Siegel space and nothing else") {
    MatrixXcd good = MatrixXcd::Identity(2, 2) * 1.0i;
    CHECK(is_member(good));

    MatrixXcd asym = good;
    asym(0, 1) = 0.5;  // not symmetric
    CHECK_FALSE(is_member(asym));

    MatrixXcd negdef = MatrixXcd::Identity(2, 2) * -1.0i;
    CHECK_FALSE(is_member(negdef));

    MatrixXcd realonly = MatrixXcd::Zero(2, 2);
    CHECK_FALSE(is_member(realonly));

    CHECK_THROWS_AS(is_member(MatrixXcd::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("PeriodMatrix symmetrizes tiny asymmetry and rejects the rest") {
    MatrixXcd m = MatrixXcd::Identity(2, 2) * 1.0i;
    m(0, 1) = 0.3 + 1e-12i;
    m(1, 0) = 0.3;  // asymmetry 1e-12, inside tolerance
    PeriodMatrix p(m);
    CHECK(p.matrix()(0, 1) == p.matrix()(1, 0));
    CHECK(p.genus() == 2);

    m(0, 1) = 0.4;  // asymmetry 0.1
    CHECK_THROWS_AS(PeriodMatrix{m}, std::invalid_argument);

    MatrixXcd flat = MatrixXcd::Identity(2, 2) * 1e-12i;
    CHECK_THROWS_AS(PeriodMatrix{flat}, std::invalid_argument);

    CHECK(PeriodMatrix(MatrixXcd::Identity(3, 3) * 1.0i).min_imag_eigenvalue() ==
          doctest::Approx(1.0));
}

TEST_CASE("sample_generic realizes the documented drawing scheme exactly") {
    const int g = 3;
    const std::uint64_t seed = 12345;
    SplitMix64 stream(seed);
    MatrixXd x = MatrixXd::Zero(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            x(i, j) = stream.uniform(-1.0, 1.0);
            x(j, i) = x(i, j);
        }
    MatrixXd l(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) l(i, j) = stream.uniform(-0.5, 0.5);
    MatrixXd y = MatrixXd::Identity(g, g) + l.transpose() * l;

    PeriodMatrix p = sample_generic(g, seed);
    CHECK(p.real_part() == x);  // bit-for-bit
    CHECK(p.imag_part() == y);
}

TEST_CASE("sample_generic is deterministic and lands in the space") {
    for (int g = 1; g <= 3; ++g) {
        PeriodMatrix a = sample_generic(g, 7);
        PeriodMatrix b = sample_generic(g, 7);
        CHECK(a.matrix() == b.matrix());
        CHECK(a.matrix() != sample_generic(g, 8).matrix());
        CHECK(is_member(a.matrix()));
        // Y = I + L^T L makes every eigenvalue at least 1.
        CHECK(a.min_imag_eigenvalue() >= 1.0 - 1e-12);
        CHECK(a.real_part().cwiseAbs().maxCoeff() <= 1.0);
    }
}

TEST_CASE("symplectic construction enforces M^T J M = J exactly") {
    CHECK_NOTHROW(SymplecticMatrix::identity(2));
    CHECK_NOTHROW(SymplecticMatrix(SymplecticMatrix::standard_form(2)));

    IntMatrix bad = IntMatrix::Identity(4, 4) * 2;
    CHECK_THROWS_AS(SymplecticMatrix{bad}, std::invalid_argument);
    CHECK_THROWS_AS(SymplecticMatrix{IntMatrix::Identity(3, 3)},
                    std::invalid_argument);

    SymplecticMatrix j(SymplecticMatrix::standard_form(2));
    CHECK(j.block_a() == IntMatrix::Zero(2, 2));
    CHECK(j.block_b() == IntMatrix::Identity(2, 2));
    CHECK(j.block_c() == -IntMatrix::Identity(2, 2));
    CHECK(j.block_d() == IntMatrix::Zero(2, 2));
}

TEST_CASE("action of the identity and of the inversion") {
    PeriodMatrix omega = sample_generic(2, 21);
    PeriodMatrix same = act(SymplecticMatrix::identity(2), omega);
    CHECK((same.matrix() - omega.matrix()).cwiseAbs().maxCoeff() < 1e-14);

    // J sends Omega to -Omega^{-1}; i*I is a fixed point.
    PeriodMatrix ii(MatrixXcd::Identity(2, 2) * 1.0i);
    PeriodMatrix moved = act(SymplecticMatrix(SymplecticMatrix::standard_form(2)), ii);
    CHECK((moved.matrix() - ii.matrix()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("translations shift the real part by an integer symmetric matrix") {
    const int g = 2;
    IntMatrix t = IntMatrix::Identity(2 * g, 2 * g);
    t(0, g + 0) = 3;  // B = 3*E_00
    SymplecticMatrix tb(t);
    PeriodMatrix omega = sample_generic(g, 5);
    PeriodMatrix shifted = act(tb, omega);
    MatrixXcd want = omega.matrix();
    want(0, 0) += 3.0;
    CHECK((shifted.matrix() - want).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("GL embedding acts by congruence U Omega U^T") {
    // U = transposition of the two coordinates, embedded as diag(U, U^{-T}).
    IntMatrix m = IntMatrix::Zero(4, 4);
    m(0, 1) = m(1, 0) = 1;
    m(2, 3) = m(3, 2) = 1;
    SymplecticMatrix swap(m);
    PeriodMatrix omega = sample_generic(2, 9);
    PeriodMatrix moved = act(swap, omega);
    MatrixXcd w = omega.matrix();
    MatrixXcd want(2, 2);
    want << w(1, 1), w(1, 0), w(0, 1), w(0, 0);
    CHECK((moved.matrix() - want).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("act is a left action: (M1 M2).Omega = M1.(M2.Omega)") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        SymplecticMatrix m1 = random_word(2, 5, seed);
        SymplecticMatrix m2 = random_word(2, 5, seed + 100);
        PeriodMatrix omega = sample_generic(2, seed + 200);
        PeriodMatrix lhs = act(m1 * m2, omega);
        PeriodMatrix rhs = act(m1, act(m2, omega));
        CHECK((lhs.matrix() - rhs.matrix()).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("standard generators are symplectic and generate nontrivially") {
    for (int g = 1; g <= 3; ++g) {
        auto gens = standard_generators(g);
        CHECK(gens.size() >= 2);
        for (const auto& m : gens) CHECK(m.genus() == g);
    }
    CHECK(random_word(2, 0, 77) == SymplecticMatrix::identity(2));
    CHECK(random_word(3, 6, 42).matrix() == random_word(3, 6, 42).matrix());
    // Words of positive length eventually leave the identity.
    bool moved = false;
    for (std::uint64_t s = 0; s < 4 && !moved; ++s)
        moved = !(random_word(2, 4, s) == SymplecticMatrix::identity(2));
    CHECK(moved);
}

TEST_CASE("level-2 congruence predicate") {
    CHECK(is_level2_congruent(SymplecticMatrix::identity(3)));
    CHECK_FALSE(is_level2_congruent(
        SymplecticMatrix(SymplecticMatrix::standard_form(3))));

    IntMatrix t = IntMatrix::Identity(4, 4);
    t(0, 2) = 1;  // B = E_00: odd entry
    SymplecticMatrix tb(t);
    CHECK_FALSE(is_level2_congruent(tb));
    CHECK(is_level2_congruent(tb * tb));  // B doubles
}

TEST_CASE("products detect 64-bit overflow instead of wrapping") {
    IntMatrix t = IntMatrix::Identity(2, 2);
    t(0, 1) = std::int64_t{1} << 62;
    SymplecticMatrix big(t);  // translation by a huge B is still symplectic
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("block sums assemble and are recognized") {
    PeriodMatrix a = sample_generic(2, 31);
    PeriodMatrix b = sample_generic(1, 32);
    PeriodMatrix s = block_sum({a, b});
    CHECK(s.genus() == 3);
    CHECK(s.matrix().block(0, 0, 2, 2) == a.matrix());
    CHECK(s.matrix()(2, 2) == b.matrix()(0, 0));
    CHECK(s.matrix()(0, 2) == 0.0);
    CHECK(is_block_diagonal(s, {2, 1}));
    CHECK(is_block_diagonal(s, {1, 1, 1}) ==
          (std::abs(a.matrix()(0, 1)) <= kMemberTol));
    CHECK_FALSE(is_block_diagonal(sample_generic(3, 33), {2, 1}, 1e-12));
    CHECK_THROWS_AS(is_block_diagonal(s, {2, 2}), std::invalid_argument);
}

TEST_CASE("symplectic direct sum acts blockwise") {
    SymplecticMatrix m1 = random_word(2, 4, 11);
    SymplecticMatrix m2 = random_word(1, 4, 12);
    SymplecticMatrix m = symplectic_direct_sum(m1, m2);
    CHECK(m.genus() == 3);
    PeriodMatrix o1 = sample_generic(2, 13);
    PeriodMatrix o2 = sample_generic(1, 14);
    PeriodMatrix joint = act(m, block_sum({o1, o2}));
    PeriodMatrix want = block_sum({act(m1, o1), act(m2, o2)});
    CHECK((joint.matrix() - want.matrix()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("acting on a sampled point keeps membership") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        PeriodMatrix omega(random_symmetric_siegel(3, 50 + s));
        SymplecticMatrix w = random_word(3, 5, 60 + s);
        CHECK(is_member(act(w, omega).matrix()));
    }
}

}  // TEST_SUITE
