#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace thetaloc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// A stratified union described by its nerve: for each level s = 0,1,…
// (s-fold intersections beyond the first), the dimensions of the cells
// appearing there. Every cell is Euclidean: compactly supported cohomology of
// rank 1 in its top dimension and zero elsewhere.
struct NerveInput {
    int ambient_dim = 0;
    std::vector<std::vector<int>> level_cell_dims;
};

// First page of the nerve spectral sequence, tracked as support flags:
// an entry is either zero or free (possibly of infinite rank).
struct NerveTable {
    int ambient_dim = 0;
    std::set<std::pair<int, int>> nonzero;  // (s,t) positions
};

struct DegreeSupport {
    std::set<int> degrees;  // {s+t : E₁^{s,t} ≠ 0}
    bool degeneration_automatic = false;
    std::vector<std::string> obstructions;  // why not, when not
};

// E₁^{s,t} is nonzero iff level s contains a cell of dimension t.
NerveTable nerve_e1(const NerveInput& input);

// Total degrees carrying nonzero entries. Degeneration at E₁ is reported as
// automatic when the table's shape alone forces every differential to vanish:
// no d_r connects two nonzero entries ((s,t) → (s+r, t−r+1) for r ≥ 1), and
// no total degree is realized at two different positions (so no extension or
// cancellation ambiguity survives to the abutment).
DegreeSupport supported_degrees(const NerveTable& table);

enum class HomologyConstraint { ForcedZero, ForcedFree, Unconstrained };

std::string to_string(HomologyConstraint c);

// What the boundary long exact sequence forces about H_k of an n-dimensional
// closed stratum whose boundary part has compactly supported cohomology
// supported in `boundary_support` and whose open complement has vanishing
// homology from degree `complement_vanishing_from` on. For each k = 0..n:
// k below the vanishing threshold is unconstrained; otherwise H_k sits
// against H_c^{n−k} of the boundary — zero when that group vanishes, free
// when it is free.
std::vector<HomologyConstraint> gysin_support(
    int ambient_dim, const std::set<int>& boundary_support,
    int complement_vanishing_from = 3);

// 2^{g²} ∏_{k=1}^{g} (2^{2k} − 1) / (2g+2)!  as an exact rational.
// Integrality is asserted for g ≤ 6.
BigRational component_count(int genus);

// Coefficients (ascending) of ∏_{j=2}^{2g} (jt + 1), the Poincaré polynomial
// of the hyperplane-complement model of the 2g+2-pointed genus-0 moduli space.
std::vector<BigInt> moduli_poincare_polynomial(int genus);

// First Betti number: the t-coefficient of the polynomial above; cross-checked
// against the closed form g(2g+1) − 1.
BigInt moduli_betti(int genus);

BigInt binomial(int n, int k);

// C(8,3) = 56: the number of 5+3 splits of eight branch points. Exposed as a
// combinatorial helper only; the bijection with degeneration types of the
// genus-3 locus is an input assumption here, not something this library
// derives or verifies.
BigInt genus3_branch_split_count();

}  // namespace thetaloc
