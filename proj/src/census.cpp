#include "thetaloc/census.hpp"

#include <stdexcept>

namespace thetaloc {

NerveTable nerve_e1(const NerveInput& input) {
    if (input.ambient_dim < 0)
        throw std::invalid_argument("ambient dimension must be nonnegative");
    NerveTable table;
    table.ambient_dim = input.ambient_dim;
    for (std::size_t s = 0; s < input.level_cell_dims.size(); ++s)
        for (int dim : input.level_cell_dims[s]) {
            if (dim < 0)
                throw std::invalid_argument("cell dimensions must be nonnegative");
            if (dim > input.ambient_dim)
                throw std::invalid_argument(
                    "cell dimension exceeds the ambient dimension");
            table.nonzero.insert({static_cast<int>(s), dim});
        }
    return table;
}

DegreeSupport supported_degrees(const NerveTable& table) {
    DegreeSupport out;
    for (const auto& [s, t] : table.nonzero) out.degrees.insert(s + t);

    // d_r maps (s,t) → (s+r, t−r+1); a nonzero source-target pair means some
    // differential could be nonzero and the support of the abutment is no
    // longer forced by the table alone.
    for (const auto& [s1, t1] : table.nonzero)
        for (const auto& [s2, t2] : table.nonzero) {
            const int r = s2 - s1;
            if (r >= 1 && t2 == t1 - r + 1)
                out.obstructions.push_back(
                    "d_" + std::to_string(r) + " connects (" +
                    std::to_string(s1) + "," + std::to_string(t1) + ") to (" +
                    std::to_string(s2) + "," + std::to_string(t2) + ")");
        }
    // Two positions on one anti-diagonal leave the total-degree contribution
    // ambiguous even when no differential connects them.
    for (int k : out.degrees) {
        int hits = 0;
        for (const auto& [s, t] : table.nonzero)
            if (s + t == k) ++hits;
        if (hits > 1)
            out.obstructions.push_back("total degree " + std::to_string(k) +
                                       " is realized at " +
                                       std::to_string(hits) + " positions");
    }
    out.degeneration_automatic = out.obstructions.empty();
    return out;
}

std::string to_string(HomologyConstraint c) {
    switch (c) {
        case HomologyConstraint::ForcedZero: return "zero";
        case HomologyConstraint::ForcedFree: return "free";
        case HomologyConstraint::Unconstrained: return "unconstrained";
    }
    throw std::invalid_argument("unknown homology constraint");
}

std::vector<HomologyConstraint> gysin_support(
    int ambient_dim, const std::set<int>& boundary_support,
    int complement_vanishing_from) {
    if (ambient_dim < 0)
        throw std::invalid_argument("ambient dimension must be nonnegative");
    std::vector<HomologyConstraint> out(ambient_dim + 1,
                                        HomologyConstraint::Unconstrained);
    for (int k = 0; k <= ambient_dim; ++k) {
        if (k < complement_vanishing_from) continue;
        out[k] = boundary_support.count(ambient_dim - k)
                     ? HomologyConstraint::ForcedFree
                     : HomologyConstraint::ForcedZero;
    }
    return out;
}

BigRational component_count(int genus) {
    if (genus < 2) throw std::invalid_argument("component count needs g >= 2");
    BigInt numerator = BigInt(1) << (genus * genus);  // 2^{g²}
    for (int k = 1; k <= genus; ++k)
        numerator *= (BigInt(1) << (2 * k)) - 1;
    BigInt denominator = 1;
    for (int j = 2; j <= 2 * genus + 2; ++j) denominator *= j;
    BigRational q(numerator, denominator);
    if (genus <= 6 && boost::multiprecision::denominator(q) != 1)
        throw std::logic_error("component count failed integrality for g = " +
                               std::to_string(genus));
    return q;
}

std::vector<BigInt> moduli_poincare_polynomial(int genus) {
    if (genus < 2)
        throw std::invalid_argument("Poincaré polynomial needs g >= 2");
    std::vector<BigInt> poly{1};
    for (int j = 2; j <= 2 * genus; ++j) {
        std::vector<BigInt> next(poly.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += BigInt(j) * poly[i];
        }
        poly = std::move(next);
    }
    return poly;
}

BigInt moduli_betti(int genus) {
    const std::vector<BigInt> poly = moduli_poincare_polynomial(genus);
    const BigInt from_poly = poly.at(1);
    const BigInt closed_form = BigInt(genus) * (2 * genus + 1) - 1;
    if (from_poly != closed_form)
        throw std::logic_error(
            "Betti number: polynomial expansion disagrees with g(2g+1)-1");
    return from_poly;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        throw std::invalid_argument("binomial needs 0 <= k <= n");
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: C(n-k+i, i) is integral at every step
    }
    return result;
}

BigInt genus3_branch_split_count() { return binomial(8, 3); }

}  // namespace thetaloc
