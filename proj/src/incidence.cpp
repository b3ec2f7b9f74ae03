#include "thetaloc/incidence.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "thetaloc/errors.hpp"
#include "thetaloc/rng.hpp"

namespace thetaloc {

namespace {

// Genericity proxies for the genus-2 block of a red point: all ten even
// thetanulls clearly nonzero, and the block visibly not split. The margins
// are far above the classification thresholds so that products with a
// genus-1 factor stay classifiable.
constexpr double kGenus2NullMargin = 1e-2;
constexpr double kGenus2CouplingMargin = 1e-3;
constexpr int kMaxSampleAttempts = 64;

}  // namespace

Grouping::Grouping(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
    if (blocks_.empty())
        throw std::invalid_argument("grouping needs at least one block");
    std::vector<int> seen;
    for (auto& block : blocks_) {
        if (block.empty())
            throw std::invalid_argument("grouping block may not be empty");
        std::sort(block.begin(), block.end());
        seen.insert(seen.end(), block.begin(), block.end());
    }
    std::sort(seen.begin(), seen.end());
    genus_ = static_cast<int>(seen.size());
    for (int i = 0; i < genus_; ++i)
        if (seen[i] != i)
            throw std::invalid_argument(
                "grouping blocks must partition {0,…,g−1}");
}

Grouping Grouping::whole(int genus) {
    if (genus < 1) throw std::invalid_argument("genus must be positive");
    std::vector<int> all(genus);
    for (int i = 0; i < genus; ++i) all[i] = i;
    return Grouping({all});
}

Grouping Grouping::singletons(int genus) {
    if (genus < 1) throw std::invalid_argument("genus must be positive");
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < genus; ++i) blocks.push_back({i});
    return Grouping(std::move(blocks));
}

Grouping Grouping::pair_with_singleton(int singleton_pos) {
    if (singleton_pos < 0 || singleton_pos > 2)
        throw std::invalid_argument("singleton position must be 0, 1 or 2");
    std::vector<int> pair;
    for (int i = 0; i < 3; ++i)
        if (i != singleton_pos) pair.push_back(i);
    return Grouping({pair, {singleton_pos}});
}

std::vector<int> Grouping::shape() const {
    std::vector<int> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& block : blocks_)
        sizes.push_back(static_cast<int>(block.size()));
    return sizes;
}

std::string Grouping::to_string() const {
    std::string out;
    for (const auto& block : blocks_) {
        out += '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(block[i]);
        }
        out += '}';
    }
    return out;
}

std::string to_string(StratumKind kind) {
    switch (kind) {
        case StratumKind::Generic: return "generic";
        case StratumKind::Red: return "red";
        case StratumKind::RedSing: return "red_sing";
    }
    throw std::invalid_argument("unknown stratum kind");
}

StratumKind stratum_kind_from_string(const std::string& s) {
    if (s == "generic") return StratumKind::Generic;
    if (s == "red") return StratumKind::Red;
    if (s == "red_sing") return StratumKind::RedSing;
    throw std::invalid_argument("unknown stratum kind '" + s +
                                "' (expected generic, red or red_sing)");
}

bool grouping_compatible(const PeriodMatrix& omega, const Grouping& grouping,
                         double tol) {
    const int g = omega.genus();
    if (grouping.genus() != g)
        throw std::invalid_argument("grouping/period matrix genus mismatch");
    std::vector<int> block_of(g, -1);
    for (std::size_t b = 0; b < grouping.blocks().size(); ++b)
        for (int p : grouping.blocks()[b]) block_of[p] = static_cast<int>(b);
    for (int a = 0; a < g; ++a)
        for (int b = a + 1; b < g; ++b)
            if (block_of[a] != block_of[b] &&
                std::abs(omega.matrix()(a, b)) > tol)
                return false;
    return true;
}

PeriodMatrix assemble_from_blocks(const Grouping& grouping,
                                  const std::vector<PeriodMatrix>& factors) {
    if (factors.size() != grouping.blocks().size())
        throw std::invalid_argument("one factor per grouping block required");
    const int g = grouping.genus();
    Eigen::MatrixXcd omega = Eigen::MatrixXcd::Zero(g, g);
    for (std::size_t b = 0; b < factors.size(); ++b) {
        const auto& pos = grouping.blocks()[b];
        if (factors[b].genus() != static_cast<int>(pos.size()))
            throw std::invalid_argument("factor genus does not match block size");
        const Eigen::MatrixXcd& f = factors[b].matrix();
        for (std::size_t r = 0; r < pos.size(); ++r)
            for (std::size_t c = 0; c < pos.size(); ++c)
                omega(pos[r], pos[c]) = f(r, c);
    }
    return PeriodMatrix(omega);
}

std::vector<Characteristic> vanishing_set_combinatorial(const Grouping& grouping) {
    if (grouping.genus() != 3)
        throw std::invalid_argument("vanishing sets are defined for genus 3");
    std::vector<int> sorted_shape = grouping.shape();
    std::sort(sorted_shape.begin(), sorted_shape.end());
    const bool is21 = sorted_shape == std::vector<int>{1, 2};
    const bool is111 = sorted_shape == std::vector<int>{1, 1, 1};
    if (!is21 && !is111)
        throw std::invalid_argument("unsupported grouping shape " +
                                    grouping.to_string() +
                                    " (expected [2,1] or [1,1,1])");
    std::vector<Characteristic> out;
    for (const Characteristic& delta :
         enumerate_characteristics(3, Parity::Even)) {
        int odd_blocks = 0;
        for (const auto& block : grouping.blocks())
            if (delta.restricted(block).parity() == Parity::Odd) ++odd_blocks;
        // [2,1]: both factors odd. [1,1,1]: exactly two of the three odd
        // (evenness of δ forces the third even). Both cases: two odd blocks.
        if (odd_blocks == 2) out.push_back(delta);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CharacteristicReading> classify_even_thetanulls(
    const PeriodMatrix& omega, const ThetaOptions& opts) {
    std::vector<CharacteristicReading> readings;
    for (const Characteristic& delta :
         enumerate_characteristics(omega.genus(), Parity::Even)) {
        const ThetaValue v = eval_thetanull(delta, omega, opts);
        CharacteristicReading r{delta, v.normalized_magnitude(),
                                Classification::Indeterminate};
        if (r.magnitude < opts.zero_margin)
            r.cls = Classification::Zero;
        else if (r.magnitude > opts.nonzero_margin)
            r.cls = Classification::Nonzero;
        readings.push_back(std::move(r));
    }
    return readings;
}

namespace {

void validate_stratum_point(const StratumPoint& point) {
    if (point.data.genus() != 3)
        throw std::invalid_argument("stratum points live in genus 3");
    if (!grouping_compatible(point.data, point.grouping, 1e-9))
        throw std::invalid_argument(
            "stratum point data is not block-diagonal for its grouping");
    std::vector<int> sorted_shape = point.grouping.shape();
    std::sort(sorted_shape.begin(), sorted_shape.end());
    switch (point.kind) {
        case StratumKind::Generic:
            if (sorted_shape != std::vector<int>{3})
                throw std::invalid_argument(
                    "generic points carry the trivial grouping");
            break;
        case StratumKind::Red: {
            if (sorted_shape != std::vector<int>{1, 2})
                throw std::invalid_argument("red points need shape [2,1]");
            for (const auto& block : point.grouping.blocks())
                if (block.size() == 2 &&
                    std::abs(point.data.matrix()(block[0], block[1])) < 1e-6)
                    throw std::invalid_argument(
                        "genus-2 block of a red point is itself split "
                        "(genericity proxy violated)");
            break;
        }
        case StratumKind::RedSing:
            if (sorted_shape != std::vector<int>{1, 1, 1})
                throw std::invalid_argument(
                    "red_sing points need shape [1,1,1]");
            break;
    }
}

}  // namespace

IncidenceReport vanishing_set_numeric(const StratumPoint& point,
                                      const ThetaOptions& opts, bool strict) {
    validate_stratum_point(point);
    IncidenceReport report{point, {}, {}, {}};
    report.readings = classify_even_thetanulls(point.data, opts);
    for (const CharacteristicReading& r : report.readings) {
        if (r.cls == Classification::Zero)
            report.vanishing_even.push_back(r.delta);
        else if (r.cls == Classification::Indeterminate)
            report.indeterminate.push_back(r.delta);
    }
    std::sort(report.vanishing_even.begin(), report.vanishing_even.end());
    std::sort(report.indeterminate.begin(), report.indeterminate.end());
    if (strict && !report.indeterminate.empty()) {
        std::vector<std::string> offenders;
        for (const Characteristic& d : report.indeterminate)
            offenders.push_back(d.to_compact_string());
        throw indeterminate_error(
            "thetanull magnitudes fall between the classification margins",
            offenders);
    }
    return report;
}

std::vector<Grouping> components_containing(const Characteristic& delta) {
    if (delta.genus() != 3)
        throw std::invalid_argument("components_containing expects genus 3");
    if (delta.parity() != Parity::Even)
        throw std::invalid_argument("characteristic must be even");
    std::vector<int> odd_positions;
    for (int j = 0; j < 3; ++j)
        if (delta.restricted({j}).parity() == Parity::Odd)
            odd_positions.push_back(j);
    if (odd_positions.size() != 2)
        throw std::invalid_argument(
            "characteristic " + delta.to_compact_string() +
            " does not vanish at the [1,1,1] point (needs exactly two odd "
            "positions)");
    // A [2,1] stratum lies in D_δ iff both restricted factors are odd; the
    // singleton must be one of δ's odd positions, and then the pair holds the
    // other odd position plus the even one, hence has odd parity as well.
    std::vector<Grouping> out;
    for (int p : odd_positions) out.push_back(Grouping::pair_with_singleton(p));
    return out;
}

LocalIntersectionCensus local_intersection_census() {
    LocalIntersectionCensus census;
    std::vector<std::vector<Characteristic>> red_sets;
    for (int s = 0; s < 3; ++s)
        red_sets.push_back(
            vanishing_set_combinatorial(Grouping::pair_with_singleton(s)));
    census.components_of_red_at_point = static_cast<int>(red_sets.size());
    census.hyp_per_red_point = static_cast<int>(red_sets[0].size());
    for (const auto& set : red_sets)
        if (static_cast<int>(set.size()) != census.hyp_per_red_point)
            throw std::logic_error("[2,1] vanishing sets differ in size");
    census.incidences_with_multiplicity =
        census.components_of_red_at_point * census.hyp_per_red_point;

    const std::vector<Characteristic> sing_set =
        vanishing_set_combinatorial(Grouping::singletons(3));
    census.distinct_hyp = static_cast<int>(sing_set.size());

    int total_containments = 0;
    census.containments_per_delta = -1;
    for (const Characteristic& delta : sing_set) {
        const std::vector<Grouping> comps = components_containing(delta);
        // cross-check: the containment answer must agree with membership in
        // the per-grouping identically-vanishing sets
        for (int s = 0; s < 3; ++s) {
            const bool in_set =
                std::binary_search(red_sets[s].begin(), red_sets[s].end(),
                                   delta);
            const bool claimed =
                std::find(comps.begin(), comps.end(),
                          Grouping::pair_with_singleton(s)) != comps.end();
            if (in_set != claimed)
                throw std::logic_error(
                    "containment disagrees with identically-vanishing sets");
        }
        const int n = static_cast<int>(comps.size());
        if (census.containments_per_delta == -1)
            census.containments_per_delta = n;
        else if (census.containments_per_delta != n)
            throw std::logic_error("containment counts differ across δ");
        total_containments += n;
    }
    if (total_containments != census.incidences_with_multiplicity)
        throw std::logic_error("double count 3×6 = Σ_δ containments failed");
    return census;
}

bool sp_invariance_check(const StratumPoint& point, const SymplecticMatrix& m,
                         const ThetaOptions& opts) {
    if (m.genus() != point.data.genus())
        throw std::invalid_argument("symplectic matrix genus mismatch");
    const PeriodMatrix moved = act(m, point.data);
    const auto before = classify_even_thetanulls(point.data, opts);
    const auto after = classify_even_thetanulls(moved, opts);
    std::vector<std::string> offenders;
    int count_before = 0, count_after = 0;
    for (const auto& r : before) {
        if (r.cls == Classification::Indeterminate)
            offenders.push_back(r.delta.to_compact_string() + "@base");
        if (r.cls == Classification::Zero) ++count_before;
    }
    for (const auto& r : after) {
        if (r.cls == Classification::Indeterminate)
            offenders.push_back(r.delta.to_compact_string() + "@moved");
        if (r.cls == Classification::Zero) ++count_after;
    }
    if (!offenders.empty())
        throw indeterminate_error(
            "indeterminate thetanull classification during invariance check",
            offenders);
    return count_before == count_after;
}

StratumPoint sample_stratum_point(StratumKind kind, const Grouping& grouping,
                                  std::uint64_t seed,
                                  const ThetaOptions& opts) {
    if (grouping.genus() != 3)
        throw std::invalid_argument("stratum sampling is genus-3 only");
    std::vector<int> sorted_shape = grouping.shape();
    std::sort(sorted_shape.begin(), sorted_shape.end());
    SplitMix64 stream(seed);

    switch (kind) {
        case StratumKind::Generic: {
            if (sorted_shape != std::vector<int>{3})
                throw std::invalid_argument(
                    "generic points carry the trivial grouping");
            for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
                PeriodMatrix omega = sample_generic(3, stream.next());
                bool clear = true;
                for (const auto& r : classify_even_thetanulls(omega, opts))
                    if (r.cls != Classification::Nonzero) clear = false;
                if (clear) return StratumPoint{kind, grouping, omega};
            }
            throw resample_error(
                "could not sample a generic point clear of all vanishing loci");
        }
        case StratumKind::Red: {
            if (sorted_shape != std::vector<int>{1, 2})
                throw std::invalid_argument("red points need shape [2,1]");
            for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
                PeriodMatrix g2 = sample_generic(2, stream.next());
                if (std::abs(g2.matrix()(0, 1)) < kGenus2CouplingMargin)
                    continue;
                bool clear = true;
                for (const auto& r : classify_even_thetanulls(g2, opts))
                    if (r.magnitude < kGenus2NullMargin) clear = false;
                if (!clear) continue;
                const PeriodMatrix tau = sample_generic(1, stream.next());
                std::vector<PeriodMatrix> factors;
                for (const auto& block : grouping.blocks())
                    factors.push_back(block.size() == 2 ? g2 : tau);
                return StratumPoint{kind, grouping,
                                    assemble_from_blocks(grouping, factors)};
            }
            throw resample_error(
                "could not sample a generic genus-2 block for a red point");
        }
        case StratumKind::RedSing: {
            if (sorted_shape != std::vector<int>{1, 1, 1})
                throw std::invalid_argument(
                    "red_sing points need shape [1,1,1]");
            std::vector<PeriodMatrix> factors;
            for (int j = 0; j < 3; ++j)
                factors.push_back(sample_generic(1, stream.next()));
            return StratumPoint{kind, grouping,
                                assemble_from_blocks(grouping, factors)};
        }
    }
    throw std::invalid_argument("unknown stratum kind");
}

StratumPoint sample_stratum_point(StratumKind kind, std::uint64_t seed,
                                  const ThetaOptions& opts) {
    switch (kind) {
        case StratumKind::Generic:
            return sample_stratum_point(kind, Grouping::whole(3), seed, opts);
        case StratumKind::Red:
            return sample_stratum_point(kind, Grouping::pair_with_singleton(2),
                                        seed, opts);
        case StratumKind::RedSing:
            return sample_stratum_point(kind, Grouping::singletons(3), seed,
                                        opts);
    }
    throw std::invalid_argument("unknown stratum kind");
}

}  // namespace thetaloc
