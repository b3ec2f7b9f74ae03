#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thetaloc/characteristic.hpp"
#include "thetaloc/siegel.hpp"
#include "thetaloc/theta.hpp"

namespace thetaloc {

// Ordered partition of the coordinate set {0,…,g−1} into nonempty blocks.
// Blocks need not be contiguous: {{0,2},{1}} is a valid genus-3 grouping.
class Grouping {
  public:
    explicit Grouping(std::vector<std::vector<int>> blocks);

    static Grouping whole(int genus);
    static Grouping singletons(int genus);
    // Genus-3 grouping {pair, singleton}: the pair holds the two coordinates
    // other than singleton_pos, in increasing order, followed by {singleton_pos}.
    static Grouping pair_with_singleton(int singleton_pos);

    int genus() const { return genus_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::vector<int> shape() const;  // block sizes, in block order
    std::string to_string() const;   // e.g. "{0,1}{2}"

    bool operator==(const Grouping& other) const { return blocks_ == other.blocks_; }
    bool operator!=(const Grouping& other) const { return !(*this == other); }
    bool operator<(const Grouping& other) const { return blocks_ < other.blocks_; }

  private:
    std::vector<std::vector<int>> blocks_;
    int genus_ = 0;
};

enum class StratumKind { Generic, Red, RedSing };

std::string to_string(StratumKind kind);
StratumKind stratum_kind_from_string(const std::string& s);

struct StratumPoint {
    StratumKind kind;
    Grouping grouping;  // whole(g) for generic points
    PeriodMatrix data;
};

enum class Classification { Zero, Nonzero, Indeterminate };

struct CharacteristicReading {
    Characteristic delta;
    double magnitude = 0;  // |ϑ_δ(Ω,0)| normalized by the largest lattice term
    Classification cls = Classification::Indeterminate;
};

struct IncidenceReport {
    StratumPoint point;
    std::vector<Characteristic> vanishing_even;       // sorted, all even
    std::vector<CharacteristicReading> readings;      // every even δ
    std::vector<Characteristic> indeterminate;        // empty on clean runs
};

struct LocalIntersectionCensus {
    int components_of_red_at_point = 0;    // [2,1] coordinate groupings: 3
    int hyp_per_red_point = 0;             // identically-vanishing δ per [2,1]: 6
    int incidences_with_multiplicity = 0;  // 3 × 6 = 18
    int distinct_hyp = 0;                  // vanishing δ at a [1,1,1] point: 9
    int containments_per_delta = 0;        // [2,1] strata inside each D_δ: 2
};

// True when every entry of Ω coupling two different blocks is ≤ tol in modulus.
bool grouping_compatible(const PeriodMatrix& omega, const Grouping& grouping,
                         double tol = kMemberTol);

// Assemble a period matrix supported on the grouping's blocks from per-block
// factors (factor j sits on the coordinates of block j; all coupling entries 0).
PeriodMatrix assemble_from_blocks(const Grouping& grouping,
                                  const std::vector<PeriodMatrix>& factors);

// The even genus-3 characteristics whose thetanull vanishes identically on the
// stratum of the grouping: shape [2,1] → both restricted factors odd;
// shape [1,1,1] → exactly two odd genus-1 factors. Sorted.
std::vector<Characteristic> vanishing_set_combinatorial(const Grouping& grouping);

// Evaluate every even thetanull at Ω and classify each magnitude by the
// two-threshold rule (< zero_margin → Zero, > nonzero_margin → Nonzero).
std::vector<CharacteristicReading> classify_even_thetanulls(
    const PeriodMatrix& omega, const ThetaOptions& opts = {});

// Full numeric incidence report at a stratum point. With strict=true any
// indeterminate classification raises indeterminate_error listing the
// offending characteristics; with strict=false they are reported in the
// `indeterminate` field instead.
IncidenceReport vanishing_set_numeric(const StratumPoint& point,
                                      const ThetaOptions& opts = {},
                                      bool strict = true);

// The [2,1] coordinate groupings whose stratum lies inside D_δ: exactly the
// two separating one of δ's odd genus-1 positions. δ must be an even genus-3
// characteristic with exactly two odd positions (i.e. vanishing at the
// [1,1,1] point); anything else is rejected.
std::vector<Grouping> components_containing(const Characteristic& delta);

// The incidence counts at a [1,1,1] point, recomputed from
// vanishing_set_combinatorial and components_containing (with internal
// cross-checks), never hard-coded.
LocalIntersectionCensus local_intersection_census();

// True when the number of numerically vanishing even thetanulls is the same
// at point.data and at act(m, point.data). Indeterminate classifications at
// either point raise indeterminate_error.
bool sp_invariance_check(const StratumPoint& point, const SymplecticMatrix& m,
                         const ThetaOptions& opts = {});

// Draw a pseudorandom point of the requested stratum. Generic points are
// resampled until every even thetanull is clear of the zero margin; the
// genus-2 block of a red point is resampled until all ten even genus-2
// thetanulls are well away from zero and the block is not itself split
// (genericity proxies). Deterministic in (kind, grouping, seed).
StratumPoint sample_stratum_point(StratumKind kind, const Grouping& grouping,
                                  std::uint64_t seed,
                                  const ThetaOptions& opts = {});
StratumPoint sample_stratum_point(StratumKind kind, std::uint64_t seed,
                                  const ThetaOptions& opts = {});

}  // namespace thetaloc
