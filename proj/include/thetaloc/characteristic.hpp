#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thetaloc {

enum class Parity { Even, Odd };

// Half-integer theta characteristic δ = (δ′, δ″) for genus g. Coordinate
// values live in {0, 1/2} and are stored as F₂ bits (bit b represents the
// value b/2): top holds δ′, bottom holds δ″. All algebra on characteristics
// (parity, sums, splits) is exact bit arithmetic — no floating point.
class Characteristic {
public:
    // Zero characteristic of the given genus.
    explicit Characteristic(int genus);

    // From explicit bit vectors (entries must be 0 or 1, equal lengths).
    Characteristic(std::vector<std::uint8_t> top, std::vector<std::uint8_t> bottom);

    int genus() const { return static_cast<int>(top_.size()); }
    const std::vector<std::uint8_t>& top_bits() const { return top_; }
    const std::vector<std::uint8_t>& bottom_bits() const { return bottom_; }

    // δ′_j and δ″_j as real halves (0.0 or 0.5).
    double top_half(int j) const { return top_.at(j) * 0.5; }
    double bottom_half(int j) const { return bottom_.at(j) * 0.5; }

    // δ is even iff the F₂ dot product δ′·(δ″)ᵀ of the bit vectors vanishes.
    Parity parity() const;
    bool is_even() const { return parity() == Parity::Even; }

    // Sub-characteristic on an arbitrary position subset (order preserved).
    Characteristic restricted(const std::vector<int>& positions) const;

    // Canonical text form "g=3:[110|100]"; the compact form drops the prefix.
    std::string to_string() const;
    std::string to_compact_string() const;

    // Accepts both "g=3:[110|100]" and "[110|100]" (genus inferred from the
    // bit-string length). Throws std::invalid_argument on malformed input.
    static Characteristic from_string(const std::string& text);

    // Enumeration index: top bits more significant than bottom bits,
    // coordinate 0 the most significant within each group. This is the
    // lexicographic order of the compact string form.
    std::uint64_t lex_index() const;

    bool operator==(const Characteristic&) const = default;
    bool operator<(const Characteristic& other) const;

private:
    std::vector<std::uint8_t> top_, bottom_;
};

// Coordinate-wise concatenation δ₁ ⊕ ... ⊕ δ_n; genus adds up.
Characteristic direct_sum(const std::vector<Characteristic>& parts);

// Inverse of direct_sum for consecutive blocks; sizes must sum to the genus.
std::vector<Characteristic> split(const Characteristic& delta,
                                  const std::vector<int>& block_sizes);

// All 4^g characteristics in lex_index order, optionally filtered by parity.
// Practical bound g ≤ 8.
std::vector<Characteristic> enumerate_characteristics(
    int genus, std::optional<Parity> parity_filter = std::nullopt);

// Closed forms 2^{g-1}(2^g ± 1); the enumeration tests verify them by
// exhaustion.
std::uint64_t even_count(int genus);
std::uint64_t odd_count(int genus);

}  // namespace thetaloc
