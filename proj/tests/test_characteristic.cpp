#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "thetaloc/characteristic.hpp"

using namespace thetaloc;

TEST_SUITE("characteristic") {

TEST_CASE("even/odd counts match 2^{g-1}(2^g +- 1) by exhaustion") {
    for (int g = 1; g <= 5; ++g) {
        auto all = enumerate_characteristics(g);
        auto even = enumerate_characteristics(g, Parity::Even);
        auto odd = enumerate_characteristics(g, Parity::Odd);
        const std::uint64_t pow2g = 1ull << g;
        CHECK(all.size() == pow2g * pow2g);
        CHECK(even.size() == (pow2g / 2) * (pow2g + 1));
        CHECK(odd.size() == (pow2g / 2) * (pow2g - 1));
        CHECK(even.size() == even_count(g));
        CHECK(odd.size() == odd_count(g));
    }
    CHECK(even_count(3) == 36);
    CHECK(odd_count(3) == 28);
    CHECK(even_count(2) == 10);
    CHECK(odd_count(2) == 6);
    CHECK(even_count(1) == 3);
    CHECK(odd_count(1) == 1);
}

TEST_CASE("parity is the F2 dot product of the bit vectors") {
    for (const auto& d : enumerate_characteristics(3)) {
        int dot = 0;
        for (int j = 0; j < 3; ++j) dot ^= d.top_bits()[j] & d.bottom_bits()[j];
        CHECK((d.parity() == Parity::Odd) == (dot == 1));
    }
}

TEST_CASE("enumeration is sorted by lex_index and hits every index once") {
    auto all = enumerate_characteristics(2);
    REQUIRE(all.size() == 16);
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(all[i].lex_index() == i);
    CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("compact string order agrees with lex_index order") {
    auto all = enumerate_characteristics(2);
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1].to_compact_string() < all[i].to_compact_string());
}

TEST_CASE("string round trip, both text forms") {
    Characteristic d({1, 1, 0}, {1, 0, 0});
    CHECK(d.to_string() == "g=3:[110|100]");
    CHECK(d.to_compact_string() == "[110|100]");
    CHECK(Characteristic::from_string("g=3:[110|100]") == d);
    CHECK(Characteristic::from_string("[110|100]") == d);
    for (const auto& e : enumerate_characteristics(3))
        CHECK(Characteristic::from_string(e.to_string()) == e);
}

TEST_CASE("malformed strings are rejected") {
    CHECK_THROWS_AS(Characteristic::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Characteristic::from_string("[110100]"), std::invalid_argument);
    CHECK_THROWS_AS(Characteristic::from_string("[11|100]"), std::invalid_argument);
    CHECK_THROWS_AS(Characteristic::from_string("[1a0|100]"), std::invalid_argument);
    CHECK_THROWS_AS(Characteristic::from_string("g=2:[110|100]"), std::invalid_argument);
    CHECK_THROWS_AS(Characteristic::from_string("110|100"), std::invalid_argument);
}

TEST_CASE("constructor validates bit vectors") {
    CHECK_THROWS_AS(Characteristic({2, 0}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Characteristic({0, 1}, {0}), std::invalid_argument);
    CHECK(Characteristic(3) == Characteristic({0, 0, 0}, {0, 0, 0}));
}

TEST_CASE("halves expose the bit values as 0 or 1/2") {
    Characteristic d({1, 0}, {0, 1});
    CHECK(d.top_half(0) == 0.5);
    CHECK(d.top_half(1) == 0.0);
    CHECK(d.bottom_half(0) == 0.0);
    CHECK(d.bottom_half(1) == 0.5);
}

TEST_CASE("restriction keeps the selected coordinates in order") {
    Characteristic d({1, 1, 0}, {1, 0, 0});
    CHECK(d.restricted({0}) == Characteristic({1}, {1}));
    CHECK(d.restricted({2}) == Characteristic({0}, {0}));
    CHECK(d.restricted({0, 1}) == Characteristic({1, 1}, {1, 0}));
    CHECK(d.restricted({2, 0}) == Characteristic({0, 1}, {0, 1}));
    CHECK_THROWS_AS(d.restricted({3}), std::invalid_argument);
}

TEST_CASE("direct_sum and split are mutually inverse") {
    Characteristic a({1, 0}, {1, 1});
    Characteristic b({1}, {0});
    auto s = direct_sum({a, b});
    CHECK(s == Characteristic({1, 0, 1}, {1, 1, 0}));
    auto parts = split(s, {2, 1});
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == a);
    CHECK(parts[1] == b);
    CHECK_THROWS_AS(split(s, {2, 2}), std::invalid_argument);
}

TEST_CASE("parity of a direct sum is the XOR of the parities") {
    for (const auto& a : enumerate_characteristics(2))
        for (const auto& b : enumerate_characteristics(1)) {
            auto s = direct_sum({a, b});
            bool odd = (a.parity() == Parity::Odd) != (b.parity() == Parity::Odd);
            CHECK((s.parity() == Parity::Odd) == odd);
        }
}

TEST_CASE("splitting by singletons recovers the coordinate parities") {
    // An even genus-3 characteristic has an even number of odd coordinates;
    // the vanishing combinatorics later rely on exactly this.
    for (const auto& d : enumerate_characteristics(3, Parity::Even)) {
        auto parts = split(d, {1, 1, 1});
        int odd = 0;
        for (const auto& p : parts) odd += p.parity() == Parity::Odd;
        CHECK(odd % 2 == 0);
    }
}

TEST_CASE("characteristics order strictly and support set membership") {
    auto all = enumerate_characteristics(3);
    std::set<Characteristic> s(all.begin(), all.end());
    CHECK(s.size() == all.size());
    CHECK(s.count(Characteristic({1, 1, 0}, {1, 0, 0})) == 1);
}

}  // TEST_SUITE
