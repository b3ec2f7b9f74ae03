#include "thetaloc/characteristic.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetaloc {

namespace {

constexpr int kMaxGenus = 32;        // lex_index needs 2g bits
constexpr int kMaxEnumerateGenus = 8;

void check_genus(int genus) {
    if (genus < 1 || genus > kMaxGenus)
        throw std::invalid_argument("characteristic genus must be in [1, " +
                                    std::to_string(kMaxGenus) + "], got " +
                                    std::to_string(genus));
}

void check_bits(const std::vector<std::uint8_t>& bits, const char* which) {
    for (auto b : bits)
        if (b > 1)
            throw std::invalid_argument(std::string(which) +
                                        " bit vector entries must be 0 or 1");
}

}  // namespace

Characteristic::Characteristic(int genus) {
    check_genus(genus);
    top_.assign(genus, 0);
    bottom_.assign(genus, 0);
}

Characteristic::Characteristic(std::vector<std::uint8_t> top,
                               std::vector<std::uint8_t> bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.size() != bottom_.size())
        throw std::invalid_argument("top/bottom bit vectors differ in length");
    check_genus(static_cast<int>(top_.size()));
    check_bits(top_, "top");
    check_bits(bottom_, "bottom");
}

Parity Characteristic::parity() const {
    unsigned dot = 0;
    for (std::size_t j = 0; j < top_.size(); ++j) dot ^= (top_[j] & bottom_[j]);
    return dot ? Parity::Odd : Parity::Even;
}

Characteristic Characteristic::restricted(const std::vector<int>& positions) const {
    if (positions.empty())
        throw std::invalid_argument("restriction needs at least one position");
    std::vector<std::uint8_t> t, b;
    t.reserve(positions.size());
    b.reserve(positions.size());
    for (int p : positions) {
        if (p < 0 || p >= genus())
            throw std::invalid_argument("restriction position out of range");
        t.push_back(top_[p]);
        b.push_back(bottom_[p]);
    }
    return Characteristic(std::move(t), std::move(b));
}

std::string Characteristic::to_compact_string() const {
    std::string s = "[";
    for (auto b : top_) s += static_cast<char>('0' + b);
    s += '|';
    for (auto b : bottom_) s += static_cast<char>('0' + b);
    s += ']';
    return s;
}

std::string Characteristic::to_string() const {
    return "g=" + std::to_string(genus()) + ":" + to_compact_string();
}

Characteristic Characteristic::from_string(const std::string& text) {
    std::string body = text;
    auto colon = text.find(':');
    long declared_genus = -1;
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        if (head.size() < 3 || head[0] != 'g' || head[1] != '=')
            throw std::invalid_argument("characteristic prefix must be \"g=<n>\": " + text);
        try {
            declared_genus = std::stol(head.substr(2));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad genus in characteristic: " + text);
        }
        body = text.substr(colon + 1);
    }
    if (body.size() < 5 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("characteristic must look like [110|100]: " + text);
    const auto bar = body.find('|');
    if (bar == std::string::npos)
        throw std::invalid_argument("characteristic missing '|' separator: " + text);
    auto parse_bits = [&](std::size_t from, std::size_t to) {
        std::vector<std::uint8_t> bits;
        for (std::size_t i = from; i < to; ++i) {
            if (body[i] != '0' && body[i] != '1')
                throw std::invalid_argument("characteristic bits must be 0/1: " + text);
            bits.push_back(static_cast<std::uint8_t>(body[i] - '0'));
        }
        return bits;
    };
    auto top = parse_bits(1, bar);
    auto bottom = parse_bits(bar + 1, body.size() - 1);
    if (top.size() != bottom.size())
        throw std::invalid_argument("top/bottom lengths differ: " + text);
    if (declared_genus >= 0 && declared_genus != static_cast<long>(top.size()))
        throw std::invalid_argument("declared genus does not match bit length: " + text);
    return Characteristic(std::move(top), std::move(bottom));
}

std::uint64_t Characteristic::lex_index() const {
    std::uint64_t idx = 0;
    for (auto b : top_) idx = (idx << 1) | b;
    for (auto b : bottom_) idx = (idx << 1) | b;
    return idx;
}

bool Characteristic::operator<(const Characteristic& other) const {
    if (genus() != other.genus()) return genus() < other.genus();
    return lex_index() < other.lex_index();
}

Characteristic direct_sum(const std::vector<Characteristic>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum of empty list");
    std::vector<std::uint8_t> top, bottom;
    for (const auto& p : parts) {
        top.insert(top.end(), p.top_bits().begin(), p.top_bits().end());
        bottom.insert(bottom.end(), p.bottom_bits().begin(), p.bottom_bits().end());
    }
    return Characteristic(std::move(top), std::move(bottom));
}

std::vector<Characteristic> split(const Characteristic& delta,
                                  const std::vector<int>& block_sizes) {
    long total = 0;
    for (int s : block_sizes) {
        if (s <= 0) throw std::invalid_argument("block sizes must be positive");
        total += s;
    }
    if (total != delta.genus())
        throw std::invalid_argument("block sizes sum to " + std::to_string(total) +
                                    ", expected genus " + std::to_string(delta.genus()));
    std::vector<Characteristic> parts;
    int at = 0;
    for (int s : block_sizes) {
        std::vector<int> positions(s);
        for (int j = 0; j < s; ++j) positions[j] = at + j;
        parts.push_back(delta.restricted(positions));
        at += s;
    }
    return parts;
}

std::vector<Characteristic> enumerate_characteristics(
    int genus, std::optional<Parity> parity_filter) {
    check_genus(genus);
    if (genus > kMaxEnumerateGenus)
        throw std::invalid_argument("enumeration supported for genus <= " +
                                    std::to_string(kMaxEnumerateGenus));
    const std::uint64_t n = 1ull << (2 * genus);
    std::vector<Characteristic> out;
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        std::vector<std::uint8_t> top(genus), bottom(genus);
        for (int j = 0; j < genus; ++j) {
            top[j] = static_cast<std::uint8_t>((idx >> (2 * genus - 1 - j)) & 1);
            bottom[j] = static_cast<std::uint8_t>((idx >> (genus - 1 - j)) & 1);
        }
        Characteristic delta(std::move(top), std::move(bottom));
        if (parity_filter && delta.parity() != *parity_filter) continue;
        out.push_back(std::move(delta));
    }
    return out;
}

std::uint64_t even_count(int genus) {
    check_genus(genus);
    return (1ull << (genus - 1)) * ((1ull << genus) + 1);
}

std::uint64_t odd_count(int genus) {
    check_genus(genus);
    return (1ull << (genus - 1)) * ((1ull << genus) - 1);
}

}  // namespace thetaloc
