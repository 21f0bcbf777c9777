#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dgo/rng.hpp"

namespace dgo {

// Fixed-length bit string, most significant bit first: index 0 is the leftmost
// bit of the printed form. Length changes only through refine().
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t length) : bits_(length, 0) {}

    static BitString from_string(std::string_view s) {
        BitString b(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            assert(s[i] == '0' || s[i] == '1');
            b.bits_[i] = (s[i] == '1');
        }
        return b;
    }

    static BitString random(std::size_t length, Rng& rng) {
        BitString b(length);
        for (auto& bit : b.bits_) bit = rng.next_bit();
        return b;
    }

    std::size_t length() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    bool bit(std::size_t i) const {
        assert(i < bits_.size());
        return bits_[i] != 0;
    }

    void set_bit(std::size_t i, bool v) {
        assert(i < bits_.size());
        bits_[i] = v;
    }

    void flip_bit(std::size_t i) {
        assert(i < bits_.size());
        bits_[i] ^= 1;
    }

    void flip_range(std::size_t start, std::size_t count) {
        assert(start + count <= bits_.size());
        for (std::size_t i = start; i < start + count; ++i) bits_[i] ^= 1;
    }

    // Bits [start, start+width) read as an unsigned integer, MSB first.
    std::uint64_t field(std::size_t start, std::size_t width) const {
        assert(width >= 1 && width <= 64 && start + width <= bits_.size());
        std::uint64_t u = 0;
        for (std::size_t i = 0; i < width; ++i) u = (u << 1) | bits_[start + i];
        return u;
    }

    void set_field(std::size_t start, std::size_t width, std::uint64_t u) {
        assert(width >= 1 && width <= 64 && start + width <= bits_.size());
        for (std::size_t i = 0; i < width; ++i)
            bits_[start + width - 1 - i] = static_cast<std::uint8_t>((u >> i) & 1);
    }

    std::string to_string() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) s[i] = '1';
        return s;
    }

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// g[0] = b[0], g[i] = b[i-1] xor b[i]: binary-reflected Gray code over the
// whole string regardless of any variable-field boundaries inside it.
inline BitString gray_encode(const BitString& b) {
    BitString g(b.length());
    bool prev = false;
    for (std::size_t i = 0; i < b.length(); ++i) {
        const bool cur = b.bit(i);
        g.set_bit(i, cur != prev);
        prev = cur;
    }
    return g;
}

// Inverse transform: b[i] = xor of g[0..i] (running prefix parity).
inline BitString gray_decode(const BitString& g) {
    BitString b(g.length());
    bool acc = false;
    for (std::size_t i = 0; i < g.length(); ++i) {
        acc = (acc != g.bit(i));
        b.set_bit(i, acc);
    }
    return b;
}

struct Segment {
    std::size_t start;
    std::size_t len;
    std::size_t node_id;  // position in the breadth-first enumeration

    friend bool operator==(const Segment&, const Segment&) = default;
};

// Binary subdivision of [0, length): the whole range, then halves, quarters,
// down to single bits. Odd splits give the left child the extra bit. The
// breadth-first, left-to-right enumeration has exactly 2*length - 1 nodes.
inline std::vector<Segment> segment_tree(std::size_t length) {
    assert(length >= 1);
    std::vector<Segment> out;
    out.reserve(2 * length - 1);
    out.push_back({0, length, 0});
    for (std::size_t head = 0; head < out.size(); ++head) {
        const Segment s = out[head];
        if (s.len >= 2) {
            const std::size_t left = (s.len + 1) / 2;
            out.push_back({s.start, left, out.size()});
            out.push_back({s.start + left, s.len - left, out.size()});
        }
    }
    return out;
}

inline BitString invert_segment(BitString g, const Segment& s) {
    g.flip_range(s.start, s.len);
    return g;
}

enum class ChildTransform {
    gray_code,     // encode whole string, invert segment, decode whole string
    plain_binary,  // invert the raw segment bits; kept for ablation runs
};

// One child per segment of segment_tree(parent.length), in enumeration order.
inline std::vector<BitString> generate_children(
    const BitString& parent, ChildTransform transform = ChildTransform::gray_code) {
    const std::vector<Segment> segments = segment_tree(parent.length());
    std::vector<BitString> children;
    children.reserve(segments.size());
    if (transform == ChildTransform::gray_code) {
        const BitString g = gray_encode(parent);
        for (const Segment& s : segments)
            children.push_back(gray_decode(invert_segment(g, s)));
    } else {
        for (const Segment& s : segments)
            children.push_back(invert_segment(parent, s));
    }
    return children;
}

// Concatenation b || extra: the new bits become the low end of the string.
inline BitString refine(const BitString& b, const BitString& extra) {
    assert(extra.length() >= 1);
    BitString out(b.length() + extra.length());
    for (std::size_t i = 0; i < b.length(); ++i) out.set_bit(i, b.bit(i));
    for (std::size_t i = 0; i < extra.length(); ++i) out.set_bit(b.length() + i, extra.bit(i));
    return out;
}

}  // namespace dgo
