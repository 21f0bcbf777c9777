#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dgo/bitstring.hpp"
#include "dgo/errors.hpp"
#include "dgo/rng.hpp"

namespace dgo {

struct Interval {
    double lower;
    double upper;
};

struct VariableSpec {
    double lower;
    double upper;
    unsigned bits;
};

// Largest unsigned value representable in a w-bit field.
inline std::uint64_t field_max(unsigned bits) {
    return bits >= 64 ? UINT64_MAX : (std::uint64_t{1} << bits) - 1;
}

// Fixed-point layout over a concatenated bit vector: one contiguous MSB-first
// field per variable, in declaration order. A w-bit field with unsigned value
// u decodes to lower + (upper - lower) * u / (2^w - 1), so both interval ends
// are exactly representable.
class SearchSpace {
public:
    explicit SearchSpace(std::vector<VariableSpec> vars) : vars_(std::move(vars)) {
        if (vars_.empty()) throw encoding_error("search space needs at least one variable");
        offsets_.reserve(vars_.size());
        std::size_t off = 0;
        for (const VariableSpec& v : vars_) {
            if (!std::isfinite(v.lower) || !std::isfinite(v.upper))
                throw encoding_error("variable bounds must be finite");
            if (!(v.lower < v.upper))
                throw encoding_error("variable bounds must satisfy lower < upper");
            if (v.bits < 1 || v.bits > 64)
                throw encoding_error("per-variable bits must be in [1, 64]");
            offsets_.push_back(off);
            off += v.bits;
        }
        total_bits_ = off;
    }

    static SearchSpace uniform(std::span<const Interval> bounds, unsigned bits) {
        std::vector<VariableSpec> vars;
        vars.reserve(bounds.size());
        for (const Interval& b : bounds) vars.push_back({b.lower, b.upper, bits});
        return SearchSpace(std::move(vars));
    }

    std::size_t dimension() const { return vars_.size(); }
    std::size_t total_bits() const { return total_bits_; }
    const std::vector<VariableSpec>& variables() const { return vars_; }
    std::size_t offset(std::size_t i) const { return offsets_[i]; }

    std::vector<double> decode(const BitString& b) const {
        if (b.length() != total_bits_)
            throw encoding_error("bit string length " + std::to_string(b.length()) +
                                 " does not match space total of " + std::to_string(total_bits_));
        std::vector<double> x(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const VariableSpec& v = vars_[i];
            const std::uint64_t u = b.field(offsets_[i], v.bits);
            const long double t =
                static_cast<long double>(u) / static_cast<long double>(field_max(v.bits));
            x[i] = static_cast<double>(v.lower + (v.upper - v.lower) * t);
        }
        return x;
    }

    // Nearest representable point, round-half-up on each integer grid.
    BitString encode_nearest(std::span<const double> x) const {
        if (x.size() != vars_.size())
            throw encoding_error("point dimension does not match search space");
        BitString b(total_bits_);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const VariableSpec& v = vars_[i];
            if (!(x[i] >= v.lower && x[i] <= v.upper))
                throw encoding_error("coordinate " + std::to_string(i) + " is outside its bounds");
            const long double m = static_cast<long double>(field_max(v.bits));
            const long double t = (static_cast<long double>(x[i]) - v.lower) /
                                  (static_cast<long double>(v.upper) - v.lower);
            const long double r = t * m + 0.5L;
            const std::uint64_t u = r >= m ? field_max(v.bits) : static_cast<std::uint64_t>(r);
            b.set_field(offsets_[i], v.bits, u);
        }
        return b;
    }

private:
    std::vector<VariableSpec> vars_;
    std::vector<std::size_t> offsets_;
    std::size_t total_bits_ = 0;
};

// Doubles every variable's width. Each new field keeps the old bits as its
// high half and takes fresh low bits from rng, or zeros when rng is null.
// Either way the decoded point moves by at most one old grid step per
// coordinate (the shift comes from the 2^w - 1 denominator changing).
inline std::pair<SearchSpace, BitString> refine_space(const SearchSpace& space,
                                                      const BitString& b, Rng* rng) {
    if (b.length() != space.total_bits())
        throw encoding_error("bit string length does not match search space");
    std::vector<VariableSpec> vars = space.variables();
    for (VariableSpec& v : vars) {
        if (v.bits > 32)
            throw resolution_error("refining past 64 bits per variable is not representable");
        v.bits *= 2;
    }
    SearchSpace finer(std::move(vars));
    BitString out(finer.total_bits());
    for (std::size_t i = 0; i < space.dimension(); ++i) {
        const unsigned w = space.variables()[i].bits;
        const std::size_t src = space.offset(i);
        const std::size_t dst = finer.offset(i);
        for (unsigned j = 0; j < w; ++j) out.set_bit(dst + j, b.bit(src + j));
        for (unsigned j = 0; j < w; ++j) out.set_bit(dst + w + j, rng ? rng->next_bit() : false);
    }
    return {std::move(finer), std::move(out)};
}

}  // namespace dgo
