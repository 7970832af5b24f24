#pragma once

// Subsets of [n] = {1, ..., n} as 64-bit words: element i is bit i - 1.
// Numeric order of the words is exactly colexicographic order of the sets.

#include <bit>
#include <cstdint>
#include <vector>

namespace crossint {

using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

constexpr Mask full_mask(int n)
{
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask m)
{
    return std::popcount(m);
}

constexpr Mask element_bit(int i)
{
    return Mask{1} << (i - 1);
}

// Next word with the same popcount (Gosper). Undefined past the top word.
constexpr Mask next_colex(Mask m)
{
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    return (((r ^ m) >> 2) / c) | r;
}

// Scatter the low bits of `pattern` onto the set bits of `support`.
constexpr Mask deposit(Mask pattern, Mask support)
{
    Mask out = 0;
    for (Mask bit = 1; support != 0 && pattern != 0; bit <<= 1) {
        const Mask low = support & (~support + 1);
        if (pattern & bit) {
            out |= low;
            pattern &= ~bit;
        }
        support &= support - 1;
    }
    return out;
}

// The set of colex rank `rank` among k-subsets (combinatorial number system).
Mask colex_unrank(std::uint64_t rank, int k);

std::uint64_t colex_rank(Mask m);

// 1-based sorted elements.
std::vector<int> elements(Mask m);

Mask mask_of(const std::vector<int>& elems);

} // namespace crossint
