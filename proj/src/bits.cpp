#include "crossint/bits.hpp"

#include "crossint/exact_arith.hpp"

namespace crossint {

Mask colex_unrank(std::uint64_t rank, int k)
{
    Mask out = 0;
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (c + 1 < kMaxGround && binom64(c + 1, i) <= rank)
            ++c;
        rank -= binom64(c, i);
        out |= Mask{1} << c;
    }
    return out;
}

std::uint64_t colex_rank(Mask m)
{
    std::uint64_t r = 0;
    int i = 1;
    while (m != 0) {
        const int c = std::countr_zero(m);
        r += binom64(c, i);
        ++i;
        m &= m - 1;
    }
    return r;
}

std::vector<int> elements(Mask m)
{
    std::vector<int> out;
    while (m != 0) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

Mask mask_of(const std::vector<int>& elems)
{
    Mask m = 0;
    for (int e : elems)
        m |= element_bit(e);
    return m;
}

} // namespace crossint
