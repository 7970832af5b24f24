#include "crossint/uniform_family.hpp"

#include "crossint/cascade.hpp"
#include "crossint/errors.hpp"

#include <algorithm>
#include <string>

namespace crossint {

UniformFamily::UniformFamily(int n, int k, std::vector<Mask> members)
    : n_(n), k_(k), members_(std::move(members))
{
    if (n < 0 || n > kMaxGround)
        throw InvalidArgument("ground set size " + std::to_string(n) + " outside [0, 64]");
    if (k < 0 || k > n)
        throw InvalidArgument("member size " + std::to_string(k) + " outside [0, n]");
    const Mask ground = full_mask(n);
    for (Mask m : members_) {
        if ((m & ~ground) != 0 || popcount(m) != k)
            throw InvalidArgument("member is not a " + std::to_string(k) + "-subset of ["
                                  + std::to_string(n) + "]");
    }
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw InvalidArgument("duplicate member");
}

bool UniformFamily::contains(Mask m) const
{
    return std::binary_search(members_.begin(), members_.end(), m);
}

UniformFamily colex_segment(const Natural& m, int u, int n)
{
    if (n < 0 || n > kMaxGround || u < 0 || u > n)
        throw InvalidArgument("colex_segment: need 0 <= u <= n <= 64");
    if (m < 0 || m > binom(n, u))
        throw CapacityError("colex_segment: m exceeds C(" + std::to_string(n) + ", "
                            + std::to_string(u) + ")");
    const auto count = m.convert_to<std::uint64_t>();
    std::vector<Mask> out;
    out.reserve(count);
    Mask cur = full_mask(u);
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(cur);
        if (i + 1 < count)
            cur = next_colex(cur);
    }
    return UniformFamily(n, u, std::move(out));
}

UniformFamily shadow(const UniformFamily& f, int v)
{
    if (v < 0 || v > f.k())
        throw InvalidArgument("shadow: need 0 <= v <= k");
    if (v == f.k())
        return f;
    std::vector<Mask> out;
    const Mask last = full_mask(f.k());
    for (Mask member : f.members()) {
        if (v == 0) {
            out.push_back(0);
            break;
        }
        // Walk v-subsets of {0..k-1} and scatter them onto the member's bits.
        for (Mask pattern = full_mask(v); pattern <= last; pattern = next_colex(pattern)) {
            out.push_back(deposit(pattern, member));
            if (pattern == (last & ~full_mask(f.k() - v)))
                break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return UniformFamily(f.n(), v, std::move(out));
}

UniformFamily complement_family(const UniformFamily& f)
{
    const Mask ground = full_mask(f.n());
    std::vector<Mask> out;
    out.reserve(f.size());
    for (Mask m : f.members())
        out.push_back(ground & ~m);
    return UniformFamily(f.n(), f.n() - f.k(), std::move(out));
}

bool is_shadow_tight(const UniformFamily& f, int v)
{
    if (f.k() < 1)
        throw InvalidArgument("is_shadow_tight: need k >= 1");
    if (v < 0 || v > f.k())
        throw InvalidArgument("is_shadow_tight: need 0 <= v <= k");
    const Natural size = f.size();
    const long a = largest_binom_base(size, f.k());
    if (f.empty() || binom(a, f.k()) != size)
        throw NonBinomialSize("is_shadow_tight: |F| = " + size.str() + " is not C(a, "
                              + std::to_string(f.k()) + ")");
    return Natural(shadow(f, v).size()) == binom(a, v);
}

} // namespace crossint
