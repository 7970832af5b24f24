#include "crossint/cascade.hpp"

#include "crossint/errors.hpp"

#include <limits>
#include <string>

namespace crossint {

namespace {

using u128 = unsigned __int128;

// min(C(a, u), cap + 1) without overflow, for u >= 2 and a < 2^32.
std::uint64_t binom_capped(long a, int u, std::uint64_t cap)
{
    if (a < u)
        return 0;
    const long k = std::min<long>(u, a - u);
    u128 r = 1;
    for (long i = 1; i <= k; ++i) {
        r = r * static_cast<u128>(a - k + i) / static_cast<u128>(i);
        if (r > cap)
            return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

long largest_base_small(std::uint64_t m, int u)
{
    long lo = u;
    long hi = u + 1;
    while (binom_capped(hi, u, m) <= m) {
        lo = hi;
        hi *= 2;
    }
    // C(lo, u) <= m < C(hi, u)
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        if (binom_capped(mid, u, m) <= m)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

long largest_base_big(const Natural& m, int u)
{
    long lo = u;
    long hi = u + 1;
    while (binom(hi, u) <= m) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        if (binom(mid, u) <= m)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace

Natural CascadeForm::value() const
{
    Natural v = 0;
    for (const auto& term : terms)
        v += binom(term.a, term.level);
    return v;
}

bool CascadeForm::well_formed() const
{
    if (u < 1 || terms.empty())
        return false;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].level != u - static_cast<int>(i))
            return false;
        if (i > 0 && !(terms[i - 1].a > terms[i].a))
            return false;
    }
    const auto& last = terms.back();
    return last.level >= 1 && last.a >= last.level;
}

long largest_binom_base(const Natural& m, int u)
{
    if (u < 1)
        throw InvalidArgument("largest_binom_base: u must be >= 1");
    if (m < 1)
        return u - 1;
    if (u == 1) {
        if (m > std::numeric_limits<long>::max())
            throw CapacityError("largest_binom_base: m too large for level 1");
        return m.convert_to<long>();
    }
    if (m < (Natural(1) << 62))
        return largest_base_small(m.convert_to<std::uint64_t>(), u);
    return largest_base_big(m, u);
}

CascadeForm cascade_decompose(const Natural& m, int u)
{
    if (m < 1 || u < 1)
        throw InvalidArgument("cascade_decompose: need m >= 1 and u >= 1");
    CascadeForm c{u, {}};
    Natural rest = m;
    for (int level = u; level >= 1 && rest > 0; --level) {
        const long a = largest_binom_base(rest, level);
        c.terms.push_back({a, level});
        rest -= binom(a, level);
    }
    return c;
}

TruncatedCascade truncate_cascade(const CascadeForm& c, int s)
{
    if (!c.well_formed())
        throw InvalidArgument("truncate_cascade: malformed cascade");
    TruncatedCascade tc;
    tc.u = c.u;
    tc.s = s;
    tc.m = c.value();
    if (s == kDegenerateTruncation) {
        const long top = c.terms.front().a;
        tc.x = solve_binom_x(tc.m, c.u, static_cast<double>(top), static_cast<double>(top + 1));
        return tc;
    }
    if (s < 0 || s >= c.t())
        throw InvalidTruncation("truncate_cascade: s = " + std::to_string(s) + " outside [0, "
                                + std::to_string(c.t()) + ")");
    tc.kept.assign(c.terms.begin(), c.terms.begin() + s + 1);
    Natural dropped = 0;
    for (std::size_t i = static_cast<std::size_t>(s) + 1; i < c.terms.size(); ++i)
        dropped += binom(c.terms[i].a, c.terms[i].level);
    const auto& first_dropped = c.terms[static_cast<std::size_t>(s) + 1];
    tc.x = solve_binom_x(dropped, tc.tail_level(), static_cast<double>(first_dropped.a),
                         static_cast<double>(c.terms[static_cast<std::size_t>(s)].a));
    return tc;
}

Natural shadow_lower_bound(const Natural& m, int u, int v)
{
    if (v < 1 || v > u)
        throw InvalidArgument("shadow_lower_bound: need 1 <= v <= u");
    if (m < 1)
        throw InvalidArgument("shadow_lower_bound: need m >= 1");
    if (v == u)
        return m;
    const CascadeForm c = cascade_decompose(m, u);
    Natural total = 0;
    for (const auto& term : c.terms)
        total += binom(term.a, term.level - (u - v));
    return total;
}

double lovasz_bound(const TruncatedCascade& tc, int v)
{
    if (v < 1 || v >= tc.u)
        throw InvalidArgument("lovasz_bound: need 1 <= v < u");
    double total = 0.0;
    for (const auto& term : tc.kept)
        total += to_double(binom(term.a, term.level - (tc.u - v)));
    const int tail = v - tc.s - 1;
    if (tail >= 0)
        total += gen_binom(tc.x, tail);
    return total;
}

Natural kk_cross_bound(int n, int k, int l, const Natural& m)
{
    if (k < 1 || l < 1 || k > n || l > n)
        throw InvalidArgument("kk_cross_bound: need 1 <= k, l <= n");
    if (m < 0 || m > binom(n, k))
        throw InvalidArgument("kk_cross_bound: m outside [0, C(n, k)]");
    const Natural all = binom(n, l);
    if (m == 0 || l > n - k)
        return all;
    return all - shadow_lower_bound(m, n - k, l);
}

} // namespace crossint
