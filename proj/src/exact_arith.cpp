#include "crossint/exact_arith.hpp"

#include "crossint/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace crossint {

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds:
        return "holds";
    case Verdict::fails:
        return "fails";
    case Verdict::undecidable:
        return "undecidable";
    }
    return "?";
}

Verdict strictly_less(double lhs, double rhs, double tol)
{
    if (lhs < rhs - tol)
        return Verdict::holds;
    if (lhs > rhs + tol)
        return Verdict::fails;
    return Verdict::undecidable;
}

Natural binom(long n, long k)
{
    if (n < 0)
        throw InvalidArgument("binom: negative n = " + std::to_string(n));
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Natural r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

struct PascalTable {
    std::array<std::array<std::uint64_t, 65>, 65> c{};
    PascalTable()
    {
        for (int n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const PascalTable& pascal()
{
    static const PascalTable table;
    return table;
}

} // namespace

std::uint64_t binom64(int n, int k)
{
    if (n < 0 || n > 64)
        throw InvalidArgument("binom64: n out of range: " + std::to_string(n));
    if (k < 0 || k > n)
        return 0;
    return pascal().c[n][k];
}

double gen_binom(double x, int t)
{
    if (t < 0)
        throw InvalidArgument("gen_binom: negative t");
    if (t == 0)
        return 1.0;
    if (x < t)
        return 0.0;
    // Each partial product is C(x - t + i, i); exact for integer x below 2^53.
    double r = 1.0;
    for (int i = 1; i <= t; ++i)
        r = r * (x - t + i) / i;
    return r;
}

double solve_binom_x(const Natural& m, int r, double lo, double hi, double tol)
{
    if (r < 1)
        throw InvalidArgument("solve_binom_x: r must be >= 1");
    const double target = to_double(m);
    const double slack = 1e-12 * std::max(1.0, target);
    if (!(lo <= hi) || gen_binom(lo, r) > target + slack || gen_binom(hi, r) < target - slack)
        throw NoRootError("solve_binom_x: [" + std::to_string(lo) + ", " + std::to_string(hi)
                          + "] does not bracket m");
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi)
            break;
        if (gen_binom(mid, r) < target)
            lo = mid;
        else
            hi = mid;
    }
    const double nearest = std::round(hi);
    if (std::abs(nearest - hi) <= 1e-6 && nearest >= r && binom(static_cast<long>(nearest), r) == m)
        return nearest;
    return hi;
}

double to_double(const Natural& v)
{
    return v.convert_to<double>();
}

double to_double(const ExactRational& v)
{
    return ratio_to_double(boost::multiprecision::numerator(v), boost::multiprecision::denominator(v));
}

double ratio_to_double(const Natural& num, const Natural& den)
{
    if (den == 0)
        throw InvalidArgument("ratio_to_double: zero denominator");
    if (num == 0)
        return 0.0;
    const bool negative = (num < 0) != (den < 0);
    const Natural a = abs(num);
    const Natural b = abs(den);
    // Scale so that the integer quotient carries about 64 significant bits.
    const long shift = static_cast<long>(msb(b)) - static_cast<long>(msb(a)) + 64;
    Natural q = shift >= 0 ? Natural((a << shift) / b) : Natural(a / (b << -shift));
    const double r = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
    return negative ? -r : r;
}

namespace {

Natural parse_integer(std::string_view s, std::string_view whole)
{
    if (s.empty())
        throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        i = 1;
    }
    if (i == s.size())
        throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
    Natural v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
        v = v * 10 + (s[i] - '0');
    }
    return negative ? Natural(-v) : v;
}

} // namespace

ExactRational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return ExactRational(parse_integer(text, text));
    const Natural p = parse_integer(text.substr(0, slash), text);
    const Natural q = parse_integer(text.substr(slash + 1), text);
    if (q == 0)
        throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    return ExactRational(p, q);
}

std::string to_string(const ExactRational& v)
{
    const Natural& num = boost::multiprecision::numerator(v);
    const Natural& den = boost::multiprecision::denominator(v);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

} // namespace crossint
