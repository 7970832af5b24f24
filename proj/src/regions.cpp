#include "crossint/regions.hpp"

#include "crossint/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <random>

namespace crossint {

namespace {

void require_unit(double x, const char* name)
{
    if (!(x > 0 && x < 1))
        throw InvalidArgument(fmt::format("{} = {} outside (0, 1)", name, x));
}

void require_half(double alpha)
{
    if (!(alpha > 0 && alpha < 0.5))
        throw InvalidArgument(fmt::format("alpha = {} outside (0, 1/2)", alpha));
}

// log of (a^j (1-a)) / (1 + a^j (1-a)).
double log_ratio(double alpha, int j)
{
    const double t = std::pow(alpha, j) * (1 - alpha);
    return j * std::log(alpha) + std::log1p(-alpha) - std::log1p(t);
}

// Lower bound 1 - (a^j (1-a))^(1/(j+1)) for e_j.
double e_j_lower(double alpha, int j)
{
    return -std::expm1((j * std::log(alpha) + std::log1p(-alpha)) / (j + 1));
}

// gen_binom(x, t) / C(n, u) for t <= u <= n as a product of ratios near one.
double binom_ratio(double x, int t, int n, int u)
{
    if (x < t)
        return 0;
    double r = 1;
    for (int i = 1; i <= t; ++i)
        r *= (x - t + i) / (n - u + i);
    for (int i = t + 1; i <= u; ++i)
        r *= static_cast<double>(i) / (n - u + i);
    return r;
}

} // namespace

RegionPoint::RegionPoint(double a, double b) : alpha(a), beta(b)
{
    require_unit(a, "alpha");
    require_unit(b, "beta");
}

double e_j(double alpha, int j)
{
    require_unit(alpha, "alpha");
    if (j < 0)
        throw InvalidArgument("e_j: j must be nonnegative");
    return -std::expm1(log_ratio(alpha, j) / (j + 1));
}

Verdict boundary_verdict(double alpha, double beta, int j, double tol)
{
    require_unit(alpha, "alpha");
    require_unit(beta, "beta");
    if (j < 0)
        throw InvalidArgument("boundary_condition: j must be nonnegative");
    const double lhs = (1 + (1 - alpha) * std::pow(alpha, j)) * -std::expm1((j + 1) * std::log1p(-beta));
    return strictly_less(lhs, 1.0, tol);
}

bool boundary_condition(double alpha, double beta, int j, double tol)
{
    return boundary_verdict(alpha, beta, j, tol) == Verdict::holds;
}

bool in_omega(double alpha, double beta)
{
    return alpha > 0 && beta > 0.5 && alpha + beta < 1;
}

bool in_omega_prime(int n, int k, int l)
{
    return k > 0 && 2 * l > n && k + l < n;
}

DeltaBound delta_bound(double alpha, int j_cap, int hard_limit)
{
    require_half(alpha);
    if (j_cap < 0)
        throw InvalidArgument("delta_bound: j_cap must be nonnegative");
    DeltaBound out{std::numeric_limits<double>::infinity(), -1, -1};
    for (int j = 0;; ++j) {
        if (j > j_cap && e_j_lower(alpha, j) > out.value)
            return out;
        if (j > hard_limit)
            throw NoRootError(fmt::format("delta_bound: tail not certified by j = {} at alpha = {}", hard_limit, alpha));
        const double e = e_j(alpha, j);
        if (e < out.value) {
            out.value = e;
            out.argmin = j;
        }
        out.explicit_through = j;
    }
}

Verdict delta_verdict(double alpha, double beta, int j_cap, double tol)
{
    if (!in_omega(alpha, beta))
        return Verdict::fails;
    return strictly_less(beta, delta_bound(alpha, j_cap).value, tol);
}

bool in_delta(double alpha, double beta, int j_cap, double tol)
{
    const Verdict v = delta_verdict(alpha, beta, j_cap, tol);
    if (v == Verdict::undecidable)
        throw UndecidableAtTolerance(fmt::format("({}, {}) lies within {} of the boundary of Delta", alpha, beta, tol));
    return v == Verdict::holds;
}

namespace {

void require_omega_prime(int n, int k, int l)
{
    if (!in_omega_prime(n, k, l))
        throw InvalidArgument(fmt::format("({}, {}) is not in Omega' for n = {}", k, l, n));
}

ExactRational harmonic(int from, int to)
{
    ExactRational s = 0;
    for (int i = from; i <= to; ++i)
        s += ExactRational(1, i);
    return s;
}

} // namespace

ExactRational c1_value(int n, int k, int l)
{
    require_omega_prime(n, k, l);
    return (1 + ExactRational(n - k, n - 1)) * ExactRational(l - 1, n - 1);
}

ExactRational c2_value(int n, int k, int l)
{
    require_omega_prime(n, k, l);
    return (n - k) * harmonic(n - l, n - 2) - (n - l) * harmonic(k, n - 2);
}

bool c1(int n, int k, int l) { return c1_value(n, k, l) < 1; }

bool c2(int n, int k, int l) { return c2_value(n, k, l) < 0; }

double delta_prime_c1(double alpha, double beta) { return (2 - alpha) * beta; }

double delta_prime_c2(double alpha, double beta)
{
    return -(1 - alpha) * std::log1p(-beta) + (1 - beta) * std::log(alpha);
}

bool in_delta_prime(double alpha, double beta)
{
    return in_omega(alpha, beta) && delta_prime_c1(alpha, beta) < 1 && delta_prime_c2(alpha, beta) < 0;
}

std::pair<double, double> tilde_constants()
{
    return {1 - 1 / std::sqrt(2.0), 2 - std::sqrt(2.0)};
}

std::pair<double, double> alpha_beta_star(int i)
{
    if (i < 4)
        throw InvalidArgument("alpha_beta_star: need i >= 4");
    auto d = [i](double a) { return e_j(a, i - 2) - e_j(a, i - 3); };
    const int steps = 4000;
    double lo = 0, hi = 0;
    bool found = false;
    double prev_a = 1.0 / steps;
    double prev = d(prev_a);
    for (int s = 2; s < steps; ++s) {
        const double a = static_cast<double>(s) / steps;
        const double cur = d(a);
        if ((prev > 0) != (cur > 0)) {
            lo = prev_a;
            hi = a;
            found = true;
            break;
        }
        prev_a = a;
        prev = cur;
    }
    if (!found)
        throw NoRootError(fmt::format("alpha_beta_star: e_{} - e_{} has no sign change", i - 2, i - 3));
    const bool lo_positive = d(lo) > 0;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((d(mid) > 0) == lo_positive)
            lo = mid;
        else
            hi = mid;
    }
    const double a = 0.5 * (lo + hi);
    return {a, e_j(a, i - 2)};
}

double large_i_lhs(double alpha, int i)
{
    require_unit(alpha, "alpha");
    if (i < 2)
        throw InvalidArgument("large_i_lhs: need i >= 2");
    const int j = i - 2;
    return (1 + std::pow(alpha, j) * (1 - alpha)) * (-log_ratio(alpha, j) / (j + 1));
}

bool large_i_holds(double alpha, int i)
{
    return large_i_lhs(alpha, i) < -std::log(alpha);
}

int i0(double alpha, int i_max)
{
    require_half(alpha);
    if (i_max < 2)
        throw InvalidArgument("i0: need i_max >= 2");
    if (!large_i_holds(alpha, i_max))
        throw NotFound(fmt::format("i0: the large-i inequality fails at i_max = {} for alpha = {}", i_max, alpha));
    int i = i_max;
    while (i > 2 && large_i_holds(alpha, i - 1))
        --i;
    return i;
}

const char* to_string(ClaimKind kind)
{
    switch (kind) {
    case ClaimKind::A:
        return "A";
    case ClaimKind::B:
        return "B";
    case ClaimKind::C:
        return "C";
    }
    return "?";
}

ClaimKind parse_claim_kind(const std::string& text)
{
    if (text == "A" || text == "a")
        return ClaimKind::A;
    if (text == "B" || text == "b")
        return ClaimKind::B;
    if (text == "C" || text == "c")
        return ClaimKind::C;
    throw InvalidArgument("unknown claim kind '" + text + "'");
}

int ClaimInstance::x_level() const
{
    switch (kind) {
    case ClaimKind::A:
        return n - k - 2;
    case ClaimKind::B:
        return n - k - 3;
    case ClaimKind::C:
        break;
    }
    return n - k - 1;
}

int ClaimInstance::y_level() const
{
    switch (kind) {
    case ClaimKind::A:
        return l - 2;
    case ClaimKind::B:
        return l - 3;
    case ClaimKind::C:
        break;
    }
    return l - 1;
}

double ClaimInstance::x_min() const { return x_level() - 1; }

double ClaimInstance::x_max() const { return kind == ClaimKind::C ? n - i : n - i - eps; }

ClaimInstance make_claim(int n, int k, int l, int i, int eps, ClaimKind kind)
{
    if (k < 1 || l < 1 || k + l >= n)
        throw InvalidArgument("make_claim: need k, l >= 1 and k + l < n");
    if (i < 2 || i >= n)
        throw InvalidArgument("make_claim: need 2 <= i < n");
    if (eps < 0 || (kind == ClaimKind::B && eps < 1))
        throw InvalidArgument("make_claim: eps must be >= 0 (>= 1 for kind B)");
    ClaimInstance ci{n, k, l, i, eps, kind, 0, 0};
    if (ci.x_level() < 0 || ci.y_level() < 0)
        throw InvalidArgument("make_claim: fractional level below zero");
    if (ci.x_max() < ci.x_min())
        throw InvalidArgument("make_claim: empty range for x");
    switch (kind) {
    case ClaimKind::A:
        ci.X = binom(n - 1, n - k) + binom(n - i, n - k - 1);
        ci.Y = binom(n - 1, l - 1) - binom(n - i, l - 1);
        break;
    case ClaimKind::B:
        ci.X = binom(n - 1, n - k) + binom(n - i, n - k - 1) + binom(n - i - 1, n - k - 2);
        ci.Y = binom(n - 1, l - 1) - binom(n - i, l - 1) - binom(n - i - 1, l - 2);
        break;
    case ClaimKind::C:
        ci.X = binom(n - 1, n - k);
        ci.Y = binom(n - 1, l - 1);
        break;
    }
    return ci;
}

namespace {

void require_x(const ClaimInstance& ci, double x)
{
    const double slack = kTolerance * std::max(1.0, std::abs(x));
    if (!(x >= ci.x_min() - slack && x <= ci.x_max() + slack))
        throw InvalidArgument(fmt::format("claim_F: x = {} outside [{}, {}]", x, ci.x_min(), ci.x_max()));
}

} // namespace

namespace {

// Exact F at integer x, where every fractional binomial is an integer one.
std::optional<Natural> exact_F(const ClaimInstance& ci, double x)
{
    if (x != std::floor(x))
        return std::nullopt;
    const long xi = static_cast<long>(x);
    if (xi < 0)
        return std::nullopt;
    const Natural left = ci.X + binom(xi, ci.x_level());
    const Natural right = ci.Y - binom(xi, ci.y_level());
    if (right < 0)
        return std::nullopt;
    return left * right;
}

} // namespace

double claim_F(const ClaimInstance& ci, double x)
{
    require_x(ci, x);
    if (const auto f = exact_F(ci, x))
        return to_double(*f);
    return (to_double(ci.X) + gen_binom(x, ci.x_level())) * (to_double(ci.Y) - gen_binom(x, ci.y_level()));
}

double claim_F_normalized(const ClaimInstance& ci, double x)
{
    require_x(ci, x);
    if (const auto f = exact_F(ci, x))
        return ratio_to_double(*f, binom(ci.n, ci.k) * binom(ci.n, ci.l));
    const double a = ratio_to_double(ci.X, binom(ci.n, ci.k)) + binom_ratio(x, ci.x_level(), ci.n, ci.n - ci.k);
    const double b = ratio_to_double(ci.Y, binom(ci.n, ci.l)) - binom_ratio(x, ci.y_level(), ci.n, ci.l);
    return a * b;
}

double claim_XY_normalized(const ClaimInstance& ci)
{
    return ratio_to_double(ci.X, binom(ci.n, ci.k)) * ratio_to_double(ci.Y, binom(ci.n, ci.l));
}

ClaimSides claim_sides(double alpha, double beta, int i, int eps, ClaimKind kind)
{
    const RegionPoint p(alpha, beta);
    if (i < 2 || eps < 0)
        throw InvalidArgument("claim_conditions: need i >= 2 and eps >= 0");
    const double a = p.alpha, ab = p.alpha_bar(), b = p.beta, bb = p.beta_bar();
    const double log_a = -std::log(a), log_bb = -std::log(bb);
    switch (kind) {
    case ClaimKind::A:
        return {(1 - std::pow(bb, i - 1)) / (b * std::pow(bb, i - 2 + eps)) * log_bb,
                (1 + std::pow(a, i - 2) * ab) / (std::pow(a, i - 3 + eps) * ab * ab) * log_a};
    case ClaimKind::B:
        return {(1 - std::pow(bb, i - 1) - b * std::pow(bb, i - 1)) / (b * b * std::pow(bb, i - 3 + eps)) * log_bb,
                (1 + ab * std::pow(a, i - 2) + ab * ab * std::pow(a, i - 2)) / (ab * ab * ab * std::pow(a, i - 4 + eps))
                    * log_a};
    case ClaimKind::C:
        break;
    }
    return {log_bb / std::pow(bb, i - 1), log_a / (std::pow(a, i - 2) * ab)};
}

bool claim_conditions(double alpha, double beta, int i, int eps, ClaimKind kind)
{
    const ClaimSides s = claim_sides(alpha, beta, i, eps, kind);
    return kind == ClaimKind::C ? s.lhs < s.rhs : s.lhs <= s.rhs;
}

double tail_value(int t, double alpha, double beta)
{
    const RegionPoint p(alpha, beta);
    if (t < 4)
        throw InvalidArgument("tail_bound: need t >= 4");
    double gamma = 0, power = 1;
    for (int s = 0; s <= t; ++s) {
        gamma += power;
        power *= p.alpha_bar();
    }
    return gamma * std::pow(beta, t - 1);
}

bool tail_bound(int t, double alpha, double beta) { return tail_value(t, alpha, beta) < 1; }

const char* to_string(Curve c)
{
    switch (c) {
    case Curve::ej:
        return "ej";
    case Curve::delta:
        return "delta";
    case Curve::delta_prime:
        return "delta-prime";
    }
    return "?";
}

Curve parse_curve(const std::string& text)
{
    if (text == "ej" || text == "ej-curves")
        return Curve::ej;
    if (text == "delta" || text == "delta-boundary")
        return Curve::delta;
    if (text == "delta-prime" || text == "delta-prime-boundary")
        return Curve::delta_prime;
    throw InvalidArgument("unknown curve '" + text + "'");
}

CurveRow delta_prime_boundary(double alpha)
{
    require_half(alpha);
    double lo = 0, hi = 1;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (delta_prime_c2(alpha, mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    CurveRow row{alpha, 1 / (2 - alpha), "c1"};
    if (lo < row.value) {
        row.value = lo;
        row.label = "c2";
    }
    if (1 - alpha < row.value) {
        row.value = 1 - alpha;
        row.label = "omega";
    }
    return row;
}

std::vector<CurveRow> curve_samples(Curve which, const CurveOptions& opts)
{
    if (opts.grid < 2)
        throw InvalidArgument("curve_samples: grid must have at least 2 points");
    if (!(opts.alpha_lo > 0 && opts.alpha_lo < opts.alpha_hi && opts.alpha_hi < 0.5))
        throw InvalidArgument(fmt::format("curve_samples: alpha range [{}, {}] must satisfy 0 < lo < hi < 1/2",
                                          opts.alpha_lo, opts.alpha_hi));
    if (opts.j_max < 0)
        throw InvalidArgument("curve_samples: j_max must be nonnegative");
    std::vector<CurveRow> rows;
    for (int g = 0; g < opts.grid; ++g) {
        const double a = g == opts.grid - 1
            ? opts.alpha_hi
            : opts.alpha_lo + (opts.alpha_hi - opts.alpha_lo) * g / (opts.grid - 1);
        switch (which) {
        case Curve::ej:
            for (int j = 0; j <= opts.j_max; ++j)
                rows.push_back({a, e_j(a, j), fmt::format("e{}", j)});
            break;
        case Curve::delta: {
            const DeltaBound d = delta_bound(a, opts.j_cap);
            rows.push_back({a, d.value, fmt::format("e{}", d.argmin)});
            break;
        }
        case Curve::delta_prime:
            rows.push_back(delta_prime_boundary(a));
            break;
        }
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<CurveRow>& rows)
{
    out << "alpha,value,label\n";
    for (const CurveRow& r : rows)
        out << fmt::format("{:.15g},{:.15g},{}\n", r.alpha, r.value, r.label);
}

std::vector<RegionPoint> sample_delta(int count, unsigned long long seed, double margin)
{
    if (count < 0)
        throw InvalidArgument("sample_delta: count must be nonnegative");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<RegionPoint> out;
    while (static_cast<int>(out.size()) < count) {
        const double a = 0.005 + 0.49 * unit(rng);
        const double b = 0.5 + 0.5 * unit(rng);
        if (!in_omega(a, b) || b < 0.5 + margin)
            continue;
        if (b < delta_bound(a).value - margin)
            out.emplace_back(a, b);
    }
    return out;
}

} // namespace crossint
