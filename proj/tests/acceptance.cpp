// Acceptance checks. Prints one PASS/FAIL line per criterion with its elapsed
// time against the budget, and exits nonzero if any criterion fails.

#include "crossint/cascade.hpp"
#include "crossint/cli.hpp"
#include "crossint/errors.hpp"
#include "crossint/families.hpp"
#include "crossint/oracle.hpp"
#include "crossint/regions.hpp"
#include "crossint/uniform_family.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace crossint;

namespace {

// Records the first failure of a criterion.
struct Check {
    std::string failure;

    void expect(bool ok, const std::string& what)
    {
        if (!ok && failure.empty())
            failure = what;
    }
    bool ok() const { return failure.empty(); }
};

// ---- independent helpers ----------------------------------------------------

// Binomials C(a, b) for a < rows, b < cols, saturating at LONG_MAX.
class BinomTable {
public:
    BinomTable(int rows, int cols) : cols_(cols), c_(static_cast<std::size_t>(rows) * cols, 0)
    {
        for (int a = 0; a < rows; ++a) {
            at(a, 0) = 1;
            for (int b = 1; b < cols && b <= a; ++b) {
                const long x = at(a - 1, b - 1), y = at(a - 1, b);
                at(a, b) = x > LONG_MAX - y ? LONG_MAX : x + y;
            }
        }
    }
    long operator()(long a, int b) const { return c_[static_cast<std::size_t>(a) * cols_ + b]; }

private:
    long& at(int a, int b) { return c_[static_cast<std::size_t>(a) * cols_ + b]; }
    int cols_;
    std::vector<long> c_;
};

using Seq = std::vector<CascadeTerm>;

void enumerate_cascades(int level, long below, long acc, long limit, Seq& cur, std::map<long, std::vector<Seq>>& out,
                        const BinomTable& c)
{
    if (level < 1)
        return;
    for (long a = level; a < below; ++a) {
        const long term = c(a, level);
        if (acc + term > limit)
            break;
        cur.push_back({a, level});
        out[acc + term].push_back(cur);
        enumerate_cascades(level - 1, a, acc + term, limit, cur, out, c);
        cur.pop_back();
    }
}

// Greedy cascade in plain integer arithmetic.
Seq greedy_cascade(long m, int u, const BinomTable& c)
{
    Seq out;
    for (int level = u; level >= 1 && m > 0; --level) {
        long a = level;
        while (c(a + 1, level) <= m)
            ++a;
        out.push_back({a, level});
        m -= c(a, level);
    }
    return out;
}

// The rank-th u-set in colex order: c_1 < ... < c_u with rank = sum C(c_i, i).
Mask nth_colex(long rank, int u, const BinomTable& c)
{
    Mask m = 0;
    for (int i = u; i >= 1; --i) {
        long a = i - 1;
        while (c(a + 1, i) <= rank)
            ++a;
        rank -= c(a, i);
        m |= Mask{1} << a;
    }
    return m;
}

// ---- criteria ---------------------------------------------------------------

void cascade_soundness(Check& ch)
{
    const BinomTable c(20010, 10);
    for (int u = 1; u <= 8; ++u)
        for (long m = 1; m <= 20000; ++m) {
            const CascadeForm f = cascade_decompose(m, u);
            ch.expect(f.u == u && f.well_formed(), fmt::format("malformed cascade m={} u={}", m, u));
            ch.expect(f.value() == m, fmt::format("value mismatch m={} u={}", m, u));
            ch.expect(f.terms == greedy_cascade(m, u, c), fmt::format("greedy mismatch m={} u={}", m, u));
            long sum = 0;
            for (const auto& t : f.terms) {
                ch.expect(t.level >= 1 && t.a >= t.level, fmt::format("term bounds m={} u={}", m, u));
                sum += c(t.a, t.level);
            }
            ch.expect(sum == m, fmt::format("term sum m={} u={}", m, u));
        }
    for (int u = 1; u <= 5; ++u) {
        std::map<long, std::vector<Seq>> all;
        Seq cur;
        enumerate_cascades(u, 500 + u + 1, 0, 500, cur, all, c);
        for (long m = 1; m <= 500; ++m) {
            const auto it = all.find(m);
            ch.expect(it != all.end() && it->second.size() == 1, fmt::format("not unique m={} u={}", m, u));
            if (it != all.end() && !it->second.empty())
                ch.expect(cascade_decompose(m, u).terms == it->second.front(),
                          fmt::format("enumerated cascade differs m={} u={}", m, u));
        }
    }
}

void shadow_tightness(Check& ch)
{
    const BinomTable c(64, 64);
    for (int n = 2; n <= 12; ++n)
        for (int u = 2; u < n; ++u)
            for (int v = 1; v < u; ++v) {
                std::vector<char> seen(std::size_t{1} << n, 0);
                long shadow = 0;
                for (long m = 1; m <= c(n, u); ++m) {
                    const Mask s = nth_colex(m - 1, u, c);
                    for (Mask sub = s;; sub = (sub - 1) & s) {
                        if (std::popcount(sub) == v && !seen[sub]) {
                            seen[sub] = 1;
                            ++shadow;
                        }
                        if (sub == 0)
                            break;
                    }
                    const Natural exact = shadow_lower_bound(m, u, v);
                    ch.expect(exact == shadow, fmt::format("shadow n={} u={} v={} m={}: {} vs {}", n, u, v, m,
                                                           exact.str(), shadow));
                    const CascadeForm f = cascade_decompose(m, u);
                    for (int s = kDegenerateTruncation; s < std::max(f.t(), 0); ++s)
                        ch.expect(lovasz_bound(truncate_cascade(f, s), v) <= static_cast<double>(shadow) + 1e-9,
                                  fmt::format("lovasz exceeds n={} u={} v={} m={} s={}", n, u, v, m, s));
                }
                // the library's explicit families agree on the full range of this n
                if (n == 12 && u == 6 && v == 3)
                    for (long m : {1L, 17L, 200L, 924L})
                        ch.expect(crossint::shadow(colex_segment(m, u, n), v).size() == shadow_lower_bound(m, u, v),
                                  fmt::format("explicit family shadow m={}", m));
            }
}

void oracle_agreement(Check& ch)
{
    const BinomTable c(64, 64);
    int instances = 0;
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k) {
            if (c(n, k) > 21)
                continue;
            for (int l = 1; l < n; ++l) {
                const OracleResult a = max_product_cascade(n, k, l);
                const OracleResult b = max_product_enumeration(n, k, l);
                ch.expect(a.value == b.value,
                          fmt::format("({},{},{}): cascade {} enumeration {}", n, k, l, a.value.str(), b.value.str()));
                ++instances;
            }
        }
    ch.expect(instances > 50, "too few instances");
}

void theorem_instance(Check& ch)
{
    ch.expect(c1_value(20, 5, 11) < 1 && c1(20, 5, 11), "c1(20,5,11)");
    ch.expect(c2_value(20, 5, 11) < 0 && c2(20, 5, 11), "c2(20,5,11)");
    const OracleResult r = max_product_cascade(20, 5, 11);
    ch.expect(r.value == Natural(358057128), "M(20,5,11) = " + r.value.str());
    ch.expect(r.value == binom(19, 4) * binom(19, 10), "star product");
    const UniquenessReport u = uniqueness_check(20, 5, 11);
    ch.expect(u.maximizing_sizes.size() == 1 && u.maximizing_sizes[0] == Natural(3876), "unique witness m = 3876");
    ch.expect(u.unique_size && u.star_forced, "star structure not forced");
}

void known_regimes(Check& ch)
{
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k)
            for (int l = 1; l < n; ++l) {
                if (n >= 2 * std::max(k, l)) {
                    const Natural star = binom(n - 1, k - 1) * binom(n - 1, l - 1);
                    ch.expect(max_product_cascade(n, k, l).value == star, fmt::format("star ({},{},{})", n, k, l));
                }
                if (k + l == n) {
                    const Natural ck = binom(n, k), cl = binom(n, l);
                    const Natural expect = (ck / 2) * ((cl + 1) / 2);
                    ch.expect(max_product_cascade(n, k, l).value == expect, fmt::format("k+l=n ({},{},{})", n, k, l));
                }
            }
}

void measure_theorem(Check& ch)
{
    const std::vector<std::pair<std::string, std::string>> points = {{"1/4", "11/20"}, {"2/7", "4/7"}};
    const std::vector<std::string> values = {"11/80", "8/49"};
    for (std::size_t p = 0; p < points.size(); ++p) {
        const ExactRational a = parse_rational(points[p].first), b = parse_rational(points[p].second);
        for (int n = 1; n <= 5; ++n) {
            const MeasureResult r = measure_oracle(n, a, b);
            ch.expect(r.value == parse_rational(values[p]),
                      fmt::format("m({}, {}, {}) = {}", n, points[p].first, points[p].second, to_string(r.value)));
        }
    }
}

void delta_necessity(Check& ch)
{
    const ExactRational a = parse_rational("1/5"), b = parse_rational("3/5");
    const ExactRational prod = measure_aj(a, 0) * measure_bj(b, 0);
    ch.expect(prod == parse_rational("81/625"), "mu(A_0) mu(B_0) = " + to_string(prod));
    ch.expect(prod > a * b, "product does not beat 3/25");
    ch.expect(!in_delta(0.2, 0.6), "(1/5, 3/5) reported inside Delta");

    // beta < e_j(alpha) is the well-conditioned form; the product form sits within 1e-12 of 1 for large j
    for (int j = 0; j <= 64; ++j)
        ch.expect(strictly_less(0.55, e_j(0.25, j)) == Verdict::holds, fmt::format("j = {} fails at (1/4, 11/20)", j));
    for (int j = 0; j <= 8; ++j)
        ch.expect(boundary_verdict(0.25, 0.55, j) == Verdict::holds, fmt::format("product form j = {}", j));
    const DeltaBound bound = delta_bound(0.25);
    ch.expect(bound.explicit_through >= 64, "tail not reached");
    ch.expect(bound.value > 0.55, "tail does not certify");
    ch.expect(in_delta(0.25, 0.55), "(1/4, 11/20) reported outside Delta");
}

void constants(Check& ch)
{
    const auto [as, bs] = alpha_beta_star(4);
    ch.expect(std::abs(as - 0.386) <= 1e-3, fmt::format("alpha_*(4) = {}", as));
    ch.expect(std::abs(bs - 0.562) <= 1e-3, fmt::format("beta_*(4) = {}", bs));
    const auto [at, bt] = tilde_constants();
    const double target = 2 - std::sqrt(2.0);
    ch.expect(std::abs(e_j(at, 0) - target) <= 1e-12, "e_0(alpha~)");
    ch.expect(std::abs(e_j(at, 1) - target) <= 1e-12, "e_1(alpha~)");
    ch.expect(std::abs(bt - target) <= 1e-12, "beta~");
    ch.expect(std::pow(bt, 3) < 0.21, "beta~^3 < 0.21");
    ch.expect(6 * std::pow(bt, 4) < 1, "6 beta~^4 < 1");
    // gamma = 1 + abar + ... + abar^t tends to t + 1 as alpha -> 0
    ch.expect(std::abs(tail_value(5, 1e-15, bt) - 6 * std::pow(bt, 4)) <= 1e-12, "tail_value(5) limit");
    ch.expect(std::abs(tail_value(4, 1e-15, bt) - 5 * std::pow(bt, 3)) <= 1e-12, "tail_value(4) limit");
    for (int t = 4; t <= 50; ++t)
        ch.expect(tail_bound(t, at, bt), fmt::format("tail_bound({}) at the cusp", t));
}

void convergence(Check& ch)
{
    const auto ratio = [](int n) {
        const int k = n / 4;
        return ratio_to_double(binom(n - 2, n - k - 1), binom(n, k));
    };
    const double limit = 3.0 / 16;
    const double e512 = std::abs(ratio(512) - limit), e4096 = std::abs(ratio(4096) - limit);
    ch.expect(e4096 <= 0.01 * limit, fmt::format("n = 4096 error {}", e4096));
    ch.expect(e4096 < e512, fmt::format("error did not shrink: {} vs {}", e4096, e512));
}

void claim_grids(Check& ch)
{
    const auto pts = sample_delta(50, 1);
    ch.expect(pts.size() == 50, "sample size");
    int high = 0;
    for (const RegionPoint& p : pts) {
        const std::string at = fmt::format("({}, {})", p.alpha, p.beta);
        ch.expect(claim_conditions(p.alpha, p.beta, 2, 1, ClaimKind::A), "A (2,1) at " + at);
        ch.expect(claim_conditions(p.alpha, p.beta, 3, 1, ClaimKind::A), "A (3,1) at " + at);
        ch.expect(claim_conditions(p.alpha, p.beta, 2, 2, ClaimKind::B), "B (2,2) at " + at);
        ch.expect(claim_conditions(p.alpha, p.beta, i0(p.alpha), 0, ClaimKind::C), "C i0 at " + at);
        if (p.alpha > 0.23) {
            ++high;
            ch.expect(claim_conditions(p.alpha, p.beta, 3, 1, ClaimKind::B), "B (3,1) at " + at);
        }
    }
    ch.expect(high > 0, "no sample point with alpha > 0.23");
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream l(line);
        std::string cell;
        while (std::getline(l, cell, ','))
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

std::string region_csv(const std::string& what)
{
    std::ostringstream out, err;
    const int code = run({"region", "--what", what, "--grid", "100"}, out, err);
    return code == kExitOk ? out.str() : std::string{};
}

void figure_data(Check& ch)
{
    const std::string ej = region_csv("ej");
    ch.expect(!ej.empty() && ej == region_csv("ej"), "ej CSV not deterministic");
    ch.expect(ej.find('\r') == std::string::npos, "CRLF in CSV");
    std::map<double, std::pair<double, double>> e01;
    for (const auto& r : parse_csv(ej)) {
        if (r.size() != 3)
            continue;
        if (r[2] == "e0")
            e01[std::stod(r[0])].first = std::stod(r[1]);
        if (r[2] == "e1")
            e01[std::stod(r[0])].second = std::stod(r[1]);
    }
    const double at = tilde_constants().first;
    int crossings = 0;
    double prev_a = 0, prev_d = 0;
    bool first = true;
    for (const auto& [a, e] : e01) {
        const double d = e.first - e.second;
        if (!first && (prev_d < 0) != (d < 0)) {
            ++crossings;
            ch.expect(prev_a <= at && at <= a, fmt::format("crossing in [{}, {}] misses alpha~", prev_a, a));
        }
        prev_a = a;
        prev_d = d;
        first = false;
    }
    ch.expect(e01.size() == 100, "ej grid size");
    ch.expect(crossings == 1, fmt::format("{} e0/e1 crossings", crossings));

    const std::string delta = region_csv("delta"), dprime = region_csv("delta-prime");
    ch.expect(delta == region_csv("delta") && dprime == region_csv("delta-prime"), "boundary CSV not deterministic");
    const auto drows = parse_csv(delta), prows = parse_csv(dprime);
    ch.expect(drows.size() == 100 && prows.size() == 100, "boundary grid size");
    for (std::size_t i = 0; i < std::min(drows.size(), prows.size()); ++i) {
        ch.expect(drows[i][0] == prows[i][0], "grids differ");
        const double a = std::stod(drows[i][0]);
        ch.expect(std::stod(prows[i][1]) <= std::stod(drows[i][1]) + 1e-12, fmt::format("Delta' above Delta at {}", a));
        // pointwise: every beta of Delta' on a vertical grid lies in Delta
        for (int s = 1; s < 100; ++s) {
            const double b = 0.5 + (0.5 - a) * s / 100.0;
            if (in_delta_prime(a, b))
                ch.expect(delta_verdict(a, b) != Verdict::fails, fmt::format("({}, {}) in Delta' only", a, b));
        }
    }
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<void(Check&)> body;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "cascade soundness and uniqueness", 10, cascade_soundness},
        {2, "shadow tightness of colex segments, n <= 12", 120, shadow_tightness},
        {3, "cascade and enumeration oracles agree, C(n,k) <= 21, n <= 8", 300, oracle_agreement},
        {4, "M(20,5,11) with c1, c2 and the forced star", 1, theorem_instance},
        {5, "known regimes, n <= 10", 60, known_regimes},
        {6, "measure maximum equals alpha beta, n <= 5", 60, measure_theorem},
        {7, "necessity of the Delta condition", 1, delta_necessity},
        {8, "constants and tail bound", 0, constants},
        {9, "binomial ratio convergence", 0, convergence},
        {10, "claim conditions on a Delta sample", 10, claim_grids},
        {11, "figure data: e0/e1 crossing and Delta' inside Delta", 0, figure_data},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Check ch;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(ch);
        } catch (const std::exception& e) {
            ch.expect(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && s > c.budget_s)
            ch.expect(false, fmt::format("over budget: {:.3f}s > {}s", s, c.budget_s));
        const std::string budget = c.budget_s > 0 ? fmt::format(" / {}s", c.budget_s) : "";
        fmt::print("{} [{:2}] {} ({:.3f}s{}){}\n", ch.ok() ? "PASS" : "FAIL", c.id, c.name, s, budget,
                   ch.ok() ? "" : ": " + ch.failure);
        if (!ch.ok())
            ++failed;
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
