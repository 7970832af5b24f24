#pragma once

// The (alpha, beta) side: boundary curves e_j, the regions Omega, Delta,
// Omega', Delta', the special constants, and the inequalities used to bound
// each size range of the larger family.

#include "crossint/exact_arith.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace crossint {

struct RegionPoint {
    double alpha;
    double beta;

    // Throws InvalidArgument unless 0 < alpha, beta < 1.
    RegionPoint(double a, double b);
    double alpha_bar() const { return 1 - alpha; }
    double beta_bar() const { return 1 - beta; }
};

// 1 - ((a^j - a^(j+1)) / (1 + a^j - a^(j+1)))^(1/(j+1)), evaluated in log space.
double e_j(double alpha, int j);

// (1 + (1-a) a^j)(1 - (1-b)^(j+1)) < 1 at tolerance.
Verdict boundary_verdict(double alpha, double beta, int j, double tol = kTolerance);
// True only when the strict inequality holds beyond tolerance.
bool boundary_condition(double alpha, double beta, int j, double tol = kTolerance);

// alpha > 0, beta > 1/2, alpha + beta < 1.
bool in_omega(double alpha, double beta);
// k > 0, l > n/2, k + l < n.
bool in_omega_prime(int n, int k, int l);

// min_j e_j(alpha) over all j >= 0, certified by the increasing lower bound
// e_j >= 1 - (a^j (1-a))^(1/(j+1)). For alpha < 1/2 the e_j approach 1 - alpha
// from below, so the minimum is attained.
struct DeltaBound {
    double value;
    int argmin;
    int explicit_through; // largest j evaluated explicitly
};

// Throws InvalidArgument unless 0 < alpha < 1/2. Every j <= j_cap is
// evaluated; beyond it the scan continues until the lower bound clears the
// running minimum, giving up (NoRootError) after `hard_limit` terms.
DeltaBound delta_bound(double alpha, int j_cap = 64, int hard_limit = 10'000'000);

// Membership in Delta. Points outside Omega yield fails. Points within
// tolerance of the boundary yield undecidable.
Verdict delta_verdict(double alpha, double beta, int j_cap = 64, double tol = kTolerance);
// Throws UndecidableAtTolerance for points within tolerance of the boundary.
bool in_delta(double alpha, double beta, int j_cap = 64, double tol = kTolerance);

// Exact rational evaluation of the two finite conditions. Both throw
// InvalidArgument outside Omega'.
ExactRational c1_value(int n, int k, int l); // compared against 1
ExactRational c2_value(int n, int k, int l); // compared against 0
bool c1(int n, int k, int l);
bool c2(int n, int k, int l);

// (2 - a) b and (1-a) log(1/(1-b)) - (1-b) log(1/a).
double delta_prime_c1(double alpha, double beta);
double delta_prime_c2(double alpha, double beta);
// Both strengthened conditions; false outside Omega.
bool in_delta_prime(double alpha, double beta);

// The cusp where e_0 and e_1 cross: (1 - 1/sqrt 2, 2 - sqrt 2).
std::pair<double, double> tilde_constants();

// The crossing of e_(i-2) and e_(i-3): (alpha_*, e_(i-2)(alpha_*)). Requires
// i >= 4. Throws NoRootError when no sign change is found.
std::pair<double, double> alpha_beta_star(int i);

// (1 + a^(i-2)(1-a)) log(1/(1-e_(i-2))) and its bound log(1/a).
double large_i_lhs(double alpha, int i);
bool large_i_holds(double alpha, int i);

// Smallest i >= 2 such that large_i_holds for every i' in [i, i_max].
// Requires 0 < alpha < 1/2; throws NotFound when it fails at i_max.
int i0(double alpha, int i_max = 1000);

enum class ClaimKind { A, B, C };
const char* to_string(ClaimKind kind);
ClaimKind parse_claim_kind(const std::string& text);

// X, Y and the polynomial F(x) for one of the three size ranges.
struct ClaimInstance {
    int n, k, l, i, eps;
    ClaimKind kind;
    Natural X, Y;

    // Lowest level of the fractional term: n-k-2 (A), n-k-3 (B), n-k-1 (C).
    int x_level() const;
    int y_level() const;
    // Closed range of admissible x.
    double x_min() const;
    double x_max() const;
};

// Throws InvalidArgument when the parameters leave a binomial undefined.
ClaimInstance make_claim(int n, int k, int l, int i, int eps, ClaimKind kind);

// F(x) as a double (overflows to inf beyond roughly n = 1000). Integer x is
// evaluated exactly before rounding.
double claim_F(const ClaimInstance& ci, double x);
// F(x) / (C(n,k) C(n,l)), evaluated without overflow.
double claim_F_normalized(const ClaimInstance& ci, double x);
// X Y / (C(n,k) C(n,l)).
double claim_XY_normalized(const ClaimInstance& ci);

// The analytic condition under which F stays below max{XY, F(end)}.
// Kinds A and B are non-strict, kind C is strict.
struct ClaimSides {
    double lhs, rhs;
};
ClaimSides claim_sides(double alpha, double beta, int i, int eps, ClaimKind kind);
bool claim_conditions(double alpha, double beta, int i, int eps, ClaimKind kind);

// gamma beta^(t-1) < 1 with gamma = 1 + (1-a) + ... + (1-a)^t. Requires t >= 4.
double tail_value(int t, double alpha, double beta);
bool tail_bound(int t, double alpha, double beta);

enum class Curve { ej, delta, delta_prime };
const char* to_string(Curve c);
Curve parse_curve(const std::string& text);

struct CurveRow {
    double alpha;
    double value;
    std::string label;
};

struct CurveOptions {
    int grid = 100;
    double alpha_lo = 0.01;
    double alpha_hi = 0.49;
    int j_max = 6;  // ej curves only
    int j_cap = 64;
};

// Rows in increasing alpha (then j for ej curves). Throws InvalidArgument for
// grid < 2 or a range outside (0, 1/2).
std::vector<CurveRow> curve_samples(Curve which, const CurveOptions& opts = {});
// Upper boundary of Delta': min of 1/(2-a), the root of the second condition, 1 - a.
CurveRow delta_prime_boundary(double alpha);

// Header "alpha,value,label", 15 significant digits, LF endings.
void write_csv(std::ostream& out, const std::vector<CurveRow>& rows);

// `count` points of Delta drawn deterministically from `seed`, each at least
// `margin` below the boundary.
std::vector<RegionPoint> sample_delta(int count, unsigned long long seed = 1, double margin = 1e-6);

} // namespace crossint
