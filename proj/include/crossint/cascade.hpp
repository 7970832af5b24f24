#pragma once

// Cascade (Kruskal-Katona) representations and the shadow bounds built on
// them.

#include "crossint/exact_arith.hpp"

#include <vector>

namespace crossint {

struct CascadeTerm {
    long a = 0;
    int level = 0;

    friend bool operator==(const CascadeTerm&, const CascadeTerm&) = default;
};

// m = C(a_u, u) + C(a_{u-1}, u-1) + ... + C(a_{u-t}, u-t) with
// a_u > a_{u-1} > ... > a_{u-t} >= u-t >= 1. Terms are stored top level first.
struct CascadeForm {
    int u = 0;
    std::vector<CascadeTerm> terms;

    // Number of levels below u that carry a term.
    int t() const { return static_cast<int>(terms.size()) - 1; }
    Natural value() const;
    // Checks the strict decrease, the level sequence and a_{u-t} >= u-t >= 1.
    bool well_formed() const;
};

// A cascade whose terms below level u - s have been merged into one
// fractional binomial C(x, u - s - 1). The degenerate form s == -1 keeps no
// integer terms and reads m = C(x, u).
struct TruncatedCascade {
    int u = 0;
    int s = 0;
    std::vector<CascadeTerm> kept;
    double x = 0.0;
    Natural m;

    int tail_level() const { return u - s - 1; }
};

inline constexpr int kDegenerateTruncation = -1;

// Greedy u-cascade of m; m >= 1, u >= 1.
CascadeForm cascade_decompose(const Natural& m, int u);

// Largest a with C(a, u) <= m (so a >= u whenever m >= 1).
long largest_binom_base(const Natural& m, int u);

// Keeps levels u .. u-s and folds the rest into C(x, u-s-1). Accepts
// 0 <= s < t, or kDegenerateTruncation. Throws InvalidTruncation otherwise.
TruncatedCascade truncate_cascade(const CascadeForm& c, int s);

// Exact minimum size of the v-shadow of m u-sets. For v == u this is m.
Natural shadow_lower_bound(const Natural& m, int u, int v);

// Fractional (Lovasz) shadow bound for 1 <= v < u.
double lovasz_bound(const TruncatedCascade& tc, int v);

// Largest |B| for B of l-sets cross-intersecting some A of m k-sets in [n]:
// C(n, l) - shadow_lower_bound(m, n - k, l).
Natural kk_cross_bound(int n, int k, int l, const Natural& m);

} // namespace crossint
