#pragma once

// Exact maxima of |A||B| over cross-intersecting uniform pairs and of
// mu_a(A) mu_b(B) over cross-intersecting pairs in 2^[n], each by two
// independent methods, plus the uniqueness and conjecture tools built on them.

#include "crossint/exact_arith.hpp"
#include "crossint/families.hpp"
#include "crossint/uniform_family.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crossint {

enum class Method { cascade, enumeration };
const char* to_string(Method m);

inline constexpr std::uint64_t kDefaultSweepBudget = 100'000'000;
inline constexpr std::size_t kDefaultWitnessCap = 1000;
inline constexpr int kEnumerationCap = 24; // largest C(n, k) for the subset enumeration

// One optimal configuration. The cascade method reports the size of A with
// the best possible size of B; enumeration also reports a representative A.
struct UniformWitness {
    Natural size_a;
    Natural size_b;
    std::optional<UniformFamily> family;
};

struct OracleResult {
    int n = 0, k = 0, l = 0;
    Natural value;
    Method method = Method::cascade;
    bool closed_form = false;          // k + l > n short circuit
    std::vector<UniformWitness> witnesses;
    std::uint64_t optimal_count = 0;   // optimal sizes (cascade) or families (enumeration)
    bool witnesses_truncated = false;
};

struct OracleOptions {
    std::uint64_t sweep_budget = kDefaultSweepBudget;
    std::size_t witness_cap = kDefaultWitnessCap;
    int threads = 0;                   // 0: CROSSINT_THREADS or the hardware count
    bool short_circuit = true;         // enumeration only
};

// Worker count from CROSSINT_THREADS, else the hardware concurrency.
int default_threads();

// max over m of m * kk_cross_bound(n, k, l, m). Requires 1 <= k, l <= n - 1.
// Throws CapacityError when C(n, k) exceeds the sweep budget.
OracleResult max_product_cascade(int n, int k, int l, const OracleOptions& opts = {});

// Every A in the k-layer with its largest partner B. Witnesses are the optimal
// A up to relabelling of [n] (canonical forms, computed for n <= 8; larger n
// lists raw families). Throws CapacityError when C(n, k) > 24.
OracleResult max_product_enumeration(int n, int k, int l, const OracleOptions& opts = {});

// The pair realizing m * kk_cross_bound(n, k, l, m): A is the complement of the
// first m colex (n-k)-sets, B every l-set outside the l-shadow of that segment.
std::pair<UniformFamily, UniformFamily> cascade_pair(int n, int k, int l, const Natural& m);

struct UniquenessReport {
    int n = 0, k = 0, l = 0;
    Natural value;
    Natural star_product;
    std::vector<Natural> maximizing_sizes;
    bool sizes_truncated = false;
    bool unique_size = false;   // the star size is the only maximizing size
    bool star_forced = false;   // Katona equality pins A and B to stars
    std::optional<bool> enumeration_all_stars;
    std::optional<std::uint64_t> enumeration_optimal_count;
};

UniquenessReport uniqueness_check(int n, int k, int l, const OracleOptions& opts = {});

struct MeasureResult {
    int n = 0;
    ExactRational alpha, beta, value;
    std::vector<GeneralFamily> witnesses; // generating antichains, up to relabelling
    std::uint64_t optimal_count = 0;      // optimal up-sets
    std::uint64_t families_searched = 0;
    bool witnesses_truncated = false;
};

// max over up-sets A of 2^[n] of mu_alpha(A) mu_beta(B), B = {B : [n] \ B not in A}.
// Requires 1 <= n <= 6 (CapacityError beyond) and 0 < alpha, beta < 1.
MeasureResult measure_oracle(int n, const ExactRational& alpha, const ExactRational& beta,
                             std::size_t witness_cap = kDefaultWitnessCap);

// Number of up-sets of 2^[n], n <= 6.
std::uint64_t count_up_sets(int n);

enum class ScanLabel { confirming, refuting, hypothesis_fails, out_of_reach };
const char* to_string(ScanLabel s);

struct ScanTerm {
    int j;
    Natural product; // |A_j| |B_j|
    bool below;      // product < star product
};

struct ScanReport {
    int n = 0, k = 0, l = 0;
    Natural star_product;
    std::vector<ScanTerm> terms;     // j < min(k, j_max + 1)
    bool hypothesis_complete = false;
    bool hypothesis = false;
    std::optional<Natural> oracle_value;
    std::optional<bool> conclusion;  // M is the star product and stars are the only optimum
    std::optional<UniquenessReport> uniqueness;
    ScanLabel label = ScanLabel::out_of_reach;
};

// Evidence for the conjecture at one instance. Requires (k, l) in Omega'.
// Only j < k needs checking: for j >= k the family A_j is the star, so the pair
// is strictly worse (j <= n - l - 1) or is the star pair itself (j >= n - l).
ScanReport conjecture_scan(int n, int k, int l, int j_max = 64, const OracleOptions& opts = {});

} // namespace crossint
