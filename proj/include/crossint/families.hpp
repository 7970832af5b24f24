#pragma once

// The named families (stars, the perturbed pairs A_j / B_j), cross
// intersection, p-biased measures, and the line-oriented family file format.

#include "crossint/bits.hpp"
#include "crossint/exact_arith.hpp"
#include "crossint/uniform_family.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace crossint {

// An arbitrary family of subsets of [n], sorted by word value, no duplicates.
class GeneralFamily {
public:
    explicit GeneralFamily(int n) : GeneralFamily(n, {}) {}
    GeneralFamily(int n, std::vector<Mask> members);
    explicit GeneralFamily(const UniformFamily& f);

    int n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::span<const Mask> members() const { return members_; }
    bool contains(Mask m) const;

    friend bool operator==(const GeneralFamily&, const GeneralFamily&) = default;

private:
    int n_;
    std::vector<Mask> members_;
};

// All k-sets of [n] containing i.
UniformFamily star_uniform(int n, int k, int i);

// A_j^(k): k-sets containing 1, plus k-sets meeting [j+2] in exactly [j+2] \ {1}.
UniformFamily a_family_uniform(int n, int k, int j);

// B_j^(l): l-sets containing 1, minus those meeting [j+2] in exactly {1}.
UniformFamily b_family_uniform(int n, int l, int j);

// Closed-form sizes of the two families above.
Natural a_family_size(int n, int k, int j);
Natural b_family_size(int n, int l, int j);

// Non-uniform versions on 2^[n].
GeneralFamily a_family_measure(int n, int j);
GeneralFamily b_family_measure(int n, int j);

// All subsets of [n] containing i.
GeneralFamily star_measure(int n, int i);

bool is_cross_intersecting(std::span<const Mask> a, std::span<const Mask> b);
bool is_cross_intersecting(const UniformFamily& a, const UniformFamily& b);
bool is_cross_intersecting(const GeneralFamily& a, const GeneralFamily& b);

// mu_p(F) = sum over F of p^|F| (1-p)^(n-|F|), exactly. Requires 0 < p < 1.
ExactRational measure(const GeneralFamily& f, const ExactRational& p);

// mu_alpha(A_j) = alpha + (1-alpha) alpha^(j+1).
double measure_aj(double alpha, int j);
// mu_beta(B_j) = beta - beta (1-beta)^(j+1).
double measure_bj(double beta, int j);
ExactRational measure_aj(const ExactRational& alpha, int j);
ExactRational measure_bj(const ExactRational& beta, int j);

// F on [n] -> {G, G + {n+1} : G in F} on [n+1]; preserves every mu_p.
GeneralFamily lift(const GeneralFamily& f);

// Inclusion-minimal members.
GeneralFamily minimal_members(const GeneralFamily& f);

// Text format: a header line "n k" (k is "*" for a non-uniform family), then
// one member per line as its sorted 1-based elements separated by spaces.
// The empty set is an empty line.
void write_family(std::ostream& out, const UniformFamily& f);
void write_family(std::ostream& out, const GeneralFamily& f);

struct FamilyFile {
    int n = 0;
    std::optional<int> k;
    std::vector<Mask> members;

    GeneralFamily general() const { return GeneralFamily(n, members); }
    // Throws InvalidArgument when the header carries no k.
    UniformFamily uniform() const;
};

// Throws InvalidArgument on a malformed header or member line.
FamilyFile read_family(std::istream& in);

} // namespace crossint
