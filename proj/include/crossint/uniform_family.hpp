#pragma once

#include "crossint/bits.hpp"
#include "crossint/exact_arith.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace crossint {

// A family of k-subsets of [n]. Members are kept sorted, i.e. in colex order.
class UniformFamily {
public:
    UniformFamily(int n, int k) : UniformFamily(n, k, {}) {}
    // Validates and sorts; throws InvalidArgument on a bad member, a duplicate,
    // or n outside [0, 64].
    UniformFamily(int n, int k, std::vector<Mask> members);

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::span<const Mask> members() const { return members_; }
    bool contains(Mask m) const;

    friend bool operator==(const UniformFamily&, const UniformFamily&) = default;

private:
    int n_;
    int k_;
    std::vector<Mask> members_;
};

// The first m u-subsets of [n] in colex order. Throws CapacityError when
// m > C(n, u).
UniformFamily colex_segment(const Natural& m, int u, int n);

// All v-subsets of members, 0 <= v <= k. v == k returns the family itself.
UniformFamily shadow(const UniformFamily& f, int v);

// Member-wise complement in [n].
UniformFamily complement_family(const UniformFamily& f);

// True iff |shadow(f, v)| == C(a, v) where |f| == C(a, k). Katona's equality
// condition says this happens exactly when f is a full layer on a points.
// Throws NonBinomialSize when |f| is not a binomial coefficient C(a, k).
bool is_shadow_tight(const UniformFamily& f, int v);

} // namespace crossint
