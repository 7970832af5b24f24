#include "crossint/oracle.hpp"

#include "crossint/cascade.hpp"
#include "crossint/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <unordered_set>

namespace crossint {

namespace {

using u128 = unsigned __int128;

Natural to_natural(u128 v)
{
    Natural out = static_cast<std::uint64_t>(v >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(v);
    return out;
}

void require_instance(int n, int k, int l)
{
    if (n < 2 || n > kMaxGround)
        throw InvalidArgument(fmt::format("n = {} outside [2, 64]", n));
    if (k < 1 || k > n - 1 || l < 1 || l > n - 1)
        throw InvalidArgument(fmt::format("need 1 <= k, l <= n - 1, got k = {}, l = {}", k, l));
}

std::vector<Mask> layer(int n, int k)
{
    std::vector<Mask> out;
    const Mask last = full_mask(n) & ~full_mask(n - k);
    for (Mask m = full_mask(k);; m = next_colex(m)) {
        out.push_back(m);
        if (m == last)
            break;
    }
    return out;
}

OracleResult closed_form_result(int n, int k, int l, Method method)
{
    OracleResult r;
    r.n = n;
    r.k = k;
    r.l = l;
    r.method = method;
    r.closed_form = true;
    r.value = binom(n, k) * binom(n, l);
    r.witnesses.push_back({binom(n, k), binom(n, l), std::nullopt});
    r.optimal_count = 1;
    return r;
}

struct SweepPart {
    u128 best = 0;
    std::vector<std::uint64_t> sizes;
    std::uint64_t count = 0;
};

// m * (C(n, l) - shadow bound) for m in [from, to). The colex u-set of rank m
// has elements c_1 < ... < c_u with m = sum C(c_i, i); its nonzero terms are
// exactly the cascade of m.
void sweep_range(int u, int v, std::uint64_t all_l, std::uint64_t from, std::uint64_t to, std::size_t cap,
                 SweepPart& part)
{
    std::array<std::array<std::uint64_t, 65>, 65> c{};
    for (int a = 0; a <= 64; ++a)
        for (int b = 0; b <= a; ++b)
            c[a][b] = binom64(a, b);
    const int shift = u - v;
    Mask s = colex_unrank(from, u);
    for (std::uint64_t m = from; m < to; ++m, s = next_colex(s)) {
        std::uint64_t shadow = 0;
        int idx = 0;
        for (Mask t = s; t != 0; t &= t - 1) {
            const int e = std::countr_zero(t);
            ++idx;
            if (e >= idx && idx - shift >= 0)
                shadow += c[e][idx - shift];
        }
        const u128 product = static_cast<u128>(m) * (all_l - shadow);
        if (product > part.best) {
            part.best = product;
            part.sizes.clear();
            part.count = 0;
        }
        if (product == part.best) {
            ++part.count;
            if (part.sizes.size() < cap)
                part.sizes.push_back(m);
        }
    }
}

} // namespace

const char* to_string(Method m)
{
    return m == Method::cascade ? "cascade" : "enumeration";
}

int default_threads()
{
    if (const char* env = std::getenv("CROSSINT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<int>(std::min<long>(v, 256));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

OracleResult max_product_cascade(int n, int k, int l, const OracleOptions& opts)
{
    require_instance(n, k, l);
    if (k + l > n)
        return closed_form_result(n, k, l, Method::cascade);
    const Natural layer_size = binom(n, k);
    if (layer_size > opts.sweep_budget)
        throw CapacityError(fmt::format("C({}, {}) = {} exceeds the sweep budget {}", n, k, layer_size.str(),
                                        opts.sweep_budget));
    const auto total = layer_size.convert_to<std::uint64_t>();
    const std::uint64_t all_l = binom64(n, l);
    const int u = n - k;

    // m = C(n, k) leaves no room for B, so the sweep stops one short.
    const std::uint64_t first = 1, last = total;
    const int workers = static_cast<int>(
        std::clamp<std::uint64_t>((last - first) / 4096, 1, opts.threads > 0 ? opts.threads : default_threads()));
    std::vector<SweepPart> parts(workers);
    std::vector<std::thread> pool;
    const std::uint64_t span = (last - first + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t from = std::min(last, first + w * span);
        const std::uint64_t to = std::min(last, from + span);
        if (w + 1 == workers)
            sweep_range(u, l, all_l, from, to, opts.witness_cap, parts[w]);
        else
            pool.emplace_back(sweep_range, u, l, all_l, from, to, opts.witness_cap, std::ref(parts[w]));
    }
    for (auto& t : pool)
        t.join();

    SweepPart merged;
    for (const SweepPart& p : parts) {
        if (p.best > merged.best) {
            merged = p;
        } else if (p.best == merged.best && p.best != 0) {
            merged.count += p.count;
            for (std::uint64_t m : p.sizes)
                if (merged.sizes.size() < opts.witness_cap)
                    merged.sizes.push_back(m);
        }
    }

    OracleResult r;
    r.n = n;
    r.k = k;
    r.l = l;
    r.method = Method::cascade;
    r.value = to_natural(merged.best);
    r.optimal_count = merged.count;
    r.witnesses_truncated = merged.count > merged.sizes.size();
    for (std::uint64_t m : merged.sizes)
        r.witnesses.push_back({Natural(m), to_natural(merged.best / m), std::nullopt});
    return r;
}

std::pair<UniformFamily, UniformFamily> cascade_pair(int n, int k, int l, const Natural& m)
{
    require_instance(n, k, l);
    if (m < 0 || m > binom(n, k))
        throw InvalidArgument("cascade_pair: m outside [0, C(n, k)]");
    const UniformFamily segment = colex_segment(m, n - k, n);
    const UniformFamily a = complement_family(segment);
    std::vector<Mask> b;
    if (l <= n - k) {
        const UniformFamily sh = shadow(segment, l);
        for (Mask s : layer(n, l))
            if (!sh.contains(s))
                b.push_back(s);
    } else {
        b = layer(n, l);
    }
    return {a, UniformFamily(n, l, std::move(b))};
}

namespace {

using Key = std::array<std::uint64_t, 4>; // a family of subsets of [8] as a 256-bit set

struct KeyHash {
    std::size_t operator()(const Key& k) const
    {
        std::size_t h = 0;
        for (auto w : k)
            h = h * 0x9E3779B97F4A7C15ULL + (w ^ (w >> 29));
        return h;
    }
};

std::vector<std::vector<int>> all_permutations(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// image[p][mask] for every permutation p of [n] and every mask < 2^n.
std::vector<std::vector<std::uint16_t>> permutation_tables(int n)
{
    std::vector<std::vector<std::uint16_t>> out;
    for (const auto& p : all_permutations(n)) {
        std::vector<std::uint16_t> img(std::size_t{1} << n);
        for (std::size_t m = 0; m < img.size(); ++m) {
            std::uint16_t r = 0;
            for (int b = 0; b < n; ++b)
                if (m >> b & 1)
                    r |= static_cast<std::uint16_t>(1u << p[b]);
            img[m] = r;
        }
        out.push_back(std::move(img));
    }
    return out;
}

// True when the sorted member list of `a` precedes that of `b`.
bool members_before(const Key& a, const Key& b)
{
    for (std::size_t w = 0; w < a.size(); ++w)
        if (const std::uint64_t diff = a[w] ^ b[w])
            return (a[w] & diff & (~diff + 1)) != 0;
    return false;
}

// Groups families into relabelling classes. A new class inserts its whole
// orbit so later members are recognized by lookup; the representative is the
// orbit element whose sorted member list comes first.
class OrbitClasses {
public:
    OrbitClasses(int n, std::size_t class_cap) : tables_(permutation_tables(n)), cap_(class_cap) {}

    // Returns the representative when `members` opens a new class.
    std::optional<std::vector<Mask>> add(const std::vector<Mask>& members)
    {
        const Key key = key_of(members, nullptr);
        if (seen_.count(key))
            return std::nullopt;
        if (classes_ >= cap_) {
            truncated_ = true;
            return std::nullopt;
        }
        ++classes_;
        Key best = key;
        for (const auto& t : tables_) {
            const Key img = key_of(members, &t);
            seen_.insert(img);
            if (members_before(img, best))
                best = img;
        }
        std::vector<Mask> rep;
        for (int m = 0; m < 256; ++m)
            if (best[m / 64] >> (m % 64) & 1)
                rep.push_back(static_cast<Mask>(m));
        return rep;
    }

    bool truncated() const { return truncated_; }

private:
    static Key key_of(const std::vector<Mask>& members, const std::vector<std::uint16_t>* table)
    {
        Key k{};
        for (Mask m : members) {
            const unsigned img = table ? (*table)[m] : static_cast<unsigned>(m);
            k[img / 64] |= std::uint64_t{1} << (img % 64);
        }
        return k;
    }

    std::vector<std::vector<std::uint16_t>> tables_;
    std::unordered_set<Key, KeyHash> seen_;
    std::size_t cap_;
    std::size_t classes_ = 0;
    bool truncated_ = false;
};

constexpr std::size_t kOrbitClassCap = 64;
constexpr int kOrbitMaxGround = 8;

} // namespace

OracleResult max_product_enumeration(int n, int k, int l, const OracleOptions& opts)
{
    require_instance(n, k, l);
    if (k + l > n && opts.short_circuit)
        return closed_form_result(n, k, l, Method::enumeration);
    if (binom(n, k) > kEnumerationCap)
        throw CapacityError(fmt::format("C({}, {}) = {} exceeds the enumeration cap {}", n, k, binom(n, k).str(),
                                        kEnumerationCap));
    const std::vector<Mask> ks = layer(n, k);
    const int big_n = static_cast<int>(ks.size());
    const std::uint32_t everything = (std::uint32_t{1} << big_n) - 1;

    // count[T] = #{l-sets B : every k-set disjoint from B lies in T}
    std::vector<std::uint32_t> count(std::size_t{1} << big_n, 0);
    for (Mask b : layer(n, l)) {
        std::uint32_t disjoint = 0;
        for (int i = 0; i < big_n; ++i)
            if ((ks[i] & b) == 0)
                disjoint |= std::uint32_t{1} << i;
        ++count[disjoint];
    }
    for (int i = 0; i < big_n; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        for (std::uint32_t t = 0; t <= everything; ++t)
            if (t & bit)
                count[t] += count[t ^ bit];
    }

    std::uint64_t best = 0, optimal = 0;
    std::vector<std::uint32_t> optimal_sets;
    const std::size_t keep = 1u << 20;
    for (std::uint32_t s = 0;; ++s) {
        const std::uint64_t product = static_cast<std::uint64_t>(std::popcount(s)) * count[everything ^ s];
        if (product > best) {
            best = product;
            optimal = 0;
            optimal_sets.clear();
        }
        if (product == best) {
            ++optimal;
            if (optimal_sets.size() < keep)
                optimal_sets.push_back(s);
        }
        if (s == everything)
            break;
    }

    OracleResult r;
    r.n = n;
    r.k = k;
    r.l = l;
    r.method = Method::enumeration;
    r.value = best;
    r.optimal_count = optimal;
    r.witnesses_truncated = optimal > optimal_sets.size();

    auto members_of = [&](std::uint32_t s) {
        std::vector<Mask> out;
        for (int i = 0; i < big_n; ++i)
            if (s >> i & 1)
                out.push_back(ks[i]);
        return out;
    };
    auto push = [&](std::vector<Mask> members) {
        const std::uint64_t size_a = members.size();
        r.witnesses.push_back({Natural(size_a), Natural(best / size_a), UniformFamily(n, k, std::move(members))});
    };

    if (n <= kOrbitMaxGround) {
        OrbitClasses classes(n, std::min(opts.witness_cap, kOrbitClassCap));
        for (std::uint32_t s : optimal_sets)
            if (auto rep = classes.add(members_of(s)))
                push(std::move(*rep));
        r.witnesses_truncated = r.witnesses_truncated || classes.truncated();
    } else {
        // Here k = 1 or k = n - 1, so a family is determined up to relabelling by its size.
        std::vector<bool> seen(big_n + 1, false);
        for (std::uint32_t s : optimal_sets) {
            const int size = std::popcount(s);
            if (seen[size])
                continue;
            seen[size] = true;
            push(members_of((std::uint32_t{1} << size) - 1));
        }
    }
    std::sort(r.witnesses.begin(), r.witnesses.end(),
              [](const UniformWitness& a, const UniformWitness& b) { return a.size_a < b.size_a; });
    return r;
}

UniquenessReport uniqueness_check(int n, int k, int l, const OracleOptions& opts)
{
    const OracleResult sweep = max_product_cascade(n, k, l, opts);
    UniquenessReport rep;
    rep.n = n;
    rep.k = k;
    rep.l = l;
    rep.value = sweep.value;
    rep.star_product = binom(n - 1, k - 1) * binom(n - 1, l - 1);
    for (const auto& w : sweep.witnesses)
        rep.maximizing_sizes.push_back(w.size_a);
    rep.sizes_truncated = sweep.witnesses_truncated;
    const Natural star_size = binom(n - 1, k - 1);
    rep.unique_size = !sweep.closed_form && sweep.optimal_count == 1 && rep.maximizing_sizes.front() == star_size;
    // Equality in the cross bound at |A| = C(n-1, k-1) means the (n-k)-family
    // A^c has the minimum l-shadow, which Katona's condition allows only for a
    // full layer on n - 1 points; that needs l < n - k.
    rep.star_forced = rep.unique_size && rep.value == rep.star_product && l < n - k;

    if (binom(n, k) <= kEnumerationCap) {
        OracleOptions enum_opts = opts;
        enum_opts.short_circuit = false;
        const OracleResult full = max_product_enumeration(n, k, l, enum_opts);
        rep.enumeration_optimal_count = full.optimal_count;
        bool all_stars = !full.witnesses_truncated && full.value == rep.star_product;
        for (const auto& w : full.witnesses) {
            if (!all_stars)
                break;
            const UniformFamily& a = *w.family;
            bool star = false;
            for (int i = 1; i <= n && !star; ++i)
                star = a == star_uniform(n, k, i);
            all_stars = star && (l >= n - k || is_shadow_tight(complement_family(a), l));
        }
        rep.enumeration_all_stars = all_stars;
    }
    return rep;
}

namespace {

// Up-sets of 2^[n] as words: bit S is set when the subset with mask S belongs.
std::vector<std::uint64_t> up_sets(int n)
{
    if (n == 0)
        return {0, 1};
    const auto lower = up_sets(n - 1);
    const int half = 1 << (n - 1);
    std::vector<std::uint64_t> out;
    for (std::uint64_t with_n : lower)
        for (std::uint64_t without_n : lower)
            if ((without_n & ~with_n) == 0)
                out.push_back(without_n | (with_n << half));
    return out;
}

std::uint64_t reverse_bits(std::uint64_t w, int width)
{
    std::uint64_t r = 0;
    for (int i = 0; i < width; ++i)
        if (w >> i & 1)
            r |= std::uint64_t{1} << (width - 1 - i);
    return r;
}

template <typename Int>
struct MeasureSweep {
    Int best{};
    std::uint64_t optimal = 0;
    std::vector<std::uint64_t> words;
};

template <typename Int>
MeasureSweep<Int> sweep_up_sets(int n, const std::vector<Int>& wa, const std::vector<Int>& wb,
                                std::uint64_t& searched, std::size_t keep)
{
    const int width = 1 << n;
    const std::uint64_t all = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    std::vector<std::uint64_t> layers(n + 1, 0);
    for (int s = 0; s < width; ++s)
        layers[std::popcount(static_cast<unsigned>(s))] |= std::uint64_t{1} << s;
    auto weigh = [&](std::uint64_t w, const std::vector<Int>& weights) {
        Int total{};
        for (int s = 0; s <= n; ++s)
            if (const int c = std::popcount(w & layers[s]))
                total += weights[s] * c;
        return total;
    };

    MeasureSweep<Int> out;
    bool first = true;
    const int half = width / 2;
    const auto lower = up_sets(n - 1);
    for (std::uint64_t with_n : lower)
        for (std::uint64_t without_n : lower) {
            if ((without_n & ~with_n) != 0)
                continue;
            const std::uint64_t a = without_n | (with_n << half);
            // B holds S exactly when [n] \ S is not in A; complementing S reverses the word.
            const std::uint64_t b = ~reverse_bits(a, width) & all;
            const Int product = weigh(a, wa) * weigh(b, wb);
            ++searched;
            if (first || product > out.best) {
                first = false;
                out.best = product;
                out.optimal = 0;
                out.words.clear();
            }
            if (product == out.best) {
                ++out.optimal;
                if (out.words.size() < keep)
                    out.words.push_back(a);
            }
        }
    return out;
}

std::vector<Natural> size_weights(int n, const ExactRational& p)
{
    const Natural a = boost::multiprecision::numerator(p);
    const Natural b = boost::multiprecision::denominator(p);
    std::vector<Natural> w(n + 1);
    for (int s = 0; s <= n; ++s)
        w[s] = boost::multiprecision::pow(a, s) * boost::multiprecision::pow(Natural(b - a), n - s);
    return w;
}

} // namespace

std::uint64_t count_up_sets(int n)
{
    if (n < 0 || n > 6)
        throw CapacityError("count_up_sets: need 0 <= n <= 6");
    return up_sets(n).size();
}

MeasureResult measure_oracle(int n, const ExactRational& alpha, const ExactRational& beta, std::size_t witness_cap)
{
    if (n < 1)
        throw InvalidArgument("measure_oracle: need n >= 1");
    if (n > 6)
        throw CapacityError(fmt::format("measure_oracle: n = {} exceeds 6", n));
    for (const auto* p : {&alpha, &beta})
        if (*p <= 0 || *p >= 1)
            throw InvalidArgument("measure_oracle: need 0 < alpha, beta < 1");

    const std::vector<Natural> wa = size_weights(n, alpha);
    const std::vector<Natural> wb = size_weights(n, beta);
    const Natural den = boost::multiprecision::pow(Natural(boost::multiprecision::denominator(alpha)), n)
        * boost::multiprecision::pow(Natural(boost::multiprecision::denominator(beta)), n);

    MeasureResult r;
    r.n = n;
    r.alpha = alpha;
    r.beta = beta;
    const std::size_t keep = 1u << 20;
    std::vector<std::uint64_t> words;
    // Each weight sum is at most the denominator's factor, so the product
    // fits in 128 bits whenever the joint denominator does (with a bit to spare).
    if (boost::multiprecision::msb(den) < 126) {
        std::vector<u128> a128, b128;
        for (const auto& w : wa)
            a128.push_back(static_cast<u128>(w.convert_to<std::uint64_t>()));
        for (const auto& w : wb)
            b128.push_back(static_cast<u128>(w.convert_to<std::uint64_t>()));
        auto s = sweep_up_sets<u128>(n, a128, b128, r.families_searched, keep);
        r.value = ExactRational(to_natural(s.best), den);
        r.optimal_count = s.optimal;
        words = std::move(s.words);
    } else {
        auto s = sweep_up_sets<Natural>(n, wa, wb, r.families_searched, keep);
        r.value = ExactRational(s.best, den);
        r.optimal_count = s.optimal;
        words = std::move(s.words);
    }
    r.witnesses_truncated = r.optimal_count > words.size();

    // Relabelling classes of the optimal up-sets, each reported by its minimal members.
    const auto perms = all_permutations(n);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> reps;
    for (std::uint64_t w : words) {
        if (seen.count(w))
            continue;
        if (reps.size() >= witness_cap) {
            r.witnesses_truncated = true;
            break;
        }
        std::uint64_t best = w;
        for (const auto& p : perms) {
            std::uint64_t img = 0;
            for (int s = 0; s < (1 << n); ++s)
                if (w >> s & 1) {
                    int t = 0;
                    for (int b = 0; b < n; ++b)
                        if (s >> b & 1)
                            t |= 1 << p[b];
                    img |= std::uint64_t{1} << t;
                }
            seen.insert(img);
            best = std::min(best, img);
        }
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end());
    for (std::uint64_t w : reps) {
        std::vector<Mask> members;
        for (int s = 0; s < (1 << n); ++s)
            if (w >> s & 1)
                members.push_back(static_cast<Mask>(s));
        r.witnesses.push_back(minimal_members(GeneralFamily(n, std::move(members))));
    }
    return r;
}

const char* to_string(ScanLabel s)
{
    switch (s) {
    case ScanLabel::confirming:
        return "confirming";
    case ScanLabel::refuting:
        return "refuting";
    case ScanLabel::hypothesis_fails:
        return "hypothesis-fails";
    case ScanLabel::out_of_reach:
        return "out-of-reach";
    }
    return "?";
}

ScanReport conjecture_scan(int n, int k, int l, int j_max, const OracleOptions& opts)
{
    if (n < 2 || n > kMaxGround || !(k > 0 && 2 * l > n && k + l < n))
        throw InvalidArgument(fmt::format("conjecture_scan: ({}, {}) is not in Omega' for n = {}", k, l, n));
    if (j_max < 0)
        throw InvalidArgument("conjecture_scan: j_max must be nonnegative");
    ScanReport rep;
    rep.n = n;
    rep.k = k;
    rep.l = l;
    rep.star_product = binom(n - 1, k - 1) * binom(n - 1, l - 1);
    const int needed = std::min(k - 1, n - 2);
    rep.hypothesis_complete = j_max >= needed;
    rep.hypothesis = true;
    for (int j = 0; j <= std::min(needed, j_max); ++j) {
        const Natural product = a_family_size(n, k, j) * b_family_size(n, l, j);
        const bool below = product < rep.star_product;
        rep.terms.push_back({j, product, below});
        rep.hypothesis = rep.hypothesis && below;
    }

    try {
        UniquenessReport u = uniqueness_check(n, k, l, opts);
        rep.oracle_value = u.value;
        bool conclusion = u.value == rep.star_product && u.star_forced;
        if (u.enumeration_all_stars)
            conclusion = conclusion && *u.enumeration_all_stars;
        rep.conclusion = conclusion;
        rep.uniqueness = std::move(u);
    } catch (const CapacityError&) {
    }

    if (!rep.hypothesis)
        rep.label = ScanLabel::hypothesis_fails;
    else if (!rep.hypothesis_complete || !rep.conclusion)
        rep.label = ScanLabel::out_of_reach;
    else
        rep.label = *rep.conclusion ? ScanLabel::confirming : ScanLabel::refuting;
    return rep;
}

} // namespace crossint
