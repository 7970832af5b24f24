#include "crossint/families.hpp"

#include "crossint/errors.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace crossint {

namespace {

void require_ground(int n)
{
    if (n < 0 || n > kMaxGround)
        throw InvalidArgument("ground set size " + std::to_string(n) + " outside [0, 64]");
}

// Visits every subset of [n] of size k in colex order.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn)
{
    if (k < 0 || k > n)
        return;
    const Mask last = full_mask(n) & ~full_mask(n - k);
    for (Mask m = full_mask(k);; m = next_colex(m)) {
        fn(m);
        if (m == last)
            break;
    }
}

template <typename Fn>
void for_each_subset(int n, Fn&& fn)
{
    if (n > 30)
        throw CapacityError("power set of [" + std::to_string(n) + "] is too large to list");
    const Mask top = full_mask(n);
    for (Mask m = 0;; ++m) {
        fn(m);
        if (m == top)
            break;
    }
}

ExactRational pow(const ExactRational& base, int e)
{
    ExactRational r = 1;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

} // namespace

GeneralFamily::GeneralFamily(int n, std::vector<Mask> members) : n_(n), members_(std::move(members))
{
    require_ground(n);
    const Mask ground = full_mask(n);
    for (Mask m : members_)
        if ((m & ~ground) != 0)
            throw InvalidArgument("member outside [" + std::to_string(n) + "]");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw InvalidArgument("duplicate member");
}

GeneralFamily::GeneralFamily(const UniformFamily& f)
    : n_(f.n()), members_(f.members().begin(), f.members().end())
{
}

bool GeneralFamily::contains(Mask m) const
{
    return std::binary_search(members_.begin(), members_.end(), m);
}

UniformFamily star_uniform(int n, int k, int i)
{
    require_ground(n);
    if (i < 1 || i > n || k < 1 || k > n)
        throw InvalidArgument("star_uniform: need 1 <= i, k <= n");
    std::vector<Mask> out;
    for_each_k_subset(n, k, [&](Mask m) {
        if (m & element_bit(i))
            out.push_back(m);
    });
    return UniformFamily(n, k, std::move(out));
}

UniformFamily a_family_uniform(int n, int k, int j)
{
    require_ground(n);
    if (j < 0 || j + 2 > n || k < j + 1 || k > n)
        throw InvalidArgument("a_family_uniform: need j >= 0, j + 2 <= n, j + 1 <= k <= n");
    const Mask head = full_mask(j + 2);
    const Mask tail = head & ~element_bit(1);
    std::vector<Mask> out;
    for_each_k_subset(n, k, [&](Mask m) {
        if ((m & element_bit(1)) || (m & head) == tail)
            out.push_back(m);
    });
    return UniformFamily(n, k, std::move(out));
}

UniformFamily b_family_uniform(int n, int l, int j)
{
    require_ground(n);
    if (j < 0 || j + 2 > n || l < 1 || l > n)
        throw InvalidArgument("b_family_uniform: need j >= 0, j + 2 <= n, 1 <= l <= n");
    const Mask head = full_mask(j + 2);
    std::vector<Mask> out;
    for_each_k_subset(n, l, [&](Mask m) {
        if ((m & element_bit(1)) && (m & head) != element_bit(1))
            out.push_back(m);
    });
    return UniformFamily(n, l, std::move(out));
}

Natural a_family_size(int n, int k, int j)
{
    return binom(n - 1, k - 1) + binom(n - j - 2, k - j - 1);
}

Natural b_family_size(int n, int l, int j)
{
    return binom(n - 1, l - 1) - binom(n - j - 2, l - 1);
}

GeneralFamily a_family_measure(int n, int j)
{
    require_ground(n);
    if (j < 0 || j + 2 > n)
        throw InvalidArgument("a_family_measure: need 0 <= j <= n - 2");
    const Mask head = full_mask(j + 2);
    const Mask tail = head & ~element_bit(1);
    std::vector<Mask> out;
    for_each_subset(n, [&](Mask m) {
        if ((m & element_bit(1)) || (m & head) == tail)
            out.push_back(m);
    });
    return GeneralFamily(n, std::move(out));
}

GeneralFamily b_family_measure(int n, int j)
{
    require_ground(n);
    if (j < 0 || j + 2 > n)
        throw InvalidArgument("b_family_measure: need 0 <= j <= n - 2");
    const Mask head = full_mask(j + 2);
    std::vector<Mask> out;
    for_each_subset(n, [&](Mask m) {
        if ((m & element_bit(1)) && (m & head) != element_bit(1))
            out.push_back(m);
    });
    return GeneralFamily(n, std::move(out));
}

GeneralFamily star_measure(int n, int i)
{
    require_ground(n);
    if (i < 1 || i > n)
        throw InvalidArgument("star_measure: need 1 <= i <= n");
    std::vector<Mask> out;
    for_each_subset(n, [&](Mask m) {
        if (m & element_bit(i))
            out.push_back(m);
    });
    return GeneralFamily(n, std::move(out));
}

bool is_cross_intersecting(std::span<const Mask> a, std::span<const Mask> b)
{
    for (Mask x : a)
        for (Mask y : b)
            if ((x & y) == 0)
                return false;
    return true;
}

bool is_cross_intersecting(const UniformFamily& a, const UniformFamily& b)
{
    if (a.n() != b.n())
        throw InvalidArgument("is_cross_intersecting: different ground sets");
    return is_cross_intersecting(a.members(), b.members());
}

bool is_cross_intersecting(const GeneralFamily& a, const GeneralFamily& b)
{
    if (a.n() != b.n())
        throw InvalidArgument("is_cross_intersecting: different ground sets");
    return is_cross_intersecting(a.members(), b.members());
}

ExactRational measure(const GeneralFamily& f, const ExactRational& p)
{
    if (p <= 0 || p >= 1)
        throw InvalidArgument("measure: need 0 < p < 1");
    const int n = f.n();
    std::vector<Natural> by_size(n + 1, 0);
    for (Mask m : f.members())
        by_size[popcount(m)] += 1;
    const Natural a = boost::multiprecision::numerator(p);
    const Natural b = boost::multiprecision::denominator(p);
    Natural num = 0;
    for (int s = 0; s <= n; ++s)
        if (by_size[s] != 0)
            num += by_size[s] * boost::multiprecision::pow(a, s) * boost::multiprecision::pow(b - a, n - s);
    return ExactRational(num, boost::multiprecision::pow(b, n));
}

double measure_aj(double alpha, int j)
{
    return alpha + (1 - alpha) * std::pow(alpha, j + 1);
}

double measure_bj(double beta, int j)
{
    return beta - beta * std::pow(1 - beta, j + 1);
}

ExactRational measure_aj(const ExactRational& alpha, int j)
{
    return alpha + (1 - alpha) * pow(alpha, j + 1);
}

ExactRational measure_bj(const ExactRational& beta, int j)
{
    return beta - beta * pow(1 - beta, j + 1);
}

GeneralFamily lift(const GeneralFamily& f)
{
    const Mask extra = element_bit(f.n() + 1);
    std::vector<Mask> out;
    out.reserve(2 * f.size());
    for (Mask m : f.members()) {
        out.push_back(m);
        out.push_back(m | extra);
    }
    return GeneralFamily(f.n() + 1, std::move(out));
}

GeneralFamily minimal_members(const GeneralFamily& f)
{
    std::vector<Mask> out;
    for (Mask m : f.members()) {
        bool minimal = true;
        for (Mask other : f.members())
            if (other != m && (other & m) == other) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(m);
    }
    return GeneralFamily(f.n(), std::move(out));
}

namespace {

void write_members(std::ostream& out, std::span<const Mask> members)
{
    for (Mask m : members) {
        bool first = true;
        for (int e : elements(m)) {
            if (!first)
                out << ' ';
            out << e;
            first = false;
        }
        out << '\n';
    }
}

} // namespace

void write_family(std::ostream& out, const UniformFamily& f)
{
    out << f.n() << ' ' << f.k() << '\n';
    write_members(out, f.members());
}

void write_family(std::ostream& out, const GeneralFamily& f)
{
    out << f.n() << " *\n";
    write_members(out, f.members());
}

UniformFamily FamilyFile::uniform() const
{
    if (!k)
        throw InvalidArgument("family file is not uniform");
    return UniformFamily(n, *k, members);
}

FamilyFile read_family(std::istream& in)
{
    FamilyFile file;
    std::string line;
    if (!std::getline(in, line))
        throw InvalidArgument("family file: missing header");
    {
        std::istringstream header(line);
        std::string k_token;
        if (!(header >> file.n >> k_token))
            throw InvalidArgument("family file: malformed header '" + line + "'");
        std::string extra;
        if (header >> extra)
            throw InvalidArgument("family file: malformed header '" + line + "'");
        if (k_token != "*") {
            try {
                std::size_t used = 0;
                file.k = std::stoi(k_token, &used);
                if (used != k_token.size())
                    throw InvalidArgument("");
            } catch (const std::exception&) {
                throw InvalidArgument("family file: malformed header '" + line + "'");
            }
        }
    }
    require_ground(file.n);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        Mask m = 0;
        int prev = 0;
        std::string tok;
        while (row >> tok) {
            std::size_t used = 0;
            int e = 0;
            try {
                e = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || e < 1 || e > file.n || e <= prev)
                throw InvalidArgument("family file line " + std::to_string(line_no)
                                      + ": expected increasing elements of [" + std::to_string(file.n) + "]");
            m |= element_bit(e);
            prev = e;
        }
        file.members.push_back(m);
    }
    if (file.k)
        (void)file.uniform();
    else
        (void)file.general();
    return file;
}

} // namespace crossint
