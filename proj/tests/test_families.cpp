#include "crossint/errors.hpp"
#include "crossint/families.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

using namespace crossint;

namespace {

using Set = std::vector<int>;

// All k-subsets of [n] as sorted element vectors.
std::vector<Set> subsets_of_size(int n, int k)
{
    std::vector<Set> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        Set s;
        for (int i = 0; i < n; ++i)
            if (pick[i])
                s.push_back(i + 1);
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

bool has(const Set& s, int e) { return std::find(s.begin(), s.end(), e) != s.end(); }

// Membership in A_j read straight off the definition.
bool in_a(const Set& s, int j)
{
    if (has(s, 1))
        return true;
    for (int e = 2; e <= j + 2; ++e)
        if (!has(s, e))
            return false;
    return true;
}

bool in_b(const Set& s, int j)
{
    if (!has(s, 1))
        return false;
    for (int e = 2; e <= j + 2; ++e)
        if (has(s, e))
            return true;
    return false;
}

std::vector<Mask> masks(const std::vector<Set>& sets)
{
    std::vector<Mask> out;
    for (const Set& s : sets)
        out.push_back(mask_of(s));
    return out;
}

} // namespace

TEST_CASE("star_uniform examples")
{
    CHECK(star_uniform(3, 1, 1) == UniformFamily(3, 1, {mask_of({1})}));
    CHECK(star_uniform(5, 3, 1).size() == 6);
    CHECK(star_uniform(4, 2, 3) == UniformFamily(4, 2, {mask_of({1, 3}), mask_of({2, 3}), mask_of({3, 4})}));
    CHECK_THROWS_AS(star_uniform(4, 2, 5), InvalidArgument);
}

TEST_CASE("a/b uniform examples")
{
    CHECK(a_family_uniform(5, 1, 0) == UniformFamily(5, 1, {mask_of({1}), mask_of({2})}));
    CHECK(b_family_uniform(5, 3, 0).size() == 3);
    const auto a = a_family_uniform(5, 1, 0);
    const auto b = b_family_uniform(5, 3, 0);
    CHECK(a.size() * b.size() == 6);
    CHECK(binom(4, 0) * binom(4, 2) == 6);
    CHECK(is_cross_intersecting(a, b));
    CHECK_THROWS_AS(a_family_uniform(5, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(a_family_uniform(5, 3, 4), InvalidArgument);
}

TEST_CASE("uniform families match the definition and the closed-form sizes")
{
    for (int n = 2; n <= 12; ++n)
        for (int j = 0; j + 2 <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                std::vector<Set> want;
                for (const Set& s : subsets_of_size(n, k))
                    if (in_a(s, j))
                        want.push_back(s);
                const auto got = a_family_uniform(n, k, j);
                REQUIRE(got == UniformFamily(n, k, masks(want)));
                CHECK(Natural(got.size()) == a_family_size(n, k, j));
            }
            for (int l = 1; l <= n; ++l) {
                std::vector<Set> want;
                for (const Set& s : subsets_of_size(n, l))
                    if (in_b(s, j))
                        want.push_back(s);
                const auto got = b_family_uniform(n, l, j);
                REQUIRE(got == UniformFamily(n, l, masks(want)));
                CHECK(Natural(got.size()) == b_family_size(n, l, j));
            }
        }
}

TEST_CASE("uniform A_j and B_j are cross-intersecting")
{
    for (int n = 2; n <= 9; ++n)
        for (int j = 0; j + 2 <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l)
                    CHECK(is_cross_intersecting(a_family_uniform(n, k, j), b_family_uniform(n, l, j)));
}

TEST_CASE("is_cross_intersecting examples")
{
    CHECK(is_cross_intersecting(star_uniform(6, 2, 3), star_uniform(6, 4, 3)));
    CHECK_FALSE(is_cross_intersecting(UniformFamily(3, 1, {mask_of({1})}), UniformFamily(3, 1, {mask_of({2})})));
    CHECK(is_cross_intersecting(UniformFamily(3, 1, {}), UniformFamily(3, 1, {mask_of({2})})));
    CHECK_THROWS_AS(is_cross_intersecting(star_uniform(4, 1, 1), star_uniform(5, 1, 1)), InvalidArgument);
}

TEST_CASE("measure examples")
{
    const ExactRational p(2, 7);
    std::vector<Mask> all;
    for (Mask m = 0; m < 32; ++m)
        all.push_back(m);
    CHECK(measure(GeneralFamily(5, all), p) == 1);
    CHECK(measure(star_measure(5, 3), p) == p);
    CHECK(measure(GeneralFamily(5), p) == 0);
    CHECK_THROWS_AS(measure(GeneralFamily(5), ExactRational(0)), InvalidArgument);
    CHECK_THROWS_AS(measure(GeneralFamily(5), ExactRational(1)), InvalidArgument);

    const ExactRational a(1, 4);
    const ExactRational b(11, 20);
    CHECK(measure(a_family_measure(6, 0), a) == 2 * a - a * a);
    CHECK(measure(b_family_measure(6, 0), b) == b * b);
}

TEST_CASE("measure families are cross-intersecting")
{
    for (int n = 2; n <= 8; ++n)
        for (int j = 0; j + 2 <= n; ++j)
            CHECK(is_cross_intersecting(a_family_measure(n, j), b_family_measure(n, j)));
}

TEST_CASE("closed-form measures agree with explicit families")
{
    const std::vector<ExactRational> ps = {ExactRational(1, 3), ExactRational(2, 7), ExactRational(11, 20),
                                           ExactRational(99, 100)};
    for (int j = 0; j <= 4; ++j)
        for (int n = j + 2; n <= 10; ++n)
            for (const auto& p : ps) {
                CHECK(measure(a_family_measure(n, j), p) == measure_aj(p, j));
                CHECK(measure(b_family_measure(n, j), p) == measure_bj(p, j));
            }
}

TEST_CASE("closed-form doubles")
{
    CHECK(measure_aj(0.25, 0) == doctest::Approx(0.4375).epsilon(1e-15));
    CHECK(measure_bj(0.55, 0) == doctest::Approx(0.3025).epsilon(1e-15));
    const double prod = measure_aj(0.2, 0) * measure_bj(0.6, 0);
    CHECK(prod == doctest::Approx(0.1296).epsilon(1e-14));
    CHECK(prod > 0.2 * 0.6);
    for (int j = 0; j <= 6; ++j) {
        const ExactRational a(3, 10);
        CHECK(measure_aj(0.3, j) == doctest::Approx(to_double(measure_aj(a, j))).epsilon(1e-14));
        CHECK(measure_bj(0.3, j) == doctest::Approx(to_double(measure_bj(a, j))).epsilon(1e-14));
    }
}

TEST_CASE("lifting preserves every p-biased measure")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        std::vector<Mask> members;
        for (Mask m = 0; m <= full_mask(n); ++m)
            if (rng() % 3 == 0)
                members.push_back(m);
        const GeneralFamily f(n, members);
        const GeneralFamily g = lift(f);
        CHECK(g.n() == n + 1);
        CHECK(g.size() == 2 * f.size());
        for (const ExactRational p : {ExactRational(1, 5), ExactRational(4, 9)})
            CHECK(measure(g, p) == measure(f, p));
    }
}

TEST_CASE("measures are probabilities and additive over disjoint unions")
{
    std::mt19937_64 rng(11);
    const int n = 7;
    const ExactRational p(3, 8);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Mask> left, right, both;
        for (Mask m = 0; m <= full_mask(n); ++m) {
            const auto r = rng() % 3;
            if (r == 0)
                left.push_back(m);
            else if (r == 1)
                right.push_back(m);
            if (r != 2)
                both.push_back(m);
        }
        const auto ml = measure(GeneralFamily(n, left), p);
        const auto mr = measure(GeneralFamily(n, right), p);
        CHECK(ml >= 0);
        CHECK(ml <= 1);
        CHECK(measure(GeneralFamily(n, both), p) == ml + mr);
    }
}

TEST_CASE("minimal_members")
{
    const auto f = a_family_measure(4, 1);
    const auto mins = minimal_members(f);
    CHECK(mins == GeneralFamily(4, {mask_of({1}), mask_of({2, 3})}));
}

TEST_CASE("family text format round trips")
{
    const auto u = a_family_uniform(6, 3, 1);
    std::stringstream s1;
    write_family(s1, u);
    CHECK(s1.str().rfind("6 3\n", 0) == 0);
    const auto back = read_family(s1);
    REQUIRE(back.k);
    CHECK(back.uniform() == u);

    const auto g = b_family_measure(5, 2);
    std::stringstream s2;
    write_family(s2, g);
    const auto gback = read_family(s2);
    CHECK_FALSE(gback.k);
    CHECK(gback.general() == g);

    std::stringstream s3("3 *\n\n1 3\n");
    const auto with_empty = read_family(s3);
    CHECK(with_empty.general() == GeneralFamily(3, {0, mask_of({1, 3})}));

    std::stringstream ok("4 2\n1 2\n3 4\n");
    CHECK(read_family(ok).uniform().size() == 2);
    for (const char* bad : {"", "4\n", "4 x\n", "4 2 1\n", "4 2\n1 5\n", "4 2\n2 1\n", "4 2\n1 2 3\n",
                            "4 2\n1 2\n1 2\n", "4 2\n1 a\n"}) {
        std::stringstream in(bad);
        CHECK_THROWS_AS(read_family(in), InvalidArgument);
    }
}
