#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace crossint {

// Arbitrary precision integers. Every cardinality, product and M(n,k,l) value
// lives here; nonnegativity is a convention enforced by the producers.
using Natural = boost::multiprecision::cpp_int;

// Always kept in lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

// Comparison tolerance for the floating side of the library (region
// predicates, fractional cascades, claim inequalities).
inline constexpr double kTolerance = 1e-12;

// Outcome of a strict floating comparison evaluated at a tolerance.
enum class Verdict { holds, fails, undecidable };

const char* to_string(Verdict v);

// lhs < rhs decided at tolerance `tol`: holds when lhs < rhs - tol, fails when
// lhs > rhs + tol, undecidable in between.
Verdict strictly_less(double lhs, double rhs, double tol = kTolerance);

// C(n, k); zero outside 0 <= k <= n. Throws InvalidArgument for n < 0.
Natural binom(long n, long k);

// Cached table lookup for 0 <= n <= 64. Every such coefficient fits in 64 bits.
std::uint64_t binom64(int n, int k);

// Falling-factorial binomial x(x-1)...(x-t+1)/t! for real x. Equals 1 for
// t == 0 and 0 for x < t. Throws InvalidArgument for t < 0.
double gen_binom(double x, int t);

// The x in [lo, hi] with gen_binom(x, r) == m, located by bisection to
// `tol` absolute on x (at most 200 halvings). Integer roots are returned
// exactly. Throws NoRootError when [lo, hi] does not bracket m.
double solve_binom_x(const Natural& m, int r, double lo, double hi, double tol = kTolerance);

double to_double(const Natural& v);
double to_double(const ExactRational& v);

// num / den as a double, accurate even when both operands overflow a double.
double ratio_to_double(const Natural& num, const Natural& den);

// Parses "p/q" or a plain integer. Throws InvalidArgument on anything else,
// including a zero denominator.
ExactRational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const ExactRational& v);

} // namespace crossint
