#ifndef EMCOVER_BOUNDS_HPP
#define EMCOVER_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <vector>

namespace emcover {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_binom(long n, long k);

/// Minimum edges of a graph on n vertices covering every k-set:
/// (k-1)(n-1) - C(k-1,2) + ceil((n-k+1)/2). Requires n > k >= 2.
BigInt erdos_moser_f(long n, long k);

/// Edge count of the extremal family for a given inner covering number:
/// C(n,r) - C(n-k+r-1, r) + inner_covering.
/// Requires n > k >= r-1 and inner_covering >= covering_lb(n-k+r-1, r).
BigInt g_value(long n, long k, long r, const BigInt& inner_covering);

struct SteinerValue {
    bool integral = false;  // r divides C(n-k+r-1, r-1)
    BigInt value;           // meaningful only when integral
    // Divisibility does not prove that the design exists, so an integral
    // value is only ever a candidate.
    bool candidate() const { return integral; }
};

/// The extremal count assuming a perfect inner covering (Steiner system).
SteinerValue g_steiner(long n, long k, long r);

/// ceil(C(n, r-1) / r), the counting lower bound on the covering number D(n,r).
BigInt covering_lb(long n, long r);

/// x(x-1)...(x-r+1)/r! for real x >= r-1.
double fractional_binomial(double x, int r);

struct FractionalDegree {
    double x = 0.0;
    int r = 0;
};

/// Real x >= r with C(x, r) = m, by bisection on [r, r+m]. Requires m >= 1.
FractionalDegree lovasz_x(double m, int r);

/// Lovasz form of Kruskal-Katona: an r-uniform system with m edges has a
/// shadow of at least C(x, r-1) sets where C(x, r) = m. Real-valued.
double kk_shadow_lb(double m, int r);

struct LoomisWhitney {
    bool holds = false;
    BigInt projections_product;  // product of |P_i| over coordinates i
    BigInt set_power;            // |S|^(d-1) for tuples of arity d
};

/// Checks prod_i |P_i| >= |S|^(d-1) where P_i drops coordinate i of each
/// d-tuple. Requires d >= 2 and tuples of equal arity.
LoomisWhitney loomis_whitney_check(std::span<const std::vector<int>> tuples);

}  // namespace emcover

#endif  // EMCOVER_BOUNDS_HPP
