#include "emcover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace emcover {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

}  // namespace

BigInt big_binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

BigInt erdos_moser_f(long n, long k) {
    require(k >= 2, "erdos_moser_f: need k >= 2");
    require(n > k, "erdos_moser_f: need n > k");
    return BigInt(k - 1) * (n - 1) - big_binom(k - 1, 2) + ceil_div(BigInt(n - k + 1), 2);
}

BigInt covering_lb(long n, long r) {
    require(r >= 2 && n >= r, "covering_lb: need n >= r >= 2");
    return ceil_div(big_binom(n, r - 1), BigInt(r));
}

BigInt g_value(long n, long k, long r, const BigInt& inner_covering) {
    require(r >= 2, "g_value: need r >= 2");
    require(n > k && k >= r - 1, "g_value: need n > k >= r-1");
    const long m = n - k + r - 1;
    const BigInt lb = covering_lb(m, r);
    if (inner_covering < lb) {
        throw std::invalid_argument("g_value: inner covering " + inner_covering.str() +
                                    " is below the counting bound " + lb.str() + " for D(" + std::to_string(m) +
                                    "," + std::to_string(r) + ")");
    }
    return big_binom(n, r) - big_binom(m, r) + inner_covering;
}

SteinerValue g_steiner(long n, long k, long r) {
    require(r >= 2, "g_steiner: need r >= 2");
    require(n > k && k >= r - 1, "g_steiner: need n > k >= r-1");
    const long m = n - k + r - 1;
    const BigInt pairs = big_binom(m, r - 1);
    SteinerValue out;
    out.integral = pairs % r == 0;
    if (out.integral) out.value = big_binom(n, r) - big_binom(m, r) + pairs / r;
    return out;
}

double fractional_binomial(double x, int r) {
    if (r < 0) throw std::invalid_argument("fractional_binomial: need r >= 0");
    if (x < r - 1) throw std::invalid_argument("fractional_binomial: x below r-1");
    double v = 1.0;
    for (int i = 0; i < r; ++i) v *= (x - i) / (i + 1);
    return v;
}

FractionalDegree lovasz_x(double m, int r) {
    if (m < 1) throw std::invalid_argument("lovasz_x: need m >= 1");
    if (r < 1) throw std::invalid_argument("lovasz_x: need r >= 1");
    double lo = r;
    double hi = r + m;
    const double tol = 1e-9 * std::max(1.0, m);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double v = fractional_binomial(mid, r);
        if (std::abs(v - m) <= tol * 1e-3) {
            lo = hi = mid;
            break;
        }
        (v < m ? lo : hi) = mid;
    }
    return {0.5 * (lo + hi), r};
}

double kk_shadow_lb(double m, int r) {
    if (r < 2) throw std::invalid_argument("kk_shadow_lb: need r >= 2");
    return fractional_binomial(lovasz_x(m, r).x, r - 1);
}

LoomisWhitney loomis_whitney_check(std::span<const std::vector<int>> tuples) {
    LoomisWhitney out;
    if (tuples.empty()) {
        out.holds = true;
        return out;
    }
    const std::size_t d = tuples.front().size();
    require(d >= 2, "loomis_whitney_check: tuples need arity >= 2");
    std::set<std::vector<int>> s;
    for (const auto& t : tuples) {
        require(t.size() == d, "loomis_whitney_check: ragged tuples");
        s.insert(t);
    }
    out.projections_product = 1;
    for (std::size_t i = 0; i < d; ++i) {
        std::set<std::vector<int>> proj;
        for (const auto& t : s) {
            std::vector<int> p;
            p.reserve(d - 1);
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) p.push_back(t[j]);
            proj.insert(std::move(p));
        }
        out.projections_product *= proj.size();
    }
    out.set_power = boost::multiprecision::pow(BigInt(s.size()), static_cast<unsigned>(d - 1));
    out.holds = out.projections_product >= out.set_power;
    return out;
}

}  // namespace emcover
