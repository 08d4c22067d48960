#include "ae/densities.hpp"

#include <bit>
#include <stdexcept>

namespace ae {

Densities densities(const SmallGraph& h) {
    if (h.n == 0) throw std::invalid_argument("densities: empty graph");
    if (h.n > 12) throw std::invalid_argument("densities: more than 12 vertices");
    for (auto [a, b] : h.edges)
        if (a >= h.n || b >= h.n || a == b)
            throw std::invalid_argument("densities: bad edge");

    Densities out{Rational(0), Rational(0), std::nullopt};
    bool first = true, firstPrime = true;
    for (std::uint32_t mask = 1; mask < (1u << h.n); ++mask) {
        auto v = static_cast<long long>(std::popcount(mask));
        long long e = 0;
        for (auto [a, b] : h.edges)
            if ((mask >> a & 1) && (mask >> b & 1)) ++e;

        Rational dm(e, v);
        if (first || dm > out.m) out.m = dm;
        Rational dp(e - 1, v);
        if (firstPrime || dp > out.mPrime) out.mPrime = dp;
        first = firstPrime = false;
        if (v >= 3) {
            Rational dpp(e + 1, v - 2);
            if (!out.mDoublePrime || dpp > *out.mDoublePrime) out.mDoublePrime = dpp;
        }
    }
    return out;
}

}  // namespace ae
