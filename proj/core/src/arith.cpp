#include "ae/arith.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>

namespace ae::arith {

using boost::multiprecision::cpp_int;

namespace {

cpp_int ipow(cpp_int base, std::uint64_t exp) {
    cpp_int out = 1;
    while (exp--) out *= base;
    return out;
}

std::uint64_t binom2(std::uint64_t n) { return n * (n - 1) / 2; }

}  // namespace

std::uint64_t remainder_r(std::uint64_t n, std::uint64_t b) {
    if (n < 2 || b < 1) throw std::invalid_argument("remainder_r: need n >= 2, b >= 1");
    std::uint64_t r = binom2(n) % (b + 1);
    return r == 0 ? b + 1 : r;
}

bool remainder_inequality(std::uint64_t n, std::uint64_t b, std::uint32_t k) {
    cpp_int lhs = cpp_int(remainder_r(n, b)) * ipow(cpp_int(2) * b, k - 1);
    return lhs < ipow(cpp_int(n), k + 1);
}

std::uint64_t star_bias_cap(std::uint64_t n, std::uint32_t k) {
    // largest b with (5b)^{k-1} <= 2^{k-1} n^k
    cpp_int bound = ipow(cpp_int(2), k - 1) * ipow(cpp_int(n), k);
    auto seed = static_cast<std::uint64_t>(
        0.4 * std::pow(static_cast<double>(n), static_cast<double>(k) / (k - 1)));
    std::uint64_t b = seed > 2 ? seed - 2 : 1;
    while (ipow(cpp_int(5) * (b + 1), k - 1) <= bound) ++b;
    while (b > 0 && ipow(cpp_int(5) * b, k - 1) > bound) --b;
    return b;
}

std::optional<std::uint64_t> e_plus(std::uint64_t n, std::uint32_t k) {
    if (n < 3 || k < 3) throw std::invalid_argument("e_plus: need n >= 3, k >= 3");
    for (std::uint64_t b = star_bias_cap(n, k); b >= 1; --b)
        if (remainder_inequality(n, b, k)) return b;
    return std::nullopt;
}

std::optional<std::uint64_t> e_minus(std::uint64_t n, std::uint32_t k) {
    if (n < 3 || k < 3) throw std::invalid_argument("e_minus: need n >= 3, k >= 3");
    std::uint64_t cap = star_bias_cap(n, k);
    std::optional<std::uint64_t> best;
    for (std::uint64_t b = 1; b <= cap; ++b) {
        if (!remainder_inequality(n, b, k)) break;
        best = b;
    }
    return best;
}

std::vector<std::uint64_t> divisors(std::uint64_t value) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= value; ++d) {
        if (value % d != 0) continue;
        out.push_back(d);
        if (d != value / d) out.push_back(value / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ManyWitness> fact_many_search(std::uint64_t c, std::uint64_t expNum,
                                          std::uint64_t expDen, ManyVariant variant,
                                          std::uint64_t nLo, std::uint64_t nHi,
                                          bool collectAll) {
    if (nLo > nHi || nLo < 2) throw std::invalid_argument("fact_many_search: bad n range");
    if (expDen == 0 || 2 * expDen <= expNum)
        throw std::invalid_argument("fact_many_search: exponent must be a rational < 2");
    std::uint64_t upperFactor = variant == ManyVariant::DividesBinom ? 2 : 4;

    std::vector<ManyWitness> out;
    for (std::uint64_t n = nLo; n <= nHi; ++n) {
        std::uint64_t target = binom2(n);
        if (variant == ManyVariant::DividesBinomMinusOne) {
            if (target == 0) continue;
            target -= 1;
        }
        if (target == 0) continue;
        // c n^{p/s} < q  <=>  c^s n^p < q^s, and similarly for the upper end
        cpp_int np = ipow(cpp_int(n), expNum);
        cpp_int lo = ipow(cpp_int(c), expDen) * np;
        cpp_int hi = ipow(cpp_int(upperFactor * c), expDen) * np;
        ManyWitness w{n, 0, {}};
        for (std::uint64_t q : divisors(target)) {
            cpp_int qs = ipow(cpp_int(q), expDen);
            if (qs <= lo || qs >= hi) continue;
            if (w.q == 0) w.q = q;
            if (collectAll) w.allQ.push_back(q);
            else break;
        }
        if (w.q != 0) out.push_back(std::move(w));
    }
    return out;
}

std::optional<std::uint64_t> fact_all_search(std::uint64_t deltaNum, std::uint64_t deltaDen,
                                             std::uint64_t bigN, std::uint64_t q) {
    if (deltaNum == 0 || deltaNum >= deltaDen)
        throw std::invalid_argument("fact_all_search: delta must lie in (0,1)");
    if (bigN == 0 || q == 0) throw std::invalid_argument("fact_all_search: N, q positive");
    if (q > bigN) return std::nullopt;  // N mod k < q for every k
    long double delta = static_cast<long double>(deltaNum) / deltaDen;
    auto hi = static_cast<std::uint64_t>(
        2.0L * q * std::log(static_cast<long double>(q)) / delta);
    for (std::uint64_t k = q; k <= hi; ++k)
        if (bigN % k >= q) return k;
    return std::nullopt;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> enforcer_favorable_strict_bias(
    std::uint64_t n, std::uint32_t k) {
    if (n < 3 || k < 3) throw std::invalid_argument("need n >= 3, k >= 3");
    std::uint64_t target = binom2(n) - 1;
    cpp_int nk = ipow(cpp_int(n), k);
    cpp_int hi = ipow(cpp_int(4), k - 1) * nk;
    for (std::uint64_t q : divisors(target)) {
        cpp_int qp = ipow(cpp_int(q), k - 1);
        if (qp <= nk || qp >= hi) continue;
        if (q / 10 < 2) continue;
        std::uint64_t b = q / 10 - 1;
        // 0.09 n^{k/(k-1)} < b < 0.4 n^{k/(k-1)}
        if (ipow(cpp_int(100) * b, k - 1) <= ipow(cpp_int(9), k - 1) * nk) continue;
        if (ipow(cpp_int(5) * b, k - 1) >= ipow(cpp_int(2), k - 1) * nk) continue;
        if (!remainder_inequality(n, b, k)) continue;
        return std::make_pair(b, q);
    }
    return std::nullopt;
}

std::optional<std::uint64_t> avoider_favorable_strict_bias(std::uint64_t n, std::uint32_t k) {
    if (n < 3 || k < 3) throw std::invalid_argument("need n >= 3, k >= 3");
    cpp_int nk1 = ipow(cpp_int(n), k + 1);
    cpp_int lo = ipow(cpp_int(2), k) * nk1;
    cpp_int hi = ipow(cpp_int(4), k) * nk1;
    for (std::uint64_t d : divisors(binom2(n))) {
        if (d < 2) continue;
        std::uint64_t b = d - 1;
        cpp_int bk = ipow(cpp_int(b), k);
        if (bk > lo && bk < hi) return b;
    }
    return std::nullopt;
}

std::uint64_t avoider_safe_bias_floor(std::uint64_t n, std::uint32_t k) {
    cpp_int bound = ipow(cpp_int(2), k) * ipow(cpp_int(n), k + 1);
    auto seed = static_cast<std::uint64_t>(
        2.0 * std::pow(static_cast<double>(n), static_cast<double>(k + 1) / k));
    std::uint64_t q = seed > 2 ? seed - 2 : 1;
    while (ipow(cpp_int(q), k) < bound) ++q;
    while (q > 1 && ipow(cpp_int(q - 1), k) >= bound) --q;
    return q;
}

std::optional<std::uint64_t> avoider_general_upper_bias(std::uint64_t n, std::uint32_t k) {
    if (n < 3 || k < 3) throw std::invalid_argument("need n >= 3, k >= 3");
    std::uint64_t q = avoider_safe_bias_floor(n, k);
    auto found = fact_all_search(k + 1, 2 * k, binom2(n), q);
    if (!found || *found < 2) return std::nullopt;
    std::uint64_t b = *found - 1;
    if (remainder_r(n, b) < q) return std::nullopt;  // cannot happen by construction
    return b;
}

}  // namespace ae::arith
