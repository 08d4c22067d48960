#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ae::arith {

/// r(n,b): the unique r with 1 <= r <= b+1 and C(n,2) == r mod (b+1).
/// This is the number of free edges before Avoider's last move in a strict game.
std::uint64_t remainder_r(std::uint64_t n, std::uint64_t b);

/// max{ b <= 0.4 n^{k/(k-1)} : r(n,b) < n^{k+1}/(2b)^{k-1} }.
/// All comparisons done in exact integer arithmetic.
std::optional<std::uint64_t> e_plus(std::uint64_t n, std::uint32_t k);

/// As e_plus, but the inequality must hold for every b' <= b (maximal prefix).
std::optional<std::uint64_t> e_minus(std::uint64_t n, std::uint32_t k);

/// Whether r(n,b) < n^{k+1}/(2b)^{k-1}, via r * (2b)^{k-1} < n^{k+1} exactly.
bool remainder_inequality(std::uint64_t n, std::uint64_t b, std::uint32_t k);

/// Largest b with b <= 0.4 n^{k/(k-1)}, i.e. (5b)^{k-1} <= 2^{k-1} n^k.
std::uint64_t star_bias_cap(std::uint64_t n, std::uint32_t k);

enum class ManyVariant { DividesBinom, DividesBinomMinusOne };

struct ManyWitness {
    std::uint64_t n;
    std::uint64_t q;                  // minimal witness
    std::vector<std::uint64_t> allQ;  // filled only when requested
};

/// Search for q | C(n,2) with c n^e < q < 2c n^e (variant i), or
/// q | (C(n,2)-1) with c n^e < q < 4c n^e (variant ii), for n in [nLo, nHi].
/// The exponent is expNum/expDen < 2; window membership is decided exactly.
std::vector<ManyWitness> fact_many_search(std::uint64_t c, std::uint64_t expNum,
                                          std::uint64_t expDen, ManyVariant variant,
                                          std::uint64_t nLo, std::uint64_t nHi,
                                          bool collectAll = false);

/// Smallest k with q <= k <= 2 q log q / delta and N mod k >= q, if any.
std::optional<std::uint64_t> fact_all_search(std::uint64_t deltaNum, std::uint64_t deltaDen,
                                             std::uint64_t bigN, std::uint64_t q);

/// Enforcer-favorable strict bias: q | (C(n,2)-1) with n^{k/(k-1)} < q < 4 n^{k/(k-1)},
/// b = floor(q/10) - 1, with 0.09 n^{k/(k-1)} < b < 0.4 n^{k/(k-1)} and
/// r(n,b) < n^{k+1}/(2b)^{k-1} verified before returning. Minimal such q.
std::optional<std::pair<std::uint64_t, std::uint64_t>> enforcer_favorable_strict_bias(
    std::uint64_t n, std::uint32_t k);

/// Smallest b with (b+1) | C(n,2) and 2 n^{(k+1)/k} < b < 4 n^{(k+1)/k}.
std::optional<std::uint64_t> avoider_favorable_strict_bias(std::uint64_t n, std::uint32_t k);

/// b = k_found - 1 where k_found = fact_all_search((k+1)/(2k), C(n,2), ceil(2 n^{(k+1)/k})).
/// Guarantees r(n,b) >= ceil(2 n^{(k+1)/k}) when present.
std::optional<std::uint64_t> avoider_general_upper_bias(std::uint64_t n, std::uint32_t k);

/// ceil(2 n^{(k+1)/k}): smallest q with q^k >= 2^k n^{k+1}.
std::uint64_t avoider_safe_bias_floor(std::uint64_t n, std::uint32_t k);

std::vector<std::uint64_t> divisors(std::uint64_t value);

}  // namespace ae::arith
