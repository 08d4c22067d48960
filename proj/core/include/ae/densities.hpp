#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ae {

using Rational = boost::rational<long long>;

/// Explicit small graph for the density parameters; vertices are 0..n-1.
struct SmallGraph {
    std::uint32_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

struct Densities {
    Rational m;                        // max e(F)/v(F)
    Rational mPrime;                   // max (e(F)-1)/v(F)
    std::optional<Rational> mDoublePrime;  // max (e(F)+1)/(v(F)-2), v(F) >= 3
};

/// Exhaustive over vertex subsets (induced edges maximize each ratio for a
/// fixed vertex set); capped at 12 vertices.
Densities densities(const SmallGraph& h);

}  // namespace ae
