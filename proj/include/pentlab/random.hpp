#pragma once

#include "pentlab/rational.hpp"

#include <cstdint>
#include <random>

namespace pentlab {

// std::mt19937_64 is fully specified by the standard; bounded draws use our own
// rejection sampling so sequences agree across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);
    // Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

    // p/q with p in [-range, range], q in [1, range].
    Rational rational(std::int64_t range);
    Rational nonzero_rational(std::int64_t range);

private:
    std::mt19937_64 engine_;
};

}  // namespace pentlab
