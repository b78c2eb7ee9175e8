#include "pentlab/random.hpp"

#include "pentlab/error.hpp"

namespace pentlab {

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw Error(ErrorKind::InvalidArgument, "empty sampling range");
    // Reject the low 2^64 mod bound values so the remainder is unbiased.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = engine_();
        if (r >= threshold)
            return r % bound;
    }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi)
{
    if (hi < lo)
        throw Error(ErrorKind::InvalidArgument, "empty sampling range");
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
}

Rational Rng::rational(std::int64_t range)
{
    if (range < 1)
        throw Error(ErrorKind::InvalidArgument, "range must be positive");
    std::int64_t p = between(-range, range);
    std::int64_t q = between(1, range);
    Rational r{Integer(static_cast<long>(p)), Integer(static_cast<long>(q))};
    r.canonicalize();
    return r;
}

Rational Rng::nonzero_rational(std::int64_t range)
{
    for (;;) {
        Rational r = rational(range);
        if (r != 0)
            return r;
    }
}

}  // namespace pentlab
