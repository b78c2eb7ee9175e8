#include "pentlab/lower1d.hpp"

#include "pentlab/error.hpp"
#include "pentlab/pentagram2d.hpp"
#include "pentlab/random.hpp"

#include <algorithm>

namespace pentlab {

namespace {

void require_p1(const Tuple1& t, const char* what)
{
    for (const auto& p : t)
        if (p.dim() != 1)
            throw Error(ErrorKind::DimensionMismatch, std::string(what) + " entries must lie in P^1");
}

}  // namespace

PairState1D::PairState1D(Tuple1 x, Tuple1 y) : x_(std::move(x)), y_(std::move(y))
{
    if (x_.size() != y_.size())
        throw Error(ErrorKind::DimensionMismatch, "pair tuples have different lengths");
    if (x_.size() < 3)
        throw Error(ErrorKind::InvalidArgument, "pair tuples need n >= 3");
    require_p1(x_, "X");
    require_p1(y_, "Y");
    for (std::size_t i = 0; i < x_.size(); ++i)
        if (x_[i] == y_[i])
            throw Error(ErrorKind::CoincidentPoints, "X_i = Y_i = " + x_[i].to_string(), static_cast<long>(i));
}

AxisAlignedPair1::AxisAlignedPair1(Tuple1 b) : b_(std::move(b))
{
    if (b_.size() < 3)
        throw Error(ErrorKind::InvalidArgument, "B needs n >= 3");
    require_p1(b_, "B");
    for (std::size_t i = 0; i < b_.size(); ++i)
        if (!b_[i].is_finite())
            throw Error(ErrorKind::InfiniteVertex, "B entries must be finite", static_cast<long>(i));
    if (std::all_of(b_.begin(), b_.end(), [&](const ProjPoint& p) { return p == b_.front(); }))
        throw Error(ErrorKind::CoincidentPoints, "B needs at least two distinct values");
}

PairState1D AxisAlignedPair1::state() const
{
    return PairState1D(constant_tuple(ProjPoint::infinity(), n()), b_);
}

Tuple1 tuple_of(const Vec& values)
{
    Tuple1 t;
    t.reserve(values.size());
    for (const auto& v : values)
        t.push_back(ProjPoint::scalar(v));
    return t;
}

Tuple1 constant_tuple(const ProjPoint& p, int n)
{
    return Tuple1(static_cast<std::size_t>(n), p);
}

PairState1D t1_step(const PairState1D& s)
{
    const std::size_t n = s.x().size();
    const auto& x = s.x();
    const auto& y = s.y();
    Tuple1 z;
    z.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ProjPoint& prev = y[(i + n - 1) % n];
        const ProjPoint& next = y[(i + 1) % n];
        try {
            z.push_back(solve_harmonic6(x[i], y[i], prev, y[i], next));
        } catch (const Error& e) {
            throw Error(e.kind(), "lower map entry", static_cast<long>(i));
        }
    }
    return PairState1D(y, std::move(z));
}

ProjPoint center_of_mass_p1(const Tuple1& a, const Tuple1& b, const ProjMap& phi)
{
    if (a.size() != b.size() || a.empty())
        throw Error(ErrorKind::DimensionMismatch, "center of mass needs tuples of equal length");
    require_p1(a, "A");
    require_p1(b, "B");
    if (!std::all_of(a.begin(), a.end(), [&](const ProjPoint& p) { return p == a.front(); }))
        throw Error(ErrorKind::NotAxisAligned, "A is not constant");
    if (phi.dim() != 1 || !phi(a.front()).is_infinite())
        throw Error(ErrorKind::InvalidArgument, "phi must send A_1 to infinity");
    Vec image;
    image.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] == a.front())
            throw Error(ErrorKind::CoincidentPoints, "B_i coincides with A_1", static_cast<long>(i));
        image.push_back(phi(b[i]).affine(0));
    }
    return phi.inverse()(ProjPoint::scalar(mean(image)));
}

ProjPoint center_of_mass_p1(const Tuple1& a, const Tuple1& b)
{
    if (a.empty())
        throw Error(ErrorKind::DimensionMismatch, "center of mass of empty tuples");
    if (a.front().is_infinite())
        return center_of_mass_p1(a, b, ProjMap::identity(1));
    const Rational a1 = a.front().affine(0);
    return center_of_mass_p1(a, b, ProjMap::mobius(0, 1, 1, -a1));
}

T008Report verify_T008(const AxisAlignedPair1& b)
{
    T008Report r{.mean = center_of_mass_p1(constant_tuple(ProjPoint::infinity(), b.n()), b.b())};
    r.orbit.push_back(b.state());
    for (int k = 1; k < b.n(); ++k) {
        try {
            r.orbit.push_back(t1_step(r.orbit.back()));
        } catch (const Error& e) {
            throw e.with_step(k);
        }
        r.steps_taken = k;
    }
    r.first_component = r.orbit.back().x();
    r.final_row = r.orbit.back().y();
    const auto& row = r.final_row;
    r.constant = std::all_of(row.begin(), row.end(), [&](const ProjPoint& p) { return p == row.front(); });
    r.matched = r.constant && row.front() == r.mean;
    return r;
}

AxisAlignedPair1 random_b(int n, std::uint64_t seed, std::int64_t range)
{
    if (n < 3)
        throw Error(ErrorKind::InvalidArgument, "random_b needs n >= 3");
    if (range < 1)
        throw Error(ErrorKind::InvalidArgument, "range must be positive");
    Rng rng(seed);
    return AxisAlignedPair1(tuple_of(distinct_rationals(rng, n, range)));
}

}  // namespace pentlab
