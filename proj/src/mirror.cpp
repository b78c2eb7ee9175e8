#include "pentlab/mirror.hpp"

#include "pentlab/error.hpp"
#include "pentlab/pentagram2d.hpp"
#include "pentlab/random.hpp"

#include <algorithm>

namespace pentlab {

MirrorPair::MirrorPair(std::vector<ProjPoint> points, Unchecked) : points_(std::move(points))
{
    if (points_.size() < 3)
        throw Error(ErrorKind::InvalidArgument, "a mirror pair needs n >= 3 points");
    for (const auto& p : points_)
        if (p.dim() != 2)
            throw Error(ErrorKind::DimensionMismatch, "mirror pair points must lie in P^2");
}

MirrorPair::MirrorPair(std::vector<ProjPoint> points) : MirrorPair(std::move(points), Unchecked{})
{
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i][1] == 0)
            throw Error(ErrorKind::OnMirrorAxis, "point " + points_[i].to_string() + " lies on the mirror axis",
                        static_cast<long>(i));
}

const ProjPoint& MirrorPair::at(long i) const
{
    const long n = static_cast<long>(points_.size());
    return points_[((i % n) + n) % n];
}

std::vector<ProjPoint> MirrorPair::reflected() const
{
    std::vector<ProjPoint> out;
    out.reserve(points_.size());
    for (const auto& p : points_)
        out.push_back(reflect_r(p));
    return out;
}

MirrorPair mp_step(const MirrorPair& p)
{
    std::vector<ProjPoint> q;
    q.reserve(p.points_.size());
    for (long i = 0; i < p.n(); ++i) {
        try {
            ProjLine2 l1 = join_points(p.at(i), reflect_r(p.at(i + 1)));
            ProjLine2 l2 = join_points(p.at(i - 1), reflect_r(p.at(i)));
            q.push_back(meet_lines(l1, l2));
        } catch (const Error& e) {
            throw Error(e.kind(), "mirror step", i);
        }
    }
    return MirrorPair(std::move(q), MirrorPair::Unchecked{});
}

MirrorPair mp_inverse(const MirrorPair& q)
{
    std::vector<ProjPoint> x;
    x.reserve(q.points_.size());
    for (long i = 0; i < q.n(); ++i) {
        try {
            ProjLine2 l1 = join_points(q.at(i), q.at(i + 1));
            ProjLine2 l2 = join_points(reflect_r(q.at(i - 1)), reflect_r(q.at(i)));
            x.push_back(meet_lines(l1, l2));
        } catch (const Error& e) {
            throw Error(e.kind(), "inverse mirror step", i);
        }
    }
    return MirrorPair(std::move(x), MirrorPair::Unchecked{});
}

AxisAlignedMirrorPair::AxisAlignedMirrorPair(MirrorPair pair) : pair_(std::move(pair))
{
    const auto& pts = pair_.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!pts[i].is_finite())
            throw Error(ErrorKind::InfiniteVertex, "axis-aligned mirror points must be finite", static_cast<long>(i));
    level_ = pts.front().affine(1);
    if (level_ == 0)
        throw Error(ErrorKind::OnMirrorAxis, "points lie on the mirror axis");
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i].affine(1) != level_)
            throw Error(ErrorKind::NotAxisAligned, "points are not on one horizontal line", static_cast<long>(i));
}

Vec AxisAlignedMirrorPair::xs() const
{
    Vec out;
    for (const auto& p : pair_.points())
        out.push_back(p.affine(0));
    return out;
}

AxisAlignedMirrorPair AxisAlignedMirrorPair::canonical() const
{
    std::vector<ProjPoint> pts;
    for (const auto& x : xs())
        pts.push_back(ProjPoint::affine(x, Rational(-1)));
    return AxisAlignedMirrorPair(MirrorPair(std::move(pts)));
}

AxisAlignedMirrorPair lift_from_p1(const Tuple1& b)
{
    std::vector<ProjPoint> pts;
    pts.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i].dim() != 1)
            throw Error(ErrorKind::DimensionMismatch, "lift expects points of P^1");
        if (!b[i].is_finite())
            throw Error(ErrorKind::InfiniteVertex, "cannot lift an infinite point", static_cast<long>(i));
        pts.push_back(ProjPoint::affine(b[i].affine(0), Rational(-1)));
    }
    return AxisAlignedMirrorPair(MirrorPair(std::move(pts)));
}

Tuple1 project_all(const std::vector<ProjPoint>& pts)
{
    Tuple1 out;
    out.reserve(pts.size());
    for (const auto& p : pts)
        out.push_back(project_vertical(p));
    return out;
}

bool CorrespondenceReport::ok() const
{
    return static_cast<int>(step_matches.size()) == steps &&
           std::all_of(step_matches.begin(), step_matches.end(), [](bool b) { return b; });
}

CorrespondenceReport verify_correspondence(const MirrorPair& p, int k)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidArgument, "correspondence needs k >= 1");
    CorrespondenceReport r;
    r.mirror_orbit.push_back(p);
    r.lower_orbit.emplace_back(project_all(mp_inverse(p).points()), project_all(p.points()));
    for (int j = 1; j <= k; ++j) {
        try {
            r.mirror_orbit.push_back(mp_step(r.mirror_orbit.back()));
            r.lower_orbit.push_back(t1_step(r.lower_orbit.back()));
        } catch (const Error& e) {
            throw e.with_step(j);
        }
        const auto& s = r.lower_orbit.back();
        r.step_matches.push_back(s.x() == project_all(r.mirror_orbit[j - 1].points()) &&
                                 s.y() == project_all(r.mirror_orbit[j].points()));
        r.steps = j;
    }
    return r;
}

T007Report verify_T007(const AxisAlignedMirrorPair& p)
{
    const AxisAlignedMirrorPair c = p.canonical();
    const int n = c.pair().n();
    const Rational m = mean(c.xs());
    const Rational y = n % 2 == 0 ? Rational(0) : Rational(-1, n);
    T007Report r{.mean = m, .expected = ProjPoint::affine(m, y)};
    r.orbit.push_back(c.pair());
    for (int k = 1; k < n; ++k) {
        try {
            r.orbit.push_back(mp_step(r.orbit.back()));
        } catch (const Error& e) {
            throw e.with_step(k);
        }
        r.steps_taken = k;
    }
    const auto& last = r.orbit.back().points();
    r.collapsed = std::all_of(last.begin(), last.end(), [&](const ProjPoint& q) { return q == last.front(); });
    if (r.collapsed) {
        r.collapse_point = last.front();
        r.projection_matches = project_vertical(last.front()) == ProjPoint::scalar(m);
        r.parity_matches = last.front() == r.expected;
    }
    r.roundtrips = true;
    for (int j = 1; j + 1 < n; ++j) {
        try {
            r.roundtrips = r.roundtrips && mp_inverse(r.orbit[j]) == r.orbit[j - 1];
        } catch (const Error&) {
            r.roundtrips = false;
        }
    }
    return r;
}

AxisAlignedMirrorPair random_mirror_pair(int n, std::uint64_t seed, std::int64_t range)
{
    if (n < 3)
        throw Error(ErrorKind::InvalidArgument, "mirror pairs need n >= 3");
    if (range < 1)
        throw Error(ErrorKind::InvalidArgument, "range must be positive");
    Rng rng(seed);
    return lift_from_p1(tuple_of(distinct_rationals(rng, n, range)));
}

}  // namespace pentlab
