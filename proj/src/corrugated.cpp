#include "pentlab/corrugated.hpp"

#include "pentlab/error.hpp"
#include "pentlab/pentagram2d.hpp"
#include "pentlab/random.hpp"

#include <algorithm>

namespace pentlab {

namespace {

long mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

PolygonM::PolygonM(int m, std::vector<ProjPoint> vertices, long label_offset)
    : m_(m), vertices_(std::move(vertices)), offset_(0)
{
    if (m < 2)
        throw Error(ErrorKind::InvalidArgument, "corrugated polygons need m >= 2");
    if (vertices_.size() < 4)
        throw Error(ErrorKind::InvalidArgument, "a polygon needs at least four vertices");
    for (const auto& v : vertices_)
        if (v.dim() != m)
            throw Error(ErrorKind::DimensionMismatch, "polygon vertices must lie in P^" + std::to_string(m));
    offset_ = mod(label_offset - 1, modulus()) + 1;
}

const ProjPoint& PolygonM::at(long t) const
{
    return vertices_[mod(t, static_cast<long>(vertices_.size()))];
}

long PolygonM::label(long t) const
{
    return mod(offset_ + t * m_ - 1, modulus()) + 1;
}

std::size_t PolygonM::position_of(long label) const
{
    long d = mod(label - offset_, modulus());
    if (d % m_ != 0)
        throw Error(ErrorKind::InvalidArgument, "label " + std::to_string(label) + " is not a vertex label");
    return static_cast<std::size_t>(d / m_);
}

namespace {

std::vector<ProjPoint> trace_axis_aligned(const Vec& start, const std::vector<Vec>& steps)
{
    const std::size_t m = steps.size();
    const std::size_t n = steps.front().size();
    std::vector<ProjPoint> v;
    v.reserve(m * n);
    Vec cur = start;
    for (std::size_t t = 0; t < m * n; ++t) {
        v.push_back(ProjPoint::affine(cur));
        cur[t % m] += steps[t % m][t / m];
    }
    return v;
}

}  // namespace

AxisAlignedM::AxisAlignedM(Vec start, std::vector<Vec> steps)
    : start_(std::move(start)), steps_(std::move(steps)), polygon_([&] {
          const std::size_t m = steps_.size();
          if (m < 2 || start_.size() != m)
              throw Error(ErrorKind::InvalidArgument, "axis-aligned mn-gon needs m >= 2 axes and a start in R^m");
          const std::size_t n = steps_.front().size();
          if (n < 2)
              throw Error(ErrorKind::InvalidArgument, "axis-aligned mn-gon needs n >= 2");
          for (const auto& row : steps_) {
              if (row.size() != n)
                  throw Error(ErrorKind::InvalidArgument, "every axis needs n steps");
              Rational s = 0;
              for (const auto& x : row) {
                  if (x == 0)
                      throw Error(ErrorKind::CoincidentPoints, "axis steps must be nonzero");
                  s += x;
              }
              if (s != 0)
                  throw Error(ErrorKind::InvalidArgument, "axis steps must sum to zero");
          }
          return PolygonM(static_cast<int>(m), trace_axis_aligned(start_, steps_), 1);
      }())
{
}

AxisAlignedM axis_aligned_from(const PolygonM& p)
{
    const std::size_t m = static_cast<std::size_t>(p.m());
    if (p.label_offset() != 1 || p.size() % m != 0)
        throw Error(ErrorKind::NotAxisAligned, "axis-aligned layout needs mn vertices from label 1");
    for (const auto& v : p.vertices())
        if (!v.is_finite())
            throw Error(ErrorKind::InfiniteVertex, "axis-aligned polygons are affine");
    const std::size_t n = p.size() / m;
    std::vector<Vec> steps(m, Vec(n));
    for (std::size_t t = 0; t < p.size(); ++t) {
        const long i = static_cast<long>(t);
        steps[t % m][t / m] = p.at(i + 1).affine(t % m) - p.at(i).affine(t % m);
    }
    AxisAlignedM aligned(p.vertices().front().affine(), std::move(steps));
    if (!(aligned.polygon() == p))
        throw Error(ErrorKind::NotAxisAligned, "edge t is not parallel to axis t mod m");
    return aligned;
}

bool is_corrugated(const PolygonM& v)
{
    const long size = static_cast<long>(v.size());
    const long m = v.m();
    for (long i = 0; i < size; ++i) {
        IntMatrix rows{v.at(i).coords(), v.at(i + 1).coords(), v.at(i + m).coords(), v.at(i + m + 1).coords()};
        if (rank(std::move(rows)) != 3)
            return false;
    }
    return true;
}

PolygonM corrugated_step(const PolygonM& v)
{
    const long size = static_cast<long>(v.size());
    const long m = v.m();
    const long shift = (m * m - m) / 2;
    std::vector<ProjPoint> out;
    out.reserve(v.size());
    for (long t = 0; t < size; ++t) {
        try {
            out.push_back(meet_coplanar_lines(v.at(t - 1), v.at(t - 1 + m), v.at(t), v.at(t + m)));
        } catch (const Error& e) {
            const long label = mod(v.label(t) + shift - 1, v.modulus()) + 1;
            throw Error(e.kind(), "corrugated step at output label " + std::to_string(label), label);
        }
    }
    return PolygonM(v.m(), std::move(out), v.label_offset() + shift);
}

ProjPoint center_of_mass_m(const PolygonM& v)
{
    Vec sum(v.m(), Rational(0));
    for (const auto& q : v.vertices()) {
        if (!q.is_finite())
            throw Error(ErrorKind::InfiniteVertex, "center of mass needs finite vertices");
        sum = add(sum, q.affine());
    }
    return ProjPoint::affine(scale(Rational(1, static_cast<long>(v.size())), sum));
}

bool CollapseReportM::ok() const
{
    return collapsed && matched &&
           std::all_of(corrugated_certificates.begin(), corrugated_certificates.end(), [](bool b) { return b; });
}

CollapseReportM collapse_orbit_m(const AxisAlignedM& p)
{
    CollapseReportM r{.centroid = center_of_mass_m(p.polygon())};
    r.orbit.push_back(p.polygon());
    const int steps = p.n() - 1;
    for (int k = 1; k <= steps; ++k) {
        try {
            r.orbit.push_back(corrugated_step(r.orbit.back()));
        } catch (const Error& e) {
            throw e.with_step(k);
        }
        r.steps_taken = k;
        if (k < steps)
            r.corrugated_certificates.push_back(is_corrugated(r.orbit.back()));
    }
    const auto& last = r.orbit.back().vertices();
    r.collapsed = std::all_of(last.begin(), last.end(), [&](const ProjPoint& q) { return q == last.front(); });
    if (r.collapsed)
        r.collapse_point = last.front();
    r.matched = r.collapsed && *r.collapse_point == r.centroid;
    return r;
}

AxisAlignedM random_axis_aligned_m(int m, int n, std::uint64_t seed, std::int64_t range)
{
    if (m < 2 || n < 2)
        throw Error(ErrorKind::InvalidArgument, "random_axis_aligned_m needs m >= 2 and n >= 2");
    if (range < 1)
        throw Error(ErrorKind::InvalidArgument, "range must be positive");
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Vec start(m);
        for (auto& x : start)
            x = rng.rational(range);
        std::vector<Vec> steps(m);
        bool ok = true;
        for (auto& row : steps) {
            Rational sum = 0;
            for (int k = 0; k + 1 < n; ++k) {
                row.push_back(rng.nonzero_rational(range));
                sum += row.back();
            }
            row.push_back(-sum);
            ok = ok && sum != 0;
        }
        if (!ok)
            continue;
        AxisAlignedM p(std::move(start), std::move(steps));
        const auto& v = p.polygon().vertices();
        bool distinct = true;
        for (std::size_t i = 0; i < v.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < v.size() && distinct; ++j)
                distinct = !(v[i] == v[j]);
        if (distinct && is_corrugated(p.polygon()))
            return p;
    }
    throw Error(ErrorKind::ExhaustedSampling, "no corrugated axis-aligned polygon within the retry budget");
}

PolygonM as_polygon_m(const LabeledPolygon2& p)
{
    return PolygonM(2, p.vertices(), p.label_offset());
}

}  // namespace pentlab
