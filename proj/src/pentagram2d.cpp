#include "pentlab/pentagram2d.hpp"

#include "pentlab/error.hpp"
#include "pentlab/random.hpp"

#include <algorithm>

namespace pentlab {

namespace {

long mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Labels live in 1..modulus.
long wrap_label(long label, long modulus)
{
    return mod(label - 1, modulus) + 1;
}

bool all_equal(const std::vector<ProjPoint>& pts)
{
    return std::all_of(pts.begin(), pts.end(), [&](const ProjPoint& q) { return q == pts.front(); });
}

}  // namespace

LabeledPolygon2::LabeledPolygon2(std::vector<ProjPoint> vertices, long label_offset)
    : vertices_(std::move(vertices)), offset_(0)
{
    if (vertices_.size() < 4 || vertices_.size() % 2 != 0)
        throw Error(ErrorKind::InvalidArgument, "a labeled polygon needs an even number (>= 4) of vertices");
    for (const auto& v : vertices_)
        if (v.dim() != 2)
            throw Error(ErrorKind::DimensionMismatch, "labeled polygon vertices must lie in P^2");
    offset_ = wrap_label(label_offset, modulus());
}

const ProjPoint& LabeledPolygon2::at(long t) const
{
    return vertices_[mod(t, static_cast<long>(vertices_.size()))];
}

long LabeledPolygon2::label(long t) const
{
    return wrap_label(offset_ + 2 * t, modulus());
}

std::size_t LabeledPolygon2::position_of(long label) const
{
    long d = mod(label - offset_, modulus());
    if (d % 2 != 0)
        throw Error(ErrorKind::InvalidArgument, "label " + std::to_string(label) + " has the wrong parity");
    return static_cast<std::size_t>(d / 2);
}

AxisAligned2::AxisAligned2(Vec a, Vec b)
    : a_(std::move(a)), b_(std::move(b)), polygon_([&] {
          if (a_.size() != b_.size() || a_.size() < 2)
              throw Error(ErrorKind::InvalidArgument, "axis-aligned polygon needs n >= 2 levels per axis");
          for (std::size_t i = 0; i < a_.size(); ++i)
              for (std::size_t j = i + 1; j < a_.size(); ++j)
                  if (a_[i] == a_[j] || b_[i] == b_[j])
                      throw Error(ErrorKind::CoincidentPoints, "axis levels must be distinct");
          const std::size_t n = a_.size();
          std::vector<ProjPoint> v;
          v.reserve(2 * n);
          for (std::size_t j = 0; j < n; ++j) {
              v.push_back(ProjPoint::affine(a_[j], b_[j]));
              v.push_back(ProjPoint::affine(a_[(j + 1) % n], b_[j]));
          }
          return LabeledPolygon2(std::move(v), 1);
      }())
{
}

AxisAligned2 axis_aligned_from(const LabeledPolygon2& p)
{
    if (p.label_offset() != 1)
        throw Error(ErrorKind::NotAxisAligned, "axis-aligned layout starts at label 1");
    Vec a;
    Vec b;
    for (const auto& v : p.vertices())
        if (!v.is_finite())
            throw Error(ErrorKind::InfiniteVertex, "axis-aligned polygons are affine");
    for (std::size_t j = 0; j < p.size(); j += 2) {
        a.push_back(p.vertices()[j].affine(0));
        b.push_back(p.vertices()[j].affine(1));
    }
    AxisAligned2 aligned(std::move(a), std::move(b));
    if (!(aligned.polygon() == p))
        throw Error(ErrorKind::NotAxisAligned, "edges do not alternate horizontal and vertical from vertex 1");
    return aligned;
}

LabeledPolygon2 pentagram_step(const LabeledPolygon2& p)
{
    const long size = static_cast<long>(p.size());
    std::vector<ProjPoint> out;
    out.reserve(p.size());
    for (long t = 0; t < size; ++t) {
        const long label = p.label(t) + 1;
        try {
            ProjLine2 d1 = join_points(p.at(t), p.at(t + 2));
            ProjLine2 d2 = join_points(p.at(t - 1), p.at(t + 1));
            out.push_back(meet_lines(d1, d2));
        } catch (const Error& e) {
            throw Error(e.kind(), "pentagram step at output label " + std::to_string(label), label);
        }
    }
    return LabeledPolygon2(std::move(out), p.label_offset() + 1);
}

namespace {

bool affine_aligned_phase(const std::vector<Vec>& v, bool even_horizontal)
{
    const std::size_t size = v.size();
    for (std::size_t t = 0; t < size; ++t) {
        const Vec& a = v[t];
        const Vec& b = v[(t + 1) % size];
        if (a == b)
            return false;
        const bool horizontal = (t % 2 == 0) == even_horizontal;
        if (horizontal ? a[1] != b[1] : a[0] != b[0])
            return false;
    }
    return true;
}

std::optional<ProjPoint> family_concurrency(const LabeledPolygon2& p, long parity)
{
    std::vector<ProjLine2> lines;
    for (long t = parity; t < static_cast<long>(p.size()); t += 2) {
        if (p.at(t) == p.at(t + 1))
            return std::nullopt;
        lines.push_back(join_points(p.at(t), p.at(t + 1)));
    }
    if (lines[0] == lines[1])
        return std::nullopt;
    ProjPoint c = meet_lines(lines[0], lines[1]);
    for (const auto& l : lines)
        if (!l.contains(c))
            return std::nullopt;
    return c;
}

}  // namespace

std::optional<ConcurrencyPoints> concurrency_points(const LabeledPolygon2& p)
{
    auto even = family_concurrency(p, 0);
    auto odd = family_concurrency(p, 1);
    if (!even || !odd)
        return std::nullopt;
    return ConcurrencyPoints{*even, *odd};
}

bool is_axis_aligned(const LabeledPolygon2& p, AlignMode mode)
{
    if (mode == AlignMode::Projective)
        return concurrency_points(p).has_value();
    std::vector<Vec> v;
    for (const auto& q : p.vertices()) {
        if (!q.is_finite())
            return false;
        v.push_back(q.affine());
    }
    return affine_aligned_phase(v, true) || affine_aligned_phase(v, false);
}

ProjPoint center_of_mass_affine(const LabeledPolygon2& p)
{
    Vec sum(2, Rational(0));
    for (const auto& q : p.vertices()) {
        if (!q.is_finite())
            throw Error(ErrorKind::InfiniteVertex, "center of mass needs finite vertices");
        sum = add(sum, q.affine());
    }
    return ProjPoint::affine(scale(Rational(1, static_cast<long>(p.size())), sum));
}

namespace {

ProjPoint center_through(const LabeledPolygon2& p, const ProjMap& phi)
{
    std::vector<ProjPoint> image;
    image.reserve(p.size());
    for (const auto& q : p.vertices())
        image.push_back(phi(q));
    ProjPoint c = center_of_mass_affine(LabeledPolygon2(std::move(image), p.label_offset()));
    return phi.inverse()(c);
}

ConcurrencyPoints require_concurrency(const LabeledPolygon2& p)
{
    auto cp = concurrency_points(p);
    if (!cp)
        throw Error(ErrorKind::NotAxisAligned, "alternate edge families are not concurrent");
    if (cp->even == cp->odd)
        throw Error(ErrorKind::DegenerateJoin, "the two concurrency points coincide");
    return *cp;
}

}  // namespace

ProjPoint center_of_mass_projective(const LabeledPolygon2& p)
{
    auto cp = require_concurrency(p);
    return center_through(p, axes_normalization_map(cp.even, cp.odd));
}

ProjPoint center_of_mass_projective(const LabeledPolygon2& p, const ProjPoint& third)
{
    auto cp = require_concurrency(p);
    return center_through(p, axes_normalization_map(cp.even, cp.odd, third));
}

namespace {

// The line through the points at `parity` positions, if they are collinear and not all equal.
std::optional<ProjLine2> common_line(const LabeledPolygon2& p, long parity, bool& collinear_out)
{
    collinear_out = false;
    std::vector<ProjPoint> pts;
    for (long t = parity; t < static_cast<long>(p.size()); t += 2)
        pts.push_back(p.at(t));
    auto other = std::find_if(pts.begin(), pts.end(), [&](const ProjPoint& q) { return !(q == pts.front()); });
    if (other == pts.end())
        return std::nullopt;
    ProjLine2 l = join_points(pts.front(), *other);
    collinear_out = std::all_of(pts.begin(), pts.end(), [&](const ProjPoint& q) { return l.contains(q); });
    return l;
}

}  // namespace

TwoLineCertificate two_line_certificate(const LabeledPolygon2& p, const ProjPoint& centroid)
{
    TwoLineCertificate c;
    c.even_line = common_line(p, 0, c.even_collinear);
    c.odd_line = common_line(p, 1, c.odd_collinear);
    if (c.even_line && c.odd_line) {
        c.lines_distinct = !(*c.even_line == *c.odd_line);
        c.through_centroid = c.even_line->contains(centroid) && c.odd_line->contains(centroid);
    }
    return c;
}

namespace {

CollapseReport2 run_collapse(const LabeledPolygon2& start, const ProjPoint& centroid)
{
    CollapseReport2 r{.centroid = centroid};
    r.orbit.push_back(start);
    const int steps = start.n() - 1;
    for (int k = 1; k <= steps; ++k) {
        try {
            r.orbit.push_back(pentagram_step(r.orbit.back()));
        } catch (const Error& e) {
            throw e.with_step(k);
        }
        r.steps_taken = k;
    }
    r.two_line_stage = two_line_certificate(r.orbit[steps - 1], centroid);
    const auto& last = r.orbit.back().vertices();
    r.collapsed = all_equal(last);
    if (r.collapsed)
        r.collapse_point = last.front();
    r.matched = r.collapsed && *r.collapse_point == centroid;
    return r;
}

}  // namespace

CollapseReport2 collapse_orbit(const AxisAligned2& p)
{
    return run_collapse(p.polygon(), center_of_mass_affine(p.polygon()));
}

CollapseReport2 collapse_orbit(const LabeledPolygon2& p)
{
    return run_collapse(p, center_of_mass_projective(p));
}

Vec distinct_rationals(Rng& rng, int count, std::int64_t range)
{
    Vec out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 1000 * count)
            throw Error(ErrorKind::ExhaustedSampling, "could not draw distinct values");
        Rational r = rng.rational(range);
        if (std::find(out.begin(), out.end(), r) == out.end())
            out.push_back(std::move(r));
    }
    return out;
}

AxisAligned2 random_axis_aligned(int n, std::uint64_t seed, std::int64_t range)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "random_axis_aligned needs n >= 2");
    if (range < n)
        throw Error(ErrorKind::InvalidArgument, "random_axis_aligned needs range >= n");
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Vec a = distinct_rationals(rng, n, range);
        Vec b = distinct_rationals(rng, n, range);
        AxisAligned2 p(std::move(a), std::move(b));
        if (is_axis_aligned(p.polygon(), AlignMode::Affine))
            return p;
    }
    throw Error(ErrorKind::ExhaustedSampling, "no axis-aligned polygon within the retry budget");
}

}  // namespace pentlab
