#pragma once

#include "pentlab/projective.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pentlab {

// A closed polygon in P^m whose vertex at position t carries the label offset + t m
// (mod m * count, in 1..m*count).
class PolygonM {
public:
    PolygonM(int m, std::vector<ProjPoint> vertices, long label_offset = 1);

    int m() const { return m_; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<ProjPoint>& vertices() const { return vertices_; }
    long label_offset() const { return offset_; }
    long modulus() const { return static_cast<long>(m_) * static_cast<long>(vertices_.size()); }

    const ProjPoint& at(long t) const;
    long label(long t) const;
    std::size_t position_of(long label) const;
    const ProjPoint& by_label(long label) const { return vertices_[position_of(label)]; }

    friend bool operator==(const PolygonM&, const PolygonM&) = default;

private:
    int m_;
    std::vector<ProjPoint> vertices_;
    long offset_;
};

// An mn-gon in R^m whose edge t -> t+1 is parallel to axis (t mod m). steps[j][k] is the
// signed length of the k-th edge along axis j; each row sums to zero.
class AxisAlignedM {
public:
    AxisAlignedM(Vec start, std::vector<Vec> steps);

    int m() const { return static_cast<int>(steps_.size()); }
    int n() const { return static_cast<int>(steps_.front().size()); }
    const Vec& start() const { return start_; }
    const std::vector<Vec>& steps() const { return steps_; }
    const PolygonM& polygon() const { return polygon_; }

private:
    Vec start_;
    std::vector<Vec> steps_;
    PolygonM polygon_;
};

// Recovers start and steps of a polygon laid out as AxisAlignedM does (label offset 1).
AxisAlignedM axis_aligned_from(const PolygonM& p);

// Every quadruple V_i, V_{i+1}, V_{i+m}, V_{i+m+1} spans exactly a plane.
bool is_corrugated(const PolygonM& v);

// Output position t is the meet of the m-diagonals V_{t-1}V_{t-1+m} and V_tV_{t+m}.
// Labels advance by (m^2 - m)/2, so for m = 2 this is the planar step.
PolygonM corrugated_step(const PolygonM& v);

ProjPoint center_of_mass_m(const PolygonM& v);

struct CollapseReportM {
    int steps_taken = 0;
    std::vector<PolygonM> orbit;
    // Corrugatedness of T_m^k(P) for k = 1 .. n-2; the final iterate is a single point.
    std::vector<bool> corrugated_certificates;
    bool collapsed = false;
    std::optional<ProjPoint> collapse_point;
    ProjPoint centroid;
    bool matched = false;

    bool ok() const;
};

CollapseReportM collapse_orbit_m(const AxisAlignedM& p);

AxisAlignedM random_axis_aligned_m(int m, int n, std::uint64_t seed, std::int64_t range);

// The planar polygon viewed as a corrugated polygon with m = 2 (labels preserved).
class LabeledPolygon2;
PolygonM as_polygon_m(const LabeledPolygon2& p);

}  // namespace pentlab
