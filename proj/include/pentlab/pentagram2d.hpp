#pragma once

#include "pentlab/projective.hpp"
#include "pentlab/random.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pentlab {

// A closed 2n-gon whose vertex at position t carries the label offset + 2t (mod 4n, in 1..4n).
// Coincident vertices are allowed: collapsed iterates are legitimate values.
class LabeledPolygon2 {
public:
    explicit LabeledPolygon2(std::vector<ProjPoint> vertices, long label_offset = 1);

    int n() const { return static_cast<int>(vertices_.size() / 2); }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<ProjPoint>& vertices() const { return vertices_; }
    long label_offset() const { return offset_; }
    long modulus() const { return 2 * static_cast<long>(vertices_.size()); }

    // Cyclic access by position.
    const ProjPoint& at(long t) const;
    long label(long t) const;
    // Position of a label of this polygon's parity.
    std::size_t position_of(long label) const;
    const ProjPoint& by_label(long label) const { return vertices_[position_of(label)]; }

    friend bool operator==(const LabeledPolygon2&, const LabeledPolygon2&) = default;

private:
    std::vector<ProjPoint> vertices_;
    long offset_;
};

// Axis-aligned 2n-gon: P_1=(a_1,b_1), P_3=(a_2,b_1), P_5=(a_2,b_2), ..., P_{4n-1}=(a_1,b_n).
class AxisAligned2 {
public:
    AxisAligned2(Vec a, Vec b);

    const LabeledPolygon2& polygon() const { return polygon_; }
    const Vec& a() const { return a_; }
    const Vec& b() const { return b_; }
    int n() const { return static_cast<int>(a_.size()); }

private:
    Vec a_;
    Vec b_;
    LabeledPolygon2 polygon_;
};

enum class AlignMode { Affine, Projective };

// Recovers the levels of a polygon laid out as AxisAligned2 does (label offset 1, first edge horizontal).
AxisAligned2 axis_aligned_from(const LabeledPolygon2& p);

LabeledPolygon2 pentagram_step(const LabeledPolygon2& p);

bool is_axis_aligned(const LabeledPolygon2& p, AlignMode mode);

// Common points of the even-position edges (t, t+1 with t even) and of the odd ones.
struct ConcurrencyPoints {
    ProjPoint even;
    ProjPoint odd;
};
std::optional<ConcurrencyPoints> concurrency_points(const LabeledPolygon2& p);

ProjPoint center_of_mass_affine(const LabeledPolygon2& p);
ProjPoint center_of_mass_projective(const LabeledPolygon2& p);
// Same, using a caller-chosen third frame point for the normalizing map.
ProjPoint center_of_mass_projective(const LabeledPolygon2& p, const ProjPoint& third);

struct TwoLineCertificate {
    std::optional<ProjLine2> even_line;
    std::optional<ProjLine2> odd_line;
    bool even_collinear = false;
    bool odd_collinear = false;
    bool lines_distinct = false;
    bool through_centroid = false;

    bool ok() const { return even_collinear && odd_collinear && lines_distinct && through_centroid; }
};

// Even and odd positions each collinear, on two distinct lines through `centroid`.
TwoLineCertificate two_line_certificate(const LabeledPolygon2& p, const ProjPoint& centroid);

struct CollapseReport2 {
    int steps_taken = 0;
    std::vector<LabeledPolygon2> orbit;  // P, T(P), ..., T^{n-1}(P)
    TwoLineCertificate two_line_stage;   // at T^{n-2}(P)
    bool collapsed = false;              // all vertices of T^{n-1}(P) equal
    std::optional<ProjPoint> collapse_point;
    ProjPoint centroid;
    bool matched = false;

    bool ok() const { return collapsed && matched && two_line_stage.ok(); }
};

CollapseReport2 collapse_orbit(const AxisAligned2& p);
// Projectively axis-aligned input; the centroid is the projective center of mass.
CollapseReport2 collapse_orbit(const LabeledPolygon2& p);

AxisAligned2 random_axis_aligned(int n, std::uint64_t seed, std::int64_t range);

// `count` pairwise distinct values from rng.rational(range).
Vec distinct_rationals(Rng& rng, int count, std::int64_t range);

}  // namespace pentlab
