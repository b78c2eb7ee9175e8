#pragma once

#include "pentlab/corrugated.hpp"
#include "pentlab/flat.hpp"
#include "pentlab/mirror.hpp"
#include "pentlab/pentagram2d.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pentlab {

enum class Variant { Planar, Corrugated, MirrorEven, MirrorOdd };
std::string_view to_string(Variant v);

// Polygon labels (planar, corrugated) or vertex indices 1..n with a reflection flag (mirror).
enum class TagScheme { PolygonLabel, MirrorIndex };

struct PointTag {
    long label = 0;
    bool reflected = false;

    std::string to_string() const;
    friend bool operator==(const PointTag&, const PointTag&) = default;
    friend auto operator<=>(const PointTag&, const PointTag&) = default;
};

// An ordered sequence of affine points in R^d, each tagged with its source vertex.
struct NPoint {
    std::vector<Vec> points;
    std::vector<PointTag> tags;
    long sequence_label = 0;  // A-sequence index; mated sequences inherit the first parent's

    std::size_t size() const { return points.size(); }
};

using LiftSource = std::variant<AxisAligned2, AxisAlignedM, AxisAlignedMirrorPair>;

Variant default_variant(const LiftSource& src);

struct ASequences {
    Variant variant;
    TagScheme scheme;
    long modulus;  // label modulus, or n for mirror indices
    int n;         // points per sequence
    int d;         // ambient dimension of the points
    std::vector<NPoint> seqs;
};

ASequences build_A_sequences(const LiftSource& src, Variant variant);

// The n-1 consecutive sequences starting at A_{2l-1}, indices cyclic (odd mirror case).
std::vector<NPoint> mirror_window(const ASequences& a, int l);
// Sequences fed to the lifting: all of them, or the l = 1 window for odd mirror pairs.
std::vector<NPoint> lifting_sequences(const ASequences& a);

// z_t = x_t x_{t+1} meet y_t y_{t+1}; star drops the final (cyclic) slot.
NPoint mating(const NPoint& x, const NPoint& y, TagScheme scheme, long modulus);
NPoint star(const NPoint& x, const NPoint& y, TagScheme scheme, long modulus);

// stages[0] = w1, stages[i+1][t] = stages[i][t] * stages[i][t+1].
std::vector<std::vector<NPoint>> mating_chain(const std::vector<NPoint>& w1, TagScheme scheme, long modulus,
                                              bool use_star);

// n affinely independent points in R^n.
class Joint {
public:
    Joint(std::vector<Vec> points, long label);

    const std::vector<Vec>& points() const { return points_; }
    long label() const { return label_; }
    std::size_t n() const { return points_.size(); }
    AffineFlat hyperplane() const { return AffineFlat::through(points_); }
    Vec centroid() const;

private:
    std::vector<Vec> points_;
    long label_;
};

// n distinct parallel lines in R^n.
class Prism {
public:
    explicit Prism(std::vector<AffineFlat> lines);
    static Prism between(const Joint& a, const Joint& b);

    const std::vector<AffineFlat>& lines() const { return lines_; }
    std::size_t n() const { return lines_.size(); }
    const Vec& direction() const { return lines_.front().basis().front(); }

private:
    std::vector<AffineFlat> lines_;
};

// Joints whose consecutive pairs form prisms; points project to R^d.
class Polyjoint {
public:
    Polyjoint(std::vector<Joint> joints, int d);

    const std::vector<Joint>& joints() const { return joints_; }
    const std::vector<Prism>& prisms() const { return prisms_; }
    int d() const { return d_; }
    std::size_t n() const { return joints_.front().n(); }

private:
    std::vector<Joint> joints_;
    std::vector<Prism> prisms_;
    int d_;
};

using Heights = QMatrix;

Polyjoint parallel_lift(const std::vector<NPoint>& seqs, const Heights& heights);
// Row l (0-based) for l >= d has a single 1 in column l - d.
Heights l0_heights(int n, int d);
Polyjoint canonical_lift_L0(const std::vector<NPoint>& seqs);

// Cofactor expansion of the difference rows against a formal basis row.
Vec hyperplane_normal(const Joint& j);

struct GeneralPositionReport {
    bool ok = false;
    std::size_t rank = 0;
    std::vector<Vec> normals;
    std::optional<Vec> completing_row;  // first e_i, starting with e_2, making the normals a basis
    Rational completed_det;
};

GeneralPositionReport general_position_report(const std::vector<Joint>& hyperplanes);
bool general_position_check(const std::vector<Joint>& hyperplanes);

struct CentroidReport {
    std::vector<Vec> centroids;
    bool coincide = false;
    Vec projected;
    Vec expected;
    bool matches = false;

    bool ok() const { return coincide && matches; }
};

// The predicted projected centroid: C(P), or (C, c/n) resp. (C, 0) for mirror pairs on y = c.
Vec expected_centroid(const LiftSource& src);
CentroidReport centroid_coincidence_check(const Polyjoint& pj, const Vec& expected);

struct MatingOptions {
    bool full = false;  // every odd-mirror window instead of l = 1 plus one seeded l
    std::uint64_t seed = 0;
};

struct MatingOrbitReport {
    Variant variant;
    int stages = 0;
    std::vector<int> windows;  // l values checked (odd mirror), else {1}
    int points_checked = 0;
    bool points_match = true;
    bool unions_match = true;
    int unions_checked = 0;
    bool final_match = true;
    std::vector<NPoint> final_sequences;
    std::vector<std::string> mismatches;

    bool ok() const { return points_match && unions_match && final_match; }
};

MatingOrbitReport mating_orbit_check(const LiftSource& src, Variant variant, const MatingOptions& opts = {});

// faces[t] spans the k consecutive lines t, ..., t+k-1 (cyclic).
struct CyclicSkeleton {
    int level = 0;
    std::vector<AffineFlat> faces;
};

CyclicSkeleton cyclic_skeleton(const Prism& prism, int k);

// t_{k-1}(j) = t_k(j-1) meet t_k(j+1) for all k and j.
bool skeleton_recurrence_check(const Prism& prism);

// H_{g,k}: intersection of the hyperplanes with labels k-g+1, ..., k+g-1, where the
// hyperplane at position i of the family carries label 2i+1.
AffineFlat flat_H(int g, int k, const std::vector<Joint>& hyperplanes);

struct SliceReport {
    bool ok = false;
    std::vector<Vec> points;
    std::string diagnostic;
};

SliceReport slices_check(const AffineFlat& w, const Prism& prism);

struct FullySlicedReport {
    int slices_checked = 0;
    bool fully_sliced = true;
    bool matches_mating = true;
    bool prism_independent = true;
    int prism_comparisons = 0;
    std::vector<std::string> failures;

    bool ok() const { return fully_sliced && matches_mating && prism_independent; }
};

// All H_{g,k} against the prisms T_h with |h - k| <= 1, compared with the mating chain,
// plus set equality across the prisms k-g .. k+g.
FullySlicedReport fully_sliced_check(const Polyjoint& pj, const std::vector<std::vector<NPoint>>& chain);

struct CollapseLineReport {
    AffineFlat line;
    AffineFlat projected_line;
    std::optional<ProjLine2> planar_line;
    Vec centroid;
    bool centroid_on_line = false;
    bool projected_centroid_on_line = false;
    bool final_points_on_line = false;
    NPoint final_sequence;

    bool ok() const { return centroid_on_line && projected_centroid_on_line && final_points_on_line; }
};

CollapseLineReport collapse_line_check(const ASequences& a, const Polyjoint& pj);

// Every lifting check on the canonical L0 lift of one instance.
struct LiftingReport {
    Variant variant;
    Heights heights;
    GeneralPositionReport general_position;
    CentroidReport centroid;
    FullySlicedReport fully_sliced;
    bool skeleton_recurrence = false;
    CollapseLineReport collapse_line;

    bool ok() const
    {
        return general_position.ok && centroid.ok() && fully_sliced.ok() && skeleton_recurrence &&
               collapse_line.ok();
    }
};

LiftingReport canonical_lifting_report(const LiftSource& src);

struct LiftChoice {
    Polyjoint polyjoint;
    Heights heights;
    bool canonical = false;
    int rejected = 0;  // lifts tried and rejected before this one
};

// The L0 lift if it is in general position and fully sliced, else seeded random heights.
LiftChoice find_perfect_lift(const ASequences& a, std::uint64_t seed, int attempts);

}  // namespace pentlab
