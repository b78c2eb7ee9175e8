#pragma once

#include "pentlab/lower1d.hpp"
#include "pentlab/projective.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pentlab {

// n points of P^2 together with their implied reflections in the x-axis l_0.
// User-facing construction rejects points on l_0; orbit states may reach it.
class MirrorPair {
public:
    explicit MirrorPair(std::vector<ProjPoint> points);

    int n() const { return static_cast<int>(points_.size()); }
    const std::vector<ProjPoint>& points() const { return points_; }
    const ProjPoint& at(long i) const;
    std::vector<ProjPoint> reflected() const;

    friend bool operator==(const MirrorPair&, const MirrorPair&) = default;

    friend MirrorPair mp_step(const MirrorPair& p);
    friend MirrorPair mp_inverse(const MirrorPair& q);

private:
    struct Unchecked {};
    MirrorPair(std::vector<ProjPoint> points, Unchecked);

    std::vector<ProjPoint> points_;
};

// Q_i = X_i r(X_{i+1}) meet X_{i-1} r(X_i).
MirrorPair mp_step(const MirrorPair& p);
// X_i = Q_i Q_{i+1} meet r(Q_{i-1}) r(Q_i).
MirrorPair mp_inverse(const MirrorPair& q);

// All points finite on one horizontal line y = c, c != 0.
class AxisAlignedMirrorPair {
public:
    explicit AxisAlignedMirrorPair(MirrorPair pair);

    const MirrorPair& pair() const { return pair_; }
    const Rational& level() const { return level_; }
    Vec xs() const;
    // Rescaled vertically so the points lie on y = -1.
    AxisAlignedMirrorPair canonical() const;

private:
    MirrorPair pair_;
    Rational level_;
};

// P_i = (B_i, -1).
AxisAlignedMirrorPair lift_from_p1(const Tuple1& b);

Tuple1 project_all(const std::vector<ProjPoint>& pts);

struct CorrespondenceReport {
    int steps = 0;
    std::vector<PairState1D> lower_orbit;
    std::vector<MirrorPair> mirror_orbit;
    std::vector<bool> step_matches;  // entry j-1 compares T_1^j with (p MP^{j-1}, p MP^j)

    bool ok() const;
};

CorrespondenceReport verify_correspondence(const MirrorPair& p, int k);

struct T007Report {
    int steps_taken = 0;
    std::vector<MirrorPair> orbit;  // canonical orbit
    bool collapsed = false;
    std::optional<ProjPoint> collapse_point;
    Rational mean;
    bool projection_matches = false;  // p(s) = mean
    ProjPoint expected;               // (mean, 0) for even n, (mean, -1/n) for odd n
    bool parity_matches = false;
    bool roundtrips = false;  // mp_inverse(MP^j) = MP^{j-1} for j = 1..n-2

    bool ok() const { return collapsed && projection_matches && parity_matches && roundtrips; }
};

T007Report verify_T007(const AxisAlignedMirrorPair& p);

AxisAlignedMirrorPair random_mirror_pair(int n, std::uint64_t seed, std::int64_t range);

}  // namespace pentlab
