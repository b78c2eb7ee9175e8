#pragma once

#include "pentlab/linalg.hpp"
#include "pentlab/rational.hpp"

#include <string>

namespace pentlab {

// A point of P^m in canonical homogeneous coordinates: coprime integers with a
// positive leading nonzero entry. The affine point (x_1..x_m) is (x_1..x_m, 1).
class ProjPoint {
public:
    explicit ProjPoint(IntVec coords);

    static ProjPoint from_homogeneous(const Vec& coords);
    static ProjPoint affine(const Vec& x);
    static ProjPoint affine(const Rational& x, const Rational& y);
    // A finite point of P^1.
    static ProjPoint scalar(const Rational& x);
    // The point at infinity of P^1, (1,0).
    static ProjPoint infinity();

    int dim() const { return static_cast<int>(coords_.size()) - 1; }
    const IntVec& coords() const { return coords_; }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    const Integer& w() const { return coords_.back(); }

    bool is_finite() const { return coords_.back() != 0; }
    bool is_infinite() const { return !is_finite(); }
    // Affine coordinates; InfiniteVertex if the point is at infinity.
    Vec affine() const;
    Rational affine(std::size_t i) const;
    Vec homogeneous() const { return to_rational(coords_); }

    // "(x, y)" for finite points, "[X:Y:W]" otherwise; P^1 uses "x" and "inf".
    std::string to_string() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords_ < b.coords_; }

private:
    IntVec coords_;
};

// A line of P^2 in canonical dual coordinates (a,b,c): aX + bY + cW = 0.
class ProjLine2 {
public:
    explicit ProjLine2(IntVec coeffs);

    const IntVec& coeffs() const { return coeffs_; }
    bool contains(const ProjPoint& p) const;
    std::string to_string() const;

    friend bool operator==(const ProjLine2& a, const ProjLine2& b) { return a.coeffs_ == b.coeffs_; }

private:
    IntVec coeffs_;
};

// An invertible projective transformation of P^m.
class ProjMap {
public:
    explicit ProjMap(QMatrix matrix);

    static ProjMap identity(int dim);
    // x -> (a x + b) / (c x + d) on P^1.
    static ProjMap mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

    int dim() const { return static_cast<int>(matrix_.size()) - 1; }
    const QMatrix& matrix() const { return matrix_; }

    ProjPoint operator()(const ProjPoint& p) const;
    ProjMap inverse() const;
    friend ProjMap operator*(const ProjMap& a, const ProjMap& b);
    friend bool operator==(const ProjMap& a, const ProjMap& b) { return a.matrix_ == b.matrix_; }

private:
    QMatrix matrix_;
};

ProjPoint apply_map(const ProjMap& phi, const ProjPoint& p);

ProjLine2 join_points(const ProjPoint& a, const ProjPoint& b);
ProjPoint meet_lines(const ProjLine2& l1, const ProjLine2& l2);
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// Intersection of the coplanar lines ab and cd in P^m.
ProjPoint meet_coplanar_lines(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d);

// [p,q] = p_x q_w - p_w q_x for points of P^1.
Integer bracket(const ProjPoint& p, const ProjPoint& q);

// Values in P^1 (finite rational or infinity).
ProjPoint cross_ratio4(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d);
ProjPoint cross_ratio6(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d,
                       const ProjPoint& e, const ProjPoint& f);

// The unique c with [a,b][c,d] + [b,c][d,a] = 0, so cross_ratio4(a,b,c,d) = -1 whenever that
// ratio is determinate. For b = d this is the limit value c = b.
ProjPoint solve_harmonic4(const ProjPoint& a, const ProjPoint& b, const ProjPoint& d);
// The unique d with [a,b][c,d][e,f] + [b,c][d,e][f,a] = 0.
ProjPoint solve_harmonic6(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& e,
                          const ProjPoint& f);

bool is_minus_one(const ProjPoint& value);

// (X,Y,W) -> (X,-Y,W): reflection in the x-axis.
ProjPoint reflect_r(const ProjPoint& p);
// (X,Y,W) -> (X,W): the x-coordinate as a point of P^1.
ProjPoint project_vertical(const ProjPoint& p);

// A map sending p to (1,0,0) and q to (0,1,0). The matrix with columns p, q, r is
// inverted, where r is `third` if given, else the first of e3, e1, e2 that makes it invertible.
ProjMap axes_normalization_map(const ProjPoint& p, const ProjPoint& q);
ProjMap axes_normalization_map(const ProjPoint& p, const ProjPoint& q, const ProjPoint& third);

}  // namespace pentlab
