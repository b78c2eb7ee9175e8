#pragma once

#include "pentlab/projective.hpp"

#include <cstdint>
#include <vector>

namespace pentlab {

using Tuple1 = std::vector<ProjPoint>;

// The state (X, Y) of the lower map: two cyclic n-tuples of P^1 with X_i != Y_i.
class PairState1D {
public:
    PairState1D(Tuple1 x, Tuple1 y);

    int n() const { return static_cast<int>(x_.size()); }
    const Tuple1& x() const { return x_; }
    const Tuple1& y() const { return y_; }

    friend bool operator==(const PairState1D&, const PairState1D&) = default;

private:
    Tuple1 x_;
    Tuple1 y_;
};

// B in R^1 with implicit X = (inf, ..., inf).
class AxisAlignedPair1 {
public:
    explicit AxisAlignedPair1(Tuple1 b);

    int n() const { return static_cast<int>(b_.size()); }
    const Tuple1& b() const { return b_; }
    PairState1D state() const;

private:
    Tuple1 b_;
};

Tuple1 tuple_of(const Vec& values);
Tuple1 constant_tuple(const ProjPoint& p, int n);

// (X, Y) -> (Y, Z) with [X_i, Y_i, Y_{i-1}, Z_i, Y_i, Y_{i+1}] = -1.
PairState1D t1_step(const PairState1D& s);

// Center of mass for constant A: phi^{-1}(mean phi(B_i)) with phi(A_1) = inf.
ProjPoint center_of_mass_p1(const Tuple1& a, const Tuple1& b);
// Same with a caller-supplied Moebius map sending A_1 to infinity.
ProjPoint center_of_mass_p1(const Tuple1& a, const Tuple1& b, const ProjMap& phi);

struct T008Report {
    int steps_taken = 0;
    std::vector<PairState1D> orbit;
    Tuple1 first_component;  // C of the final pair; reported only
    Tuple1 final_row;
    bool constant = false;
    ProjPoint mean;
    bool matched = false;

    bool ok() const { return constant && matched; }
};

T008Report verify_T008(const AxisAlignedPair1& b);

AxisAlignedPair1 random_b(int n, std::uint64_t seed, std::int64_t range);

}  // namespace pentlab
