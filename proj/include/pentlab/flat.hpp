#pragma once

#include "pentlab/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pentlab {

// base + span(basis) in R^n. The basis is kept in reduced row echelon form and the
// base point reduced against it, so equal flats have identical representations.
class AffineFlat {
public:
    AffineFlat(Vec base, const std::vector<Vec>& directions);

    static AffineFlat point(Vec p) { return AffineFlat(std::move(p), {}); }
    // Affine hull of the given points.
    static AffineFlat through(const std::vector<Vec>& points);

    std::size_t ambient() const { return base_.size(); }
    std::size_t dim() const { return basis_.size(); }
    std::size_t codim() const { return ambient() - dim(); }
    const Vec& base() const { return base_; }
    const QMatrix& basis() const { return basis_; }

    bool contains(const Vec& p) const;
    bool contains(const AffineFlat& f) const;

    // The first `d` coordinates of every point.
    AffineFlat project(std::size_t d) const;

    std::string to_string() const;

    friend bool operator==(const AffineFlat&, const AffineFlat&) = default;

private:
    Vec reduce(Vec v) const;

    Vec base_;
    QMatrix basis_;
};

AffineFlat span(const AffineFlat& a, const AffineFlat& b);
std::optional<AffineFlat> intersect(const AffineFlat& a, const AffineFlat& b);

}  // namespace pentlab
