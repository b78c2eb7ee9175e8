#include "pentlab/flat.hpp"

#include "pentlab/error.hpp"

namespace pentlab {

AffineFlat::AffineFlat(Vec base, const std::vector<Vec>& directions) : base_(std::move(base))
{
    for (const auto& d : directions)
        if (d.size() != base_.size())
            throw Error(ErrorKind::DimensionMismatch, "flat direction has the wrong length");
    basis_ = row_reduce(directions);
    base_ = reduce(std::move(base_));
}

AffineFlat AffineFlat::through(const std::vector<Vec>& points)
{
    if (points.empty())
        throw Error(ErrorKind::InvalidArgument, "affine hull of no points");
    std::vector<Vec> dirs;
    for (std::size_t i = 1; i < points.size(); ++i)
        dirs.push_back(sub(points[i], points[0]));
    return AffineFlat(points[0], dirs);
}

Vec AffineFlat::reduce(Vec v) const
{
    for (const auto& row : basis_) {
        std::size_t c = 0;
        while (row[c] == 0)
            ++c;
        if (v[c] == 0)
            continue;
        Rational f = v[c];
        for (std::size_t j = c; j < v.size(); ++j)
            v[j] -= f * row[j];
    }
    return v;
}

bool AffineFlat::contains(const Vec& p) const
{
    if (p.size() != ambient())
        throw Error(ErrorKind::DimensionMismatch, "point and flat live in different spaces");
    return is_zero(reduce(sub(p, base_)));
}

bool AffineFlat::contains(const AffineFlat& f) const
{
    if (!contains(f.base_))
        return false;
    for (const auto& d : f.basis_)
        if (!is_zero(reduce(d)))
            return false;
    return true;
}

AffineFlat AffineFlat::project(std::size_t d) const
{
    if (d > ambient())
        throw Error(ErrorKind::DimensionMismatch, "projection onto more coordinates than available");
    Vec b(base_.begin(), base_.begin() + static_cast<long>(d));
    std::vector<Vec> dirs;
    for (const auto& row : basis_)
        dirs.emplace_back(row.begin(), row.begin() + static_cast<long>(d));
    return AffineFlat(std::move(b), dirs);
}

std::string AffineFlat::to_string() const
{
    auto vec = [](const Vec& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + pentlab::to_string(v[i]);
        return s + ")";
    };
    std::string s = vec(base_);
    for (const auto& row : basis_)
        s += " + t" + vec(row);
    return s;
}

AffineFlat span(const AffineFlat& a, const AffineFlat& b)
{
    if (a.ambient() != b.ambient())
        throw Error(ErrorKind::DimensionMismatch, "span of flats in different spaces");
    std::vector<Vec> dirs(a.basis().begin(), a.basis().end());
    dirs.insert(dirs.end(), b.basis().begin(), b.basis().end());
    dirs.push_back(sub(b.base(), a.base()));
    return AffineFlat(a.base(), dirs);
}

std::optional<AffineFlat> intersect(const AffineFlat& a, const AffineFlat& b)
{
    if (a.ambient() != b.ambient())
        throw Error(ErrorKind::DimensionMismatch, "intersection of flats in different spaces");
    const std::size_t n = a.ambient();
    const std::size_t da = a.dim();
    const std::size_t cols = da + b.dim();
    if (cols == 0)
        return a.base() == b.base() ? std::optional<AffineFlat>(a) : std::nullopt;
    // a.base + A s = b.base + B u  <=>  [A^T | -B^T] (s, u) = b.base - a.base.
    QMatrix m(n, Vec(cols));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < da; ++j)
            m[i][j] = a.basis()[j][i];
        for (std::size_t j = 0; j < b.dim(); ++j)
            m[i][da + j] = -b.basis()[j][i];
    }
    auto x = solve(m, sub(b.base(), a.base()), cols);
    if (!x)
        return std::nullopt;
    auto along_a = [&](const Vec& coeffs) {
        Vec v(n, Rational(0));
        for (std::size_t j = 0; j < da; ++j)
            if (coeffs[j] != 0)
                v = add(v, scale(coeffs[j], a.basis()[j]));
        return v;
    };
    std::vector<Vec> dirs;
    for (const auto& ns : nullspace(m, cols))
        dirs.push_back(along_a(ns));
    return AffineFlat(add(a.base(), along_a(*x)), dirs);
}

}  // namespace pentlab
