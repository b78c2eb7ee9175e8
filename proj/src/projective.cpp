#include "pentlab/projective.hpp"

#include "pentlab/error.hpp"

#include <array>
#include <utility>

namespace pentlab {

namespace {

void require_dim(const ProjPoint& p, int dim, const char* op)
{
    if (p.dim() != dim)
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(op) + " expects a point of P^" + std::to_string(dim) + ", got P^" +
                        std::to_string(p.dim()));
}

IntVec cross3(const IntVec& a, const IntVec& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

QMatrix normalize_matrix(QMatrix m)
{
    Vec flat;
    for (const auto& row : m)
        flat.insert(flat.end(), row.begin(), row.end());
    IntVec ints = primitive(clear_denominators(flat));
    std::size_t k = 0;
    for (auto& row : m)
        for (auto& x : row)
            x = ints[k++];
    return m;
}

}  // namespace

ProjPoint::ProjPoint(IntVec coords) : coords_(primitive(std::move(coords)))
{
    if (coords_.size() < 2)
        throw Error(ErrorKind::DimensionMismatch, "a projective point needs at least two coordinates");
    if (is_zero(coords_))
        throw Error(ErrorKind::InvalidArgument, "homogeneous coordinates are all zero");
}

ProjPoint ProjPoint::from_homogeneous(const Vec& coords)
{
    return ProjPoint(clear_denominators(coords));
}

ProjPoint ProjPoint::affine(const Vec& x)
{
    Vec h = x;
    h.emplace_back(1);
    return from_homogeneous(h);
}

ProjPoint ProjPoint::affine(const Rational& x, const Rational& y)
{
    return from_homogeneous({x, y, Rational(1)});
}

ProjPoint ProjPoint::scalar(const Rational& x)
{
    return from_homogeneous({x, Rational(1)});
}

ProjPoint ProjPoint::infinity()
{
    return ProjPoint(IntVec{1, 0});
}

Vec ProjPoint::affine() const
{
    if (!is_finite())
        throw Error(ErrorKind::InfiniteVertex, "point " + to_string() + " is at infinity");
    Vec out;
    out.reserve(coords_.size() - 1);
    for (std::size_t i = 0; i + 1 < coords_.size(); ++i) {
        Rational q(coords_[i], coords_.back());
        q.canonicalize();
        out.push_back(std::move(q));
    }
    return out;
}

Rational ProjPoint::affine(std::size_t i) const
{
    if (!is_finite())
        throw Error(ErrorKind::InfiniteVertex, "point " + to_string() + " is at infinity");
    Rational q(coords_[i], coords_.back());
    q.canonicalize();
    return q;
}

std::string ProjPoint::to_string() const
{
    if (dim() == 1)
        return is_finite() ? pentlab::to_string(affine(0)) : std::string("inf");
    std::string s;
    if (is_finite()) {
        s = "(";
        auto a = affine();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i)
                s += ", ";
            s += pentlab::to_string(a[i]);
        }
        return s + ")";
    }
    s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            s += ":";
        s += coords_[i].get_str();
    }
    return s + "]";
}

ProjLine2::ProjLine2(IntVec coeffs) : coeffs_(primitive(std::move(coeffs)))
{
    if (coeffs_.size() != 3)
        throw Error(ErrorKind::DimensionMismatch, "a line of P^2 has three coefficients");
    if (is_zero(coeffs_))
        throw Error(ErrorKind::InvalidArgument, "line coefficients are all zero");
}

bool ProjLine2::contains(const ProjPoint& p) const
{
    require_dim(p, 2, "incidence");
    return coeffs_[0] * p[0] + coeffs_[1] * p[1] + coeffs_[2] * p[2] == 0;
}

std::string ProjLine2::to_string() const
{
    static const std::array<const char*, 3> names{"x", "y", ""};
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0)
            continue;
        Integer mag = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (mag != 1 || i == 2)
            s += mag.get_str();
        s += names[i];
    }
    return s + " = 0";
}

ProjMap::ProjMap(QMatrix matrix)
{
    const std::size_t n = matrix.size();
    if (n < 2)
        throw Error(ErrorKind::DimensionMismatch, "a projective map needs a matrix of size at least 2");
    for (const auto& row : matrix)
        if (row.size() != n)
            throw Error(ErrorKind::DimensionMismatch, "a projective map needs a square matrix");
    if (determinant(matrix) == 0)
        throw Error(ErrorKind::SingularMap, "projective map matrix is singular");
    matrix_ = normalize_matrix(std::move(matrix));
}

ProjMap ProjMap::identity(int dim)
{
    QMatrix m(dim + 1, Vec(dim + 1, Rational(0)));
    for (int i = 0; i <= dim; ++i)
        m[i][i] = 1;
    return ProjMap(std::move(m));
}

ProjMap ProjMap::mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
{
    return ProjMap(QMatrix{{a, b}, {c, d}});
}

ProjPoint ProjMap::operator()(const ProjPoint& p) const
{
    if (p.dim() != dim())
        throw Error(ErrorKind::DimensionMismatch, "map on P^" + std::to_string(dim()) + " applied to a point of P^" +
                                                      std::to_string(p.dim()));
    return ProjPoint::from_homogeneous(multiply(matrix_, p.homogeneous()));
}

ProjMap ProjMap::inverse() const
{
    return ProjMap(pentlab::inverse(matrix_));
}

ProjMap operator*(const ProjMap& a, const ProjMap& b)
{
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimensionMismatch, "composing maps of different dimensions");
    return ProjMap(multiply(a.matrix_, b.matrix_));
}

ProjPoint apply_map(const ProjMap& phi, const ProjPoint& p)
{
    return phi(p);
}

ProjLine2 join_points(const ProjPoint& a, const ProjPoint& b)
{
    require_dim(a, 2, "join_points");
    require_dim(b, 2, "join_points");
    IntVec l = cross3(a.coords(), b.coords());
    if (is_zero(l))
        throw Error(ErrorKind::DegenerateJoin, "join of coincident points " + a.to_string());
    return ProjLine2(std::move(l));
}

ProjPoint meet_lines(const ProjLine2& l1, const ProjLine2& l2)
{
    IntVec p = cross3(l1.coeffs(), l2.coeffs());
    if (is_zero(p))
        throw Error(ErrorKind::DegenerateMeet, "meet of identical lines " + l1.to_string());
    return ProjPoint(std::move(p));
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c)
{
    require_dim(a, 2, "collinear");
    require_dim(b, 2, "collinear");
    require_dim(c, 2, "collinear");
    return determinant(IntMatrix{a.coords(), b.coords(), c.coords()}) == 0;
}

ProjPoint meet_coplanar_lines(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d)
{
    const int m = a.dim();
    if (b.dim() != m || c.dim() != m || d.dim() != m)
        throw Error(ErrorKind::DimensionMismatch, "meet_coplanar_lines: points of different dimensions");
    if (a == b)
        throw Error(ErrorKind::DegenerateJoin, "join of coincident points " + a.to_string());
    if (c == d)
        throw Error(ErrorKind::DegenerateJoin, "join of coincident points " + c.to_string());
    // Rows of [a b -c -d]; a null vector (l, u, r, s) gives l a + u b = r c + s d.
    IntMatrix rows;
    rows.reserve(m + 1);
    for (int k = 0; k <= m; ++k)
        rows.push_back({a[k], b[k], Integer(-c[k]), Integer(-d[k])});
    const std::size_t r = rank(rows);
    if (r == 4)
        throw Error(ErrorKind::NonCoplanarDiagonals, "lines " + a.to_string() + b.to_string() + " and " +
                                                         c.to_string() + d.to_string() + " are skew");
    if (r < 3)
        throw Error(ErrorKind::DegenerateMeet, "meet of identical lines through " + a.to_string());
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                IntVec v = generalized_cross(IntMatrix{rows[i], rows[j], rows[k]});
                if (is_zero(v))
                    continue;
                IntVec p(m + 1);
                for (int t = 0; t <= m; ++t)
                    p[t] = v[0] * a[t] + v[1] * b[t];
                return ProjPoint(std::move(p));
            }
    throw Error(ErrorKind::DegenerateMeet, "no independent row triple");
}

Integer bracket(const ProjPoint& p, const ProjPoint& q)
{
    require_dim(p, 1, "bracket");
    require_dim(q, 1, "bracket");
    return p[0] * q[1] - p[1] * q[0];
}

ProjPoint cross_ratio4(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d)
{
    Integer num = bracket(a, b) * bracket(c, d);
    Integer den = bracket(b, c) * bracket(d, a);
    if (num == 0 && den == 0)
        throw Error(ErrorKind::IndeterminateCrossRatio, "cross ratio is 0/0");
    return ProjPoint(IntVec{num, den});
}

ProjPoint cross_ratio6(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d,
                       const ProjPoint& e, const ProjPoint& f)
{
    Integer num = bracket(a, b) * bracket(c, d) * bracket(e, f);
    Integer den = bracket(b, c) * bracket(d, e) * bracket(f, a);
    if (num == 0 && den == 0)
        throw Error(ErrorKind::IndeterminateCrossRatio, "six-point cross ratio is 0/0");
    return ProjPoint(IntVec{num, den});
}

bool is_minus_one(const ProjPoint& value)
{
    return value.dim() == 1 && value[0] == -value[1];
}

ProjPoint solve_harmonic4(const ProjPoint& a, const ProjPoint& b, const ProjPoint& d)
{
    // [a,b][c,d] + [b,c][d,a] = 0 is linear in c: alpha c_x + beta c_w = 0.
    const Integer k = bracket(a, b);
    const Integer m = bracket(d, a);
    const Integer alpha = k * d[1] - m * b[1];
    const Integer beta = m * b[0] - k * d[0];
    if (alpha == 0 && beta == 0)
        throw Error(ErrorKind::ZeroDenominator, "harmonic conjugate is indeterminate");
    return ProjPoint(IntVec{Integer(-beta), alpha});
}

ProjPoint solve_harmonic6(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& e,
                          const ProjPoint& f)
{
    // [a,b][c,d][e,f] + [b,c][d,e][f,a] = 0 is linear in d.
    const Integer k1 = bracket(a, b) * bracket(e, f);
    const Integer k2 = bracket(b, c) * bracket(f, a);
    const Integer alpha = k2 * e[1] - k1 * c[1];
    const Integer beta = k1 * c[0] - k2 * e[0];
    if (alpha == 0 && beta == 0)
        throw Error(ErrorKind::ZeroDenominator, "six-point harmonic solve is indeterminate");
    return ProjPoint(IntVec{Integer(-beta), alpha});
}

ProjPoint reflect_r(const ProjPoint& p)
{
    require_dim(p, 2, "reflect_r");
    return ProjPoint(IntVec{p[0], Integer(-p[1]), p[2]});
}

ProjPoint project_vertical(const ProjPoint& p)
{
    require_dim(p, 2, "project_vertical");
    if (p[0] == 0 && p[2] == 0)
        throw Error(ErrorKind::UndefinedProjection, "vertical direction at infinity has no projection");
    return ProjPoint(IntVec{p[0], p[2]});
}

namespace {

ProjMap normalization_from_columns(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r)
{
    QMatrix m(3, Vec(3));
    for (std::size_t i = 0; i < 3; ++i) {
        m[i][0] = p[i];
        m[i][1] = q[i];
        m[i][2] = r[i];
    }
    return ProjMap(pentlab::inverse(m));
}

}  // namespace

ProjMap axes_normalization_map(const ProjPoint& p, const ProjPoint& q, const ProjPoint& third)
{
    require_dim(p, 2, "axes_normalization_map");
    require_dim(q, 2, "axes_normalization_map");
    require_dim(third, 2, "axes_normalization_map");
    if (p == q)
        throw Error(ErrorKind::DegenerateJoin, "normalization points coincide");
    if (determinant(IntMatrix{p.coords(), q.coords(), third.coords()}) == 0)
        throw Error(ErrorKind::SingularMap, "third point lies on the line through p and q");
    return normalization_from_columns(p, q, third);
}

ProjMap axes_normalization_map(const ProjPoint& p, const ProjPoint& q)
{
    require_dim(p, 2, "axes_normalization_map");
    require_dim(q, 2, "axes_normalization_map");
    if (p == q)
        throw Error(ErrorKind::DegenerateJoin, "normalization points coincide");
    for (const IntVec& e : {IntVec{0, 0, 1}, IntVec{1, 0, 0}, IntVec{0, 1, 0}}) {
        ProjPoint r(e);
        if (determinant(IntMatrix{p.coords(), q.coords(), r.coords()}) != 0)
            return normalization_from_columns(p, q, r);
    }
    throw Error(ErrorKind::SingularMap, "no coordinate point completes the frame");
}

}  // namespace pentlab
