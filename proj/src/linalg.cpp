#include "pentlab/linalg.hpp"

#include "pentlab/error.hpp"

#include <utility>

namespace pentlab {

namespace {

std::size_t width(const auto& m)
{
    return m.empty() ? 0 : m.front().size();
}

// Scale each row to integers; `factor` collects the product of the scalings.
IntMatrix integerize(const QMatrix& m, Integer* factor)
{
    IntMatrix out;
    out.reserve(m.size());
    Integer f = 1;
    for (const auto& row : m) {
        Integer l = 1;
        for (const auto& q : row)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        IntVec r;
        r.reserve(row.size());
        for (const auto& q : row)
            r.push_back(q.get_num() * (l / q.get_den()));
        f *= l;
        out.push_back(std::move(r));
    }
    if (factor)
        *factor = f;
    return out;
}

}  // namespace

Integer determinant(IntMatrix m)
{
    const std::size_t n = m.size();
    if (width(m) != n)
        throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    if (n == 0)
        return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Rational determinant(const QMatrix& m)
{
    Integer f;
    IntMatrix im = integerize(m, &f);
    Rational d(determinant(std::move(im)), f);
    d.canonicalize();
    return d;
}

std::size_t rank(IntMatrix m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = width(m);
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::size_t rank(const QMatrix& m)
{
    return rank(integerize(m, nullptr));
}

QMatrix row_reduce(QMatrix m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = width(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

namespace {

std::vector<std::size_t> pivots(const QMatrix& rref)
{
    std::vector<std::size_t> piv;
    for (const auto& row : rref) {
        std::size_t c = 0;
        while (row[c] == 0)
            ++c;
        piv.push_back(c);
    }
    return piv;
}

}  // namespace

std::vector<Vec> nullspace(const QMatrix& m, std::size_t cols)
{
    QMatrix r = row_reduce(m);
    auto piv = pivots(r);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : piv)
        is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vec v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r.size(); ++i)
            v[piv[i]] = -r[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const QMatrix& m, const Vec& b, std::size_t cols)
{
    if (m.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "solve: row count differs from right-hand side");
    QMatrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        if (aug[i].size() != cols)
            throw Error(ErrorKind::DimensionMismatch, "solve: ragged matrix");
        aug[i].push_back(b[i]);
    }
    QMatrix r = row_reduce(std::move(aug));
    auto piv = pivots(r);
    Vec x(cols, Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (piv[i] == cols)
            return std::nullopt;
        x[piv[i]] = r[i][cols];
    }
    return x;
}

QMatrix inverse(const QMatrix& m)
{
    const std::size_t n = m.size();
    if (width(m) != n)
        throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    QMatrix aug = m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            aug[i].push_back(Rational(i == j ? 1 : 0));
    QMatrix r = row_reduce(std::move(aug));
    if (r.size() < n || r[n - 1][n - 1] == 0)
        throw Error(ErrorKind::SingularMap, "matrix is singular");
    QMatrix inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = r[i][n + j];
    return inv;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b)
{
    const std::size_t inner = width(a);
    if (inner != b.size())
        throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
    const std::size_t cols = width(b);
    QMatrix out(a.size(), Vec(cols, Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

Vec multiply(const QMatrix& a, const Vec& x)
{
    if (width(a) != x.size())
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector shapes");
    Vec out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            out[i] += a[i][j] * x[j];
    return out;
}

namespace {

template <class T>
std::vector<std::vector<T>> drop_column(const std::vector<std::vector<T>>& rows, std::size_t col)
{
    std::vector<std::vector<T>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<T> r;
        r.reserve(row.size() - 1);
        for (std::size_t j = 0; j < row.size(); ++j)
            if (j != col)
                r.push_back(row[j]);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

IntVec generalized_cross(const IntMatrix& rows)
{
    const std::size_t n = rows.size() + 1;
    for (const auto& r : rows)
        if (r.size() != n)
            throw Error(ErrorKind::DimensionMismatch, "generalized cross product needs k x (k+1)");
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer d = determinant(drop_column(rows, i));
        v[i] = (i % 2 == 0) ? d : Integer(-d);
    }
    return v;
}

Vec generalized_cross(const QMatrix& rows)
{
    const std::size_t n = rows.size() + 1;
    for (const auto& r : rows)
        if (r.size() != n)
            throw Error(ErrorKind::DimensionMismatch, "generalized cross product needs k x (k+1)");
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational d = determinant(drop_column(rows, i));
        v[i] = (i % 2 == 0) ? d : Rational(-d);
    }
    return v;
}

IntVec primitive(IntVec v)
{
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0)
        return v;
    bool flip = false;
    for (const auto& x : v) {
        if (x != 0) {
            flip = x < 0;
            break;
        }
    }
    if (flip)
        g = -g;
    if (g != 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

IntVec clear_denominators(const Vec& v)
{
    Integer l = 1;
    for (const auto& q : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVec out;
    out.reserve(v.size());
    for (const auto& q : v)
        out.push_back(q.get_num() * (l / q.get_den()));
    return out;
}

Vec to_rational(const IntVec& v)
{
    return Vec(v.begin(), v.end());
}

bool is_zero(const IntVec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

Rational dot(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "dot product of unequal lengths");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "vector sum of unequal lengths");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "vector difference of unequal lengths");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

Vec scale(const Rational& s, const Vec& a)
{
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = s * a[i];
    return out;
}

}  // namespace pentlab
