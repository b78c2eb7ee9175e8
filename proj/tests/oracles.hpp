#pragma once

// Independent affine oracles: plain rational formulas with no homogeneous coordinates,
// no shared helpers from the library beyond the Rational type itself.

#include "pentlab/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using pentlab::Rational;

struct P2 {
    Rational x, y;
    friend bool operator==(const P2&, const P2&) = default;
};

// Intersection of line (a,b) with line (c,d) by Cramer's rule; nullopt when parallel.
inline std::optional<P2> intersect(const P2& a, const P2& b, const P2& c, const P2& d)
{
    const Rational a1 = b.y - a.y, b1 = a.x - b.x, c1 = a1 * a.x + b1 * a.y;
    const Rational a2 = d.y - c.y, b2 = c.x - d.x, c2 = a2 * c.x + b2 * c.y;
    const Rational det = a1 * b2 - a2 * b1;
    if (det == 0)
        return std::nullopt;
    return P2{Rational((c1 * b2 - c2 * b1) / det), Rational((a1 * c2 - a2 * c1) / det)};
}

inline Rational cross_ratio4(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
{
    return (a - b) * (c - d) / ((b - c) * (d - a));
}

inline Rational cross_ratio6(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                             const Rational& e, const Rational& f)
{
    return (a - b) * (c - d) * (e - f) / ((b - c) * (d - e) * (f - a));
}

// c with [a,b,c,d] = -1, finite inputs.
inline Rational harmonic4(const Rational& a, const Rational& b, const Rational& d)
{
    return (a * (b + d) - 2 * b * d) / (2 * a - b - d);
}

// Midpoint rule: the harmonic conjugate of infinity.
inline Rational harmonic4_inf(const Rational& b, const Rational& d)
{
    return (b + d) / 2;
}

// d with [a,b,c,d,e,f] = -1, finite inputs: A(c-d) + B(d-e) = 0 with A = (a-b)(e-f), B = (b-c)(f-a).
inline Rational harmonic6(const Rational& a, const Rational& b, const Rational& c, const Rational& e,
                          const Rational& f)
{
    const Rational A = (a - b) * (e - f);
    const Rational B = (b - c) * (f - a);
    return (B * e - A * c) / (B - A);
}

// d with [inf,b,c,d,b,f] = -1.
inline Rational harmonic6_inf(const Rational& b, const Rational& c, const Rational& f)
{
    return (b * b - c * f) / (2 * b - c - f);
}

inline Rational mean(const std::vector<Rational>& v)
{
    Rational s = 0;
    for (const auto& x : v)
        s += x;
    return s / static_cast<long>(v.size());
}

// Planar pentagram step, output t = (V_t V_{t+2}) meet (V_{t-1} V_{t+1}).
inline std::vector<P2> pentagram_step(const std::vector<P2>& v)
{
    const std::size_t n = v.size();
    std::vector<P2> out;
    for (std::size_t t = 0; t < n; ++t) {
        auto p = intersect(v[t], v[(t + 2) % n], v[(t + n - 1) % n], v[(t + 1) % n]);
        if (!p)
            throw std::runtime_error("parallel diagonals");
        out.push_back(*p);
    }
    return out;
}

// Mirror step Q_i = X_i r(X_{i+1}) meet X_{i-1} r(X_i), r(x,y) = (x,-y).
inline std::vector<P2> mirror_step(const std::vector<P2>& x)
{
    const std::size_t n = x.size();
    auto r = [](const P2& p) { return P2{p.x, Rational(-p.y)}; };
    std::vector<P2> out;
    for (std::size_t i = 0; i < n; ++i) {
        auto p = intersect(x[i], r(x[(i + 1) % n]), x[(i + n - 1) % n], r(x[i]));
        if (!p)
            throw std::runtime_error("parallel lines");
        out.push_back(*p);
    }
    return out;
}

// Lower map on finite rows: Z_i = harmonic6(X_i, Y_i, Y_{i-1}, Y_i, Y_{i+1}).
inline std::vector<Rational> t1_step(const std::vector<Rational>& x, const std::vector<Rational>& y)
{
    const std::size_t n = y.size();
    std::vector<Rational> z;
    for (std::size_t i = 0; i < n; ++i)
        z.push_back(harmonic6(x[i], y[i], y[(i + n - 1) % n], y[i], y[(i + 1) % n]));
    return z;
}

// Same with X = (inf, ..., inf).
inline std::vector<Rational> t1_step_inf(const std::vector<Rational>& y)
{
    const std::size_t n = y.size();
    std::vector<Rational> z;
    for (std::size_t i = 0; i < n; ++i)
        z.push_back(harmonic6_inf(y[i], y[(i + n - 1) % n], y[(i + 1) % n]));
    return z;
}

// Intersection of lines a + s(b - a) and c + t(d - c) in R^k, assumed coplanar and not parallel.
inline std::optional<std::vector<Rational>> intersect_nd(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                                         const std::vector<Rational>& c, const std::vector<Rational>& d)
{
    const std::size_t k = a.size();
    // Solve s u - t w = c - a with u = b - a, w = d - c, using the first pair of rows with a nonzero minor.
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const Rational u1 = b[i] - a[i], u2 = b[j] - a[j];
            const Rational w1 = d[i] - c[i], w2 = d[j] - c[j];
            const Rational det = -u1 * w2 + u2 * w1;
            if (det == 0)
                continue;
            const Rational r1 = c[i] - a[i], r2 = c[j] - a[j];
            const Rational s = (-r1 * w2 + r2 * w1) / det;
            const Rational t = (u1 * r2 - u2 * r1) / det;
            std::vector<Rational> p(k), q(k);
            for (std::size_t l = 0; l < k; ++l) {
                p[l] = a[l] + s * (b[l] - a[l]);
                q[l] = c[l] + t * (d[l] - c[l]);
            }
            if (p != q)
                return std::nullopt;  // skew
            return p;
        }
    return std::nullopt;
}

}  // namespace oracle
