#include "oracles.hpp"

#include "pentlab/error.hpp"
#include "pentlab/linalg.hpp"
#include "pentlab/projective.hpp"
#include "pentlab/random.hpp"

#include <doctest.h>

using namespace pentlab;

namespace {

ProjPoint s(const Rational& x)
{
    return ProjPoint::scalar(x);
}

ProjPoint pt(const Rational& x, const Rational& y)
{
    return ProjPoint::affine(x, y);
}

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
}

Rational value(const ProjPoint& p)
{
    REQUIRE(p.is_finite());
    return p.affine(0);
}

}  // namespace

TEST_CASE("rational text form")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-3")) == "-3");
    CHECK(to_string(parse_rational("+4/2")) == "2");
    CHECK(kind_of([] { parse_rational("2/-1"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_rational(""); }) == ErrorKind::ParseError);
}

TEST_CASE("canonical homogeneous form")
{
    ProjPoint p(IntVec{-4, 6, -2});
    CHECK(p.coords() == IntVec{2, -3, 1});
    CHECK(ProjPoint(p.coords()) == p);
    CHECK(ProjPoint(IntVec{0, -2, 4}).coords() == IntVec{0, 1, -2});
    CHECK(ProjPoint::infinity().coords() == IntVec{1, 0});
    CHECK(pt(Rational(1, 2), Rational(-2, 3)) == ProjPoint(IntVec{3, -4, 6}));
    CHECK(kind_of([] { ProjPoint(IntVec{0, 0, 0}); }) == ErrorKind::InvalidArgument);
    CHECK(pt(5, -7).to_string() == "(5, -7)");
    CHECK(ProjPoint(IntVec{1, 0, 0}).to_string() == "[1:0:0]");
    CHECK(ProjPoint::infinity().to_string() == "inf");
}

TEST_CASE("join_points examples")
{
    const ProjLine2 l1 = join_points(pt(0, 0), pt(1, 1));
    CHECK(l1.contains(pt(0, 0)));
    CHECK(l1.contains(pt(1, 1)));
    CHECK(l1 == ProjLine2(IntVec{1, -1, 0}));
    CHECK(join_points(pt(0, 0), pt(4, 2)) == ProjLine2(IntVec{1, -2, 0}));
    CHECK(join_points(pt(1, -1), pt(2, 1)) == ProjLine2(IntVec{2, -1, -3}));
    CHECK(kind_of([] { join_points(pt(1, 2), pt(1, 2)); }) == ErrorKind::DegenerateJoin);
}

TEST_CASE("meet_lines examples")
{
    CHECK(meet_lines(ProjLine2(IntVec{1, 0, 0}), ProjLine2(IntVec{0, 1, 0})) == pt(0, 0));
    // y = x/2 and y = 5 - 5x/4.
    CHECK(meet_lines(ProjLine2(IntVec{1, -2, 0}), ProjLine2(IntVec{5, 4, -20})) ==
          pt(Rational(20, 7), Rational(10, 7)));
    // Parallel lines meet at the point at infinity of their direction.
    CHECK(meet_lines(ProjLine2(IntVec{1, -1, 0}), ProjLine2(IntVec{1, -1, 3})) == ProjPoint(IntVec{1, 1, 0}));
    CHECK(kind_of([] { meet_lines(ProjLine2(IntVec{1, 2, 3}), ProjLine2(IntVec{2, 4, 6})); }) ==
          ErrorKind::DegenerateMeet);
}

TEST_CASE("meet_lines agrees with Cramer's rule")
{
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        oracle::P2 a{rng.rational(9), rng.rational(9)}, b{rng.rational(9), rng.rational(9)};
        oracle::P2 c{rng.rational(9), rng.rational(9)}, d{rng.rational(9), rng.rational(9)};
        auto expected = oracle::intersect(a, b, c, d);
        if (!expected || a == b || c == d)
            continue;
        const ProjLine2 l = join_points(pt(a.x, a.y), pt(b.x, b.y));
        const ProjLine2 m = join_points(pt(c.x, c.y), pt(d.x, d.y));
        if (l == m)
            continue;
        CHECK(meet_lines(l, m) == pt(expected->x, expected->y));
    }
}

TEST_CASE("meet_coplanar_lines")
{
    // In P^2 it agrees with join and meet.
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        ProjPoint a = pt(rng.rational(7), rng.rational(7)), b = pt(rng.rational(7), rng.rational(7));
        ProjPoint c = pt(rng.rational(7), rng.rational(7)), d = pt(rng.rational(7), rng.rational(7));
        if (a == b || c == d || join_points(a, b) == join_points(c, d))
            continue;
        CHECK(meet_coplanar_lines(a, b, c, d) == meet_lines(join_points(a, b), join_points(c, d)));
    }
    // Skew lines in R^3.
    auto p3 = [](long x, long y, long z) { return ProjPoint::affine(Vec{x, y, z}); };
    CHECK(kind_of([&] { meet_coplanar_lines(p3(0, 0, 0), p3(1, 0, 0), p3(0, 1, 1), p3(0, 2, 1)); }) ==
          ErrorKind::NonCoplanarDiagonals);
    CHECK(kind_of([&] { meet_coplanar_lines(p3(0, 0, 0), p3(1, 0, 0), p3(2, 0, 0), p3(3, 0, 0)); }) ==
          ErrorKind::DegenerateMeet);
    CHECK(kind_of([&] { meet_coplanar_lines(p3(0, 0, 0), p3(0, 0, 0), p3(2, 0, 0), p3(3, 0, 1)); }) ==
          ErrorKind::DegenerateJoin);
    // Coplanar lines in R^3 against the affine oracle.
    for (int i = 0; i < 100; ++i) {
        Vec a{rng.rational(6), rng.rational(6), rng.rational(6)}, b{rng.rational(6), rng.rational(6), rng.rational(6)};
        Vec x{rng.rational(6), rng.rational(6), rng.rational(6)};
        Vec c = add(a, scale(rng.rational(5), sub(x, a)));
        Vec d = add(b, scale(rng.rational(5), sub(x, b)));
        // Lines ac' and bd' pass through x, so ab-plane construction: use lines (a, c) and (b, d).
        if (a == c || b == d)
            continue;
        auto expected = oracle::intersect_nd(a, c, b, d);
        if (!expected)
            continue;
        CHECK(meet_coplanar_lines(ProjPoint::affine(a), ProjPoint::affine(c), ProjPoint::affine(b),
                                  ProjPoint::affine(d)) == ProjPoint::affine(*expected));
    }
}

TEST_CASE("cross ratio examples")
{
    CHECK(cross_ratio4(s(-1), s(0), s(1), ProjPoint::infinity()) == s(-1));
    CHECK(cross_ratio4(s(0), s(1), s(2), s(3)) == s(Rational(-1, 3)));
    CHECK(cross_ratio4(ProjPoint::infinity(), s(3), s(5), s(7)) == s(-1));
    CHECK(cross_ratio6(s(1), s(Rational(11, 6)), s(Rational(34, 9)), s(3), s(Rational(11, 6)), s(Rational(2, 3))) ==
          s(-1));
    CHECK(cross_ratio6(ProjPoint::infinity(), s(5), s(7), s(Rational(46, 6)), s(5), s(-3)) == s(-1));
    CHECK(kind_of([] { cross_ratio4(s(1), s(1), s(1), s(2)); }) == ErrorKind::IndeterminateCrossRatio);
    CHECK(kind_of([] { cross_ratio6(s(1), s(1), s(1), s(1), s(2), s(3)); }) == ErrorKind::IndeterminateCrossRatio);
    // An infinite value.
    CHECK(cross_ratio4(s(0), s(1), s(1), s(2)).is_infinite());
}

TEST_CASE("cross ratio agrees with the affine formula")
{
    Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        const Rational a = rng.rational(9), b = rng.rational(9), c = rng.rational(9), d = rng.rational(9);
        const Rational e = rng.rational(9), f = rng.rational(9);
        if ((b - c) * (d - a) != 0)
            CHECK(value(cross_ratio4(s(a), s(b), s(c), s(d))) == oracle::cross_ratio4(a, b, c, d));
        if ((b - c) * (d - e) * (f - a) != 0)
            CHECK(value(cross_ratio6(s(a), s(b), s(c), s(d), s(e), s(f))) == oracle::cross_ratio6(a, b, c, d, e, f));
    }
}

TEST_CASE("harmonic solve examples")
{
    CHECK(solve_harmonic4(ProjPoint::infinity(), s(7), s(5)) == s(6));
    CHECK(solve_harmonic4(s(0), s(1), s(-1)).is_infinite());
    CHECK(solve_harmonic4(s(5), s(6), s(1)) == s(Rational(23, 3)));
    CHECK(solve_harmonic4(s(Rational(34, 9)), s(3), s(3)) == s(3));
    CHECK(kind_of([] { solve_harmonic4(s(2), s(2), s(2)); }) == ErrorKind::ZeroDenominator);
    CHECK(solve_harmonic6(ProjPoint::infinity(), s(1), s(6), s(1), s(2)) == s(Rational(11, 6)));
    CHECK(solve_harmonic6(ProjPoint::infinity(), s(5), s(7), s(5), s(-3)) == s(Rational(23, 3)));
    CHECK(solve_harmonic6(s(1), s(Rational(11, 6)), s(Rational(34, 9)), s(Rational(11, 6)), s(Rational(2, 3))) ==
          s(3));
    CHECK(kind_of([] { solve_harmonic6(s(1), s(2), s(2), s(2), s(2)); }) == ErrorKind::ZeroDenominator);
}

TEST_CASE("harmonic solves agree with the closed forms and round-trip")
{
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        const Rational a = rng.rational(9), b = rng.rational(9), c = rng.rational(9), e = rng.rational(9);
        const Rational f = rng.rational(9);
        if (2 * a - b - e != 0) {
            const ProjPoint x = solve_harmonic4(s(a), s(b), s(e));
            CHECK(value(x) == oracle::harmonic4(a, b, e));
            if (a != b && b != e && a != e)
                CHECK(is_minus_one(cross_ratio4(s(a), s(b), x, s(e))));
        }
        if (b != c || b != f)
            CHECK(value(solve_harmonic4(ProjPoint::infinity(), s(c), s(f))) == oracle::harmonic4_inf(c, f));
        const Rational A = (a - b) * (e - f), B = (b - c) * (f - a);
        if (B - A != 0) {
            const ProjPoint d = solve_harmonic6(s(a), s(b), s(c), s(e), s(f));
            CHECK(value(d) == oracle::harmonic6(a, b, c, e, f));
            if (a != b && b != c && e != f && f != a && d != s(e) && d != s(c))
                CHECK(is_minus_one(cross_ratio6(s(a), s(b), s(c), d, s(e), s(f))));
        }
        if (2 * b - c - f != 0)
            CHECK(value(solve_harmonic6(ProjPoint::infinity(), s(b), s(c), s(b), s(f))) ==
                  oracle::harmonic6_inf(b, c, f));
    }
}

TEST_CASE("reflection and projection")
{
    CHECK(reflect_r(pt(3, Rational(-1, 3))) == pt(3, Rational(1, 3)));
    CHECK(reflect_r(ProjPoint(IntVec{1, 0, 0})) == ProjPoint(IntVec{1, 0, 0}));
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        const ProjPoint p(IntVec{rng.between(-9, 9), rng.between(-9, 9), rng.between(1, 9)});
        CHECK(reflect_r(reflect_r(p)) == p);
        CHECK((reflect_r(p) == p) == (p[1] == 0));
    }
    CHECK(project_vertical(pt(Rational(11, 6), Rational(2, 3))) == s(Rational(11, 6)));
    CHECK(project_vertical(pt(5, -7)) == s(5));
    CHECK(project_vertical(ProjPoint(IntVec{1, 0, 0})).is_infinite());
    CHECK(kind_of([] { project_vertical(ProjPoint(IntVec{0, 1, 0})); }) == ErrorKind::UndefinedProjection);
}

TEST_CASE("projective maps")
{
    CHECK(apply_map(ProjMap::identity(2), pt(3, 4)) == pt(3, 4));
    // x -> 1/(x - a) sends infinity to 0.
    CHECK(apply_map(ProjMap::mobius(0, 1, 1, -5), ProjPoint::infinity()) == s(0));
    CHECK(apply_map(ProjMap::mobius(0, 1, 1, -1), s(3)) == s(Rational(1, 2)));
    CHECK(kind_of([] { apply_map(ProjMap::identity(1), pt(1, 2)); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([] { ProjMap::mobius(1, 2, 2, 4); }) == ErrorKind::SingularMap);
    const ProjMap f = ProjMap::mobius(2, 1, 1, 3), g = ProjMap::mobius(1, -1, 2, 5);
    for (long x = -4; x <= 4; ++x)
        CHECK((f * g)(s(x)) == f(g(s(x))));
    CHECK((f * f.inverse()) == ProjMap::identity(1));
}

TEST_CASE("axes normalization")
{
    const ProjPoint h(IntVec{1, 0, 0}), v(IntVec{0, 1, 0});
    CHECK(axes_normalization_map(h, v) == ProjMap::identity(2));
    const ProjMap phi = axes_normalization_map(pt(0, 0), ProjPoint(IntVec{1, 1, 0}));
    CHECK(phi(pt(0, 0)) == h);
    CHECK(phi(ProjPoint(IntVec{1, 1, 0})) == v);
    CHECK(determinant(phi.matrix()) != 0);
    CHECK(kind_of([] { axes_normalization_map(ProjPoint(IntVec{1, 2, 3}), ProjPoint(IntVec{2, 4, 6})); }) ==
          ErrorKind::DegenerateJoin);
}

TEST_CASE("cross ratio invariance under random Moebius maps")
{
    Rng rng(8);
    int checked = 0;
    while (checked < 200) {
        const Rational a = rng.rational(9), b = rng.rational(9), c = rng.rational(9), d = rng.rational(9);
        const Rational e = rng.rational(9), f = rng.rational(9);
        const Rational ma = rng.rational(6), mb = rng.rational(6), mc = rng.rational(6), md = rng.rational(6);
        if (ma * md - mb * mc == 0 || (b - c) * (d - a) == 0 || (b - c) * (d - e) * (f - a) == 0)
            continue;
        const ProjMap phi = ProjMap::mobius(ma, mb, mc, md);
        CHECK(cross_ratio4(phi(s(a)), phi(s(b)), phi(s(c)), phi(s(d))) == cross_ratio4(s(a), s(b), s(c), s(d)));
        CHECK(cross_ratio6(phi(s(a)), phi(s(b)), phi(s(c)), phi(s(d)), phi(s(e)), phi(s(f))) ==
              cross_ratio6(s(a), s(b), s(c), s(d), s(e), s(f)));
        ++checked;
    }
}

TEST_CASE("linear algebra kernel")
{
    QMatrix m{{2, 1, 1}, {1, 3, 2}, {1, 0, 0}};
    CHECK(determinant(m) == -1);
    CHECK(multiply(m, inverse(m)) == QMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(rank(QMatrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 2);
    CHECK(determinant(IntMatrix{{Integer(1), Integer(2)}, {Integer(3), Integer(4)}}) == -2);
    const auto ns = nullspace(QMatrix{{1, 2, 3}, {2, 4, 6}}, 3);
    CHECK(ns.size() == 2);
    for (const auto& v : ns)
        CHECK(dot(v, Vec{1, 2, 3}) == 0);
    const auto x = solve(QMatrix{{1, 1}, {1, -1}}, Vec{3, 1}, 2);
    REQUIRE(x);
    CHECK(*x == Vec{2, 1});
    CHECK(!solve(QMatrix{{1, 1}, {1, 1}}, Vec{1, 2}, 2));
    CHECK(generalized_cross(QMatrix{{1, 0, 0}, {0, 1, 0}}) == Vec{0, 0, 1});
}
