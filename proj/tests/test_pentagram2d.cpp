#include "oracles.hpp"

#include "pentlab/error.hpp"
#include "pentlab/pentagram2d.hpp"

#include <doctest.h>

#include <algorithm>

using namespace pentlab;

namespace {

ProjPoint pt(const Rational& x, const Rational& y)
{
    return ProjPoint::affine(x, y);
}

LabeledPolygon2 hexagon()
{
    return LabeledPolygon2({pt(0, 0), pt(4, 0), pt(4, 2), pt(1, 2), pt(1, 5), pt(0, 5)});
}

std::vector<oracle::P2> plain(const LabeledPolygon2& p)
{
    std::vector<oracle::P2> out;
    for (const auto& v : p.vertices())
        out.push_back({v.affine(0), v.affine(1)});
    return out;
}

ProjMap random_projective(Rng& rng)
{
    for (;;) {
        QMatrix m(3, Vec(3));
        for (auto& row : m)
            for (auto& x : row)
                x = rng.rational(5);
        if (determinant(m) != 0)
            return ProjMap(m);
    }
}

LabeledPolygon2 mapped(const ProjMap& phi, const LabeledPolygon2& p)
{
    std::vector<ProjPoint> v;
    for (const auto& x : p.vertices())
        v.push_back(phi(x));
    return LabeledPolygon2(v, p.label_offset());
}

}  // namespace

TEST_CASE("labels")
{
    const LabeledPolygon2 p = hexagon();
    CHECK(p.n() == 3);
    CHECK(p.label(0) == 1);
    CHECK(p.label(5) == 11);
    CHECK(p.by_label(5) == pt(4, 2));
    CHECK_THROWS_AS(p.position_of(2), Error);
    CHECK_THROWS_AS(LabeledPolygon2({pt(0, 0), pt(1, 0), pt(1, 1)}), Error);
}

TEST_CASE("hexagon orbit")
{
    const LabeledPolygon2 q = pentagram_step(hexagon());
    const std::vector<ProjPoint> expected{pt(Rational(20, 7), Rational(10, 7)), pt(Rational(16, 7), Rational(8, 7)),
                                          pt(10, -4),
                                          pt(Rational(-1, 2), Rational(13, 2)),
                                          pt(Rational(5, 8), Rational(25, 8)),
                                          pt(Rational(4, 5), 4)};
    CHECK(q.vertices() == expected);
    CHECK(q.label(0) == 2);
    // Q_2 = P_1 P_5 meet P_11 P_3.
    CHECK(q.by_label(2) == pt(Rational(20, 7), Rational(10, 7)));
    const LabeledPolygon2 r = pentagram_step(q);
    for (const auto& v : r.vertices())
        CHECK(v == pt(Rational(5, 3), Rational(7, 3)));
}

TEST_CASE("pentagram step agrees with Cramer's rule")
{
    int compared = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const LabeledPolygon2 p = random_axis_aligned(4, seed, 20).polygon();
        const LabeledPolygon2 q = pentagram_step(p);
        if (!std::all_of(q.vertices().begin(), q.vertices().end(), [](const ProjPoint& v) { return v.is_finite(); }))
            continue;
        CHECK(plain(q) == oracle::pentagram_step(plain(p)));
        ++compared;
    }
    CHECK(compared >= 20);
}

TEST_CASE("unit square collapses to its center")
{
    const LabeledPolygon2 sq({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    const LabeledPolygon2 q = pentagram_step(sq);
    for (const auto& v : q.vertices())
        CHECK(v == pt(Rational(1, 2), Rational(1, 2)));
    const CollapseReport2 r = collapse_orbit(AxisAligned2({0, 1}, {0, 1}));
    CHECK(r.steps_taken == 1);
    CHECK(r.ok());
    CHECK(*r.collapse_point == pt(Rational(1, 2), Rational(1, 2)));
}

TEST_CASE("degenerate steps name the label")
{
    const LabeledPolygon2 p({pt(0, 0), pt(1, 0), pt(0, 0), pt(0, 1)});
    try {
        pentagram_step(p);
        FAIL("expected a degeneracy");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateJoin);
        CHECK(e.index().has_value());
    }
}

TEST_CASE("axis alignment")
{
    CHECK(is_axis_aligned(hexagon(), AlignMode::Affine));
    CHECK(is_axis_aligned(hexagon(), AlignMode::Projective));
    Rng rng(1);
    const LabeledPolygon2 image = mapped(random_projective(rng), hexagon());
    CHECK(is_axis_aligned(image, AlignMode::Projective));
    CHECK_FALSE(is_axis_aligned(image, AlignMode::Affine));
    const LabeledPolygon2 generic({pt(0, 0), pt(3, 1), pt(4, 4), pt(1, 5), pt(-2, 3), pt(-1, 1)});
    CHECK_FALSE(is_axis_aligned(generic, AlignMode::Projective));
    CHECK(axis_aligned_from(hexagon()).polygon() == hexagon());
    CHECK_THROWS_AS(axis_aligned_from(generic), Error);
}

TEST_CASE("center of mass")
{
    CHECK(center_of_mass_affine(hexagon()) == pt(Rational(5, 3), Rational(7, 3)));
    const LabeledPolygon2 sq({pt(-1, -1), pt(1, -1), pt(1, 1), pt(-1, 1)});
    CHECK(center_of_mass_affine(sq) == pt(0, 0));
    CHECK(center_of_mass_projective(hexagon()) == pt(Rational(5, 3), Rational(7, 3)));
    Rng rng(2);
    for (int i = 0; i < 10; ++i) {
        const ProjMap psi = random_projective(rng);
        const LabeledPolygon2 image = mapped(psi, hexagon());
        try {
            CHECK(center_of_mass_projective(image) == psi(pt(Rational(5, 3), Rational(7, 3))));
            // A different admissible normalization gives the same point.
            CHECK(center_of_mass_projective(image, ProjPoint(IntVec{1, 1, 1})) == center_of_mass_projective(image));
        } catch (const Error& e) {
            CHECK(is_degeneracy(e.kind()));
        }
    }
    CHECK_THROWS_AS(center_of_mass_affine(LabeledPolygon2({pt(0, 0), ProjPoint(IntVec{1, 0, 0}), pt(1, 1), pt(0, 1)})),
                    Error);
}

TEST_CASE("collapse of the hexagon")
{
    const CollapseReport2 r = collapse_orbit(AxisAligned2({0, 4, 1}, {0, 2, 5}));
    CHECK(r.ok());
    CHECK(r.steps_taken == 2);
    CHECK(*r.collapse_point == pt(Rational(5, 3), Rational(7, 3)));
    CHECK(r.two_line_stage.ok());
    // The lines of the two collinear triples of T(P) meet at the centroid.
    REQUIRE(r.two_line_stage.even_line);
    REQUIRE(r.two_line_stage.odd_line);
    CHECK(meet_lines(*r.two_line_stage.even_line, *r.two_line_stage.odd_line) == r.centroid);
}

TEST_CASE("collapse of random axis-aligned polygons")
{
    for (int n = 2; n <= 6; ++n)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const AxisAligned2 p = random_axis_aligned(n, seed, 4 * n);
            const CollapseReport2 r = collapse_orbit(p);
            CHECK(r.ok());
            CHECK(r.steps_taken == n - 1);
            std::vector<Rational> xs, ys;
            for (const auto& v : p.polygon().vertices()) {
                xs.push_back(v.affine(0));
                ys.push_back(v.affine(1));
            }
            CHECK(*r.collapse_point == pt(oracle::mean(xs), oracle::mean(ys)));
        }
    CHECK(collapse_orbit(random_axis_aligned(4, 7, 16)).ok());
}

TEST_CASE("projectively axis-aligned input collapses to the projective centroid")
{
    Rng rng(9);
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 5 && seed < 40; ++seed) {
        const AxisAligned2 p = random_axis_aligned(4, seed, 16);
        const ProjMap psi = random_projective(rng);
        try {
            const CollapseReport2 r = collapse_orbit(mapped(psi, p.polygon()));
            CHECK(r.ok());
            CHECK(r.centroid == psi(center_of_mass_affine(p.polygon())));
            ++checked;
        } catch (const Error& e) {
            CHECK(is_degeneracy(e.kind()));
        }
    }
    CHECK(checked == 5);
}

TEST_CASE("random generation")
{
    CHECK(random_axis_aligned(3, 1, 10).polygon() == random_axis_aligned(3, 1, 10).polygon());
    CHECK_FALSE(random_axis_aligned(3, 1, 10).polygon() == random_axis_aligned(3, 2, 10).polygon());
    CHECK_THROWS_AS(random_axis_aligned(1, 1, 10), Error);
    CHECK_THROWS_AS(random_axis_aligned(5, 1, 4), Error);
    Rng a(42), b(42);
    for (int i = 0; i < 20; ++i)
        CHECK(a.below(1000) == b.below(1000));
}
