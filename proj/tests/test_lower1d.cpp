#include "oracles.hpp"

#include "pentlab/error.hpp"
#include "pentlab/lower1d.hpp"

#include <doctest.h>

using namespace pentlab;

namespace {

ProjPoint s(const Rational& x)
{
    return ProjPoint::scalar(x);
}

Tuple1 inf_row(int n)
{
    return constant_tuple(ProjPoint::infinity(), n);
}

std::vector<Rational> values(const Tuple1& t)
{
    std::vector<Rational> out;
    for (const auto& p : t)
        out.push_back(p.affine(0));
    return out;
}

}  // namespace

TEST_CASE("worked example B = (1, 2, 6)")
{
    const PairState1D s0(inf_row(3), tuple_of({1, 2, 6}));
    const PairState1D s1 = t1_step(s0);
    CHECK(s1.x() == tuple_of({1, 2, 6}));
    CHECK(s1.y() == tuple_of({Rational(11, 6), Rational(2, 3), Rational(34, 9)}));
    const PairState1D s2 = t1_step(s1);
    CHECK(s2.y() == tuple_of({3, 3, 3}));
    const T008Report r = verify_T008(AxisAlignedPair1(tuple_of({1, 2, 6})));
    CHECK(r.ok());
    CHECK(r.steps_taken == 2);
    CHECK(r.mean == s(3));
}

TEST_CASE("frieze-compatible example")
{
    const PairState1D s1 = t1_step(PairState1D(inf_row(3), tuple_of({7, 5, -3})));
    CHECK(s1.y() == tuple_of({Rational(16, 3), Rational(23, 3), Rational(13, 9)}));
    CHECK(verify_T008(AxisAlignedPair1(tuple_of({7, 5, -3}))).ok());
}

TEST_CASE("lower step agrees with the affine closed forms")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const AxisAlignedPair1 b = random_b(5, seed, 20);
        const PairState1D s1 = t1_step(b.state());
        CHECK(values(s1.y()) == oracle::t1_step_inf(values(b.b())));
        try {
            const PairState1D s2 = t1_step(s1);
            CHECK(values(s2.y()) == oracle::t1_step(values(s1.x()), values(s1.y())));
        } catch (const Error& e) {
            CHECK(is_degeneracy(e.kind()));
        }
    }
}

TEST_CASE("translation and scaling equivariance")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const AxisAlignedPair1 b = random_b(4, seed, 20);
        const PairState1D s1 = t1_step(b.state());
        const Rational u = Rational(3, 2), v = -2;
        auto sigma = [&](const Tuple1& t) {
            Tuple1 out;
            for (const auto& p : t)
                out.push_back(p.is_finite() ? s(u * p.affine(0) + v) : p);
            return out;
        };
        const PairState1D moved = t1_step(PairState1D(sigma(b.state().x()), sigma(b.state().y())));
        CHECK(moved.y() == sigma(s1.y()));
    }
}

TEST_CASE("center of mass in P^1")
{
    CHECK(center_of_mass_p1(inf_row(3), tuple_of({1, 2, 6})) == s(3));
    CHECK(center_of_mass_p1(inf_row(3), tuple_of({7, 5, -3})) == s(3));
    CHECK(center_of_mass_p1(constant_tuple(s(0), 3), tuple_of({1, 1, 1})) == s(1));
    // Independent of the Moebius map chosen to send A_1 to infinity.
    const Tuple1 a = constant_tuple(s(2), 3);
    const Tuple1 b = tuple_of({5, -1, 7});
    CHECK(center_of_mass_p1(a, b, ProjMap::mobius(0, 1, 1, -2)) ==
          center_of_mass_p1(a, b, ProjMap::mobius(3, 1, 1, -2)));
    CHECK_THROWS_AS(center_of_mass_p1(tuple_of({1, 2, 3}), b), Error);
    CHECK_THROWS_AS(center_of_mass_p1(a, tuple_of({2, 1, 3})), Error);
}

TEST_CASE("random collapse to the mean")
{
    for (int n = 3; n <= 6; ++n)
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            const AxisAlignedPair1 b = random_b(n, seed, 20);
            const T008Report r = verify_T008(b);
            CHECK(r.ok());
            CHECK(r.steps_taken == n - 1);
            CHECK(r.mean == s(oracle::mean(values(b.b()))));
        }
}

TEST_CASE("state validation")
{
    CHECK_THROWS_AS(PairState1D(tuple_of({1, 2, 3}), tuple_of({1, 5, 6})), Error);
    CHECK_THROWS_AS(PairState1D(tuple_of({1, 2}), tuple_of({3, 4})), Error);
    CHECK_THROWS_AS(AxisAlignedPair1(tuple_of({2, 2, 2})), Error);
    CHECK(random_b(4, 3, 20).b() == random_b(4, 3, 20).b());
}
