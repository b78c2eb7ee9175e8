#include "oracles.hpp"

#include "pentlab/error.hpp"
#include "pentlab/frieze.hpp"
#include "pentlab/lower1d.hpp"

#include <doctest.h>

using namespace pentlab;

namespace {

ProjPoint s(const Rational& x)
{
    return ProjPoint::scalar(x);
}

}  // namespace

TEST_CASE("next_row examples")
{
    const Tuple1 inf = constant_tuple(ProjPoint::infinity(), 3);
    CHECK(next_row(inf, tuple_of({7, 5, -3}), 2) == tuple_of({6, 1, 2}));
    CHECK(next_row(tuple_of({7, 5, -3}), tuple_of({6, 1, 2}), 3) ==
          tuple_of({Rational(16, 3), Rational(23, 3), Rational(13, 9)}));
    CHECK(next_row(tuple_of({Rational(34, 9), Rational(11, 6), Rational(2, 3)}), tuple_of({3, 3, 3}), 6) ==
          tuple_of({3, 3, 3}));
}

TEST_CASE("the worked table")
{
    const FriezePattern p = build_pattern(tuple_of({7, 5, -3}));
    REQUIRE(p.rows.size() == 7);
    CHECK(p.rows[0] == constant_tuple(ProjPoint::infinity(), 3));
    CHECK(p.rows[2] == tuple_of({6, 1, 2}));
    CHECK(p.rows[3] == tuple_of({Rational(16, 3), Rational(23, 3), Rational(13, 9)}));
    CHECK(p.rows[4] == tuple_of({Rational(34, 9), Rational(11, 6), Rational(2, 3)}));
    CHECK(p.rows[5] == tuple_of({3, 3, 3}));
    CHECK(p.rows[6] == tuple_of({3, 3, 3}));
    const T005Report r = verify_T005(tuple_of({7, 5, -3}));
    CHECK(r.ok());
    CHECK(r.mean == s(3));
    CHECK(r.diamonds.checked == 15);
}

TEST_CASE("rows follow the affine closed form")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const FriezePattern p = build_pattern(random_a1(5, seed, 30));
        const int n = p.n;
        for (std::size_t i = 2; i < p.rows.size(); ++i)
            for (int j = 0; j < n; ++j) {
                const ProjPoint& left = i % 2 == 0 ? p.rows[i - 1][j] : p.rows[i - 1][(j + n - 1) % n];
                const ProjPoint& right = i % 2 == 0 ? p.rows[i - 1][(j + 1) % n] : p.rows[i - 1][j];
                const ProjPoint& top = p.rows[i - 2][j];
                if (!left.is_finite() || !right.is_finite() || !p.rows[i][j].is_finite())
                    continue;
                const Rational expected = top.is_finite()
                                              ? oracle::harmonic4(top.affine(0), left.affine(0), right.affine(0))
                                              : oracle::harmonic4_inf(left.affine(0), right.affine(0));
                CHECK(p.rows[i][j].affine(0) == expected);
            }
    }
}

TEST_CASE("collapse to the mean for odd n")
{
    for (int n : {3, 5, 7})
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Tuple1 a1 = random_a1(n, seed, 30);
            const T005Report r = verify_T005(a1);
            CHECK(r.ok());
            CHECK(r.sums_agree);
            std::vector<Rational> xs;
            for (const auto& x : a1)
                xs.push_back(x.affine(0));
            CHECK(r.mean == s(oracle::mean(xs)));
        }
}

TEST_CASE("even n stops at the last row")
{
    // The even rows start from the midpoint row, whose alternating sum vanishes; the constant
    // rows arrive one row early and the final diamond is 0/0.
    try {
        build_pattern(random_a1(4, 1, 30));
        FAIL("expected ZeroDenominator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroDenominator);
        CHECK(e.step() == 8);
    }
}

TEST_CASE("constant first row is degenerate")
{
    CHECK_THROWS_AS(build_pattern(tuple_of({2, 2, 2})), Error);
}

TEST_CASE("embedding lemmas")
{
    const EmbeddingReport r = verify_embedding(tuple_of({7, 5, -3}));
    CHECK(r.ok());
    const Tuple1 inf = constant_tuple(ProjPoint::infinity(), 3);
    const PairState1D even = t1_step(PairState1D(inf, tuple_of({6, 1, 2})));
    CHECK(even.y() == tuple_of({Rational(34, 9), Rational(11, 6), Rational(2, 3)}));
    const PairState1D odd = t1_step(PairState1D(inf, tuple_of({7, 5, -3})));
    CHECK(odd.y() == tuple_of({Rational(16, 3), Rational(23, 3), Rational(13, 9)}));
    for (int n : {3, 5, 7})
        for (std::uint64_t seed = 0; seed < 5; ++seed)
            CHECK(verify_embedding(random_a1(n, seed, 30)).ok());
}

TEST_CASE("closed-form oracles")
{
    const ClosedFormReport r = closed_form_oracles(1, 50);
    CHECK(r.ok());
    CHECK(r.w2_x3_reading == r.trials);
    // Y = Y' on the worked row.
    CHECK(solve_harmonic6(ProjPoint::infinity(), s(5), s(7), s(5), s(-3)) == s(Rational(23, 3)));
    CHECK(solve_harmonic4(s(5), s(6), s(1)) == s(Rational(23, 3)));
    CHECK(oracle::harmonic6_inf(5, 7, -3) == Rational(23, 3));
}

TEST_CASE("staggered rendering")
{
    const std::string table = render_table(build_pattern(tuple_of({7, 5, -3})));
    CHECK(table.find("A_0") != std::string::npos);
    CHECK(table.find("16/3") != std::string::npos);
    CHECK(std::count(table.begin(), table.end(), '\n') == 7);
}
