#include "pentlab/frieze.hpp"

#include "pentlab/error.hpp"
#include "pentlab/pentagram2d.hpp"
#include "pentlab/random.hpp"

#include <algorithm>

namespace pentlab {

namespace {

bool constant(const Tuple1& row)
{
    return std::all_of(row.begin(), row.end(), [&](const ProjPoint& p) { return p == row.front(); });
}

// c = (a(b+d) - 2bd) / (2a - b - d) for finite a, b, d.
bool matches_closed_form(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d)
{
    if (!a.is_finite() || !b.is_finite() || !c.is_finite() || !d.is_finite())
        return false;
    const Rational x = a.affine(0);
    const Rational y = b.affine(0);
    const Rational z = d.affine(0);
    const Rational den = 2 * x - y - z;
    return den != 0 && c.affine(0) == Rational((x * (y + z) - 2 * y * z) / den);
}

}  // namespace

Tuple1 next_row(const Tuple1& above, const Tuple1& current, int parity)
{
    const std::size_t n = current.size();
    if (above.size() != n || n < 3)
        throw Error(ErrorKind::DimensionMismatch, "frieze rows need equal length n >= 3");
    Tuple1 out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const ProjPoint& left = parity % 2 == 0 ? current[j] : current[(j + n - 1) % n];
        const ProjPoint& right = parity % 2 == 0 ? current[(j + 1) % n] : current[j];
        try {
            out.push_back(solve_harmonic4(above[j], left, right));
        } catch (const Error& e) {
            throw Error(e.kind(), "frieze cell", static_cast<long>(j));
        }
    }
    return out;
}

FriezePattern build_pattern(const Tuple1& a1)
{
    const int n = static_cast<int>(a1.size());
    if (n < 3)
        throw Error(ErrorKind::InvalidArgument, "frieze rows need n >= 3");
    for (const auto& p : a1)
        if (p.dim() != 1)
            throw Error(ErrorKind::DimensionMismatch, "frieze entries must lie in P^1");
    FriezePattern p{n, {constant_tuple(ProjPoint::infinity(), n), a1}};
    for (int i = 2; i <= 2 * n; ++i) {
        try {
            p.rows.push_back(next_row(p.rows[i - 2], p.rows[i - 1], i));
        } catch (const Error& e) {
            throw e.with_step(i);
        }
    }
    return p;
}

DiamondReport verify_diamonds(const FriezePattern& p)
{
    DiamondReport r;
    const int n = p.n;
    for (std::size_t i = 2; i < p.rows.size(); ++i) {
        const Tuple1& top = p.rows[i - 2];
        const Tuple1& mid = p.rows[i - 1];
        const Tuple1& bottom = p.rows[i];
        for (int j = 0; j < n; ++j) {
            const ProjPoint& left = i % 2 == 0 ? mid[j] : mid[(j + n - 1) % n];
            const ProjPoint& right = i % 2 == 0 ? mid[(j + 1) % n] : mid[j];
            ++r.checked;
            try {
                if (!is_minus_one(cross_ratio4(top[j], left, bottom[j], right)))
                    ++r.failures;
            } catch (const Error&) {
                ++r.limit_cells;
                if (!matches_closed_form(top[j], left, bottom[j], right))
                    ++r.failures;
            }
        }
    }
    return r;
}

T005Report verify_T005(const Tuple1& a1)
{
    T005Report r{.pattern = build_pattern(a1), .mean = ProjPoint::infinity()};
    const int n = r.pattern.n;
    Vec values;
    for (const auto& p : a1) {
        if (!p.is_finite())
            throw Error(ErrorKind::InfiniteVertex, "A_1 must be finite");
        values.push_back(p.affine(0));
    }
    r.mean = ProjPoint::scalar(mean(values));
    const Tuple1& pen = r.pattern.rows[2 * n - 1];
    const Tuple1& last = r.pattern.rows[2 * n];
    r.penultimate_constant = constant(pen);
    r.last_constant = constant(last);
    // Odd entry j (column 2j+1) sits one column left of even entry j (column 2j+2).
    r.shift_identity = pen == last;
    r.matches_mean = r.penultimate_constant && r.last_constant && pen.front() == r.mean && last.front() == r.mean;
    Rational s1 = 0;
    Rational s2 = 0;
    bool finite = true;
    for (int j = 0; j < n; ++j) {
        finite = finite && r.pattern.rows[1][j].is_finite() && r.pattern.rows[2][j].is_finite();
        if (!finite)
            break;
        s1 += r.pattern.rows[1][j].affine(0);
        s2 += r.pattern.rows[2][j].affine(0);
    }
    r.sums_agree = finite && s1 == s2;
    r.diamonds = verify_diamonds(r.pattern);
    return r;
}

bool EmbeddingReport::ok() const
{
    auto all = [](const auto& v) {
        return !v.empty() && std::all_of(v.begin(), v.end(), [](const auto& e) { return e.second; });
    };
    return all(even_relations) && all(odd_relations);
}

EmbeddingReport verify_embedding(const Tuple1& a1)
{
    EmbeddingReport r{.pattern = build_pattern(a1)};
    const int n = r.pattern.n;
    const auto& rows = r.pattern.rows;
    const Tuple1 inf = constant_tuple(ProjPoint::infinity(), n);
    auto check = [&](const Tuple1& before, int i) {
        try {
            PairState1D next = t1_step(PairState1D(before, rows[i]));
            return next.x() == rows[i] && next.y() == rows[i + 2];
        } catch (const Error&) {
            return false;
        }
    };
    for (int i = 2; i + 2 <= 2 * n; i += 2)
        r.even_relations.emplace_back(i, check(rows[i - 2], i));
    for (int i = 1; i + 2 <= 2 * n - 1; i += 2)
        r.odd_relations.emplace_back(i, check(i == 1 ? inf : rows[i - 2], i));
    return r;
}

ClosedFormReport closed_form_oracles(std::uint64_t seed, int trials, std::int64_t range)
{
    ClosedFormReport r;
    Rng rng(seed);
    const ProjPoint inf = ProjPoint::infinity();
    auto pt = [](const Rational& q) { return ProjPoint::scalar(q); };
    int attempts = 0;
    while (r.trials < trials) {
        if (++attempts > 100 * trials + 100)
            break;
        const Rational x1 = rng.rational(range);
        const Rational x3 = rng.rational(range);
        const Rational x5 = rng.rational(range);
        const Rational y0 = rng.rational(range);
        const Rational y4 = rng.rational(range);
        try {
            // Diamond chase below V_2 = inf.
            const ProjPoint y2 = solve_harmonic4(inf, pt(x1), pt(x3));
            const ProjPoint z1 = solve_harmonic4(pt(x1), pt(y0), y2);
            const ProjPoint z3 = solve_harmonic4(pt(x3), y2, pt(y4));
            const ProjPoint w2 = solve_harmonic4(y2, z1, z3);
            const bool six = is_minus_one(cross_ratio6(inf, y2, pt(y0), w2, y2, pt(y4)));

            auto printed = [&](const Rational& s) -> std::optional<ProjPoint> {
                Rational den = 4 * (s - y0 - y4);
                if (den == 0)
                    return std::nullopt;
                return pt(Rational((s * s - 4 * y0 * y4) / den));
            };
            const auto as_x3 = printed(x1 + x3);
            const auto as_y2 = y2.is_finite() ? printed(x1 + y2.affine(0)) : std::nullopt;

            // Y from the lower map, Y' from the frieze, and the closed form.
            const ProjPoint y = solve_harmonic6(inf, pt(x3), pt(x1), pt(x3), pt(x5));
            const ProjPoint m1 = solve_harmonic4(inf, pt(x1), pt(x3));
            const ProjPoint m2 = solve_harmonic4(inf, pt(x3), pt(x5));
            const ProjPoint y_prime = solve_harmonic4(pt(x3), m1, m2);
            const Rational den = 2 * x3 - x1 - x5;
            const std::optional<ProjPoint> closed =
                den == 0 ? std::nullopt : std::optional<ProjPoint>(pt(Rational((x3 * x3 - x1 * x5) / den)));

            ++r.trials;
            r.six_point += six ? 1 : 0;
            r.w2_x3_reading += as_x3 && *as_x3 == w2 ? 1 : 0;
            r.w2_y2_reading += as_y2 && *as_y2 == w2 ? 1 : 0;
            r.y_equals_y_prime += closed && y == y_prime && y == *closed ? 1 : 0;
        } catch (const Error&) {
            ++r.skipped;
        }
    }
    return r;
}

std::string render_table(const FriezePattern& p)
{
    std::size_t width = 1;
    for (const auto& row : p.rows)
        for (const auto& x : row)
            width = std::max(width, x.to_string().size());
    width += 1;
    std::string out;
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        std::vector<std::string> cells(2 * p.n, std::string(width, ' '));
        for (int j = 0; j < p.n; ++j) {
            std::string s = p.rows[i][j].to_string();
            cells[FriezePattern::column(static_cast<int>(i), j) - 1] = std::string(width - s.size(), ' ') + s;
        }
        std::string line = "A_" + std::to_string(i);
        line.resize(6, ' ');
        for (const auto& c : cells)
            line += c;
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line + "\n";
    }
    return out;
}

Tuple1 random_a1(int n, std::uint64_t seed, std::int64_t range)
{
    if (n < 3)
        throw Error(ErrorKind::InvalidArgument, "frieze rows need n >= 3");
    Rng rng(seed);
    return tuple_of(distinct_rationals(rng, n, range));
}

}  // namespace pentlab
