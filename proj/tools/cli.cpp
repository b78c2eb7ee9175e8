#include "cli.hpp"

#include "pentlab/error.hpp"
#include "pentlab/io.hpp"
#include "pentlab/lifting.hpp"
#include "pentlab/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace pentlab {

namespace {

using json = nlohmann::ordered_json;

enum Exit { Pass = 0, Fail = 1, Degenerate = 2, Usage = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::int64_t default_range(int n)
{
    return std::max<std::int64_t>(24, 4 * static_cast<std::int64_t>(n));
}

Tuple1 parse_list(const std::string& text)
{
    Tuple1 out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item == "inf" ? ProjPoint::infinity() : ProjPoint::scalar(parse_rational(item)));
    return out;
}

std::string vec_text(const Vec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

std::string row_text(const Tuple1& row)
{
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i)
        s += (i ? " " : "") + row[i].to_string();
    return s;
}

template <class Points>
std::optional<ProjPoint> common_point(const Points& pts)
{
    if (pts.empty() || !std::all_of(pts.begin(), pts.end(), [&](const ProjPoint& p) { return p == pts.front(); }))
        return std::nullopt;
    return pts.front();
}

std::vector<Vec> finite_plane_points(const std::vector<ProjPoint>& pts)
{
    std::vector<Vec> out;
    for (const auto& p : pts)
        if (p.is_finite()) {
            Vec a = p.affine();
            out.push_back(Vec{a[0], a[1]});
        }
    return out;
}

int thread_cap()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PENTAGRAM_LAB_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1)
                n = std::min(n, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
        }
    }
    return static_cast<int>(n);
}

// ---------------------------------------------------------------- verify

struct TrialResult {
    long index = 0;
    std::optional<std::uint64_t> seed;
    bool pass = false;
    std::string kind;  // "", "mismatch" or "degenerate"
    std::string message;
    json values = json::object();
};

using Trial = std::function<TrialResult(std::optional<std::uint64_t>)>;

TrialResult run_one(const Trial& trial, long index, std::optional<std::uint64_t> seed)
{
    TrialResult r;
    try {
        r = trial(seed);
        if (!r.pass && r.kind.empty())
            r.kind = "mismatch";
    } catch (const Error& e) {
        if (!is_degeneracy(e.kind()))
            throw;
        r.pass = false;
        r.kind = "degenerate";
        r.message = e.what();
    }
    r.index = index;
    r.seed = seed;
    return r;
}

std::vector<TrialResult> run_trials(const Trial& trial, int trials, std::uint64_t seed)
{
    std::vector<std::optional<TrialResult>> slots(static_cast<std::size_t>(trials));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int i = next++; i < trials; i = next++) {
            try {
                slots[i] = run_one(trial, i, seed + static_cast<std::uint64_t>(i));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const int count = std::min(thread_cap(), trials);
    std::vector<std::jthread> pool;
    for (int t = 1; t < count; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
    std::vector<TrialResult> out;
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

TrialResult result(bool pass, json values, std::string message = {})
{
    TrialResult r;
    r.pass = pass;
    r.values = std::move(values);
    r.message = std::move(message);
    return r;
}

LiftSource lift_source(const Instance& inst)
{
    if (const auto* p = std::get_if<LabeledPolygon2>(&inst))
        return axis_aligned_from(*p);
    if (const auto* p = std::get_if<PolygonM>(&inst))
        return axis_aligned_from(*p);
    if (const auto* p = std::get_if<MirrorPair>(&inst))
        return AxisAlignedMirrorPair(*p);
    throw UsageError("lifting needs a P2, Pm or P2-mirror instance");
}

template <class T>
const T& expect(const Instance& inst, const char* space)
{
    if (const auto* p = std::get_if<T>(&inst))
        return *p;
    throw UsageError(std::string("this theorem needs a ") + space + " instance");
}

AxisAlignedPair1 pair_from(const PairState1D& s)
{
    for (const auto& x : s.x())
        if (!x.is_infinite())
            throw Error(ErrorKind::NotAxisAligned, "X must be (inf, ..., inf)");
    return AxisAlignedPair1(s.y());
}

json mating_values(const MatingOrbitReport& r)
{
    json finals = json::array();
    for (const auto& seq : r.final_sequences) {
        json tags = json::array();
        for (const auto& t : seq.tags)
            tags.push_back(t.to_string());
        finals.push_back(tags);
    }
    return {{"variant", to_string(r.variant)},
            {"stages", r.stages},
            {"windows", r.windows},
            {"points_checked", r.points_checked},
            {"unions_checked", r.unions_checked},
            {"final_tags", finals},
            {"mismatches", r.mismatches}};
}

json lifting_values(const LiftingReport& r)
{
    return {{"variant", to_string(r.variant)},
            {"general_position", r.general_position.ok},
            {"centroids_coincide", r.centroid.coincide},
            {"projected_centroid", vec_text(r.centroid.projected)},
            {"expected_centroid", vec_text(r.centroid.expected)},
            {"fully_sliced", r.fully_sliced.ok()},
            {"slices_checked", r.fully_sliced.slices_checked},
            {"prism_comparisons", r.fully_sliced.prism_comparisons},
            {"skeleton_recurrence", r.skeleton_recurrence},
            {"collapse_line", r.collapse_line.projected_line.to_string()},
            {"collapse_line_ok", r.collapse_line.ok()}};
}

struct VerifyOptions {
    std::string theorem;
    std::string input;
    bool random = false;
    int trials = 1;
    std::uint64_t seed = 0;
    int n = 3;
    int m = 3;
    std::int64_t range = 0;
    std::string a1;
    std::string map = "pent2d";
    bool full = false;
    bool json_out = false;
};

LiftSource random_lift_source(const VerifyOptions& o, std::uint64_t seed, std::int64_t range)
{
    if (o.map == "pent2d")
        return random_axis_aligned(o.n, seed, range);
    if (o.map == "corrugated")
        return random_axis_aligned_m(o.m, o.n, seed, range);
    if (o.map == "mirror")
        return random_mirror_pair(o.n, seed, range);
    throw UsageError("--map must be pent2d, corrugated or mirror for lifting theorems");
}

// Builds the trial for one theorem; `inst` is set for file input, `a1` for --a1.
Trial make_trial(const VerifyOptions& o, const std::optional<Instance>& inst, const std::optional<Tuple1>& a1)
{
    const std::int64_t range = o.range > 0 ? o.range : default_range(std::max(o.n, o.m));
    const std::string& th = o.theorem;
    if (th == "T002") {
        return [=](std::optional<std::uint64_t> seed) {
            const CollapseReport2 r = seed ? collapse_orbit(random_axis_aligned(o.n, *seed, range))
                                           : collapse_orbit(expect<LabeledPolygon2>(*inst, "P2"));
            return result(r.ok(), {{"steps", r.steps_taken},
                                   {"collapse_point", r.collapse_point ? r.collapse_point->to_string() : "none"},
                                   {"centroid", r.centroid.to_string()},
                                   {"two_lines", r.two_line_stage.ok()}});
        };
    }
    if (th == "T003") {
        return [=](std::optional<std::uint64_t> seed) {
            const CollapseReportM r = seed ? collapse_orbit_m(random_axis_aligned_m(o.m, o.n, *seed, range))
                                           : collapse_orbit_m(axis_aligned_from(expect<PolygonM>(*inst, "Pm")));
            const bool certified = std::all_of(r.corrugated_certificates.begin(), r.corrugated_certificates.end(),
                                               [](bool b) { return b; });
            return result(r.ok(), {{"steps", r.steps_taken},
                                   {"collapse_point", r.collapse_point ? r.collapse_point->to_string() : "none"},
                                   {"centroid", r.centroid.to_string()},
                                   {"corrugated", certified}});
        };
    }
    if (th == "T005") {
        return [=](std::optional<std::uint64_t> seed) {
            Tuple1 row = seed ? random_a1(o.n, *seed, range)
                         : a1 ? *a1
                              : pair_from(expect<PairState1D>(*inst, "P1")).b();
            const T005Report r = verify_T005(row);
            const Tuple1& last = r.pattern.rows.back();
            return result(r.ok(), {{"rows", r.pattern.rows.size()},
                                   {"mean", r.mean.to_string()},
                                   {"final_value", common_point(last) ? common_point(last)->to_string() : "none"},
                                   {"shift_identity", r.shift_identity},
                                   {"diamonds", r.diamonds.checked}});
        };
    }
    if (th == "T007") {
        return [=](std::optional<std::uint64_t> seed) {
            const T007Report r = seed ? verify_T007(random_mirror_pair(o.n, *seed, range))
                                      : verify_T007(AxisAlignedMirrorPair(expect<MirrorPair>(*inst, "P2-mirror")));
            return result(r.ok(), {{"steps", r.steps_taken},
                                   {"collapse_point", r.collapse_point ? r.collapse_point->to_string() : "none"},
                                   {"expected", r.expected.to_string()},
                                   {"mean", to_string(r.mean)},
                                   {"roundtrips", r.roundtrips}});
        };
    }
    if (th == "T008") {
        return [=](std::optional<std::uint64_t> seed) {
            const T008Report r = seed ? verify_T008(random_b(o.n, *seed, range))
                                      : verify_T008(pair_from(expect<PairState1D>(*inst, "P1")));
            return result(r.ok(), {{"steps", r.steps_taken},
                                   {"final_row", row_text(r.final_row)},
                                   {"mean", r.mean.to_string()}});
        };
    }
    if (th == "L2-mating") {
        return [=](std::optional<std::uint64_t> seed) {
            const LiftSource src = seed ? random_lift_source(o, *seed, range) : lift_source(*inst);
            const MatingOrbitReport r =
                mating_orbit_check(src, default_variant(src), {o.full, seed ? *seed : o.seed});
            return result(r.ok(), mating_values(r), r.mismatches.empty() ? "" : r.mismatches.front());
        };
    }
    if (th == "L2-lifting") {
        return [=](std::optional<std::uint64_t> seed) {
            const LiftSource src = seed ? random_lift_source(o, *seed, range) : lift_source(*inst);
            const LiftingReport r = canonical_lifting_report(src);
            return result(r.ok(), lifting_values(r),
                          r.fully_sliced.failures.empty() ? "" : r.fully_sliced.failures.front());
        };
    }
    if (th == "L4-correspondence") {
        return [=](std::optional<std::uint64_t> seed) {
            const MirrorPair p =
                seed ? random_mirror_pair(o.n, *seed, range).pair() : expect<MirrorPair>(*inst, "P2-mirror");
            const CorrespondenceReport r = verify_correspondence(p, p.n() - 1);
            return result(r.ok(), {{"steps", r.steps}, {"step_matches", r.step_matches}});
        };
    }
    throw UsageError("unknown theorem " + th);
}

int cmd_verify(const VerifyOptions& o, std::ostream& out)
{
    const int sources = (o.random ? 1 : 0) + (o.input.empty() ? 0 : 1) + (o.a1.empty() ? 0 : 1);
    if (sources != 1)
        throw UsageError("give exactly one of IN, --random or --a1");
    if (!o.a1.empty() && o.theorem != "T005")
        throw UsageError("--a1 applies to T005 only");
    if (o.trials < 1)
        throw UsageError("--trials must be positive");
    std::optional<Instance> inst;
    std::optional<Tuple1> a1;
    if (!o.input.empty())
        inst = read_instance(o.input);
    if (!o.a1.empty())
        a1 = parse_list(o.a1);

    const Trial trial = make_trial(o, inst, a1);
    std::vector<TrialResult> results =
        o.random ? run_trials(trial, o.trials, o.seed) : std::vector<TrialResult>{run_one(trial, 0, std::nullopt)};

    int passes = 0;
    bool mismatch = false;
    bool degenerate = false;
    json failures = json::array();
    json entries = json::array();
    for (const auto& r : results) {
        passes += r.pass ? 1 : 0;
        mismatch = mismatch || r.kind == "mismatch";
        degenerate = degenerate || r.kind == "degenerate";
        json seed = r.seed ? json(*r.seed) : json(nullptr);
        if (!r.pass)
            failures.push_back({{"index", r.index}, {"seed", seed}, {"kind", r.kind}, {"message", r.message}});
        entries.push_back({{"index", r.index}, {"seed", seed}, {"pass", r.pass}, {"values", r.values}});
    }
    const int trials = static_cast<int>(results.size());
    if (o.json_out) {
        json report{{"theorem", o.theorem},
                    {"trials", trials},
                    {"passes", passes},
                    {"failures", failures},
                    {"results", entries}};
        out << report.dump(2) << "\n";
    } else {
        out << "theorem " << o.theorem << ": trials=" << trials << " passes=" << passes
            << " failures=" << trials - passes << "\n";
        for (const auto& r : results) {
            out << "trial " << r.index;
            if (r.seed)
                out << " seed " << *r.seed;
            out << ": " << (r.pass ? "pass" : r.kind);
            for (const auto& [key, value] : r.values.items())
                out << " " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
            if (!r.message.empty())
                out << " (" << r.message << ")";
            out << "\n";
        }
    }
    return mismatch ? Fail : degenerate ? Degenerate : Pass;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
    std::string map;
    int n = 3;
    int m = 3;
    std::uint64_t seed = 0;
    std::int64_t range = 0;
    std::string out;
};

int cmd_gen(const GenOptions& o, std::ostream& out)
{
    const std::int64_t range = o.range > 0 ? o.range : default_range(std::max(o.n, o.m));
    std::optional<Instance> inst;
    if (o.map == "pent2d")
        inst = random_axis_aligned(o.n, o.seed, range).polygon();
    else if (o.map == "corrugated")
        inst = random_axis_aligned_m(o.m, o.n, o.seed, range).polygon();
    else if (o.map == "lower")
        inst = random_b(o.n, o.seed, range).state();
    else if (o.map == "mirror")
        inst = random_mirror_pair(o.n, o.seed, range).pair();
    else
        throw UsageError("--map must be pent2d, corrugated, lower or mirror");
    if (o.out.empty())
        out << serialize_instance(*inst);
    else
        write_instance(o.out, *inst);
    return Pass;
}

// ---------------------------------------------------------------- iterate

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path);
    if (!f)
        throw UsageError("cannot write " + path);
    f << text;
}

// Iterates `step`, printing each state; returns the states produced before any degeneracy.
template <class State, class Step, class Print>
std::vector<State> run_orbit(const State& start, int steps, Step step, Print print, std::ostream& out)
{
    std::vector<State> orbit{start};
    print(0, start);
    for (int k = 1; k <= steps; ++k) {
        try {
            orbit.push_back(step(orbit.back()));
        } catch (const Error& e) {
            out.flush();
            throw e.with_step(k);
        }
        print(k, orbit.back());
    }
    return orbit;
}

void print_vertices(std::ostream& out, const std::vector<ProjPoint>& pts, const std::function<long(long)>& label)
{
    for (std::size_t t = 0; t < pts.size(); ++t)
        out << "  P_" << label(static_cast<long>(t)) << " = " << pts[t].to_string() << "\n";
}

void polygon_scene(SvgScene& scene, const std::vector<std::vector<ProjPoint>>& orbit, long skip)
{
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        const auto& pts = orbit[i];
        scene.polygons.push_back(finite_plane_points(pts));
        if (i + 1 < orbit.size()) {
            const long size = static_cast<long>(pts.size());
            for (long t = 0; t < size; ++t) {
                const ProjPoint& a = pts[t];
                const ProjPoint& b = pts[(t + skip) % size];
                if (a.is_finite() && b.is_finite() && !(a == b))
                    scene.diagonals.push_back({finite_plane_points({a}).front(), finite_plane_points({b}).front()});
            }
        }
    }
    if (auto c = common_point(orbit.back()); c && c->is_finite())
        scene.marker = finite_plane_points({*c}).front();
}

int cmd_iterate(const std::string& input, int steps, const std::string& svg_path, std::ostream& out)
{
    if (steps < 0)
        throw UsageError("--steps must be non-negative");
    const Instance inst = read_instance(input);
    SvgScene scene;
    std::optional<ProjPoint> final_point;
    std::string final_text;

    if (const auto* p = std::get_if<LabeledPolygon2>(&inst)) {
        auto orbit = run_orbit(
            *p, steps, pentagram_step,
            [&](int k, const LabeledPolygon2& q) {
                out << "step " << k << ":\n";
                print_vertices(out, q.vertices(), [&](long t) { return q.label(t); });
            },
            out);
        std::vector<std::vector<ProjPoint>> pts;
        for (const auto& q : orbit)
            pts.push_back(q.vertices());
        polygon_scene(scene, pts, 2);
        final_point = common_point(orbit.back().vertices());
        final_text = "all vertices = ";
    } else if (const auto* p = std::get_if<PolygonM>(&inst)) {
        auto orbit = run_orbit(
            *p, steps, corrugated_step,
            [&](int k, const PolygonM& q) {
                out << "step " << k << ":\n";
                print_vertices(out, q.vertices(), [&](long t) { return q.label(t); });
            },
            out);
        std::vector<std::vector<ProjPoint>> pts;
        for (const auto& q : orbit)
            pts.push_back(q.vertices());
        polygon_scene(scene, pts, p->m());
        final_point = common_point(orbit.back().vertices());
        final_text = "all vertices = ";
    } else if (const auto* p = std::get_if<PairState1D>(&inst)) {
        auto orbit = run_orbit(
            *p, steps, t1_step, [&](int k, const PairState1D& s) { out << "step " << k << ": " << row_text(s.y()) << "\n"; },
            out);
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            const Rational level = -Rational(static_cast<long>(k));
            for (const auto& y : orbit[k].y())
                if (y.is_finite())
                    scene.dots.push_back({y.affine(0), level});
        }
        final_point = common_point(orbit.back().y());
        if (final_point && final_point->is_finite())
            scene.marker = Vec{final_point->affine(0), -Rational(static_cast<long>(orbit.size() - 1))};
        final_text = "all entries = ";
    } else {
        const auto& pair = std::get<MirrorPair>(inst);
        auto orbit = run_orbit(
            pair, steps, mp_step,
            [&](int k, const MirrorPair& q) {
                out << "step " << k << ":\n";
                print_vertices(out, q.points(), [](long t) { return t + 1; });
            },
            out);
        for (const auto& q : orbit) {
            scene.polygons.push_back(finite_plane_points(q.points()));
            scene.polygons.push_back(finite_plane_points(q.reflected()));
        }
        final_point = common_point(orbit.back().points());
        if (final_point && final_point->is_finite())
            scene.marker = finite_plane_points({*final_point}).front();
        final_text = "all points = ";
    }
    if (final_point)
        out << final_text << final_point->to_string() << "\n";

    if (!svg_path.empty()) {
        if (std::holds_alternative<MirrorPair>(inst) || std::holds_alternative<PairState1D>(inst)) {
            // Reference axis through the drawing.
            Rational lo = 0, hi = 0;
            auto widen = [&](const Vec& p) {
                lo = std::min(lo, p[0]);
                hi = std::max(hi, p[0]);
            };
            for (const auto& poly : scene.polygons)
                for (const auto& p : poly)
                    widen(p);
            for (const auto& p : scene.dots)
                widen(p);
            if (std::holds_alternative<MirrorPair>(inst))
                scene.axes.push_back({Vec{lo, 0}, Vec{hi, 0}});
        }
        write_file(svg_path, scene.render());
    }
    return Pass;
}

// ---------------------------------------------------------------- frieze

int cmd_frieze(const std::string& list, bool json_out, std::ostream& out)
{
    const FriezePattern p = build_pattern(parse_list(list));
    if (json_out)
        out << frieze_json(p);
    else
        out << render_table(p);
    return Pass;
}

// ---------------------------------------------------------------- lift

int cmd_lift(const std::string& check, const std::string& input, bool full, std::uint64_t seed, std::ostream& out)
{
    const LiftSource src = lift_source(read_instance(input));
    const Variant v = default_variant(src);
    out << "variant: " << to_string(v) << "\n";
    if (check == "mating") {
        const MatingOrbitReport r = mating_orbit_check(src, v, {full, seed});
        out << "stages: " << r.stages << "\n"
            << "points checked: " << r.points_checked << "\n"
            << "unions checked: " << r.unions_checked << "\n";
        for (std::size_t i = 0; i < r.final_sequences.size(); ++i) {
            out << "final sequence (window " << r.windows[i] << "):";
            for (const auto& t : r.final_sequences[i].tags)
                out << " " << t.to_string();
            out << "\n";
        }
        for (const auto& m : r.mismatches)
            out << "mismatch: " << m << "\n";
        out << (r.ok() ? "pass" : "fail") << "\n";
        return r.ok() ? Pass : Fail;
    }

    const ASequences a = build_A_sequences(src, v);
    const auto seqs = lifting_sequences(a);
    const Polyjoint pj = canonical_lift_L0(seqs);
    bool ok = false;
    if (check == "general-position") {
        const GeneralPositionReport r = general_position_report(pj.joints());
        out << "hyperplanes: " << r.normals.size() << " in R^" << pj.n() << "\n";
        for (std::size_t i = 0; i < r.normals.size(); ++i)
            out << "normal " << i + 1 << ": " << vec_text(r.normals[i]) << "\n";
        out << "rank: " << r.rank << "\n";
        if (r.completing_row)
            out << "completing row: " << vec_text(*r.completing_row) << "\n";
        if (r.completed_det != 0)
            out << "determinant: " << to_string(r.completed_det) << "\n";
        ok = r.ok;
    } else if (check == "centroid") {
        const CentroidReport r = centroid_coincidence_check(pj, expected_centroid(src));
        out << "joint centroid: " << vec_text(r.centroids.front()) << "\n"
            << "centroids coincide: " << (r.coincide ? "yes" : "no") << "\n"
            << "projected centroid: " << vec_text(r.projected) << "\n"
            << "expected: " << vec_text(r.expected) << "\n";
        ok = r.ok();
    } else if (check == "fully-sliced") {
        const auto chain = mating_chain(seqs, a.scheme, a.modulus, v == Variant::MirrorOdd);
        const FullySlicedReport r = fully_sliced_check(pj, chain);
        bool recurrence = true;
        for (const auto& prism : pj.prisms())
            recurrence = recurrence && skeleton_recurrence_check(prism);
        out << "slices checked: " << r.slices_checked << "\n"
            << "prism comparisons: " << r.prism_comparisons << "\n"
            << "skeleton recurrence: " << (recurrence ? "yes" : "no") << "\n";
        for (const auto& f : r.failures)
            out << "failure: " << f << "\n";
        ok = r.ok() && recurrence;
    } else if (check == "collapse-line") {
        const CollapseLineReport r = collapse_line_check(a, pj);
        out << "line: " << (r.planar_line ? r.planar_line->to_string() : r.projected_line.to_string()) << "\n"
            << "centroid: " << vec_text(Vec(r.centroid.begin(), r.centroid.begin() + pj.d()))
            << "\n";
        for (std::size_t t = 0; t < r.final_sequence.size(); ++t)
            out << "final point " << r.final_sequence.tags[t].to_string() << ": "
                << vec_text(r.final_sequence.points[t]) << "\n";
        ok = r.ok();
    } else {
        throw UsageError("unknown check " + check);
    }
    out << (ok ? "pass" : "fail") << "\n";
    return ok ? Pass : Fail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact pentagram-map laboratory", "pentagram-lab"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a seeded axis-aligned instance");
    gen_cmd->add_option("--map", gen.map, "pent2d, corrugated, lower or mirror")->required();
    gen_cmd->add_option("--n", gen.n, "size parameter n");
    gen_cmd->add_option("--m", gen.m, "dimension m (corrugated)");
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
    gen_cmd->add_option("--range", gen.range, "numerator/denominator bound (default max(24, 4n))");
    gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

    std::string iter_in;
    int iter_steps = 1;
    std::string iter_svg;
    auto* iter_cmd = app.add_subcommand("iterate", "Print the orbit of an instance");
    iter_cmd->add_option("IN", iter_in, "instance file")->required();
    iter_cmd->add_option("--steps", iter_steps, "number of steps");
    iter_cmd->add_option("--svg", iter_svg, "write an SVG figure");

    VerifyOptions ver;
    auto* ver_cmd = app.add_subcommand("verify", "Verify a theorem on an instance or random trials");
    ver_cmd->add_option("--theorem", ver.theorem, "T002, T003, T005, T007, T008, L2-mating, L2-lifting, L4-correspondence")
        ->required();
    ver_cmd->add_option("IN", ver.input, "instance file");
    ver_cmd->add_flag("--random", ver.random, "run seeded random trials");
    ver_cmd->add_option("--trials", ver.trials, "number of random trials");
    ver_cmd->add_option("--seed", ver.seed, "base seed; trial i uses seed + i");
    ver_cmd->add_option("--n", ver.n, "size parameter n");
    ver_cmd->add_option("--m", ver.m, "dimension m (T003, corrugated lifting)");
    ver_cmd->add_option("--range", ver.range, "numerator/denominator bound");
    ver_cmd->add_option("--a1", ver.a1, "first frieze row, comma separated (T005)");
    ver_cmd->add_option("--map", ver.map, "random source for lifting theorems: pent2d, corrugated or mirror");
    ver_cmd->add_flag("--full", ver.full, "check every odd mirror window");
    ver_cmd->add_flag("--json", ver.json_out, "print the report as JSON");

    std::string fr_a1;
    bool fr_json = false;
    auto* fr_cmd = app.add_subcommand("frieze", "Print the frieze pattern of a first row");
    fr_cmd->add_option("--a1", fr_a1, "first row, comma separated")->required();
    fr_cmd->add_flag("--json", fr_json, "print rows as JSON");

    std::string lift_check;
    std::string lift_in;
    bool lift_full = false;
    std::uint64_t lift_seed = 0;
    auto* lift_cmd = app.add_subcommand("lift", "Run a lifting check on the canonical lift");
    lift_cmd->add_option("--check", lift_check, "general-position, centroid, mating, fully-sliced or collapse-line")
        ->required();
    lift_cmd->add_option("IN", lift_in, "instance file")->required();
    lift_cmd->add_flag("--full", lift_full, "check every odd mirror window");
    lift_cmd->add_option("--seed", lift_seed, "seed for the sampled odd mirror window");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, r;
        const int code = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return code == 0 ? Pass : Usage;
    }

    try {
        if (*gen_cmd)
            return cmd_gen(gen, out);
        if (*iter_cmd)
            return cmd_iterate(iter_in, iter_steps, iter_svg, out);
        if (*ver_cmd)
            return cmd_verify(ver, out);
        if (*fr_cmd)
            return cmd_frieze(fr_a1, fr_json, out);
        return cmd_lift(lift_check, lift_in, lift_full, lift_seed, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        if (is_degeneracy(e.kind())) {
            err << "degenerate: " << e.what() << "\n";
            return Degenerate;
        }
        err << "usage error: " << e.what() << "\n";
        return Usage;
    }
}

}  // namespace pentlab
