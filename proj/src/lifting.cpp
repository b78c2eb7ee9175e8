#include "pentlab/lifting.hpp"

#include "pentlab/error.hpp"
#include "pentlab/random.hpp"

#include <algorithm>
#include <set>

namespace pentlab {

namespace {

long mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

long wrap(long label, long modulus)
{
    return mod(label - 1, modulus) + 1;
}

std::string vec_string(const Vec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

}  // namespace

std::string_view to_string(Variant v)
{
    switch (v) {
    case Variant::Planar: return "planar";
    case Variant::Corrugated: return "corrugated";
    case Variant::MirrorEven: return "mirror-even";
    case Variant::MirrorOdd: return "mirror-odd";
    }
    return "unknown";
}

std::string PointTag::to_string() const
{
    return std::to_string(label) + (reflected ? "'" : "");
}

Variant default_variant(const LiftSource& src)
{
    if (std::holds_alternative<AxisAligned2>(src))
        return Variant::Planar;
    if (std::holds_alternative<AxisAlignedM>(src))
        return Variant::Corrugated;
    return std::get<AxisAlignedMirrorPair>(src).pair().n() % 2 == 0 ? Variant::MirrorEven : Variant::MirrorOdd;
}

ASequences build_A_sequences(const LiftSource& src, Variant variant)
{
    if (variant != default_variant(src))
        throw Error(ErrorKind::VariantMismatch,
                    "source does not support the " + std::string(to_string(variant)) + " variant");
    if (const auto* p = std::get_if<AxisAligned2>(&src)) {
        const int n = p->n();
        const LabeledPolygon2& poly = p->polygon();
        ASequences a{variant, TagScheme::PolygonLabel, poly.modulus(), n, 2, {}};
        for (long k = 1; k <= 2 * n - 3; k += 2) {
            NPoint s{.sequence_label = k};
            for (long j = 0; j < n; ++j) {
                const long label = wrap(k + 4 * j, a.modulus);
                s.points.push_back(poly.by_label(label).affine());
                s.tags.push_back({label, false});
            }
            a.seqs.push_back(std::move(s));
        }
        return a;
    }
    if (const auto* p = std::get_if<AxisAlignedM>(&src)) {
        const long m = p->m();
        const int n = p->n();
        const PolygonM& poly = p->polygon();
        ASequences a{variant, TagScheme::PolygonLabel, poly.modulus(), n, static_cast<int>(m), {}};
        for (long i = 0; i <= n - 2; ++i) {
            NPoint s{.sequence_label = i * m + 1};
            for (long j = 0; j < n; ++j) {
                const long label = wrap(i * m + 1 + j * m * m, a.modulus);
                s.points.push_back(poly.by_label(label).affine());
                s.tags.push_back({label, false});
            }
            a.seqs.push_back(std::move(s));
        }
        return a;
    }
    const auto& pair = std::get<AxisAlignedMirrorPair>(src).pair();
    const int n = pair.n();
    ASequences a{variant, TagScheme::MirrorIndex, n, n, 2, {}};
    const int count = variant == Variant::MirrorOdd ? n : n - 1;
    for (long s = 1; s <= count; ++s) {
        NPoint seq{.sequence_label = 2 * s - 1};
        for (long j = 1; j <= n; ++j) {
            const long index = wrap(s + j - 1, n);
            const bool reflected = j % 2 == 0;
            const ProjPoint& x = pair.at(index - 1);
            seq.points.push_back((reflected ? reflect_r(x) : x).affine());
            seq.tags.push_back({index, reflected});
        }
        a.seqs.push_back(std::move(seq));
    }
    return a;
}

std::vector<NPoint> mirror_window(const ASequences& a, int l)
{
    if (a.variant != Variant::MirrorOdd)
        throw Error(ErrorKind::VariantMismatch, "windows exist only for odd mirror pairs");
    const int n = a.n;
    if (l < 1 || l > n)
        throw Error(ErrorKind::InvalidArgument, "window index out of range");
    std::vector<NPoint> w;
    for (int s = 0; s < n - 1; ++s)
        w.push_back(a.seqs[(l - 1 + s) % n]);
    return w;
}

std::vector<NPoint> lifting_sequences(const ASequences& a)
{
    return a.variant == Variant::MirrorOdd ? mirror_window(a, 1) : a.seqs;
}

namespace {

PointTag mated_tag(const PointTag& x0, const PointTag& x1, const PointTag& y0, const PointTag& y1, TagScheme scheme,
                   long modulus)
{
    if (scheme == TagScheme::MirrorIndex)
        return {wrap(x0.label + 1, modulus), x0.reflected};
    // Unwrap the four parent labels forward from x0 before averaging.
    const long sum = mod(x1.label - x0.label, modulus) + mod(y0.label - x0.label, modulus) +
                     mod(y1.label - x0.label, modulus);
    if (sum % 4 != 0)
        throw Error(ErrorKind::InvalidArgument, "parent labels do not average to a label");
    return {wrap(x0.label + sum / 4, modulus), false};
}

NPoint mate(const NPoint& x, const NPoint& y, TagScheme scheme, long modulus, bool drop_last)
{
    if (x.size() != y.size() || x.size() < 2)
        throw Error(ErrorKind::DimensionMismatch, "mating needs sequences of equal length >= 2");
    const std::size_t n = x.size();
    const std::size_t count = drop_last ? n - 1 : n;
    NPoint z{.sequence_label = x.sequence_label};
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t u = (t + 1) % n;
        ProjPoint p = [&] {
            try {
                return meet_coplanar_lines(ProjPoint::affine(x.points[t]), ProjPoint::affine(x.points[u]),
                                           ProjPoint::affine(y.points[t]), ProjPoint::affine(y.points[u]));
            } catch (const Error& e) {
                throw Error(e.kind(), "mating slot", static_cast<long>(t));
            }
        }();
        if (!p.is_finite())
            throw Error(ErrorKind::InfiniteVertex, "mated point at infinity", static_cast<long>(t));
        z.points.push_back(p.affine());
        z.tags.push_back(mated_tag(x.tags[t], x.tags[u], y.tags[t], y.tags[u], scheme, modulus));
    }
    return z;
}

}  // namespace

NPoint mating(const NPoint& x, const NPoint& y, TagScheme scheme, long modulus)
{
    return mate(x, y, scheme, modulus, false);
}

NPoint star(const NPoint& x, const NPoint& y, TagScheme scheme, long modulus)
{
    return mate(x, y, scheme, modulus, true);
}

std::vector<std::vector<NPoint>> mating_chain(const std::vector<NPoint>& w1, TagScheme scheme, long modulus,
                                              bool use_star)
{
    std::vector<std::vector<NPoint>> stages{w1};
    while (stages.back().size() > 1) {
        const auto& prev = stages.back();
        std::vector<NPoint> next;
        for (std::size_t t = 0; t + 1 < prev.size(); ++t) {
            try {
                next.push_back(use_star ? star(prev[t], prev[t + 1], scheme, modulus)
                                        : mating(prev[t], prev[t + 1], scheme, modulus));
            } catch (const Error& e) {
                throw e.with_step(static_cast<long>(stages.size()));
            }
        }
        stages.push_back(std::move(next));
    }
    return stages;
}

Joint::Joint(std::vector<Vec> points, long label) : points_(std::move(points)), label_(label)
{
    const std::size_t n = points_.size();
    for (const auto& p : points_)
        if (p.size() != n)
            throw Error(ErrorKind::NotAJoint, "a joint needs n points in R^n", label);
    if (AffineFlat::through(points_).dim() != n - 1)
        throw Error(ErrorKind::NotAJoint, "joint points are affinely dependent", label);
}

Vec Joint::centroid() const
{
    Vec c(points_.size(), Rational(0));
    for (const auto& p : points_)
        c = add(c, p);
    return scale(Rational(1, static_cast<long>(points_.size())), c);
}

Prism::Prism(std::vector<AffineFlat> lines) : lines_(std::move(lines))
{
    if (lines_.size() < 2)
        throw Error(ErrorKind::NotAPrism, "a prism needs at least two lines");
    for (const auto& l : lines_)
        if (l.dim() != 1 || !(l.basis().front() == lines_.front().basis().front()))
            throw Error(ErrorKind::NotAPrism, "prism lines must be parallel lines");
    for (std::size_t i = 0; i < lines_.size(); ++i)
        for (std::size_t j = i + 1; j < lines_.size(); ++j)
            if (lines_[i] == lines_[j])
                throw Error(ErrorKind::NotAPrism, "prism lines must be distinct", static_cast<long>(i));
}

Prism Prism::between(const Joint& a, const Joint& b)
{
    if (a.n() != b.n())
        throw Error(ErrorKind::NotAPrism, "joints of different sizes");
    std::vector<AffineFlat> lines;
    for (std::size_t t = 0; t < a.n(); ++t) {
        Vec dir = sub(b.points()[t], a.points()[t]);
        if (is_zero(dir))
            throw Error(ErrorKind::NotAPrism, "corresponding joint points coincide", static_cast<long>(t));
        lines.emplace_back(a.points()[t], std::vector<Vec>{dir});
    }
    return Prism(std::move(lines));
}

Polyjoint::Polyjoint(std::vector<Joint> joints, int d) : joints_(std::move(joints)), d_(d)
{
    if (joints_.empty())
        throw Error(ErrorKind::InvalidArgument, "a polyjoint needs at least one joint");
    for (std::size_t i = 0; i + 1 < joints_.size(); ++i)
        prisms_.push_back(Prism::between(joints_[i], joints_[i + 1]));
}

Heights l0_heights(int n, int d)
{
    if (n < d)
        throw Error(ErrorKind::VariantMismatch, "lifting needs n >= d");
    Heights h(n, Vec(n - d, Rational(0)));
    for (int l = d; l < n; ++l)
        h[l][l - d] = 1;
    return h;
}

Polyjoint parallel_lift(const std::vector<NPoint>& seqs, const Heights& heights)
{
    if (seqs.empty())
        throw Error(ErrorKind::InvalidArgument, "nothing to lift");
    const std::size_t n = seqs.front().size();
    const std::size_t d = seqs.front().points.front().size();
    if (n < d)
        throw Error(ErrorKind::VariantMismatch, "lifting needs n >= d");
    if (heights.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "heights need one row per sequence position");
    for (const auto& row : heights)
        if (row.size() != n - d)
            throw Error(ErrorKind::DimensionMismatch, "heights rows need n - d entries");
    std::vector<Joint> joints;
    for (const auto& s : seqs) {
        if (s.size() != n)
            throw Error(ErrorKind::DimensionMismatch, "sequences of different lengths");
        std::vector<Vec> pts;
        for (std::size_t l = 0; l < n; ++l) {
            Vec p = s.points[l];
            p.insert(p.end(), heights[l].begin(), heights[l].end());
            pts.push_back(std::move(p));
        }
        joints.emplace_back(std::move(pts), s.sequence_label);
    }
    return Polyjoint(std::move(joints), static_cast<int>(d));
}

Polyjoint canonical_lift_L0(const std::vector<NPoint>& seqs)
{
    if (seqs.empty())
        throw Error(ErrorKind::InvalidArgument, "nothing to lift");
    const int n = static_cast<int>(seqs.front().size());
    const int d = static_cast<int>(seqs.front().points.front().size());
    return parallel_lift(seqs, l0_heights(n, d));
}

Vec hyperplane_normal(const Joint& j)
{
    QMatrix rows;
    for (std::size_t i = 1; i < j.n(); ++i)
        rows.push_back(sub(j.points()[i], j.points()[0]));
    Vec v = generalized_cross(rows);
    if (is_zero(v))
        throw Error(ErrorKind::NotAJoint, "joint spans no hyperplane", j.label());
    return v;
}

GeneralPositionReport general_position_report(const std::vector<Joint>& hyperplanes)
{
    GeneralPositionReport r;
    if (hyperplanes.empty())
        return r;
    const std::size_t n = hyperplanes.front().n();
    for (const auto& j : hyperplanes) {
        if (j.n() != n)
            throw Error(ErrorKind::DimensionMismatch, "joints live in different spaces");
        r.normals.push_back(hyperplane_normal(j));
    }
    r.rank = rank(r.normals);
    if (r.normals.size() > n) {
        // Every n-subset must be a basis.
        r.ok = true;
        std::vector<bool> pick(r.normals.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
        do {
            QMatrix sub;
            for (std::size_t i = 0; i < pick.size(); ++i)
                if (pick[i])
                    sub.push_back(r.normals[i]);
            r.ok = r.ok && rank(sub) == n;
        } while (r.ok && std::prev_permutation(pick.begin(), pick.end()));
        return r;
    }
    r.ok = r.rank == r.normals.size();
    if (!r.ok || r.normals.size() == n) {
        if (r.ok)
            r.completed_det = determinant(r.normals);
        return r;
    }
    // Complete n-1 normals to a square matrix, trying e_2 first.
    if (r.normals.size() + 1 == n) {
        std::vector<std::size_t> order{1, 0};
        for (std::size_t i = 2; i < n; ++i)
            order.push_back(i);
        for (std::size_t i : order) {
            Vec e(n, Rational(0));
            e[i] = 1;
            QMatrix m = r.normals;
            m.push_back(e);
            Rational det = determinant(m);
            if (det != 0) {
                r.completing_row = e;
                r.completed_det = det;
                break;
            }
        }
    }
    return r;
}

bool general_position_check(const std::vector<Joint>& hyperplanes)
{
    return general_position_report(hyperplanes).ok;
}

Vec expected_centroid(const LiftSource& src)
{
    if (const auto* p = std::get_if<AxisAligned2>(&src))
        return center_of_mass_affine(p->polygon()).affine();
    if (const auto* p = std::get_if<AxisAlignedM>(&src))
        return center_of_mass_m(p->polygon()).affine();
    const auto& m = std::get<AxisAlignedMirrorPair>(src);
    const int n = m.pair().n();
    const Rational y = n % 2 == 0 ? Rational(0) : Rational(m.level() / n);
    return {mean(m.xs()), y};
}

CentroidReport centroid_coincidence_check(const Polyjoint& pj, const Vec& expected)
{
    CentroidReport r;
    for (const auto& j : pj.joints())
        r.centroids.push_back(j.centroid());
    r.coincide = std::all_of(r.centroids.begin(), r.centroids.end(),
                             [&](const Vec& c) { return c == r.centroids.front(); });
    const Vec& c = r.centroids.front();
    r.projected.assign(c.begin(), c.begin() + pj.d());
    r.expected = expected;
    r.matches = r.projected == expected;
    return r;
}

namespace {

// Vertex of the map orbit addressed by a tag.
struct OrbitLookup {
    Variant variant;
    std::vector<LabeledPolygon2> planar;
    std::vector<PolygonM> corrugated;
    std::vector<MirrorPair> mirror;

    std::size_t size() const
    {
        return variant == Variant::Planar       ? planar.size()
               : variant == Variant::Corrugated ? corrugated.size()
                                                : mirror.size();
    }

    std::optional<ProjPoint> at(std::size_t iterate, const PointTag& tag) const
    {
        try {
            if (variant == Variant::Planar)
                return planar[iterate].by_label(tag.label);
            if (variant == Variant::Corrugated)
                return corrugated[iterate].by_label(tag.label);
            const ProjPoint& q = mirror[iterate].at(tag.label - 1);
            return tag.reflected ? reflect_r(q) : q;
        } catch (const Error&) {
            return std::nullopt;
        }
    }

    std::set<PointTag> all_tags(std::size_t iterate) const
    {
        std::set<PointTag> tags;
        if (variant == Variant::Planar) {
            for (std::size_t t = 0; t < planar[iterate].size(); ++t)
                tags.insert({planar[iterate].label(static_cast<long>(t)), false});
        } else if (variant == Variant::Corrugated) {
            for (std::size_t t = 0; t < corrugated[iterate].size(); ++t)
                tags.insert({corrugated[iterate].label(static_cast<long>(t)), false});
        } else {
            for (long i = 1; i <= mirror[iterate].n(); ++i) {
                tags.insert({i, false});
                tags.insert({i, true});
            }
        }
        return tags;
    }
};

OrbitLookup map_orbit(const LiftSource& src, Variant variant, int iterates)
{
    OrbitLookup o{variant, {}, {}, {}};
    auto run = [&](auto& orbit, auto start, auto step) {
        orbit.push_back(start);
        for (int k = 1; k < iterates; ++k) {
            try {
                orbit.push_back(step(orbit.back()));
            } catch (const Error& e) {
                throw e.with_step(k);
            }
        }
    };
    if (variant == Variant::Planar)
        run(o.planar, std::get<AxisAligned2>(src).polygon(), pentagram_step);
    else if (variant == Variant::Corrugated)
        run(o.corrugated, std::get<AxisAlignedM>(src).polygon(), corrugated_step);
    else
        run(o.mirror, std::get<AxisAlignedMirrorPair>(src).pair(), mp_step);
    return o;
}

std::string stage_name(int stage, int window)
{
    std::string s = "W_" + std::to_string(stage);
    if (window > 0)
        s += "(" + std::to_string(window) + ")";
    return s;
}

}  // namespace

MatingOrbitReport mating_orbit_check(const LiftSource& src, Variant variant, const MatingOptions& opts)
{
    const ASequences a = build_A_sequences(src, variant);
    const int n = a.n;
    MatingOrbitReport r{.variant = variant};
    const OrbitLookup orbit = map_orbit(src, variant, n - 1);

    if (variant == Variant::MirrorOdd) {
        if (opts.full) {
            for (int l = 1; l <= n; ++l)
                r.windows.push_back(l);
        } else {
            Rng rng(opts.seed);
            r.windows = {1, 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)))};
        }
    } else {
        r.windows = {1};
    }

    // Stages whose tag union must cover the whole iterate.
    int union_limit = 0;
    if (variant == Variant::Planar || variant == Variant::MirrorEven)
        union_limit = n - 2;
    else if (variant == Variant::Corrugated)
        union_limit = n - a.d;

    for (int l : r.windows) {
        const bool odd = variant == Variant::MirrorOdd;
        const auto chain = mating_chain(odd ? mirror_window(a, l) : a.seqs, a.scheme, a.modulus, odd);
        r.stages = static_cast<int>(chain.size());
        for (std::size_t i = 0; i < chain.size(); ++i) {
            std::set<PointTag> seen;
            for (const auto& seq : chain[i]) {
                for (std::size_t t = 0; t < seq.size(); ++t) {
                    ++r.points_checked;
                    seen.insert(seq.tags[t]);
                    auto v = orbit.at(i, seq.tags[t]);
                    if (!v || !(*v == ProjPoint::affine(seq.points[t]))) {
                        r.points_match = false;
                        r.mismatches.push_back(stage_name(static_cast<int>(i) + 1, odd ? l : 0) + " point " +
                                               seq.tags[t].to_string() + " = " + vec_string(seq.points[t]) +
                                               " is not the orbit vertex");
                    }
                }
            }
            if (static_cast<int>(i) + 1 <= union_limit) {
                ++r.unions_checked;
                if (seen != orbit.all_tags(i)) {
                    r.unions_match = false;
                    r.mismatches.push_back(stage_name(static_cast<int>(i) + 1, 0) +
                                           " does not cover the orbit vertices");
                }
            }
        }

        const NPoint& last = chain.back().front();
        r.final_sequences.push_back(last);
        std::vector<PointTag> predicted;
        if (variant == Variant::MirrorEven) {
            for (long t = 0; t < n; ++t)
                predicted.push_back({wrap(n - 1 + t, n), t % 2 == 1});
        } else if (variant == Variant::MirrorOdd) {
            predicted = {{wrap(n + l - 2, n), false}, {wrap(n + l - 1, n), true}};
        }
        bool ok;
        if (!predicted.empty()) {
            ok = last.tags == predicted;
        } else {
            // Half the vertices of the last iterate: n distinct positions in one residue class.
            const long step = variant == Variant::Planar ? 2 : a.d;
            std::set<long> positions;
            std::set<long> classes;
            for (const auto& tag : last.tags) {
                const long pos = variant == Variant::Planar
                                     ? static_cast<long>(orbit.planar.back().position_of(tag.label))
                                     : static_cast<long>(orbit.corrugated.back().position_of(tag.label));
                positions.insert(pos);
                classes.insert(pos % step);
            }
            ok = static_cast<int>(positions.size()) == n && classes.size() == 1 &&
                 static_cast<int>(last.size()) == n;
        }
        if (!ok) {
            r.final_match = false;
            std::string tags;
            for (const auto& t : last.tags)
                tags += " " + t.to_string();
            r.mismatches.push_back(stage_name(r.stages, variant == Variant::MirrorOdd ? l : 0) +
                                   " has unexpected tags" + tags);
        }
    }
    return r;
}

CyclicSkeleton cyclic_skeleton(const Prism& prism, int k)
{
    const int n = static_cast<int>(prism.n());
    if (k < 1 || k > n - 1)
        throw Error(ErrorKind::InvalidArgument, "skeleton level out of range");
    CyclicSkeleton s{1, prism.lines()};
    for (int level = 2; level <= k; ++level) {
        std::vector<AffineFlat> next;
        for (int t = 0; t < n; ++t) {
            AffineFlat f = span(s.faces[t], s.faces[(t + 1) % n]);
            if (static_cast<int>(f.dim()) != level)
                throw Error(ErrorKind::DegenerateSpan,
                            "skeleton face has dimension " + std::to_string(f.dim()) + " at level " +
                                std::to_string(level),
                            t);
            next.push_back(std::move(f));
        }
        s.faces = std::move(next);
        s.level = level;
    }
    return s;
}

bool skeleton_recurrence_check(const Prism& prism)
{
    const int n = static_cast<int>(prism.n());
    CyclicSkeleton lower = cyclic_skeleton(prism, 1);
    for (int k = 2; k <= n - 1; ++k) {
        CyclicSkeleton upper = cyclic_skeleton(prism, k);
        for (int t = 0; t < n; ++t) {
            auto meet = intersect(upper.faces[t], upper.faces[(t + 1) % n]);
            if (!meet || !(*meet == lower.faces[(t + 1) % n]))
                return false;
        }
        lower = std::move(upper);
    }
    return true;
}

AffineFlat flat_H(int g, int k, const std::vector<Joint>& hyperplanes)
{
    const int count = static_cast<int>(hyperplanes.size());
    if (g < 1 || (k - g) % 2 != 0 || k < g || k > 2 * count - g)
        throw Error(ErrorKind::InvalidArgument,
                    "H_{" + std::to_string(g) + "," + std::to_string(k) + "} is not defined");
    const int first = (k - g) / 2;
    AffineFlat h = hyperplanes[first].hyperplane();
    for (int i = first + 1; i < first + g; ++i) {
        auto next = intersect(h, hyperplanes[i].hyperplane());
        if (!next)
            throw Error(ErrorKind::NonTransverse, "hyperplanes do not meet", i);
        h = std::move(*next);
    }
    if (static_cast<int>(h.codim()) != g)
        throw Error(ErrorKind::NonTransverse,
                    "H_{" + std::to_string(g) + "," + std::to_string(k) + "} has codimension " +
                        std::to_string(h.codim()));
    return h;
}

SliceReport slices_check(const AffineFlat& w, const Prism& prism)
{
    SliceReport r;
    const int n = static_cast<int>(prism.n());
    const int j = static_cast<int>(w.codim());
    if (j < 1 || j > n - 1) {
        r.diagnostic = "codimension out of range";
        return r;
    }
    CyclicSkeleton faces = cyclic_skeleton(prism, j);
    for (int t = 0; t < n; ++t) {
        auto meet = intersect(w, faces.faces[t]);
        if (!meet || meet->dim() != 0) {
            r.diagnostic = "face " + std::to_string(t) + " is not met in a single point";
            r.points.clear();
            return r;
        }
        r.points.push_back(meet->base());
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (r.points[a] == r.points[b]) {
                r.diagnostic = "slice points coincide";
                return r;
            }
    if (j < n - 1) {
        CyclicSkeleton upper = cyclic_skeleton(prism, j + 1);
        std::vector<AffineFlat> lines;
        for (int t = 0; t < n; ++t) {
            auto meet = intersect(w, upper.faces[t]);
            if (!meet || meet->dim() != 1) {
                r.diagnostic = "level " + std::to_string(j + 1) + " face " + std::to_string(t) +
                               " is not met in a line";
                return r;
            }
            if (std::find(lines.begin(), lines.end(), *meet) != lines.end()) {
                r.diagnostic = "slice lines coincide";
                return r;
            }
            lines.push_back(std::move(*meet));
        }
    }
    r.ok = true;
    return r;
}

FullySlicedReport fully_sliced_check(const Polyjoint& pj, const std::vector<std::vector<NPoint>>& chain)
{
    FullySlicedReport r;
    const int n = static_cast<int>(pj.n());
    const int count = static_cast<int>(pj.joints().size());
    const int prisms = static_cast<int>(pj.prisms().size());
    const std::size_t d = static_cast<std::size_t>(pj.d());
    for (int g = 1; g <= count; ++g) {
        for (int k = g; k <= 2 * count - g; k += 2) {
            const AffineFlat h = flat_H(g, k, pj.joints());
            const int idx = (k - g) / 2;
            const std::string name = "H_{" + std::to_string(g) + "," + std::to_string(k) + "}";
            std::vector<std::pair<int, std::vector<Vec>>> point_sets;
            // Prism T_p joins joints p-1 and p, so its label is 2p (p counted from 1).
            for (int label = k - g; label <= k + g; ++label) {
                if (label % 2 != 0 || label < 2 || label > 2 * prisms)
                    continue;
                const Prism& prism = pj.prisms()[label / 2 - 1];
                const bool relevant = std::abs(label - k) <= 1;
                SliceReport s = slices_check(h, prism);
                if (relevant)
                    ++r.slices_checked;
                if (!s.ok) {
                    if (relevant) {
                        r.fully_sliced = false;
                        r.failures.push_back(name + " does not slice T_" + std::to_string(label) + ": " +
                                             s.diagnostic);
                    }
                    continue;
                }
                point_sets.emplace_back(label, s.points);
                if (!relevant)
                    continue;
                const auto stage = static_cast<std::size_t>(g - 1);
                if (stage >= chain.size() || static_cast<std::size_t>(idx) >= chain[stage].size()) {
                    r.matches_mating = false;
                    r.failures.push_back(name + " has no mating counterpart");
                    continue;
                }
                const NPoint& expected = chain[stage][idx];
                for (std::size_t t = 0; t < expected.size(); ++t) {
                    Vec projected(s.points[t].begin(), s.points[t].begin() + static_cast<long>(d));
                    if (!(projected == expected.points[t])) {
                        r.matches_mating = false;
                        r.failures.push_back(name + " slice point " + std::to_string(t) + " on T_" +
                                             std::to_string(label) + " differs from the mating chain");
                    }
                }
            }
            for (std::size_t i = 1; i < point_sets.size(); ++i) {
                ++r.prism_comparisons;
                std::set<Vec> a(point_sets[0].second.begin(), point_sets[0].second.end());
                std::set<Vec> b(point_sets[i].second.begin(), point_sets[i].second.end());
                if (a != b) {
                    r.prism_independent = false;
                    r.failures.push_back(name + " meets T_" + std::to_string(point_sets[0].first) + " and T_" +
                                         std::to_string(point_sets[i].first) + " in different sets");
                }
            }
        }
    }
    (void)n;
    return r;
}

CollapseLineReport collapse_line_check(const ASequences& a, const Polyjoint& pj)
{
    const bool odd = a.variant == Variant::MirrorOdd;
    const auto chain = mating_chain(lifting_sequences(a), a.scheme, a.modulus, odd);
    const int count = static_cast<int>(pj.joints().size());
    AffineFlat line = flat_H(count, count, pj.joints());
    const std::size_t d = static_cast<std::size_t>(pj.d());
    AffineFlat projected = line.project(d);
    if (line.dim() != 1 || projected.dim() != 1)
        throw Error(ErrorKind::NonTransverse, "H_{n-1,n-1} does not project to a line");
    const Vec c = pj.joints().front().centroid();
    CollapseLineReport r{.line = line,
                         .projected_line = projected,
                         .centroid = c,
                         .final_sequence = chain.back().front()};
    if (d == 2) {
        const Vec& b = projected.base();
        r.planar_line = join_points(ProjPoint::affine(b), ProjPoint::affine(add(b, projected.basis().front())));
    }
    r.centroid_on_line = line.contains(c);
    r.projected_centroid_on_line = projected.contains(Vec(c.begin(), c.begin() + static_cast<long>(d)));
    r.final_points_on_line = std::all_of(r.final_sequence.points.begin(), r.final_sequence.points.end(),
                                         [&](const Vec& p) { return projected.contains(p); });
    return r;
}

LiftingReport canonical_lifting_report(const LiftSource& src)
{
    const Variant v = default_variant(src);
    const ASequences a = build_A_sequences(src, v);
    const auto seqs = lifting_sequences(a);
    Heights heights = l0_heights(a.n, a.d);
    const Polyjoint pj = parallel_lift(seqs, heights);
    const auto chain = mating_chain(seqs, a.scheme, a.modulus, v == Variant::MirrorOdd);
    bool recurrence = true;
    for (const auto& prism : pj.prisms())
        recurrence = recurrence && skeleton_recurrence_check(prism);
    return {v,
            std::move(heights),
            general_position_report(pj.joints()),
            centroid_coincidence_check(pj, expected_centroid(src)),
            fully_sliced_check(pj, chain),
            recurrence,
            collapse_line_check(a, pj)};
}

LiftChoice find_perfect_lift(const ASequences& a, std::uint64_t seed, int attempts)
{
    const auto seqs = lifting_sequences(a);
    const bool odd = a.variant == Variant::MirrorOdd;
    const auto chain = mating_chain(seqs, a.scheme, a.modulus, odd);
    const int n = a.n;
    const int d = a.d;
    auto perfect = [&](const Polyjoint& pj) {
        try {
            return general_position_check(pj.joints()) && fully_sliced_check(pj, chain).ok();
        } catch (const Error& e) {
            if (!is_degeneracy(e.kind()))
                throw;
            return false;
        }
    };
    int rejected = 0;
    Heights h = l0_heights(n, d);
    try {
        Polyjoint pj = parallel_lift(seqs, h);
        if (perfect(pj))
            return {std::move(pj), std::move(h), true, 0};
    } catch (const Error& e) {
        if (!is_degeneracy(e.kind()))
            throw;
    }
    ++rejected;
    Rng rng(seed);
    for (int i = 0; i < attempts; ++i) {
        for (auto& row : h)
            for (auto& x : row)
                x = rng.rational(n + 3);
        try {
            Polyjoint pj = parallel_lift(seqs, h);
            if (perfect(pj))
                return {std::move(pj), h, false, rejected};
        } catch (const Error& e) {
            if (!is_degeneracy(e.kind()))
                throw;
        }
        ++rejected;
    }
    throw Error(ErrorKind::ExhaustedSampling, "no perfect lift within the attempt budget");
}

}  // namespace pentlab
