#include "pentlab/io.hpp"

#include "pentlab/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace pentlab {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw Error(ErrorKind::ParseError, what);
}

json point_json(const ProjPoint& p)
{
    if (p.dim() == 1)
        return p.is_finite() ? json(to_string(p.affine(0))) : json("inf");
    json a = json::array();
    if (p.is_finite()) {
        for (const auto& x : p.affine())
            a.push_back(to_string(x));
    } else {
        for (const auto& x : p.coords())
            a.push_back(x.get_str());
    }
    return a;
}

ProjPoint parse_point(const json& j, std::size_t dim)
{
    if (dim == 1) {
        if (!j.is_string())
            bad("P^1 points are Rational strings or \"inf\"");
        const auto s = j.get<std::string>();
        return s == "inf" ? ProjPoint::infinity() : ProjPoint::scalar(parse_rational(s));
    }
    if (!j.is_array())
        bad("points of P^m are arrays of Rational strings");
    Vec v;
    for (const auto& x : j) {
        if (!x.is_string())
            bad("coordinates are Rational strings");
        v.push_back(parse_rational(x.get<std::string>()));
    }
    if (v.size() == dim)
        return ProjPoint::affine(v);
    if (v.size() == dim + 1)
        return ProjPoint::from_homogeneous(v);
    bad("point has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(dim) + " or " +
        std::to_string(dim + 1));
}

json tuple_json(const std::vector<ProjPoint>& pts)
{
    json a = json::array();
    for (const auto& p : pts)
        a.push_back(point_json(p));
    return a;
}

std::vector<ProjPoint> parse_tuple(const json& j, const char* key, std::size_t dim)
{
    if (!j.contains(key) || !j[key].is_array())
        bad(std::string("missing array \"") + key + "\"");
    std::vector<ProjPoint> out;
    for (const auto& p : j[key])
        out.push_back(parse_point(p, dim));
    return out;
}

long parse_offset(const json& j, long fallback)
{
    if (!j.contains("label_offset"))
        return fallback;
    if (!j["label_offset"].is_number_integer())
        bad("\"label_offset\" must be an integer");
    return j["label_offset"].get<long>();
}

json to_json(const Instance& inst)
{
    json j;
    j["format"] = format_tag;
    j["space"] = space_of(inst);
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, LabeledPolygon2>) {
                const long offset = x.label_offset();
                j["labels"] = offset % 2 != 0 ? "odd" : "even";
                if (offset != 1 && offset != 2)
                    j["label_offset"] = offset;
                j["vertices"] = tuple_json(x.vertices());
            } else if constexpr (std::is_same_v<T, PolygonM>) {
                j["m"] = x.m();
                if (x.label_offset() != 1)
                    j["label_offset"] = x.label_offset();
                j["vertices"] = tuple_json(x.vertices());
            } else if constexpr (std::is_same_v<T, PairState1D>) {
                j["X"] = tuple_json(x.x());
                j["Y"] = tuple_json(x.y());
            } else {
                j["P"] = tuple_json(x.points());
            }
        },
        inst);
    return j;
}

}  // namespace

std::string_view space_of(const Instance& inst)
{
    static constexpr std::string_view names[] = {"P2", "Pm", "P1", "P2-mirror"};
    return names[inst.index()];
}

namespace {

// Top-level keys one per line; arrays of points one point per line.
std::string pretty(const json& j)
{
    std::string s = "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
        s += "  " + json(key).dump() + ": ";
        if (value.is_array() && !value.empty()) {
            s += "[\n";
            for (std::size_t k = 0; k < value.size(); ++k)
                s += "    " + value[k].dump() + (k + 1 < value.size() ? ",\n" : "\n");
            s += "  ]";
        } else {
            s += value.dump();
        }
        s += ++i < j.size() ? ",\n" : "\n";
    }
    return s + "}\n";
}

}  // namespace

std::string serialize_instance(const Instance& inst)
{
    return pretty(to_json(inst));
}

Instance parse_instance(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != format_tag)
        bad("missing format tag \"" + std::string(format_tag) + "\"");
    const std::string space = j.value("space", "");
    try {
        if (space == "P2") {
            const std::string labels = j.value("labels", "odd");
            if (labels != "odd" && labels != "even")
                bad("\"labels\" must be \"odd\" or \"even\"");
            const long offset = parse_offset(j, labels == "odd" ? 1 : 2);
            if ((offset % 2 != 0) != (labels == "odd"))
                bad("\"label_offset\" disagrees with \"labels\"");
            return LabeledPolygon2(parse_tuple(j, "vertices", 2), offset);
        }
        if (space == "Pm") {
            if (!j.contains("m") || !j["m"].is_number_integer())
                bad("Pm instances need an integer \"m\"");
            const int m = j["m"].get<int>();
            if (m < 2)
                bad("\"m\" must be at least 2");
            return PolygonM(m, parse_tuple(j, "vertices", static_cast<std::size_t>(m)), parse_offset(j, 1));
        }
        if (space == "P1")
            return PairState1D(parse_tuple(j, "X", 1), parse_tuple(j, "Y", 1));
        if (space == "P2-mirror")
            return MirrorPair(parse_tuple(j, "P", 2));
    } catch (const json::exception& e) {
        bad(std::string("malformed instance: ") + e.what());
    }
    bad("unknown space \"" + space + "\"");
}

Instance read_instance(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_instance(text.str());
}

void write_instance(const std::filesystem::path& path, const Instance& inst)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    out << serialize_instance(inst);
}

std::string frieze_json(const FriezePattern& p)
{
    json j;
    j["format"] = format_tag;
    j["n"] = p.n;
    j["rows"] = json::array();
    for (const auto& row : p.rows)
        j["rows"].push_back(tuple_json(row));
    return pretty(j);
}

}  // namespace pentlab
