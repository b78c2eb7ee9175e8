#include "pentlab/error.hpp"
#include "pentlab/io.hpp"

#include <doctest.h>

#include <filesystem>

using namespace pentlab;

namespace {

ProjPoint pt(const Rational& x, const Rational& y)
{
    return ProjPoint::affine(x, y);
}

void check_roundtrip(const Instance& inst)
{
    const std::string text = serialize_instance(inst);
    CHECK(parse_instance(text) == inst);
    CHECK(serialize_instance(parse_instance(text)) == text);
}

ErrorKind parse_kind(std::string_view text)
{
    try {
        parse_instance(text);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("round trip of every space")
{
    const LabeledPolygon2 hex({pt(0, 0), pt(4, 0), pt(4, 2), pt(1, 2), pt(1, 5), pt(0, 5)});
    check_roundtrip(hex);
    check_roundtrip(pentagram_step(hex));
    check_roundtrip(LabeledPolygon2({ProjPoint(IntVec{1, 2, 0}), pt(1, 1), pt(Rational(-3, 7), 2), pt(0, 1)}, 3));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const PolygonM p = random_axis_aligned_m(3, 3, seed, 24).polygon();
        check_roundtrip(p);
        check_roundtrip(corrugated_step(p));
        check_roundtrip(random_b(4, seed, 24).state());
        check_roundtrip(random_mirror_pair(5, seed, 24).pair());
    }
    check_roundtrip(PairState1D(tuple_of({1, 2, 6}), tuple_of({Rational(11, 6), Rational(2, 3), Rational(34, 9)})));
}

TEST_CASE("space tags and layout")
{
    const LabeledPolygon2 hex({pt(0, 0), pt(4, 0), pt(4, 2), pt(1, 2), pt(1, 5), pt(0, 5)});
    CHECK(space_of(hex) == "P2");
    CHECK(space_of(random_b(3, 0, 24).state()) == "P1");
    CHECK(space_of(random_mirror_pair(3, 0, 24).pair()) == "P2-mirror");
    CHECK(space_of(random_axis_aligned_m(3, 2, 0, 24).polygon()) == "Pm");
    const std::string text = serialize_instance(hex);
    CHECK(text.find("\"format\": \"pentagram-lab/v1\"") != std::string::npos);
    CHECK(text.find("\"labels\": \"odd\"") != std::string::npos);
    CHECK(text.find("    [\"4\",\"2\"],\n") != std::string::npos);
    const Instance parsed = parse_instance(
        R"({"format":"pentagram-lab/v1","space":"P2","labels":"odd","vertices":[["0","0"],["4","0"],["4","2"],["1","2"],["1","5"],["0","5"]]})");
    CHECK(std::get<LabeledPolygon2>(parsed) == hex);
    const std::string p1 = serialize_instance(random_b(3, 0, 24).state());
    CHECK(p1.find("\"inf\"") != std::string::npos);
}

TEST_CASE("malformed files")
{
    CHECK(parse_kind("not json") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"format":"other","space":"P2","labels":"odd","vertices":[]})") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"format":"pentagram-lab/v1","space":"P7"})") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"format":"pentagram-lab/v1","space":"P2","labels":"odd","vertices":[["0","x"]]})") ==
          ErrorKind::ParseError);
    CHECK(parse_kind(R"({"format":"pentagram-lab/v1","space":"P2","labels":"odd","vertices":[["1","2","3","4"]]})") ==
          ErrorKind::ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"format":"pentagram-lab/v1","space":"P1","X":["inf"],"Y":["1","2"]})"),
                    Error);
}

TEST_CASE("file helpers")
{
    const auto path = std::filesystem::temp_directory_path() / "pentlab_io_test.json";
    const Instance inst = random_mirror_pair(4, 3, 24).pair();
    write_instance(path, inst);
    CHECK(read_instance(path) == inst);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_instance(path), Error);
}

TEST_CASE("frieze rows as JSON")
{
    const std::string j = frieze_json(build_pattern(tuple_of({7, 5, -3})));
    CHECK(j.find("\"16/3\"") != std::string::npos);
    CHECK(j.find("\"inf\"") != std::string::npos);
}
