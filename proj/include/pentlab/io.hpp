#pragma once

#include "pentlab/corrugated.hpp"
#include "pentlab/frieze.hpp"
#include "pentlab/lower1d.hpp"
#include "pentlab/mirror.hpp"
#include "pentlab/pentagram2d.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

namespace pentlab {

inline constexpr std::string_view format_tag = "pentagram-lab/v1";

// Spaces P2, Pm, P1 and P2-mirror, in that order.
using Instance = std::variant<LabeledPolygon2, PolygonM, PairState1D, MirrorPair>;

std::string_view space_of(const Instance& inst);

// Canonical JSON text; parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const Instance& inst);
Instance parse_instance(std::string_view text);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const Instance& inst);

// Rows as arrays of Rational strings, "inf" for infinity.
std::string frieze_json(const FriezePattern& p);

}  // namespace pentlab
