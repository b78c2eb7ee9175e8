#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pentlab {

enum class ErrorKind {
    DegenerateJoin,
    DegenerateMeet,
    NonCoplanarDiagonals,
    IndeterminateCrossRatio,
    ZeroDenominator,
    UndefinedProjection,
    DimensionMismatch,
    SingularMap,
    InfiniteVertex,
    NotAxisAligned,
    CoincidentPoints,
    OnMirrorAxis,
    ExhaustedSampling,
    VariantMismatch,
    NotAJoint,
    NotAPrism,
    DegenerateSpan,
    NonTransverse,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

// Geometric degeneracy (non-generic input) as opposed to malformed input.
bool is_degeneracy(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<long> index = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    // Offending vertex label, column or slot when known.
    std::optional<long> index() const noexcept { return index_; }
    // Orbit step at which the failure happened, filled in by iterating verifiers.
    std::optional<long> step() const noexcept { return step_; }

    Error with_step(long step) const;

private:
    ErrorKind kind_;
    std::optional<long> index_;
    std::optional<long> step_;
};

}  // namespace pentlab
