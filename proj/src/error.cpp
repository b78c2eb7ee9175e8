#include "pentlab/error.hpp"

namespace pentlab {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DegenerateJoin: return "DegenerateJoin";
    case ErrorKind::DegenerateMeet: return "DegenerateMeet";
    case ErrorKind::NonCoplanarDiagonals: return "NonCoplanarDiagonals";
    case ErrorKind::IndeterminateCrossRatio: return "IndeterminateCrossRatio";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::UndefinedProjection: return "UndefinedProjection";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::InfiniteVertex: return "InfiniteVertex";
    case ErrorKind::NotAxisAligned: return "NotAxisAligned";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::OnMirrorAxis: return "OnMirrorAxis";
    case ErrorKind::ExhaustedSampling: return "ExhaustedSampling";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::NotAJoint: return "NotAJoint";
    case ErrorKind::NotAPrism: return "NotAPrism";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::NonTransverse: return "NonTransverse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_degeneracy(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DimensionMismatch:
    case ErrorKind::InvalidArgument:
    case ErrorKind::ParseError:
    case ErrorKind::VariantMismatch:
        return false;
    default:
        return true;
    }
}

namespace {

std::string decorate(ErrorKind kind, const std::string& what, std::optional<long> index)
{
    std::string s{to_string(kind)};
    s += ": ";
    s += what;
    if (index)
        s += " (index " + std::to_string(*index) + ")";
    return s;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& what, std::optional<long> index)
    : std::runtime_error(decorate(kind, what, index)), kind_(kind), index_(index)
{
}

Error Error::with_step(long step) const
{
    std::string msg = this->what();
    if (!step_)
        msg += " at step " + std::to_string(step);
    Error e = *this;
    static_cast<std::runtime_error&>(e) = std::runtime_error(msg);
    e.step_ = step_ ? step_ : std::optional<long>(step);
    return e;
}

}  // namespace pentlab
