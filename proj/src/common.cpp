#include "hopfbloch/errors.hpp"
#include "hopfbloch/flags.hpp"

#include <utility>

namespace hopfbloch {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ZeroNorm: return "ZeroNorm";
        case ErrorKind::NotPureUnit: return "NotPureUnit";
        case ErrorKind::NotUnit: return "NotUnit";
        case ErrorKind::FiberAtInfinity: return "FiberAtInfinity";
        case ErrorKind::NorthPole: return "NorthPole";
        case ErrorKind::OffSphere: return "OffSphere";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::SouthPoleA: return "SouthPoleA";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::BadAxis: return "BadAxis";
        case ErrorKind::UnknownGate: return "UnknownGate";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

std::vector<std::string> Flags::names() const {
    static constexpr std::pair<CoordFlag, const char*> kNames[] = {
        {CoordFlag::PhiAUndefined, "PhiAUndefined"},
        {CoordFlag::TUndefined, "TUndefined"},
        {CoordFlag::XiUndefined, "XiUndefined"},
        {CoordFlag::SouthPoleA, "SouthPoleA"},
        {CoordFlag::ThetaBPiAmbiguous, "ThetaBPiAmbiguous"},
        {CoordFlag::PhiBUndefined, "PhiBUndefined"},
    };
    std::vector<std::string> out;
    for (const auto& [flag, name] : kNames)
        if (has(flag)) out.emplace_back(name);
    return out;
}

}  // namespace hopfbloch
