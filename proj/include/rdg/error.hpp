#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdg {

enum class Errc {
    MalformedDocument,
    InconsistentRotation,
    OuterFaceNotAFace,
    Disconnected,
    UnknownVertex,
    NotBiconnected,
    SameVertex,
    CornerNotExterior,
    TooManyCorners,
    TooManyCriticalShortcuts,
    NotSeparable,
    PreconditionViolated,
    InternalInductionFailure,
    BoundsTooLarge,
};

constexpr std::string_view to_string(Errc c)
{
    switch (c) {
    case Errc::MalformedDocument: return "MalformedDocument";
    case Errc::InconsistentRotation: return "InconsistentRotation";
    case Errc::OuterFaceNotAFace: return "OuterFaceNotAFace";
    case Errc::Disconnected: return "Disconnected";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NotBiconnected: return "NotBiconnected";
    case Errc::SameVertex: return "SameVertex";
    case Errc::CornerNotExterior: return "CornerNotExterior";
    case Errc::TooManyCorners: return "TooManyCorners";
    case Errc::TooManyCriticalShortcuts: return "TooManyCriticalShortcuts";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InternalInductionFailure: return "InternalInductionFailure";
    case Errc::BoundsTooLarge: return "BoundsTooLarge";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace rdg
