#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pointkernel {

enum class ErrorKind {
    NotConnected,
    NotSeparated,
    NotRepresentable,
    InvalidWavenumber,
    SingularSystem,
    InvalidOrder,
    InvalidTimeOrder,
    OnBoundary,
    AlternationViolated,
    QuadratureFailure,
    ExtrapolationUnstable,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotSeparated: return "NotSeparated";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::InvalidWavenumber: return "InvalidWavenumber";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidTimeOrder: return "InvalidTimeOrder";
    case ErrorKind::OnBoundary: return "OnBoundary";
    case ErrorKind::AlternationViolated: return "AlternationViolated";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::ExtrapolationUnstable: return "ExtrapolationUnstable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what)
        , kind_(kind)
    {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace pointkernel
