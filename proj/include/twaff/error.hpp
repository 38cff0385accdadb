#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twaff {

enum class ErrorKind {
    RankOutOfRange,
    TypeSpec,
    NotSymmetrizable,
    InvalidAffineMatrix,
    InvalidDiagram,
    Domain,
    UndefinedMultiplicity,
    OutOfRange,
    Resource,
    NotAStarDegree,
    InternalInconsistency,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::RankOutOfRange: return "rank-out-of-range";
    case ErrorKind::TypeSpec: return "bad-type-specifier";
    case ErrorKind::NotSymmetrizable: return "matrix-not-symmetrizable";
    case ErrorKind::InvalidAffineMatrix: return "invalid-affine-matrix";
    case ErrorKind::InvalidDiagram: return "invalid-diagram";
    case ErrorKind::Domain: return "domain-error";
    case ErrorKind::UndefinedMultiplicity: return "undefined-multiplicity";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::Resource: return "resource-limit";
    case ErrorKind::NotAStarDegree: return "not-a-star-degree";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
    }
    return "unknown";
}

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace twaff
