#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

enum class ErrorKind {
    DimensionMismatch,
    InvalidArgument,
    Parse,
    NotNaturallyReductive,
    InsufficientData,
    DegreeOverflow,
    NotHermitian,
    SnapFailure,
    RelationViolation,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace casimir
