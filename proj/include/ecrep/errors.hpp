#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ecrep {

/// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(std::string message) : std::runtime_error(std::move(message)) {}
};

/// A file or provider payload could not be parsed into the expected shape.
class MalformedPayload : public Error {
public:
    using Error::Error;
};

/// A parsed record violates a semantic invariant. Carries the offending field
/// so callers can report precisely which value was rejected.
class InvariantViolation : public Error {
public:
    InvariantViolation(std::string field, const std::string& message)
        : Error("invariant violation on field '" + field + "': " + message),
          field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

} // namespace ecrep
