#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace efrac {

/// Malformed textual input. `position()` is the 0-based offset of the
/// offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A rational that has no finite expansion in the requested base
/// (or needs more digits than allowed).
class NotRepresentableError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Operation called with arguments that violate its precondition
/// (e.g. overlapping supports for a disjoint sum).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Enumeration or rewrite exceeded a hard size / iteration guard.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace efrac
