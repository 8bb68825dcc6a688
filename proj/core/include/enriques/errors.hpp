#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace enriques {

/// Lexical or grammatical failure in one of the text notations.
/// position() is a byte offset into the offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error("at offset " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Structurally well-formed data that violates a domain invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Query for a decomposition outside the embedded classification data.
/// The engine never extrapolates beyond cataloged extremal types.
class NotInCatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace enriques
