#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlie {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidShape : Error {
    using Error::Error;
};

struct UnknownCatalogEntry : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct Incompatible : Error {
    using Error::Error;
};

struct NotAnL2 : Error {
    using Error::Error;
};

struct NotACocycle : Error {
    using Error::Error;
};

struct NotALieAlgebra : Error {
    using Error::Error;
};

struct NotATwoVect : Error {
    using Error::Error;
};

struct NotComparable : Error {
    using Error::Error;
};

struct InvalidTable : Error {
    using Error::Error;
};

struct MissingRightTable : Error {
    using Error::Error;
};

/// Parse failure; `position` is a byte offset into the input text.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct CapExceeded : Error {
    unsigned cap;
    explicit CapExceeded(unsigned d)
        : Error("product exceeds degree cap D = " + std::to_string(d)), cap(d) {}
};

/// A mathematical statement that must hold for valid input failed.
struct TheoremViolation : Error {
    using Error::Error;
};

/// A wiring bug: composites stopped being composable mid-computation.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct ConstructionFailure : Error {
    using Error::Error;
};

}  // namespace qlie
