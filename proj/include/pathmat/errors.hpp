#pragma once

#include <stdexcept>
#include <string>

namespace pathmat {

/// Base class for every error the library raises on violated preconditions
/// or malformed input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values from different rings were combined.
struct SpecMismatch : Error {
    using Error::Error;
};

/// Matrix dimensions do not conform for the requested operation.
struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotSquare : Error {
    using Error::Error;
};

struct NotTriangular : Error {
    using Error::Error;
};

/// A diagonal entry required to be invertible is not; `index` is the first
/// offending position (0-based).
struct SingularDiagonal : Error {
    explicit SingularDiagonal(int index_, const std::string& msg)
        : Error(msg), index(index_) {}
    int index;
};

/// Multiplicative inverse requested for a non-invertible ring element.
struct NotInvertible : Error {
    using Error::Error;
};

/// Peeling needs equally many row and column vertices.
struct NotBalanced : Error {
    using Error::Error;
};

/// Peeling stalled: the graph has zero or several perfect matchings.
struct NoUniquePerfectMatching : Error {
    using Error::Error;
};

struct NoPerfectMatching : Error {
    using Error::Error;
};

struct NotATree : Error {
    using Error::Error;
};

/// GF(2) parity inversion needs all-ones diagonal.
struct UnitDiagonalRequired : Error {
    using Error::Error;
};

/// Instance exceeds the explicit-enumeration ceiling.
struct SizeGuard : Error {
    using Error::Error;
};

/// Malformed JSON document.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace pathmat
