#pragma once

#include <stdexcept>
#include <string>

namespace gmult {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed arguments: non-finite entries, invalid ranges, bad indices.
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

// Dimension / layout mismatch between operands.
struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error(what) {}
};

// An operator required to be invertible is numerically singular
// (frame with vanishing lower bound, singular multiplier or transform).
struct SingularError : Error {
    explicit SingularError(const std::string& what) : Error(what) {}
};

// Symbol is not semi-normalized, or positive factorization failed.
struct SymbolError : Error {
    explicit SymbolError(const std::string& what) : Error(what) {}
};

// Perturbation exceeds the admissible radius, or a sufficiency
// condition does not hold.
struct PerturbationError : Error {
    explicit PerturbationError(const std::string& what) : Error(what) {}
};

// Instance file could not be parsed or validated.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace gmult
