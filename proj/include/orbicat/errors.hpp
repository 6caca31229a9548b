#pragma once

// Error taxonomy shared across the library. Every throw carries a
// human-readable witness of the failed precondition.

#include <stdexcept>
#include <string>

namespace orbicat {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact arithmetic
struct FieldError : Error {
    explicit FieldError(const std::string& w) : Error("FieldError: " + w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("ParseError: " + w) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& w) : Error("DimensionMismatch: " + w) {}
};
struct NotIdempotent : Error {
    explicit NotIdempotent(const std::string& w) : Error("NotIdempotent: " + w) {}
};
struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& w) : Error("SingularMatrix: " + w) {}
};

// categories
struct InvalidCategory : Error {
    explicit InvalidCategory(const std::string& w) : Error("InvalidCategory: " + w) {}
};
struct InvalidDagger : Error {
    explicit InvalidDagger(const std::string& w) : Error("InvalidDagger: " + w) {}
};
struct InvalidVolution : Error {
    explicit InvalidVolution(const std::string& w) : Error("InvalidVolution: " + w) {}
};

// Frobenius algebras and bimodules
struct InvalidAlgebra : Error {
    explicit InvalidAlgebra(const std::string& w) : Error("InvalidAlgebra: " + w) {}
};
struct DegeneratePairing : Error {
    explicit DegeneratePairing(const std::string& w) : Error("DegeneratePairing: " + w) {}
};
struct AxiomFailure : Error {
    explicit AxiomFailure(const std::string& w) : Error("AxiomFailure: " + w) {}
};
struct InvalidBimodule : Error {
    explicit InvalidBimodule(const std::string& w) : Error("InvalidBimodule: " + w) {}
};
struct MiddleNotSeparable : Error {
    explicit MiddleNotSeparable(const std::string& w) : Error("MiddleNotSeparable: " + w) {}
};

// state sums
struct NotClosed : Error {
    explicit NotClosed(const std::string& w) : Error("NotClosed: " + w) {}
};
struct NotOrientable : Error {
    explicit NotOrientable(const std::string& w) : Error("NotOrientable: " + w) {}
};

} // namespace orbicat
