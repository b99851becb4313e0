// errors.hpp
// Exception types shared across the splitlink library.

#pragma once

#include <stdexcept>
#include <string>

namespace splitlink {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Amplitude vector length does not equal 2^num_qubits.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

// Amplitude vector has (numerically) zero norm and cannot be normalized.
class ZeroVector : public Error {
public:
    using Error::Error;
};

// An amplitude is NaN or infinite.
class NonFiniteAmplitude : public Error {
public:
    using Error::Error;
};

// Two states have different qubit counts where equal counts are required.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Qubit index outside [0, num_qubits), or the state is too small to measure.
class QubitOutOfRange : public Error {
public:
    using Error::Error;
};

// A single-qubit basis whose kets are not orthonormal within tolerance.
class NonOrthonormalBasis : public Error {
public:
    using Error::Error;
};

// Bipartition is not a disjoint, nonempty cover of the state's qubits.
class InvalidPartition : public Error {
public:
    using Error::Error;
};

// Component label not present in a link model.
class UnknownComponent : public Error {
public:
    using Error::Error;
};

// Operation requires a 3-qubit profile.
class WrongArity : public Error {
public:
    using Error::Error;
};

// Qubit-to-component map is not a bijection onto the model's components.
class InvalidMapping : public Error {
public:
    using Error::Error;
};

// Input document is not syntactically valid (or the file cannot be read).
class ParseError : public Error {
public:
    using Error::Error;
};

// Input document parses but violates the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace splitlink
