#pragma once

#include <stdexcept>
#include <string>

namespace orbitdx {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct DivisionByZeroError : Error { using Error::Error; };
struct SingularMatrixError : Error { using Error::Error; };
struct InconsistentSystemError : Error { using Error::Error; };

// not-an-eigenvalue and spectrum-mismatch conditions
struct EigenvalueError : Error { using Error::Error; };

// domain-type invariant violations (malformed structures, sequences, coords)
struct InvariantError : Error { using Error::Error; };

/// One flight of the hierarchy failed. `flight` is 1-based; 0 means the
/// flight was run outside an extraction loop.
struct FlightError : Error {
    enum class Kind { KernelDim, ChartDegenerate, ConjugationResidue };
    Kind kind;
    int flight;
    FlightError(Kind k, int fl, const std::string& msg)
        : Error(msg), kind(k), flight(fl) {}
};

// final residue A_{M-1} != lambda_M I
struct ResidueError : Error { using Error::Error; };

struct NoChartError : Error { using Error::Error; };

struct DegenerateSampleError : Error { using Error::Error; };

} // namespace orbitdx
