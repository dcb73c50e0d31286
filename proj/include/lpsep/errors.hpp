#pragma once

#include <stdexcept>
#include <string>

namespace lpsep {

// Base class for every exception thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A matrix or vector has dimensions incompatible with the requested operation.
class DimMismatch : public Error { public: using Error::Error; };

// An operator expected to be Hermitian fails the symmetry check.
class NotHermitian : public Error { public: using Error::Error; };

// An iterative eigensolver did not converge.
class NoConvergence : public Error { public: using Error::Error; };

// A concentration-measure order lies outside the admissible range.
class InvalidOrder : public Error { public: using Error::Error; };

// An observable violates a non-degeneracy requirement.
class DegenerateSpectrum : public Error { public: using Error::Error; };

// A dimension argument is out of range for the requested construction.
class InvalidDim : public Error { public: using Error::Error; };

// A parameter set fails its domain constraints.
class InvalidParams : public Error { public: using Error::Error; };

// A density matrix fails a positivity, trace, or Hermiticity check.
class InvalidState : public Error { public: using Error::Error; };

// A detection sweep is not monotone in the family parameter.
class NotMonotone : public Error { public: using Error::Error; };

// A detection sweep never crosses the criterion bound.
class NoDetection : public Error { public: using Error::Error; };

// Malformed input file or serialized payload.
class ParseError : public Error { public: using Error::Error; };

// Maximization requested over an empty objective list.
class EmptyObjective : public Error { public: using Error::Error; };

// Unknown family name on the CLI surface.
class InvalidFamily : public Error { public: using Error::Error; };

// Filesystem read/write failure.
class IOError : public Error { public: using Error::Error; };

}  // namespace lpsep
