#pragma once

#include <stdexcept>
#include <string>

namespace cornerindex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polygonal input: self-intersection, collinear corner, bad orientation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Geometric precondition violated (rounding radius too large, overlapping disks, ...).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Mesh generation could not honour the requested size or domain.
class RefinementError : public Error {
 public:
  using Error::Error;
};

class AssemblyError : public Error {
 public:
  using Error::Error;
};

/// A cochain had nonzero values on constrained degrees of freedom.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

class OracleError : public Error {
 public:
  using Error::Error;
};

/// The corner-map construction produced an invalid or degenerate map.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cornerindex
