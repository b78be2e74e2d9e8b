#pragma once

#include <stdexcept>
#include <string>

namespace orbitcert {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input errors: malformed tables, mismatched dimensions, bad configs.
struct InputError : Error {
  using Error::Error;
};

/// Mathematical certification failures: a requested property does not hold.
struct CertificationError : Error {
  using Error::Error;
};

struct NotAGroup : InputError {
  explicit NotAGroup(const std::string& reason) : InputError("not a group: " + reason) {}
};

struct GroupMismatch : InputError {
  GroupMismatch() : InputError("operands belong to different groups") {}
};

struct DimensionMismatch : InputError {
  explicit DimensionMismatch(const std::string& what_arg) : InputError("dimension mismatch: " + what_arg) {}
};

struct NotUnitary : InputError {
  NotUnitary(int gamma, double defect)
      : InputError("matrix for element " + std::to_string(gamma) + " is not unitary (defect " +
                   std::to_string(defect) + ")"),
        gamma(gamma),
        defect(defect) {}
  int gamma;
  double defect;
};

struct NotHomomorphism : InputError {
  NotHomomorphism(int gamma1, int gamma2, double defect)
      : InputError("matrices violate the homomorphism law at (" + std::to_string(gamma1) + ", " +
                   std::to_string(gamma2) + "), defect " + std::to_string(defect)),
        gamma1(gamma1),
        gamma2(gamma2),
        defect(defect) {}
  int gamma1, gamma2;
  double defect;
};

struct InvalidAction : InputError {
  explicit InvalidAction(const std::string& reason) : InputError("invalid group action: " + reason) {}
};

struct NotInAlgebra : CertificationError {
  explicit NotInAlgebra(double defect)
      : CertificationError("operator does not commute with the left regular representation (defect " +
                           std::to_string(defect) + ")"),
        defect(defect) {}
  double defect;
};

struct NotHermitian : InputError {
  explicit NotHermitian(double defect)
      : InputError("operator is not Hermitian (defect " + std::to_string(defect) + ")"), defect(defect) {}
  double defect;
};

struct NotPSD : InputError {
  explicit NotPSD(double min_eigenvalue)
      : InputError("operator is not positive semidefinite (min eigenvalue " +
                   std::to_string(min_eigenvalue) + ")"),
        min_eigenvalue(min_eigenvalue) {}
  double min_eigenvalue;
};

struct ZeroGenerator : InputError {
  ZeroGenerator() : InputError("generator vector is zero") {}
};

struct NotInvariant : CertificationError {
  NotInvariant(int gamma, double defect)
      : CertificationError("subspace is not invariant under element " + std::to_string(gamma) +
                           " (defect " + std::to_string(defect) + ")"),
        gamma(gamma),
        defect(defect) {}
  int gamma;
  double defect;
};

struct NotFree : CertificationError {
  NotFree(int point, int gamma)
      : CertificationError("action is not free: element " + std::to_string(gamma) + " fixes point " +
                           std::to_string(point)),
        point(point),
        gamma(gamma) {}
  int point, gamma;
};

struct InvalidTiling : InputError {
  explicit InvalidTiling(const std::string& reason) : InputError("invalid tiling set: " + reason) {}
};

struct FiberMismatch : InputError {
  explicit FiberMismatch(const std::string& reason) : InputError("fiber mismatch: " + reason) {}
};

struct NotMinimal : CertificationError {
  explicit NotMinimal(double min_eigenvalue)
      : CertificationError("orbit is not minimal: bracket has min eigenvalue " +
                           std::to_string(min_eigenvalue)),
        min_eigenvalue(min_eigenvalue) {}
  double min_eigenvalue;
};

struct NotInPrincipalSpace : CertificationError {
  explicit NotInPrincipalSpace(double residual)
      : CertificationError("vector lies outside the principal space (residual " +
                           std::to_string(residual) + ")"),
        residual(residual) {}
  double residual;
};

struct DegenerateComb : InputError {
  explicit DegenerateComb(const std::string& reason) : InputError("degenerate comb: " + reason) {}
};

struct NotCyclic : InputError {
  NotCyclic() : InputError("group is not cyclic in canonical ordering") {}
};

struct ConfigError : InputError {
  explicit ConfigError(const std::string& reason) : InputError("config error: " + reason) {}
};

}  // namespace orbitcert
