#pragma once

#include <stdexcept>
#include <string>

namespace hypsys {

/// Domain error categories. Each maps to a distinct CLI exit code.
enum class ErrorKind {
  InvalidSize = 10,
  UndefinedMove = 11,
  NotInDiagram = 12,
  InvalidTransvection = 13,
  NotACandidatePath = 14,
  NotARome = 15,
  MustReduce = 16,
  Reducible = 17,
  InternalInconsistency = 18,
  OutOfRange = 19,
  NoDominantRoot = 20,
  NotPrimitive = 21,
  ConstructionViolation = 22,
  AmbiguousComparison = 23,
  NotPure = 24,
  Budget = 25,
  Parse = 26,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

/// Raised by family_P_nk when gcd(n-1, k) > 1; carries the reduced indices.
class MustReduceError : public Error {
 public:
  MustReduceError(int n_reduced, int k_reduced, const std::string& what)
      : Error(ErrorKind::MustReduce, what), n_reduced(n_reduced), k_reduced(k_reduced) {}
  int n_reduced;
  int k_reduced;
};

/// Raised by family_P_nKl_odd for even l; carries (n', l').
class ReducibleError : public Error {
 public:
  ReducibleError(int n_reduced, int l_reduced, const std::string& what)
      : Error(ErrorKind::Reducible, what), n_reduced(n_reduced), l_reduced(l_reduced) {}
  int n_reduced;
  int l_reduced;
};

}  // namespace hypsys
