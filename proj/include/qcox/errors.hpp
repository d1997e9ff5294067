#pragma once

#include <stdexcept>
#include <string>

namespace qcox {

enum class ErrorKind {
  EmptyDiagram,
  ParentMismatch,
  NotProper,
  EmptyKernel,
  CollapsesToEmpty,
  NotGcm,
  TooLarge,
  ChainMismatch,
  NotElementary,
  MissingPair,
  NoRelation,
  NotSymmetrizable,
  NotAffine,
  NotExponentiable,
  NotSquare,
  NotFiniteType,
  BoundExceeded,
  DepthInsufficient,
  SingularSystem,
  DegeneratePairing,
  CarrierMismatch,
  InvalidInput,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qcox
