#pragma once

#include <stdexcept>
#include <string>

namespace latcut {

enum class Errc {
  CycleDetected,
  NotALattice,
  Unbounded,
  UnknownElement,
  NotAFrame,
  BaseMismatch,
  LatticeMismatch,
  FamilyNotClosed,
  NotAChain,
  EmptyCutSupport,
  InternalInconsistency,
  UnknownPoint,
  BadParameters,
  BoundExceeded,
  InvalidSpace,
  ParseError,
  SchemaError,
};

const char* errc_name(Errc code);

/// Exception carrying a stable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace latcut
