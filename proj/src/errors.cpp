#include "latcut/errors.hpp"

namespace latcut {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::NotALattice: return "NotALattice";
    case Errc::Unbounded: return "Unbounded";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::NotAFrame: return "NotAFrame";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::LatticeMismatch: return "LatticeMismatch";
    case Errc::FamilyNotClosed: return "FamilyNotClosed";
    case Errc::NotAChain: return "NotAChain";
    case Errc::EmptyCutSupport: return "EmptyCutSupport";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::UnknownPoint: return "UnknownPoint";
    case Errc::BadParameters: return "BadParameters";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::InvalidSpace: return "InvalidSpace";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace latcut
