#pragma once

#include <stdexcept>
#include <string>

namespace mm {

enum class Errc {
  BadArgument,
  ParseError,
  Io,
  DimMismatch,
  AsymmetricInput,
  NonFinite,
  NotPositiveDefinite,
  NotPositiveSemidefinite,
  NoConvergence,
  DegenerateWeight,
  SingularSystem,
  NonFiniteResult,
  UnknownName,
};

/// Library-wide error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace mm
