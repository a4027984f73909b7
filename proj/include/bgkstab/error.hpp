// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <stdexcept>
#include <string>

namespace bgk {

enum class Status {
  Ok = 0,
  NonOscillatory,     // no oscillation about the equilibrium level, wave cannot exist
  AmplitudeTooLarge,  // trajectory escapes the potential well (or leaves the profile domain)
  EventNotFound,      // integration exceeded its length budget without the expected event
  Quadrature,         // requested quadrature tolerance not reached
  SpectralOrder,      // eigenvalue ordering / kernel cross-check failed
  IdentityViolation,  // an internal consistency identity failed beyond tolerance
  NoSignChange,       // dispersion scan found no bracket (non-fatal at the scan level)
  Domain,             // argument outside the admissible domain
  Config,             // invalid or malformed run configuration
  Io,                 // file system failure
  Internal,
};

const char* status_name(Status s);

// All library failures are reported through this exception type; the C API
// translates it back into status codes.
class Error : public std::runtime_error {
 public:
  Error(Status code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Status code() const { return code_; }

 private:
  Status code_;
};

[[noreturn]] inline void fail(Status code, const std::string& msg) { throw Error(code, msg); }

}  // namespace bgk
