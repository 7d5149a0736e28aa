// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace waring {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kZeroDiscriminant,
  kInvalidSpec,
  kDimensionMismatch,
  kBadModulus,
  kResourceLimit,
  kUnsupportedK,
  kUnsupportedOrder,
  kIndexCaveat,
  kNotRepresentable,
  kInternal,
};

// Stable identifier used in JSON output and by the C API.
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace waring
