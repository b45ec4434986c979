// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IMC_ERROR_HPP
#define IMC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace imc {

enum class Errc {
  CountOutOfRange,
  FitDiverged,
  NonMonotoneFit,
  ModelUnfitted,
  AddressOutOfRange,
  WordLengthMismatch,
  NotPrecharged,
  NonMonotoneLadder,
  BubbleError,
  ConfigInvalid,
  ParseError,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc kinds above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace imc

#endif  // IMC_ERROR_HPP
