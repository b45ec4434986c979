// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#include "imc/error.hpp"

namespace imc {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::CountOutOfRange: return "CountOutOfRange";
    case Errc::FitDiverged: return "FitDiverged";
    case Errc::NonMonotoneFit: return "NonMonotoneFit";
    case Errc::ModelUnfitted: return "ModelUnfitted";
    case Errc::AddressOutOfRange: return "AddressOutOfRange";
    case Errc::WordLengthMismatch: return "WordLengthMismatch";
    case Errc::NotPrecharged: return "NotPrecharged";
    case Errc::NonMonotoneLadder: return "NonMonotoneLadder";
    case Errc::BubbleError: return "BubbleError";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace imc
