// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMAC_ERRORS_HPP
#define QMAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmac {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateLabel : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct BadPermutation : Error { using Error::Error; };
struct LayoutMismatch : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct LabelCollision : Error { using Error::Error; };
struct SizeOverflow : Error { using Error::Error; };
struct BadProbability : Error { using Error::Error; };
struct BadDistribution : Error { using Error::Error; };
struct OverlappingSubsystems : Error { using Error::Error; };
struct NotClassicalConditioner : Error { using Error::Error; };
struct CompletenessViolation : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvalidState : Error { using Error::Error; };

}  // namespace qmac

#endif
