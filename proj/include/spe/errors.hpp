#pragma once

#include <stdexcept>
#include <string>

namespace spe {

/// Bad user-supplied argument (invalid grid size, nonpositive scale, ...).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A field that must carry zero mass does not.
class ZeroMassViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A criterion's hypotheses are not met by the given data.
class CriterionInapplicable : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Profile is identically zero; breaking diagnostics are undefined.
class DegenerateProfile : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// No sign change over the scanned interval.
class NoCrossing : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Time series has no qualifying blow-up tail.
class NotBreaking : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parametric map is not invertible for the requested parameters.
class NotInvertible : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Evaluation requested at or beyond the blow-up time of a closed form.
class BlowupPassed : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace spe
