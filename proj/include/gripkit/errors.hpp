#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gripkit {

/// Base class for all validation/precondition failures in the toolkit.
/// `kind()` is a stable machine-readable tag; `what()` carries the detail.
class MechanicsError : public std::invalid_argument {
 public:
  MechanicsError(std::string kind, const std::string& what)
      : std::invalid_argument(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct NonPositiveInput : MechanicsError {
  explicit NonPositiveInput(const std::string& w) : MechanicsError("NonPositiveInput", w) {}
};

/// Pin spans the clip aperture: no interference, no snap event.
struct ApertureTooWide : MechanicsError {
  explicit ApertureTooWide(const std::string& w) : MechanicsError("ApertureTooWide", w) {}
};

/// Connect pin spans the slotted hole: no interference with the protrusion.
struct SlotTooWide : MechanicsError {
  explicit SlotTooWide(const std::string& w) : MechanicsError("SlotTooWide", w) {}
};

/// Protrusion slope interval is empty or reversed.
struct InvalidSlopeRange : MechanicsError {
  explicit InvalidSlopeRange(const std::string& w) : MechanicsError("InvalidSlopeRange", w) {}
};

struct InvalidStepCount : MechanicsError {
  explicit InvalidStepCount(const std::string& w) : MechanicsError("InvalidStepCount", w) {}
};

/// A structural invariant between fields is broken (not a simple sign error).
struct InvariantViolation : MechanicsError {
  explicit InvariantViolation(const std::string& w) : MechanicsError("InvariantViolation", w) {}
};

struct UnknownParameter : MechanicsError {
  explicit UnknownParameter(const std::string& w) : MechanicsError("UnknownParameter", w) {}
};

struct GridTooLarge : MechanicsError {
  explicit GridTooLarge(const std::string& w) : MechanicsError("GridTooLarge", w) {}
};

/// Design-document syntax/schema problem (missing key, unknown key, bad type).
struct DesignFileError : MechanicsError {
  explicit DesignFileError(const std::string& w) : MechanicsError("DesignFile", w) {}
};

}  // namespace gripkit
