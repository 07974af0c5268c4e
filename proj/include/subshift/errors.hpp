#pragma once

#include <stdexcept>
#include <string>

namespace subshift {

/// Rejected input (precondition violation on caller-supplied data).
struct input_error : std::invalid_argument {
  explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A matrix/graph fails the primitivity precondition of an eigenvalue routine.
struct not_primitive_error : std::domain_error {
  explicit not_primitive_error(const std::string& msg) : std::domain_error(msg) {}
};

/// A presentation defines an empty subshift.
struct empty_subshift_error : std::domain_error {
  explicit empty_subshift_error(const std::string& msg) : std::domain_error(msg) {}
};

/// Graph carries no cycle, hence no invariant measure.
struct no_cycle_error : std::domain_error {
  explicit no_cycle_error(const std::string& msg) : std::domain_error(msg) {}
};

/// Requested enumeration exceeds the configured cap.
struct enumeration_cap_error : std::runtime_error {
  explicit enumeration_cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structured-text spec file could not be parsed; message carries line/field.
struct spec_parse_error : std::runtime_error {
  explicit spec_parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace subshift
