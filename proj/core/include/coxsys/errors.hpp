#pragma once

#include <stdexcept>
#include <string>

namespace coxsys {

// Bad arguments: dimension mismatches, out-of-range exponents, malformed
// input files.  CLI maps these to exit code 2.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Geometrically degenerate input (e.g. normalizing a lightlike vector).
class degenerate_input : public input_error {
 public:
  explicit degenerate_input(const std::string& what) : input_error(what) {}
};

// A Gram matrix whose signature does not embed in the requested space.
class not_realizable : public input_error {
 public:
  explicit not_realizable(const std::string& what) : input_error(what) {}
};

// A postcondition the library guarantees failed to hold numerically.
class internal_check_failure : public std::logic_error {
 public:
  explicit internal_check_failure(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace coxsys
