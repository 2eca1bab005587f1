#pragma once

#include <stdexcept>
#include <string>

namespace swlab {

enum class ErrorKind {
  InvalidArgument,        // malformed input, index out of range, bad parameters
  NotRestricted,          // some coroot pairing outside [0, p-1]
  NotRegular,             // some r_i == p-1
  PreconditionViolation,  // depth / genericity / membership requirement not met
  CardinalityError,       // hypercube collision (contradicts injectivity)
  PresentationError,      // recentering search found zero or several Weyl elements
  MultiplicityError,      // collision inside a graded piece
  MultiplicityViolation,  // repeated constituent in D0
  Internal,               // arithmetic invariant broken
};

const char* to_string(ErrorKind kind);

// Input-side failures map to CLI exit code 2, model failures to 1.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace swlab
