#pragma once

#include <stdexcept>
#include <string>

namespace g2forge {

/// Error taxonomy mirrored by the C API status codes and the CLI exit codes:
/// bad_input -> 2, constraint -> 3.
class Error : public std::runtime_error {
 public:
  enum class Kind { bad_input, constraint, internal };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline Error bad_input(const std::string& msg) { return Error(Error::Kind::bad_input, msg); }
inline Error constraint_error(const std::string& msg) {
  return Error(Error::Kind::constraint, msg);
}

}  // namespace g2forge
