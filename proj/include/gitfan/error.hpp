#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gitfan {

// Input-validation failure. `code` is a stable machine-readable identifier
// surfaced by the CLI and the Python bindings.
class InputError : public std::invalid_argument {
 public:
  InputError(std::string code, const std::string& message)
      : std::invalid_argument(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace gitfan
