#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ldimkit {

enum class ErrorCategory {
  Parameter,
  Range,
  Contract,
  Io,
  Environment,
  Protocol,
  Decode,
  BoundExceeded,
  Parse,
};

std::string_view category_name(ErrorCategory category);

// All library failures are reported through this one exception type; the CLI
// maps the category onto an exit code and an `ERROR:<category>:` prefix.
class Error : public std::runtime_error {
public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

private:
  ErrorCategory category_;
};

}  // namespace ldimkit
