#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace linarr {

/// Validation failure on user-supplied input. `code()` is a stable
/// kebab-case identifier ("parallel-lines", "bad-token", ...); `what()`
/// carries the code followed by any detail.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string code, const std::string& detail = {})
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace linarr
