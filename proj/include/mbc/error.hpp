#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace mbc {

enum class ErrorCode {
  range_too_large,
  empty_range,
  invalid_k,
  index_too_large,
  layer_out_of_range,
  verification_failed,
};

const char* error_code_name(ErrorCode code);

// Single exception type for the library. `prime` is set for verification
// failures and names the first prime whose exponent disagrees.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::uint64_t> prime = std::nullopt)
      : std::runtime_error(what), code_(code), prime_(prime) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::uint64_t> prime() const noexcept { return prime_; }

 private:
  ErrorCode code_;
  std::optional<std::uint64_t> prime_;
};

}  // namespace mbc
