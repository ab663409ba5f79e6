#include "mbc/error.hpp"

namespace mbc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::range_too_large: return "RangeTooLarge";
    case ErrorCode::empty_range: return "EmptyRange";
    case ErrorCode::invalid_k: return "InvalidK";
    case ErrorCode::index_too_large: return "IndexTooLarge";
    case ErrorCode::layer_out_of_range: return "LayerOutOfRange";
    case ErrorCode::verification_failed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace mbc
