#include "fbsa/encoding.hpp"

#include <stdexcept>

namespace fbsa {

std::string_view to_string(Encoding encoding) {
  return encoding == Encoding::kInterleaved ? "interleaved" : "adjacent";
}

Encoding parse_encoding(std::string_view text) {
  if (text == "interleaved") return Encoding::kInterleaved;
  if (text == "adjacent") return Encoding::kAdjacent;
  throw std::invalid_argument("unknown encoding '" + std::string(text) +
                              "' (expected interleaved|adjacent)");
}

}  // namespace fbsa
