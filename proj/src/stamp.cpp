#include "sessiongraph/stamp.hpp"

namespace sg {

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string to_hex64(std::uint64_t value) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::string FileStamp::text(std::string_view kind) const {
  return "sessiongraph " + std::string(kind) + " schema=" + std::to_string(schema_version) +
         " config=" + config_hash;
}

std::string FileStamp::comment_line(std::string_view kind) const { return "# " + text(kind); }

}  // namespace sg
