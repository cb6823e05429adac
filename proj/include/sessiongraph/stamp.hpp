#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sg {

/// Version of every file format this library reads or writes.
inline constexpr int kSchemaVersion = 1;

std::uint64_t fnv1a64(std::string_view text);
std::string to_hex64(std::uint64_t value);

/// Schema version plus a hash of the run configuration; stamped into the
/// header of every output file.
struct FileStamp {
  int schema_version = kSchemaVersion;
  std::string config_hash = "0000000000000000";

  /// "sessiongraph <kind> schema=1 config=<hex>".
  std::string text(std::string_view kind) const;

  /// The same, as a "# "-prefixed comment line.
  std::string comment_line(std::string_view kind) const;
};

}  // namespace sg
