#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "sessiongraph/graph.hpp"

namespace sg {

/// Node colors of the simplified graph. Numeric values are part of the key
/// encoding and must not change.
enum class Color : std::uint8_t {
  Victim = 0,
  Bully = 1,
  Defender = 2,
};

/// Edge weight buckets. None marks an absent edge in adjacency cells.
enum class Bucket : std::uint8_t {
  None = 0,
  Light = 1,
  Heavy = 2,
};

/// Edges with accumulated weight >= kHeavyWeight bucket as Heavy.
inline constexpr double kHeavyWeight = 2.0;

std::string_view color_name(Color color);

/// Role-aggregated, weight-bucketed view of a SessionGraph. Node order
/// matches the source graph; adjacency is a row-major n*n bucket matrix.
struct SimplifiedGraph {
  std::string session_id;
  std::vector<Color> colors;
  std::vector<std::uint8_t> adj;

  static SimplifiedGraph of_size(int n);

  int n() const { return static_cast<int>(colors.size()); }
  Bucket bucket(int u, int v) const { return static_cast<Bucket>(adj[u * n() + v]); }
  void set_bucket(int u, int v, Bucket b) { adj[u * n() + v] = static_cast<std::uint8_t>(b); }
};

SimplifiedGraph simplify(const SessionGraph& graph);

/// Canonical form of a 3-4 node vertex-colored, edge-bucketed digraph. Two
/// such graphs are isomorphic (color- and bucket-preserving) iff their keys
/// compare equal.
///
/// Byte encoding: size, then one color byte per node, then the row-major
/// adjacency cells packed 2 bits each (none/light/heavy), high bits first.
class MotifKey {
 public:
  MotifKey() = default;

  int size() const { return size_; }
  Color color(int i) const { return static_cast<Color>(colors_[i]); }
  Bucket bucket(int u, int v) const { return static_cast<Bucket>(cells_[u * size_ + v]); }

  std::vector<std::uint8_t> bytes() const;
  std::string hex() const;
  static MotifKey from_hex(std::string_view text);  // throws NotAMotif

  auto operator<=>(const MotifKey&) const = default;

 private:
  friend MotifKey canonicalize(std::span<const Color>, std::span<const std::uint8_t>);

  std::uint8_t size_ = 0;
  std::array<std::uint8_t, 4> colors_{};
  std::array<std::uint8_t, 16> cells_{};  // row-major within size_
};

/// True when the bucket matrix describes a weakly connected digraph.
bool weakly_connected(std::span<const std::uint8_t> adj, int n);

/// Minimizes the (color sequence, adjacency) serialization over all node
/// permutations. Throws NotAMotif for sizes outside 3-4 or disconnected
/// input. Idempotent: canonicalizing a key's own decode returns the key.
MotifKey canonicalize(std::span<const Color> colors, std::span<const std::uint8_t> adj);

/// Convenience wrapper over an explicit directed edge list.
MotifKey canonicalize_edges(std::span<const Color> colors,
                            std::span<const std::tuple<int, int, Bucket>> edges);

/// Per-session motif frequencies f(M, S).
using MotifCount = std::map<MotifKey, long long>;

/// Exact census of all connected (weak) induced subgraphs of sizes 3 and 4,
/// one count per node subset, keyed by canonical form. ESU-style enumeration.
MotifCount enumerate_motifs(const SimplifiedGraph& graph);

/// DOT rendering of a single motif for figure-style inspection.
std::string motif_to_dot(const MotifKey& key);

}  // namespace sg
