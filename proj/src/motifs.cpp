#include "sessiongraph/motifs.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "sessiongraph/errors.hpp"

namespace sg {

std::string_view color_name(Color color) {
  switch (color) {
    case Color::Victim: return "victim";
    case Color::Bully: return "bully";
    case Color::Defender: return "defender";
  }
  throw Internal("color_name: bad color");
}

SimplifiedGraph SimplifiedGraph::of_size(int n) {
  SimplifiedGraph graph;
  graph.colors.assign(n, Color::Victim);
  graph.adj.assign(static_cast<std::size_t>(n) * n, 0);
  return graph;
}

SimplifiedGraph simplify(const SessionGraph& graph) {
  const int n = static_cast<int>(graph.node_count());
  SimplifiedGraph out = SimplifiedGraph::of_size(n);
  out.session_id = graph.session_id();
  for (int i = 0; i < n; ++i) {
    switch (role_class(graph.nodes()[i].role)) {
      case RoleClass::Victim: out.colors[i] = Color::Victim; break;
      case RoleClass::Bully: out.colors[i] = Color::Bully; break;
      case RoleClass::Defender: out.colors[i] = Color::Defender; break;
    }
  }
  for (const Edge& edge : graph.edges()) {
    out.set_bucket(edge.source, edge.target,
                   edge.weight < kHeavyWeight ? Bucket::Light : Bucket::Heavy);
  }
  return out;
}

std::vector<std::uint8_t> MotifKey::bytes() const {
  std::vector<std::uint8_t> out;
  out.push_back(size_);
  for (int i = 0; i < size_; ++i) out.push_back(colors_[i]);
  const int cells = size_ * size_;
  for (int base = 0; base < cells; base += 4) {
    std::uint8_t packed = 0;
    for (int k = 0; k < 4 && base + k < cells; ++k) {
      packed |= static_cast<std::uint8_t>(cells_[base + k] << (6 - 2 * k));
    }
    out.push_back(packed);
  }
  return out;
}

std::string MotifKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (std::uint8_t byte : bytes()) {
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0xf]);
  }
  return out;
}

MotifKey MotifKey::from_hex(std::string_view text) {
  const auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  if (text.size() % 2 != 0) throw NotAMotif("odd hex key length");
  std::vector<std::uint8_t> bytes;
  for (std::size_t i = 0; i < text.size(); i += 2) {
    const int hi = nibble(text[i]), lo = nibble(text[i + 1]);
    if (hi < 0 || lo < 0) throw NotAMotif("bad hex digit in motif key");
    bytes.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  if (bytes.empty()) throw NotAMotif("empty motif key");
  const int size = bytes[0];
  if (size < 3 || size > 4) throw NotAMotif("motif size must be 3 or 4");
  const int cells = size * size;
  const std::size_t want = 1 + size + (cells + 3) / 4;
  if (bytes.size() != want) throw NotAMotif("motif key length does not match its size");

  MotifKey key;
  key.size_ = static_cast<std::uint8_t>(size);
  for (int i = 0; i < size; ++i) {
    if (bytes[1 + i] > 2) throw NotAMotif("bad color in motif key");
    key.colors_[i] = bytes[1 + i];
  }
  for (int c = 0; c < cells; ++c) {
    const std::uint8_t byte = bytes[1 + size + c / 4];
    const std::uint8_t cell = (byte >> (6 - 2 * (c % 4))) & 0x3;
    if (cell > 2) throw NotAMotif("bad bucket in motif key");
    if (c / size == c % size && cell != 0) throw NotAMotif("self-loop in motif key");
    key.cells_[c] = cell;
  }
  return key;
}

bool weakly_connected(std::span<const std::uint8_t> adj, int n) {
  if (n <= 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (!seen[v] && (adj[u * n + v] || adj[v * n + u])) {
        seen[v] = 1;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  return visited == n;
}

MotifKey canonicalize(std::span<const Color> colors, std::span<const std::uint8_t> adj) {
  const int n = static_cast<int>(colors.size());
  if (n < 3 || n > 4) {
    throw NotAMotif("motif must have 3 or 4 nodes, got " + std::to_string(n));
  }
  if (adj.size() != static_cast<std::size_t>(n) * n) {
    throw Internal("adjacency size does not match node count");
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<std::uint8_t>(colors[i]) > 2) throw Internal("bad color value");
    for (int j = 0; j < n; ++j) {
      if (adj[i * n + j] > 2) throw Internal("bad bucket value");
      if (i == j && adj[i * n + j] != 0) throw Internal("self-loop in motif candidate");
    }
  }
  if (!weakly_connected(adj, n)) {
    throw NotAMotif("motif candidate is not weakly connected");
  }

  // n! <= 24, so exhaustive minimization is exact and cheap.
  std::array<int, 4> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  MotifKey best;
  bool first = true;
  do {
    MotifKey candidate;
    candidate.size_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) {
      candidate.colors_[i] = static_cast<std::uint8_t>(colors[perm[i]]);
      for (int j = 0; j < n; ++j) {
        candidate.cells_[i * n + j] = adj[perm[i] * n + perm[j]];
      }
    }
    if (first || candidate < best) {
      best = candidate;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

MotifKey canonicalize_edges(std::span<const Color> colors,
                            std::span<const std::tuple<int, int, Bucket>> edges) {
  const int n = static_cast<int>(colors.size());
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [source, target, bucket] : edges) {
    adj[source * n + target] = static_cast<std::uint8_t>(bucket);
  }
  return canonicalize(colors, adj);
}

namespace {

/// ESU enumerator for one subgraph size k. Visits every connected k-node
/// subset exactly once by growing subsets only through exclusive neighbors
/// with indices above the root.
class SubsetEnumerator {
 public:
  SubsetEnumerator(const SimplifiedGraph& graph, const std::vector<std::vector<int>>& neighbors,
                   int k, MotifCount& census)
      : graph_(graph), neighbors_(neighbors), k_(k), census_(census),
        in_neighborhood_(graph.n(), 0) {}

  void run() {
    const int n = graph_.n();
    for (int root = 0; root < n; ++root) {
      root_ = root;
      subset_.assign(1, root);
      in_neighborhood_[root] = 1;
      std::vector<int> extension;
      for (int u : neighbors_[root]) {
        if (u > root) extension.push_back(u);
        in_neighborhood_[u] = 1;
      }
      extend(extension);
      in_neighborhood_[root] = 0;
      for (int u : neighbors_[root]) in_neighborhood_[u] = 0;
    }
  }

 private:
  void extend(std::vector<int> extension) {
    if (static_cast<int>(subset_.size()) == k_) {
      record();
      return;
    }
    while (!extension.empty()) {
      const int w = extension.back();
      extension.pop_back();

      std::vector<int> grown = extension;
      std::vector<int> marked;
      for (int u : neighbors_[w]) {
        if (in_neighborhood_[u]) continue;
        in_neighborhood_[u] = 1;
        marked.push_back(u);
        if (u > root_) grown.push_back(u);
      }
      subset_.push_back(w);
      extend(std::move(grown));
      subset_.pop_back();
      for (int u : marked) in_neighborhood_[u] = 0;
    }
  }

  void record() {
    const int k = k_;
    std::array<Color, 4> colors;
    std::array<std::uint8_t, 16> adj{};
    for (int i = 0; i < k; ++i) {
      colors[i] = graph_.colors[subset_[i]];
      for (int j = 0; j < k; ++j) {
        adj[i * k + j] = static_cast<std::uint8_t>(graph_.bucket(subset_[i], subset_[j]));
      }
    }
    const MotifKey key = canonicalize({colors.data(), static_cast<std::size_t>(k)},
                                      {adj.data(), static_cast<std::size_t>(k) * k});
    ++census_[key];
  }

  const SimplifiedGraph& graph_;
  const std::vector<std::vector<int>>& neighbors_;
  const int k_;
  MotifCount& census_;
  std::vector<char> in_neighborhood_;  // subset plus its open neighborhood
  std::vector<int> subset_;
  int root_ = 0;
};

}  // namespace

MotifCount enumerate_motifs(const SimplifiedGraph& graph) {
  MotifCount census;
  const int n = graph.n();
  std::vector<std::vector<int>> neighbors(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (graph.bucket(u, v) != Bucket::None || graph.bucket(v, u) != Bucket::None) {
        neighbors[u].push_back(v);
        neighbors[v].push_back(u);
      }
    }
  }
  for (int k = 3; k <= 4; ++k) {
    if (n < k) break;
    SubsetEnumerator(graph, neighbors, k, census).run();
  }
  return census;
}

std::string motif_to_dot(const MotifKey& key) {
  std::string out = "digraph motif {\n";
  static constexpr std::string_view shapes[] = {"diamond", "circle", "triangle"};
  static constexpr std::string_view fills[] = {"palegreen", "orange", "plum"};
  static constexpr std::string_view letters[] = {"V", "B", "D"};
  for (int i = 0; i < key.size(); ++i) {
    const int c = static_cast<int>(key.color(i));
    out += "  n" + std::to_string(i) + " [label=\"" + std::string(letters[c]) + "\", shape=" +
           std::string(shapes[c]) + ", style=filled, fillcolor=" + std::string(fills[c]) + "];\n";
  }
  for (int u = 0; u < key.size(); ++u) {
    for (int v = 0; v < key.size(); ++v) {
      const Bucket bucket = key.bucket(u, v);
      if (bucket == Bucket::None) continue;
      out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) +
             (bucket == Bucket::Heavy ? " [penwidth=3]" : " [penwidth=1]") + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace sg
