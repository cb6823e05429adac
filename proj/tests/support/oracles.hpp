#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "sessiongraph/motifs.hpp"

namespace oracles {

/// Connectivity check independent of the library's: union-find over the
/// undirected projection of the induced subgraph.
inline bool subset_connected(const sg::SimplifiedGraph& graph, const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (graph.bucket(subset[i], subset[j]) != sg::Bucket::None ||
          graph.bucket(subset[j], subset[i]) != sg::Bucket::None) {
        parent[find(i)] = find(j);
      }
    }
  }
  int roots = 0;
  for (int i = 0; i < k; ++i) roots += find(i) == i;
  return roots == 1;
}

inline sg::MotifKey subset_key(const sg::SimplifiedGraph& graph, const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  std::vector<sg::Color> colors(k);
  std::vector<std::uint8_t> adj(k * k, 0);
  for (int i = 0; i < k; ++i) {
    colors[i] = graph.colors[subset[i]];
    for (int j = 0; j < k; ++j) {
      adj[i * k + j] = static_cast<std::uint8_t>(graph.bucket(subset[i], subset[j]));
    }
  }
  return sg::canonicalize(colors, adj);
}

/// Exhaustive census over every 3- and 4-node subset; quadratic-by-subset
/// and oblivious to how the library enumerates.
inline sg::MotifCount brute_force_census(const sg::SimplifiedGraph& graph) {
  sg::MotifCount census;
  const int n = graph.n();
  std::vector<int> subset;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        subset = {a, b, c};
        if (subset_connected(graph, subset)) ++census[subset_key(graph, subset)];
        for (int d = c + 1; d < n; ++d) {
          subset = {a, b, c, d};
          if (subset_connected(graph, subset)) ++census[subset_key(graph, subset)];
          subset.pop_back();
        }
      }
    }
  }
  return census;
}

/// Color- and bucket-preserving isomorphism by trying every bijection;
/// independent of the key encoding it is used to audit.
inline bool brute_force_isomorphic(const sg::SimplifiedGraph& a, const sg::SimplifiedGraph& b) {
  const int n = a.n();
  if (n != b.n()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int i = 0; i < n && match; ++i) {
      if (a.colors[i] != b.colors[perm[i]]) match = false;
      for (int j = 0; j < n && match; ++j) {
        if (a.bucket(i, j) != b.bucket(perm[i], perm[j])) match = false;
      }
    }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracles
