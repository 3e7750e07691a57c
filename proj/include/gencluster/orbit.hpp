#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gencluster/seed.hpp"

namespace gencluster {

enum class OrbitMode {
  labeled,    ///< seeds are identified only when equal index by index
  unlabeled,  ///< seeds are identified up to a simultaneous permutation of indices
};

struct OrbitOptions {
  std::size_t max_depth = 4;
  OrbitMode mode = OrbitMode::labeled;
  int epsilon = +1;
  /// Worker threads for expanding a BFS level; the result does not depend on it.
  std::size_t threads = 1;
  /// Exploration stops (truncated) once this many nodes are known.
  std::size_t max_nodes = 20000;
};

struct OrbitNode {
  std::size_t depth = 0;
  std::string key;
  Seed seed;
  bool expanded = false;
};

struct OrbitEdge {
  std::size_t from = 0;
  std::size_t direction = 0;  // 0-based
  std::size_t to = 0;
};

/// Node ids are BFS discovery order; children are discovered parent by parent and
/// direction by direction, so the graph is identical for every thread count.
struct OrbitGraph {
  OrbitMode mode = OrbitMode::labeled;
  std::size_t max_depth = 0;
  std::vector<OrbitNode> nodes;
  std::vector<OrbitEdge> edges;
  /// Every node was expanded and no new node appeared: the exchange graph is finite
  /// and this is all of it.
  bool closed = false;
  /// Stopped at max_nodes.
  bool truncated = false;

  /// Distinct clusters as unordered sets of cluster variables.
  std::size_t cluster_count() const;
};

OrbitGraph explore_orbit(const Seed& root, const OrbitOptions& options);

/// Canonical identity of a seed. In unlabeled mode the minimum over all index
/// permutations (rank <= 8).
std::string seed_key(const Seed& seed, OrbitMode mode);

std::uint64_t fnv1a(std::string_view bytes);

std::string orbit_to_dot(const OrbitGraph& graph);
std::string orbit_to_csv(const OrbitGraph& graph);
std::string orbit_to_text(const OrbitGraph& graph);
std::string orbit_to_json(const OrbitGraph& graph);

std::string to_string(OrbitMode mode);

}  // namespace gencluster
