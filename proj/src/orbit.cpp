#include "gencluster/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

namespace gencluster {

namespace {

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// Everything attached to index i that does not refer to other indices.
std::string index_part(const Seed& seed, std::size_t i) {
  std::string out = "d" + std::to_string(seed.d()[i]) + "|z";
  for (const auto& c : seed.z()[i]) {
    out += '[';
    for (const auto& [e, m] : c.terms()) out += join_ints(e) + ":" + m.get_str() + ";";
    out += ']';
  }
  out += "|y" + join_ints(seed.y()[i].exponents());
  out += "|x" + to_string(seed.x()[i]);
  return out;
}

std::string render_key(const Seed& seed, const std::vector<std::string>& parts, const std::vector<std::size_t>& perm) {
  const auto n = seed.rank();
  std::string out = "B";
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out += (a || b ? "," : "") + std::to_string(seed.b()(perm[a], perm[b]));
  }
  for (std::size_t a = 0; a < n; ++a) out += "\n" + parts[perm[a]];
  return out;
}

std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 0xf];
  return out;
}

std::string cluster_summary(const Seed& seed) {
  std::string out = "[";
  for (std::size_t i = 0; i < seed.rank(); ++i) out += (i ? ", " : "") + to_string(seed.x()[i]);
  return out + "]";
}

}  // namespace

std::string to_string(OrbitMode mode) { return mode == OrbitMode::labeled ? "labeled" : "unlabeled"; }

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string seed_key(const Seed& seed, OrbitMode mode) {
  const auto n = seed.rank();
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < n; ++i) parts.push_back(index_part(seed, i));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (mode == OrbitMode::labeled) return render_key(seed, parts, perm);
  if (n > 8) throw DomainError("unlabeled orbits support rank at most 8");

  // Minimize over permutations on integer signatures (B entries then part ranks);
  // equal parts get equal ranks, so the minimum is a canonical representative.
  std::vector<std::string> sorted = parts;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::int64_t> part_rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    part_rank[i] = std::lower_bound(sorted.begin(), sorted.end(), parts[i]) - sorted.begin();
  }
  auto signature = [&](const std::vector<std::size_t>& p) {
    std::vector<std::int64_t> sig;
    sig.reserve(n * n + n);
    for (std::size_t a = 0; a < n; ++a) sig.push_back(part_rank[p[a]]);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) sig.push_back(seed.b()(p[a], p[b]));
    }
    return sig;
  };
  auto best = perm;
  auto best_sig = signature(perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto sig = signature(perm);
    if (sig < best_sig) {
      best_sig = std::move(sig);
      best = perm;
    }
  }
  return render_key(seed, parts, best);
}

std::size_t OrbitGraph::cluster_count() const {
  std::set<std::vector<std::string>> clusters;
  for (const auto& node : nodes) {
    std::vector<std::string> xs;
    for (const auto& x : node.seed.x()) xs.push_back(to_string(x));
    std::sort(xs.begin(), xs.end());
    clusters.insert(std::move(xs));
  }
  return clusters.size();
}

OrbitGraph explore_orbit(const Seed& root, const OrbitOptions& options) {
  if (options.epsilon != 1 && options.epsilon != -1) throw DomainError("epsilon must be +1 or -1");
  const auto n = root.rank();
  OrbitGraph graph;
  graph.mode = options.mode;
  graph.max_depth = options.max_depth;
  std::unordered_map<std::string, std::size_t> index;
  graph.nodes.push_back(OrbitNode{0, seed_key(root, options.mode), root, false});
  index.emplace(graph.nodes[0].key, 0);

  std::vector<std::size_t> level{0};
  const MutationOptions mopts{options.epsilon, HatYConvention::column};
  for (std::size_t depth = 0; depth < options.max_depth && !level.empty() && !graph.truncated; ++depth) {
    const std::size_t tasks = level.size() * n;
    std::vector<std::optional<std::pair<Seed, std::string>>> results(tasks);
    std::vector<std::exception_ptr> errors(tasks);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t t; (t = next.fetch_add(1)) < tasks;) {
        try {
          Seed child = mutate(graph.nodes[level[t / n]].seed, t % n, mopts);
          std::string key = seed_key(child, options.mode);
          results[t].emplace(std::move(child), std::move(key));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      }
    };
    const std::size_t workers = std::min(std::max<std::size_t>(options.threads, 1), std::max<std::size_t>(tasks, 1));
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    std::vector<std::size_t> next_level;
    for (std::size_t t = 0; t < tasks; ++t) {
      const auto parent = level[t / n];
      auto& [child, key] = *results[t];
      auto [it, inserted] = index.emplace(key, graph.nodes.size());
      if (inserted) {
        if (graph.nodes.size() >= options.max_nodes) {
          index.erase(it);
          graph.truncated = true;
          continue;
        }
        graph.nodes.push_back(OrbitNode{depth + 1, std::move(key), std::move(child), false});
        next_level.push_back(it->second);
      }
      graph.edges.push_back(OrbitEdge{parent, t % n, it->second});
    }
    if (!graph.truncated) {
      for (auto id : level) graph.nodes[id].expanded = true;
    }
    level = std::move(next_level);
  }
  if (n == 0) {
    for (auto& node : graph.nodes) node.expanded = true;
  }
  graph.closed = !graph.truncated &&
                 std::all_of(graph.nodes.begin(), graph.nodes.end(), [](const OrbitNode& v) { return v.expanded; });
  return graph;
}

std::string orbit_to_dot(const OrbitGraph& graph) {
  std::ostringstream os;
  os << "digraph orbit {\n";
  os << "  // mode=" << to_string(graph.mode) << " max_depth=" << graph.max_depth << " nodes=" << graph.nodes.size()
     << " closed=" << (graph.closed ? "true" : "false") << "\n";
  for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
    os << "  n" << id << " [label=\"" << id << "\", depth=" << graph.nodes[id].depth << ", digest=\""
       << hex64(fnv1a(graph.nodes[id].key)) << "\"];\n";
  }
  for (const auto& e : graph.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.direction + 1 << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string orbit_to_csv(const OrbitGraph& graph) {
  std::ostringstream os;
  os << "record,id,depth,digest,from,direction,to\n";
  for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
    os << "node," << id << ',' << graph.nodes[id].depth << ',' << hex64(fnv1a(graph.nodes[id].key)) << ",,,\n";
  }
  for (const auto& e : graph.edges) os << "edge,,,," << e.from << ',' << e.direction + 1 << ',' << e.to << '\n';
  return os.str();
}

std::string orbit_to_text(const OrbitGraph& graph) {
  std::string all;
  for (const auto& node : graph.nodes) all += node.key + "\n\n";
  std::ostringstream os;
  os << "mode: " << to_string(graph.mode) << '\n';
  os << "max_depth: " << graph.max_depth << '\n';
  os << "nodes: " << graph.nodes.size() << '\n';
  os << "edges: " << graph.edges.size() << '\n';
  os << "clusters: " << graph.cluster_count() << '\n';
  os << "closed: " << (graph.closed ? "yes" : "no") << '\n';
  os << "truncated: " << (graph.truncated ? "yes" : "no") << '\n';
  os << "digest: " << hex64(fnv1a(all)) << '\n';
  for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
    os << "node " << id << " depth " << graph.nodes[id].depth << ' ' << cluster_summary(graph.nodes[id].seed) << '\n';
  }
  for (const auto& e : graph.edges) os << "edge " << e.from << " -" << e.direction + 1 << "-> " << e.to << '\n';
  return os.str();
}

std::string orbit_to_json(const OrbitGraph& graph) {
  nlohmann::ordered_json doc;
  doc["mode"] = to_string(graph.mode);
  doc["max_depth"] = graph.max_depth;
  doc["closed"] = graph.closed;
  doc["truncated"] = graph.truncated;
  doc["clusters"] = graph.cluster_count();
  auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
    const auto& node = graph.nodes[id];
    std::vector<std::string> xs;
    for (const auto& x : node.seed.x()) xs.push_back(to_string(x));
    nodes.push_back({{"id", id}, {"depth", node.depth}, {"digest", hex64(fnv1a(node.key))}, {"x", xs}});
  }
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges) edges.push_back({{"from", e.from}, {"direction", e.direction + 1}, {"to", e.to}});
  return doc.dump(2) + "\n";
}

}  // namespace gencluster
