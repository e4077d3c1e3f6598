#include "markov/explorer.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace markov {

std::optional<std::size_t> ExplorationGraph::find(const Triple& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<std::size_t>> ExplorationGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

ExplorationGraph explore(const Triple& seed, const BigInt& norm_bound) {
  if (norm_bound < norm(seed)) {
    throw std::invalid_argument("explore: norm bound " + to_string(norm_bound) +
                                " is below the seed norm " + to_string(norm(seed)));
  }
  ExplorationGraph g;
  g.norm_bound = norm_bound;

  auto add = [&g](const Triple& t) {
    auto [it, inserted] = g.index_.emplace(t, g.vertices.size());
    if (inserted) g.vertices.push_back(t);
    return inserted;
  };

  add(seed);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const Triple& u : neighbors(g.vertices[v]).vertices) {
      if (add(u) && norm(u) <= norm_bound) queue.push_back(g.vertices.size() - 1);
    }
  }

  const std::size_t n = g.vertices.size();
  g.loop_counts.assign(n, 0);
  g.frontier.assign(n, false);
  g.base_flags.assign(n, false);
  std::set<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    g.frontier[v] = norm(g.vertices[v]) > norm_bound;
    Neighborhood hood = neighbors(g.vertices[v]);
    g.loop_counts[v] = hood.loops;
    for (const Triple& u : hood.vertices) {
      if (auto w = g.find(u)) edges.emplace(std::min(v, *w), std::max(v, *w));
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  g.closed = std::none_of(g.frontier.begin(), g.frontier.end(), [](bool f) { return f; });

  for (const Triple& b : enumerate_bases(seed).bases) {
    if (auto i = g.find(b)) g.base_flags[*i] = true;
  }
  return g;
}

int exact_degree(const ExplorationGraph& g, std::size_t v) {
  return static_cast<int>(neighbors(g.vertices.at(v)).vertices.size());
}

std::optional<std::vector<std::size_t>> find_circuit(const ExplorationGraph& g) {
  const auto adj = g.adjacency();
  const std::size_t n = g.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, none);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);

  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t u : adj[v]) {
        if (u == parent[v]) continue;
        if (!seen[u]) {
          seen[u] = true;
          parent[u] = v;
          depth[u] = depth[v] + 1;
          queue.push_back(u);
          continue;
        }
        // non-tree edge v-u closes a cycle through their common ancestor
        std::vector<std::size_t> left{v};
        std::vector<std::size_t> right{u};
        while (left.back() != right.back()) {
          if (depth[left.back()] >= depth[right.back()]) {
            left.push_back(parent[left.back()]);
          } else {
            right.push_back(parent[right.back()]);
          }
        }
        right.pop_back();
        std::reverse(left.begin(), left.end());
        std::vector<std::size_t> cycle = std::move(left);
        cycle.insert(cycle.end(), right.begin(), right.end());
        return cycle;
      }
    }
  }
  return std::nullopt;
}

std::string StructuralSignature::to_string() const {
  return "{size=" + (finite_size ? std::to_string(*finite_size) : std::string("inf")) +
         ", deg1=" + std::to_string(deg1_count) + ", deg2=" + std::to_string(deg2_count) +
         ", circuit=" + (has_circuit ? "yes" : "no") + "}";
}

std::vector<Triple> two_hop_neighborhood(const BaseSet& bases) {
  std::set<Triple> reached(bases.bases.begin(), bases.bases.end());
  std::vector<Triple> layer = bases.bases;
  for (int hop = 0; hop < 2; ++hop) {
    std::vector<Triple> next;
    for (const Triple& v : layer) {
      for (const Triple& u : neighbors(v).vertices) {
        if (reached.insert(u).second) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  return {reached.begin(), reached.end()};
}

StructuralSignature structural_signature(const Triple& seed) {
  const BaseSet bases = enumerate_bases(seed);
  const std::vector<Triple> near = two_hop_neighborhood(bases);
  BigInt bound = bases.norm;
  for (const Triple& t : near) bound = std::max(bound, BigInt(norm(t)));

  const ExplorationGraph g = explore(bases.bases.front(), bound);

  StructuralSignature sig;
  if (g.closed) sig.finite_size = g.size();
  for (const Triple& t : near) {
    const auto v = g.find(t);
    if (!v) throw std::logic_error("two-hop vertex " + t.to_string() + " missing from exploration");
    const int d = exact_degree(g, *v);
    sig.deg1_count += (d == 1);
    sig.deg2_count += (d == 2);
  }
  sig.has_circuit = find_circuit(g).has_value();
  return sig;
}

GraphClass class_of_signature(const StructuralSignature& sig) {
  if (sig.finite_size) {
    if (*sig.finite_size == 1) return GraphClass::origin;
    if (*sig.finite_size == 2) return GraphClass::zero_pair;
  } else if (sig.has_circuit) {
    return GraphClass::zero_square;
  } else {
    const std::size_t d1 = sig.deg1_count;
    const std::size_t d2 = sig.deg2_count;
    if (d1 == 0 && d2 == 4) return GraphClass::zero_twin;
    if (d1 == 1 && d2 == 1) return GraphClass::all_equal;
    if (d1 == 0 && d2 == 2) return GraphClass::twin;
    if (d1 == 1 && d2 == 0) return GraphClass::twin_loop;
    if (d1 == 0 && d2 == 1) return GraphClass::distinct_loop;
    if (d1 == 0 && d2 == 0) return GraphClass::regular_tree;
  }
  throw std::logic_error("unmatched structural signature " + sig.to_string());
}

GraphClass structural_classify(const Triple& seed) {
  return class_of_signature(structural_signature(seed));
}

}  // namespace markov
