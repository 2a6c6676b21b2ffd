#include "upse/digraph.hpp"

#include <algorithm>
#include <set>

#include "upse/error.hpp"

namespace upse {

Digraph::Digraph(std::vector<std::string> labels, std::vector<Arc> arcs)
    : labels_(std::move(labels)), arcs_(std::move(arcs)) {
  const std::size_t n = labels_.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (!index_.emplace(labels_[v], v).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate vertex label '" + labels_[v] + "'");
    }
  }
  out_.resize(n);
  in_.resize(n);
  adjacent_.resize(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Arc& a : arcs_) {
    if (a.tail >= n || a.head >= n) throw Error(ErrorKind::InvalidArgument, "arc endpoint out of range");
    if (a.tail == a.head) {
      throw Error(ErrorKind::InvalidArgument, "self-loop at '" + labels_[a.tail] + "'");
    }
    if (!seen.emplace(a.tail, a.head).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "repeated arc ('" + labels_[a.tail] + "', '" + labels_[a.head] + "')");
    }
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
    adjacent_[a.tail].push_back(a.head);
    adjacent_[a.head].push_back(a.tail);
  }
}

Digraph Digraph::from_labels(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& arcs) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < labels.size(); ++v) index.emplace(labels[v], v);
  std::vector<Arc> resolved;
  resolved.reserve(arcs.size());
  for (const auto& [tail, head] : arcs) {
    auto t = index.find(tail);
    auto h = index.find(head);
    if (t == index.end() || h == index.end()) {
      throw Error(ErrorKind::InvalidArgument, "arc ('" + tail + "', '" + head + "') names an unknown vertex");
    }
    resolved.push_back({t->second, h->second});
  }
  return Digraph(std::move(labels), std::move(resolved));
}

std::optional<std::size_t> Digraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Digraph Digraph::reversed() const {
  std::vector<Arc> flipped;
  flipped.reserve(arcs_.size());
  for (const Arc& a : arcs_) flipped.push_back({a.head, a.tail});
  return Digraph(labels_, std::move(flipped));
}

SourcesAndSinks sources_and_sinks(const Digraph& g) {
  SourcesAndSinks out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.in_neighbors(v).empty()) out.sources.push_back(v);
    if (g.out_neighbors(v).empty()) out.sinks.push_back(v);
  }
  return out;
}

bool is_source(const Digraph& g, std::size_t v) { return g.in_neighbors(v).empty(); }
bool is_sink(const Digraph& g, std::size_t v) { return g.out_neighbors(v).empty(); }

bool is_tree(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || g.arc_count() != n - 1) return false;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

namespace {

// Kahn's algorithm; returns fewer than |V| vertices iff the graph has a cycle.
std::vector<std::size_t> topological_order(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indegree(n);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    indegree[v] = g.in_neighbors(v).size();
    if (indegree[v] == 0) order.push_back(v);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t w : g.out_neighbors(order[k])) {
      if (--indegree[w] == 0) order.push_back(w);
    }
  }
  return order;
}

}  // namespace

bool is_acyclic(const Digraph& g) { return topological_order(g).size() == g.vertex_count(); }

bool is_switch_tree(const Digraph& g) {
  if (!is_tree(g)) throw Error(ErrorKind::NotATree, "underlying graph is not a tree");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!is_source(g, v) && !is_sink(g, v)) return false;
  }
  return true;
}

std::size_t longest_directed_path_length(const Digraph& g) {
  const auto order = topological_order(g);
  if (order.size() != g.vertex_count()) throw Error(ErrorKind::Cyclic, "graph has a directed cycle");
  std::vector<std::size_t> ending_at(g.vertex_count(), 0);
  std::size_t best = 0;
  for (std::size_t v : order) {
    for (std::size_t w : g.out_neighbors(v)) {
      ending_at[w] = std::max(ending_at[w], ending_at[v] + 1);
      best = std::max(best, ending_at[w]);
    }
  }
  return best;
}

bool is_path_dag(const Digraph& g) {
  if (!is_tree(g)) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbors(v).size() > 2) return false;
  }
  return true;
}

bool is_monotone_path(const Digraph& g) {
  if (!is_path_dag(g)) return false;
  if (g.vertex_count() == 1) return true;
  // Walk from the unique vertex without in-arcs along out-arcs only.
  const auto ends = sources_and_sinks(g);
  if (ends.sources.size() != 1) return false;
  std::size_t v = ends.sources.front();
  std::size_t visited = 1;
  while (g.out_neighbors(v).size() == 1) {
    v = g.out_neighbors(v).front();
    ++visited;
  }
  return visited == g.vertex_count();
}

TreeDecomposition decompose_at(const Digraph& g, std::size_t u) {
  if (u >= g.vertex_count()) throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
  if (!is_tree(g)) throw Error(ErrorKind::NotATree, "underlying graph is not a tree");

  TreeDecomposition out;
  out.removed_vertex = u;
  std::vector<bool> seen(g.vertex_count(), false);
  seen[u] = true;
  for (const Arc& a : g.arcs()) {
    if (a.tail != u && a.head != u) continue;
    Subtree sub;
    sub.attachment = a.tail == u ? a.head : a.tail;
    sub.direction = a.tail == u ? AttachmentDirection::AwayFromRemoved
                                : AttachmentDirection::TowardRemoved;
    std::vector<std::size_t> stack{sub.attachment};
    seen[sub.attachment] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      sub.vertices.push_back(v);
      for (std::size_t w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(sub.vertices.begin(), sub.vertices.end());
    out.subtrees.push_back(std::move(sub));
  }
  return out;
}

}  // namespace upse
