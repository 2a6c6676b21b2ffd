#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace upse {

struct Arc {
  std::size_t tail = 0;
  std::size_t head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Simple directed graph with unique string labels. Vertex indices follow
/// label order; arc indices follow insertion order.
class Digraph {
 public:
  Digraph() = default;

  /// Throws Error(InvalidArgument) on duplicate labels, unknown endpoints,
  /// self-loops or repeated arcs.
  Digraph(std::vector<std::string> labels, std::vector<Arc> arcs);
  static Digraph from_labels(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& arcs);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const std::vector<std::size_t>& out_neighbors(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_neighbors(std::size_t v) const { return in_[v]; }
  /// Neighbors in the underlying graph, in the order of the arcs joining them.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacent_[v]; }

  /// Same vertices, every arc flipped.
  Digraph reversed() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Arc> arcs_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> adjacent_;
};

struct SourcesAndSinks {
  std::vector<std::size_t> sources;  // in-degree 0, ascending
  std::vector<std::size_t> sinks;    // out-degree 0, ascending
};

SourcesAndSinks sources_and_sinks(const Digraph& g);

bool is_source(const Digraph& g, std::size_t v);
bool is_sink(const Digraph& g, std::size_t v);

/// Underlying undirected graph is connected with |V| - 1 edges (|V| >= 1).
bool is_tree(const Digraph& g);

bool is_acyclic(const Digraph& g);

/// Every vertex is a source or a sink. Throws Error(NotATree).
bool is_switch_tree(const Digraph& g);

/// Number of arcs on a longest directed path. Throws Error(Cyclic).
std::size_t longest_directed_path_length(const Digraph& g);

bool is_path_dag(const Digraph& g);
bool is_monotone_path(const Digraph& g);

enum class AttachmentDirection {
  TowardRemoved,  // arc (r_i, u)
  AwayFromRemoved  // arc (u, r_i)
};

struct Subtree {
  std::vector<std::size_t> vertices;  // ascending
  std::size_t attachment = 0;         // r_i, the neighbor of the removed vertex
  AttachmentDirection direction = AttachmentDirection::TowardRemoved;
};

struct TreeDecomposition {
  std::size_t removed_vertex = 0;
  std::vector<Subtree> subtrees;  // in the order of the arcs incident to removed_vertex
};

/// Components of T - u. Throws Error(NotATree), Error(InvalidArgument) for a
/// bad vertex index.
TreeDecomposition decompose_at(const Digraph& g, std::size_t u);

}  // namespace upse
