#include "upse/embedder.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "upse/error.hpp"

namespace upse {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct RootedTree {
  std::vector<std::size_t> parent;
  std::vector<std::vector<std::size_t>> children;  // arc order at each vertex
  std::vector<std::size_t> size;
};

RootedTree root_at(const Digraph& g, std::size_t root) {
  const std::size_t n = g.vertex_count();
  RootedTree t;
  t.parent.assign(n, kNone);
  t.children.resize(n);
  t.size.assign(n, 1);
  std::vector<std::size_t> order{root};
  std::vector<bool> seen(n, false);
  seen[root] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t v = order[k];
    for (std::size_t w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      t.parent[w] = v;
      t.children[v].push_back(w);
      order.push_back(w);
    }
  }
  for (std::size_t k = order.size(); k-- > 1;) t.size[t.parent[order[k]]] += t.size[order[k]];
  return t;
}

[[noreturn]] void internal(const std::string& what) {
  throw Error(ErrorKind::InternalNonConsecutiveResidual, what);
}

// Hull chains of a consecutive block given in counterclockwise order.
struct Chains {
  std::size_t top = 0;
  std::size_t bottom = 0;
  std::vector<std::size_t> left;   // descending y, strictly between top and bottom
  std::vector<std::size_t> right;  // descending y, strictly between top and bottom
};

class Embedder {
 public:
  Embedder(const Digraph& g, const PointSet& points, std::size_t root)
      : points_(points), tree_(root_at(g, root)) {
    mapping_.assignment.assign(g.vertex_count(), kNone);
    used_.assign(points.size(), false);
  }

  void use_hull_order(std::vector<std::size_t> order) { hull_order_ = std::move(order); }

  std::vector<std::size_t> ascending(std::vector<std::size_t> pts) const {
    std::sort(pts.begin(), pts.end(),
              [&](std::size_t a, std::size_t b) { return points_[a].y < points_[b].y; });
    return pts;
  }

  // Sink at the top; each child subtree takes the highest free points with
  // its root (a source) at the bottom of its block.
  void one_sided_sink(std::size_t v, std::span<const std::size_t> asc) {
    expect_size(v, asc.size());
    place(v, asc.back());
    std::size_t hi = asc.size() - 1;
    for (std::size_t c : tree_.children[v]) {
      const std::size_t s = tree_.size[c];
      one_sided_source(c, asc.subspan(hi - s, s));
      hi -= s;
    }
  }

  void one_sided_source(std::size_t v, std::span<const std::size_t> asc) {
    expect_size(v, asc.size());
    place(v, asc.front());
    std::size_t lo = 1;
    for (std::size_t c : tree_.children[v]) {
      const std::size_t s = tree_.size[c];
      one_sided_sink(c, asc.subspan(lo, s));
      lo += s;
    }
  }

  void convex_sink(std::size_t v, const std::vector<std::size_t>& ccw) {
    expect_size(v, ccw.size());
    if (ccw.size() == 1) {
      place(v, ccw.front());
      return;
    }
    Chains ch = split(ccw);
    if (ch.left.empty() || ch.right.empty()) {
      const auto asc = ascending(ccw);
      one_sided_sink(v, asc);
      return;
    }
    place(v, ch.top);
    const auto [li, ri, residual] = pack(v, ch.left, ch.right, /*children_are_sources=*/true);
    if (residual == kNone) internal("no residual subtree below a two-sided sink");
    auto rest = remainder(ch.left, li, ch.bottom, ch.right, ri);
    check_block(rest, tree_.size[residual]);
    source_stage(residual, rest);
  }

  // v is a source whose subtree must fill the block ccw, a run of consecutive
  // hull points listed counterclockwise. The parent sits outside the run, so
  // the chains run from each end of the run down to its lowest point.
  void source_stage(std::size_t v, const std::vector<std::size_t>& ccw) {
    expect_size(v, ccw.size());
    if (ccw.size() == 1) {
      place(v, ccw.front());
      return;
    }
    Chains ch = split_run(ccw);

    const auto [li, ri, residual] = pack(v, ch.left, ch.right, /*children_are_sources=*/false);
    auto rest = remainder(ch.left, li, ch.bottom, ch.right, ri);

    if (residual == kNone) {
      if (rest.size() != 1) internal("source block left unfilled");
      place(v, ch.bottom);
      return;
    }
    check_block(rest, tree_.size[residual] + 1);
    if (li == ch.left.size() || ri == ch.right.size()) {
      // b(block) ends the residual block: the remainder is a single chain.
      place(v, ch.bottom);
      if (rest.front() == ch.bottom) {
        rest.erase(rest.begin());
      } else {
        rest.pop_back();
      }
    } else {
      // Map v to the lower of the two block ends, recurse on the rest whose
      // top is the higher end.
      const bool front_lower = points_[rest.front()].y < points_[rest.back()].y;
      if (front_lower) {
        place(v, rest.front());
        rest.erase(rest.begin());
      } else {
        place(v, rest.back());
        rest.pop_back();
      }
    }
    check_block(rest, tree_.size[residual]);
    convex_sink(residual, rest);
  }

  Mapping take() {
    for (std::size_t p : mapping_.assignment) {
      if (p == kNone) internal("vertex left unmapped");
    }
    return std::move(mapping_);
  }

 private:
  struct Packing {
    std::size_t left_used;
    std::size_t right_used;
    std::size_t residual;
  };

  // Greedy placement of v's children: top-down on `left` while they fit; the
  // first misfit is the residual, every later child goes top-down on `right`.
  Packing pack(std::size_t v, const std::vector<std::size_t>& left,
               const std::vector<std::size_t>& right, bool children_are_sources) {
    std::size_t li = 0;
    std::size_t ri = 0;
    std::size_t residual = kNone;
    for (std::size_t c : tree_.children[v]) {
      const std::size_t s = tree_.size[c];
      std::vector<std::size_t> block;
      if (residual == kNone && s <= left.size() - li) {
        block.assign(left.begin() + li, left.begin() + li + s);
        li += s;
      } else if (residual == kNone) {
        residual = c;
        continue;
      } else {
        if (s > right.size() - ri) internal("subtree after the residual does not fit on the right chain");
        block.assign(right.begin() + ri, right.begin() + ri + s);
        ri += s;
      }
      std::reverse(block.begin(), block.end());
      if (children_are_sources) {
        one_sided_source(c, block);
      } else {
        one_sided_sink(c, block);
      }
    }
    return {li, ri, residual};
  }

  static std::vector<std::size_t> remainder(const std::vector<std::size_t>& left, std::size_t li,
                                            std::size_t bottom,
                                            const std::vector<std::size_t>& right, std::size_t ri) {
    std::vector<std::size_t> rest(left.begin() + li, left.end());
    rest.push_back(bottom);
    rest.insert(rest.end(), right.rbegin(), right.rend() - ri);
    return rest;
  }

  Chains split(const std::vector<std::size_t>& ccw) const {
    const std::size_t n = ccw.size();
    std::size_t kt = 0;
    std::size_t kb = 0;
    for (std::size_t k = 1; k < n; ++k) {
      if (points_[ccw[k]].y > points_[ccw[kt]].y) kt = k;
      if (points_[ccw[k]].y < points_[ccw[kb]].y) kb = k;
    }
    Chains ch;
    ch.top = ccw[kt];
    ch.bottom = ccw[kb];
    const std::size_t bpos = (kb + n - kt) % n;
    for (std::size_t i = 1; i < bpos; ++i) ch.left.push_back(ccw[(kt + i) % n]);
    for (std::size_t i = n - 1; i > bpos; --i) ch.right.push_back(ccw[(kt + i) % n]);
    return ch;
  }

  // Chains of a run: left descends from the first point, right from the last;
  // top is the higher end and also heads its chain.
  Chains split_run(const std::vector<std::size_t>& ccw) const {
    std::size_t kb = 0;
    for (std::size_t k = 1; k < ccw.size(); ++k) {
      if (points_[ccw[k]].y < points_[ccw[kb]].y) kb = k;
    }
    Chains ch;
    ch.bottom = ccw[kb];
    ch.left.assign(ccw.begin(), ccw.begin() + kb);
    ch.right.assign(ccw.rbegin(), ccw.rend() - kb - 1);
    ch.top = points_[ccw.front()].y > points_[ccw.back()].y ? ccw.front() : ccw.back();
    return ch;
  }

  void check_block(const std::vector<std::size_t>& block, std::size_t expected) const {
    if (block.size() != expected) {
      internal("residual block has " + std::to_string(block.size()) + " points, subtree needs " +
               std::to_string(expected));
    }
    if (!hull_order_.empty() && !is_consecutive_in_order(block, hull_order_)) {
      internal("residual block is not consecutive on the hull");
    }
  }

  void expect_size(std::size_t v, std::size_t points) const {
    if (tree_.size[v] != points) {
      internal("subtree of size " + std::to_string(tree_.size[v]) + " assigned " +
               std::to_string(points) + " points");
    }
  }

  void place(std::size_t v, std::size_t p) {
    if (mapping_.assignment[v] != kNone || used_[p]) internal("point or vertex assigned twice");
    mapping_.assignment[v] = p;
    used_[p] = true;
  }

  const PointSet& points_;
  RootedTree tree_;
  std::vector<std::size_t> hull_order_;
  Mapping mapping_;
  std::vector<bool> used_;
};

enum class RootRole { Sink, Source };

void validate(const Digraph& tree, std::size_t root, RootRole role, const PointSet& points) {
  bool switch_tree = false;
  try {
    switch_tree = is_switch_tree(tree);
  } catch (const Error&) {
    throw Error(ErrorKind::NotSwitchTree, "graph is not a tree, hence not a switch tree");
  }
  if (!switch_tree) throw Error(ErrorKind::NotSwitchTree, "some vertex is neither a source nor a sink");
  if (root >= tree.vertex_count()) throw Error(ErrorKind::InvalidArgument, "root index out of range");
  if (role == RootRole::Sink && !is_sink(tree, root)) {
    throw Error(ErrorKind::NotSink, "root '" + tree.label(root) + "' is not a sink");
  }
  if (role == RootRole::Source && !is_source(tree, root)) {
    throw Error(ErrorKind::NotSource, "root '" + tree.label(root) + "' is not a source");
  }
  if (tree.vertex_count() != points.size()) {
    throw Error(ErrorKind::SizeMismatch, "tree has " + std::to_string(tree.vertex_count()) +
                                             " vertices but the point set has " +
                                             std::to_string(points.size()) + " points");
  }
  if (!is_general_position(points)) {
    throw Error(ErrorKind::NotGeneralPosition, "point set is not in general position");
  }
  if (points.size() >= 3 && !is_convex_position(points)) {
    throw Error(ErrorKind::NotConvex, "point set is not in convex position");
  }
}

void require_one_sided(const PointSet& points) {
  if (is_one_sided(points) == Sidedness::TwoSided) {
    throw Error(ErrorKind::NotOneSided, "point set is two-sided");
  }
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

Mapping embed_one_sided_sink(const Digraph& tree, std::size_t root, const PointSet& points) {
  validate(tree, root, RootRole::Sink, points);
  require_one_sided(points);
  Embedder e(tree, points, root);
  e.one_sided_sink(root, e.ascending(all_indices(points.size())));
  return e.take();
}

Mapping embed_one_sided_source(const Digraph& tree, std::size_t root, const PointSet& points) {
  validate(tree, root, RootRole::Source, points);
  require_one_sided(points);
  Embedder e(tree, points, root);
  e.one_sided_source(root, e.ascending(all_indices(points.size())));
  return e.take();
}

Mapping embed_convex_sink(const Digraph& tree, std::size_t root, const PointSet& points) {
  validate(tree, root, RootRole::Sink, points);
  Embedder e(tree, points, root);
  auto hull = convex_hull(points);
  e.use_hull_order(hull);
  e.convex_sink(root, hull);
  return e.take();
}

Mapping embed_switch_tree(const Digraph& tree, const PointSet& points) {
  if (tree.vertex_count() == 0) throw Error(ErrorKind::NotSwitchTree, "empty graph");
  const auto ends = sources_and_sinks(tree);
  const std::size_t root = ends.sinks.empty() ? 0 : ends.sinks.front();
  return embed_convex_sink(tree, root, points);
}

}  // namespace upse
