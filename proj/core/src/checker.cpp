#include "upse/checker.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "upse/error.hpp"

namespace upse {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotInjective: return "NotInjective";
    case ViolationKind::ArcNotUpward: return "ArcNotUpward";
    case ViolationKind::ArcsCross: return "ArcsCross";
    case ViolationKind::VertexOnArc: return "VertexOnArc";
  }
  return "Unknown";
}

std::string_view to_string(SolverOutcome outcome) {
  switch (outcome) {
    case SolverOutcome::Embeddable: return "embeddable";
    case SolverOutcome::NotEmbeddable: return "not_embeddable";
    case SolverOutcome::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

namespace {

void check_sizes(const Digraph& g, const PointSet& s) {
  if (g.vertex_count() != s.size()) {
    throw Error(ErrorKind::SizeMismatch, "graph has " + std::to_string(g.vertex_count()) +
                                             " vertices but the point set has " +
                                             std::to_string(s.size()) + " points");
  }
  if (!is_general_position(s)) {
    throw Error(ErrorKind::NotGeneralPosition, "point set is not in general position");
  }
}

}  // namespace

std::vector<Violation> verify_upse(const Digraph& g, const PointSet& s, const Mapping& m) {
  if (m.size() != g.vertex_count()) {
    throw Error(ErrorKind::SizeMismatch, "mapping covers " + std::to_string(m.size()) + " of " +
                                             std::to_string(g.vertex_count()) + " vertices");
  }
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] >= s.size()) {
      throw Error(ErrorKind::InvalidMapping, "vertex '" + g.label(v) + "' mapped to point " +
                                                 std::to_string(m[v]) + " which does not exist");
    }
  }
  check_sizes(g, s);

  std::vector<Violation> out;
  std::map<std::size_t, std::vector<std::size_t>> by_point;
  for (std::size_t v = 0; v < m.size(); ++v) by_point[m[v]].push_back(v);
  for (auto& [point, vertices] : by_point) {
    if (vertices.size() > 1) out.push_back({ViolationKind::NotInjective, vertices, {}});
  }

  const auto& arcs = g.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (!(s[m[arcs[i].tail]].y < s[m[arcs[i].head]].y)) {
      out.push_back({ViolationKind::ArcNotUpward, {}, {i}});
    }
  }
  auto degenerate = [&](const Arc& a) { return m[a.tail] == m[a.head]; };
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (degenerate(arcs[i])) continue;
    const Point& a = s[m[arcs[i].tail]];
    const Point& b = s[m[arcs[i].head]];
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (degenerate(arcs[j])) continue;
      if (segments_cross(a, b, s[m[arcs[j].tail]], s[m[arcs[j].head]])) {
        out.push_back({ViolationKind::ArcsCross, {}, {i, j}});
      }
    }
  }
  // Unreachable in general position, kept so the verifier does not depend on it.
  for (std::size_t w = 0; w < m.size(); ++w) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (arcs[i].tail == w || arcs[i].head == w || degenerate(arcs[i])) continue;
      if (on_open_segment(s[m[w]], s[m[arcs[i].tail]], s[m[arcs[i].head]])) {
        out.push_back({ViolationKind::VertexOnArc, {w}, {i}});
      }
    }
  }
  return out;
}

namespace {

constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

// Lemma-style consecutiveness constraint: the vertices of one component of
// T - u must finish on a run of `length` consecutive hull positions.
struct RunConstraint {
  std::vector<bool> member;  // by vertex
  std::size_t length = 0;
  std::uint64_t inside = 0;   // hull positions taken by members
  std::uint64_t outside = 0;  // hull positions taken by non-members
};

class Search {
 public:
  Search(const Digraph& g, const PointSet& s, const SolverOptions& opts)
      : g_(g), n_(g.vertex_count()), budget_(opts.node_budget) {
    by_y_.resize(n_);
    std::iota(by_y_.begin(), by_y_.end(), std::size_t{0});
    std::sort(by_y_.begin(), by_y_.end(), [&](std::size_t a, std::size_t b) { return s[a].y < s[b].y; });

    orient_.assign(n_ * n_ * n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (b == a) continue;
        for (std::size_t c = 0; c < n_; ++c) {
          if (c == a || c == b) continue;
          const auto o = orientation(s[a], s[b], s[c]);
          orient_[(a * n_ + b) * n_ + c] =
              o == Orientation::Counterclockwise ? 1 : (o == Orientation::Clockwise ? -1 : 0);
        }
      }
    }

    vertex_point_.assign(n_, kFree);
    pending_in_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) pending_in_[v] = g.in_neighbors(v).size();

    if (opts.use_consecutive_pruning && n_ >= 3 && n_ <= 64 && is_tree(g)) {
      const auto hull = convex_hull(s);
      if (hull.size() == n_) setup_pruning(hull);
    }
  }

  bool pruning() const { return !runs_.empty(); }

  SolverOutcome run() {
    switch (extend(0)) {
      case Step::Found: return SolverOutcome::Embeddable;
      case Step::Budget: return SolverOutcome::BudgetExhausted;
      case Step::Exhausted: break;
    }
    return SolverOutcome::NotEmbeddable;
  }

  Mapping mapping() const { return Mapping{vertex_point_}; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  enum class Step { Found, Exhausted, Budget };

  int orient(std::size_t a, std::size_t b, std::size_t c) const {
    return orient_[(a * n_ + b) * n_ + c];
  }

  bool cross(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    if (a == c || a == d || b == c || b == d) return false;
    return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
  }

  void setup_pruning(const std::vector<std::size_t>& hull) {
    hull_pos_.assign(n_, 0);
    for (std::size_t k = 0; k < n_; ++k) hull_pos_[hull[k]] = k;
    windows_.assign(n_ + 1, {});
    for (std::size_t len = 1; len <= n_; ++len) {
      for (std::size_t start = 0; start < n_; ++start) {
        std::uint64_t w = 0;
        for (std::size_t k = 0; k < len; ++k) w |= std::uint64_t{1} << ((start + k) % n_);
        windows_[len].push_back(w);
      }
    }
    for (std::size_t u = 0; u < n_; ++u) {
      for (const auto& sub : decompose_at(g_, u).subtrees) {
        RunConstraint rc;
        rc.member.assign(n_, false);
        for (std::size_t v : sub.vertices) rc.member[v] = true;
        rc.length = sub.vertices.size();
        runs_.push_back(std::move(rc));
      }
    }
  }

  bool runs_feasible() const {
    for (const auto& rc : runs_) {
      bool ok = false;
      for (std::uint64_t w : windows_[rc.length]) {
        if ((w & rc.inside) == rc.inside && (w & rc.outside) == 0) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  bool arcs_clear(std::size_t v, std::size_t p) const {
    for (std::size_t w : g_.in_neighbors(v)) {
      const std::size_t q = vertex_point_[w];
      for (const auto& [a, b] : placed_arcs_) {
        if (cross(q, p, a, b)) return false;
      }
    }
    return true;
  }

  void place(std::size_t v, std::size_t p) {
    vertex_point_[v] = p;
    for (std::size_t w : g_.in_neighbors(v)) placed_arcs_.emplace_back(vertex_point_[w], p);
    for (std::size_t w : g_.out_neighbors(v)) --pending_in_[w];
    if (!runs_.empty()) {
      const std::uint64_t bit = std::uint64_t{1} << hull_pos_[p];
      for (auto& rc : runs_) (rc.member[v] ? rc.inside : rc.outside) |= bit;
    }
  }

  void unplace(std::size_t v, std::size_t p) {
    vertex_point_[v] = kFree;
    placed_arcs_.resize(placed_arcs_.size() - g_.in_neighbors(v).size());
    for (std::size_t w : g_.out_neighbors(v)) ++pending_in_[w];
    if (!runs_.empty()) {
      const std::uint64_t bit = std::uint64_t{1} << hull_pos_[p];
      for (auto& rc : runs_) (rc.member[v] ? rc.inside : rc.outside) &= ~bit;
    }
  }

  Step extend(std::size_t depth) {
    if (depth == n_) return Step::Found;
    const std::size_t p = by_y_[depth];

    std::vector<std::pair<std::size_t, std::size_t>> candidates;  // (-placed neighbors, vertex)
    for (std::size_t v = 0; v < n_; ++v) {
      if (vertex_point_[v] != kFree || pending_in_[v] != 0) continue;
      std::size_t placed = 0;
      for (std::size_t w : g_.neighbors(v)) placed += vertex_point_[w] != kFree;
      candidates.emplace_back(n_ - placed, v);
    }
    std::sort(candidates.begin(), candidates.end());

    for (const auto& [key, v] : candidates) {
      if (!arcs_clear(v, p)) continue;
      if (budget_ && nodes_ >= *budget_) return Step::Budget;
      ++nodes_;
      place(v, p);
      if (runs_.empty() || runs_feasible()) {
        const Step step = extend(depth + 1);
        if (step != Step::Exhausted) return step;
      }
      unplace(v, p);
    }
    return Step::Exhausted;
  }

  const Digraph& g_;
  std::size_t n_;
  std::optional<std::uint64_t> budget_;
  std::vector<std::size_t> by_y_;
  std::vector<std::int8_t> orient_;
  std::vector<std::size_t> vertex_point_;
  std::vector<std::size_t> pending_in_;
  std::vector<std::pair<std::size_t, std::size_t>> placed_arcs_;
  std::vector<std::size_t> hull_pos_;
  std::vector<std::vector<std::uint64_t>> windows_;
  std::vector<RunConstraint> runs_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolverResult decide_upse(const Digraph& g, const PointSet& s, const SolverOptions& opts) {
  check_sizes(g, s);
  if (!is_acyclic(g)) throw Error(ErrorKind::Cyclic, "graph has a directed cycle");

  Search search(g, s, opts);
  SolverResult result;
  result.pruning_applied = search.pruning();
  result.outcome = search.run();
  result.nodes_explored = search.nodes();
  if (result.outcome == SolverOutcome::Embeddable) {
    result.mapping = search.mapping();
    if (!verify_upse(g, s, *result.mapping).empty()) {
      throw std::logic_error("solver produced a mapping the verifier rejects");
    }
  }
  return result;
}

}  // namespace upse
