#include "upse/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "upse/error.hpp"

namespace upse {
namespace {

int cross_sign(const Point& p, const Point& q, const Point& r) {
  const mpq_class lhs = (q.x.value() - p.x.value()) * (r.y.value() - p.y.value());
  const mpq_class rhs = (q.y.value() - p.y.value()) * (r.x.value() - p.x.value());
  return cmp(lhs, rhs);
}

// p is on the closed segment ab, given that p, a, b are collinear.
bool within_box(const Point& p, const Point& a, const Point& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

}  // namespace

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(points_[a], points_[b]);
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points_[order[k - 1]] == points_[order[k]]) {
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate point at indices " + std::to_string(order[k - 1]) + " and " +
                      std::to_string(order[k]));
    }
  }
}

PointSet::PointSet(std::initializer_list<Point> points)
    : PointSet(std::vector<Point>(points)) {}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  std::vector<Point> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(points_.at(i));
  return PointSet(std::move(out));
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const int s = cross_sign(p, q, r);
  if (s > 0) return Orientation::Counterclockwise;
  if (s < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

bool on_open_segment(const Point& p, const Point& a, const Point& b) {
  if (p == a || p == b) return false;
  return cross_sign(a, b, p) == 0 && within_box(p, a, b);
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = cross_sign(a, b, c);
  const int o2 = cross_sign(a, b, d);
  const int o3 = cross_sign(c, d, a);
  const int o4 = cross_sign(c, d, b);

  const bool shares_endpoint = a == c || a == d || b == c || b == d;
  if (!shares_endpoint) {
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return (o1 == 0 && within_box(c, a, b)) || (o2 == 0 && within_box(d, a, b)) ||
           (o3 == 0 && within_box(a, c, d)) || (o4 == 0 && within_box(b, c, d));
  }
  // With a shared endpoint the only extra contact is a collinear overlap.
  if ((a == c && b == d) || (a == d && b == c)) return true;
  if (o1 != 0 || o2 != 0) return false;
  return on_open_segment(c, a, b) || on_open_segment(d, a, b) ||
         on_open_segment(a, c, d) || on_open_segment(b, c, d);
}

std::vector<std::size_t> convex_hull(const PointSet& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(s[a], s[b]); });

  std::vector<std::size_t> hull;
  if (n <= 2) {
    hull = idx;
  } else {
    hull.reserve(2 * n);
    for (std::size_t i : idx) {
      while (hull.size() >= 2 &&
             cross_sign(s[hull[hull.size() - 2]], s[hull.back()], s[i]) <= 0) {
        hull.pop_back();
      }
      hull.push_back(i);
    }
    const std::size_t lower = hull.size() + 1;
    for (std::size_t k = n - 1; k-- > 0;) {
      const std::size_t i = idx[k];
      while (hull.size() >= lower &&
             cross_sign(s[hull[hull.size() - 2]], s[hull.back()], s[i]) <= 0) {
        hull.pop_back();
      }
      hull.push_back(i);
    }
    hull.pop_back();
  }

  auto lowest = std::min_element(hull.begin(), hull.end(), [&](std::size_t a, std::size_t b) {
    return s[a].y < s[b].y || (s[a].y == s[b].y && s[a].x < s[b].x);
  });
  std::rotate(hull.begin(), lowest, hull.end());
  return hull;
}

bool is_general_position(const PointSet& s) {
  const std::size_t n = s.size();
  std::vector<Rational> ys;
  ys.reserve(n);
  for (const auto& p : s) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(ys.begin(), ys.end()) != ys.end()) return false;

  // All y distinct, so every pair has a finite inverse slope dx/dy; a
  // repeated inverse slope from a common point is a collinear triple.
  std::vector<Rational> inv_slopes;
  for (std::size_t i = 0; i < n; ++i) {
    inv_slopes.clear();
    for (std::size_t j = i + 1; j < n; ++j) {
      inv_slopes.push_back((s[j].x - s[i].x) / (s[j].y - s[i].y));
    }
    std::sort(inv_slopes.begin(), inv_slopes.end());
    if (std::adjacent_find(inv_slopes.begin(), inv_slopes.end()) != inv_slopes.end()) {
      return false;
    }
  }
  return true;
}

bool is_convex_position(const PointSet& s) {
  if (s.size() < 3) {
    throw Error(ErrorKind::InvalidArgument, "convex position needs at least 3 points");
  }
  return convex_hull(s).size() == s.size();
}

std::size_t lowest_point(const PointSet& s) {
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty point set");
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].y < s[best].y) best = i;
  }
  return best;
}

std::size_t highest_point(const PointSet& s) {
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty point set");
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].y > s[best].y) best = i;
  }
  return best;
}

Side side_of_line(const Point& p, const Point& a, const Point& b) {
  if (a.y == b.y) throw Error(ErrorKind::InvalidArgument, "side test against a horizontal line");
  const Rational x_on_line = a.x + (b.x - a.x) * ((p.y - a.y) / (b.y - a.y));
  if (p.x < x_on_line) return Side::Left;
  if (p.x > x_on_line) return Side::Right;
  return Side::On;
}

SideClassification classify_sides(const PointSet& s) {
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty point set");
  if (!is_general_position(s)) {
    throw Error(ErrorKind::NotGeneralPosition, "point set is not in general position");
  }
  SideClassification out;
  out.b = lowest_point(s);
  out.t = highest_point(s);
  if (s.size() < 3) return out;
  if (!is_convex_position(s)) throw Error(ErrorKind::NotConvex, "point set is not in convex position");

  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == out.b || i == out.t) continue;
    // General position rules out Side::On.
    (side_of_line(s[i], s[out.b], s[out.t]) == Side::Left ? out.left : out.right).push_back(i);
  }
  auto by_y = [&](std::size_t a, std::size_t b) { return s[a].y < s[b].y; };
  std::sort(out.left.begin(), out.left.end(), by_y);
  std::sort(out.right.begin(), out.right.end(), by_y);
  return out;
}

Sidedness is_one_sided(const PointSet& s) {
  const auto sides = classify_sides(s);
  if (sides.right.empty()) return Sidedness::LeftHeavy;
  if (sides.left.empty()) return Sidedness::RightHeavy;
  return Sidedness::TwoSided;
}

std::size_t convex_depth(const PointSet& s) {
  std::vector<std::size_t> remaining(s.size());
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  std::size_t rounds = 0;
  while (!remaining.empty()) {
    const PointSet layer = s.subset(remaining);
    std::vector<bool> on_hull(remaining.size(), false);
    for (std::size_t k : convex_hull(layer)) on_hull[k] = true;
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      if (!on_hull[k]) next.push_back(remaining[k]);
    }
    remaining = std::move(next);
    ++rounds;
  }
  return rounds;
}

bool is_consecutive_in_order(std::span<const std::size_t> subset,
                             std::span<const std::size_t> hull_order) {
  const std::size_t n = hull_order.size();
  std::vector<std::size_t> position_of;
  for (std::size_t k = 0; k < n; ++k) {
    if (hull_order[k] >= position_of.size()) position_of.resize(hull_order[k] + 1, n);
    position_of[hull_order[k]] = k;
  }
  std::vector<bool> marked(n, false);
  for (std::size_t i : subset) {
    if (i >= position_of.size() || position_of[i] == n) {
      throw Error(ErrorKind::InvalidArgument, "index " + std::to_string(i) + " is not on the hull");
    }
    marked[position_of[i]] = true;
  }
  std::size_t run_starts = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (marked[k] && !marked[(k + n - 1) % n]) ++run_starts;
  }
  return run_starts <= 1;
}

bool is_consecutive(std::span<const std::size_t> subset, const PointSet& s) {
  const auto hull = convex_hull(s);
  if (hull.size() != s.size()) throw Error(ErrorKind::NotConvex, "point set is not in convex position");
  return is_consecutive_in_order(subset, hull);
}

}  // namespace upse
