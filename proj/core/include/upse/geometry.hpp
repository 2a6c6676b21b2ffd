#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "upse/rational.hpp"

namespace upse {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// An ordered list of pairwise distinct points. Indices are stable and are
/// what every other module refers to.
class PointSet {
 public:
  PointSet() = default;
  /// Throws Error(InvalidArgument) if two points coincide.
  explicit PointSet(std::vector<Point> points);
  PointSet(std::initializer_list<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// The sub-point-set made of the listed indices, in the given order.
  PointSet subset(std::span<const std::size_t> indices) const;

 private:
  std::vector<Point> points_;
};

enum class Orientation { Clockwise, Counterclockwise, Collinear };

/// Sign of (q - p) x (r - p).
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// True iff closed segments ab and cd share a point other than a shared
/// endpoint. Segments touching only at a common endpoint do not cross;
/// collinear overlaps do.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

/// True iff p lies in the relative interior of segment ab.
bool on_open_segment(const Point& p, const Point& a, const Point& b);

/// Strict convex hull (collinear boundary points excluded) as point indices
/// in counterclockwise order, starting from the lowest point (leftmost on
/// ties). One or two points are returned as-is (lowest first).
std::vector<std::size_t> convex_hull(const PointSet& s);

/// No three points collinear and no two points with equal y.
bool is_general_position(const PointSet& s);

/// Every point is a vertex of the hull. Requires |S| >= 3.
bool is_convex_position(const PointSet& s);

/// Index of the lowest / highest point. Requires a non-empty set; ties are
/// broken by the smaller index.
std::size_t lowest_point(const PointSet& s);
std::size_t highest_point(const PointSet& s);

/// Horizontal-ray side of p with respect to the (non-horizontal) line
/// through a and b: Left if p sits on a ray from the line towards -inf in x.
enum class Side { Left, Right, On };
Side side_of_line(const Point& p, const Point& a, const Point& b);

struct SideClassification {
  std::vector<std::size_t> left;   // ascending y
  std::vector<std::size_t> right;  // ascending y
  std::size_t b = 0;
  std::size_t t = 0;
};

/// Splits a convex, general-position set by the line through b(S) and t(S).
/// Sets with fewer than three points are accepted and have both parts empty.
/// Throws Error(NotGeneralPosition) / Error(NotConvex).
SideClassification classify_sides(const PointSet& s);

enum class Sidedness { TwoSided, LeftHeavy, RightHeavy };

/// One-sidedness of a convex set. A set whose two parts are both empty (at
/// most two points) reports LeftHeavy. Throws Error(NotConvex).
Sidedness is_one_sided(const PointSet& s);

/// Number of hull-peeling rounds needed to exhaust S.
std::size_t convex_depth(const PointSet& s);

/// True iff the listed indices occupy a contiguous run of the cyclic hull
/// order of S. Empty and full subsets are consecutive. Throws
/// Error(NotConvex) when S is not in convex position.
bool is_consecutive(std::span<const std::size_t> subset, const PointSet& s);

/// Same test against a precomputed cyclic order (hull_order[k] is the point
/// at hull position k); skips the convexity check.
bool is_consecutive_in_order(std::span<const std::size_t> subset,
                             std::span<const std::size_t> hull_order);

}  // namespace upse
