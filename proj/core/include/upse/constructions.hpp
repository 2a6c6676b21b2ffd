#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "upse/digraph.hpp"
#include "upse/geometry.hpp"
#include "upse/mapping.hpp"

namespace upse {

/// Tree on r, u1..un, v1..vn, w1..wn: P_u = u_n -> ... -> u_1, P_v and P_w
/// run forward from v_1 / w_1, plus (r, u1), (v1, r), (w1, r). Longest
/// directed path is n - 1. Throws Error(BadN) unless n is odd and >= 5.
Digraph gen_binucci_tree(std::size_t n);

/// 3n + 1 points on the unit circle: b = (0,-1), t = (0,1), and h = (3n-1)/2
/// points on each side with y(b) < y(r1) < y(l1) < y(r2) < ... < y(lh) < y(t).
/// Index order is b, r1, l1, r2, l2, ..., t. Throws Error(BadN).
PointSet gen_binucci_pointset(std::size_t n);

/// Same vertex set and r-arcs as gen_binucci_tree, with every path cut into
/// runs of k arcs of alternating direction. The first run on P_u points
/// towards u1, the first runs on P_v and P_w point away from r. Longest
/// directed path is exactly k. Throws Error(BadParameters) unless n >= 5 and
/// 2 <= k <= n - 1.
Digraph gen_kswitch_tree(std::size_t n, std::size_t k);

struct PartitionInstance {
  std::int64_t B = 0;
  std::vector<std::int64_t> A;

  std::size_t m() const { return A.size() / 3; }
};

/// Each entry of sets is a triple of item indices into A (0-based).
struct PartitionSolution {
  std::vector<std::array<std::size_t, 3>> sets;
};

struct GadgetInstance {
  PartitionInstance instance;
  /// Vertices s, t, u1..um, then p{i}_{j} for item i (1-based) and j = 1..a_i.
  Digraph graph;
  /// b, then C_1..C_m (each ascending in y), then t.
  PointSet points;
  /// groups[i] lists the point indices of C_{i+1}, ascending in y.
  std::vector<std::vector<std::size_t>> groups;
  std::size_t b_index = 0;
  std::size_t t_index = 0;
};

/// Geometric properties the gadget point set must satisfy, one flag each.
struct GadgetProperties {
  bool groups_left_heavy = false;   // every C_i + {b, t} is left-heavy convex
  bool groups_stacked = false;      // C_{i+1} entirely above C_i
  bool l_lines_separate = false;    // line b..t(C_i): C_1..C_i left, rest right
  bool f_lines_separate = false;    // line t..t(C_i): C_j, j >= i, right
  bool tops_left_heavy = false;     // {t(C_i)} left-heavy convex
  bool general_position = false;
  bool b_x_consecutive = false;     // C_i + {b, x}, x in C_j, j > i: left-heavy, b and x adjacent

  bool all() const {
    return groups_left_heavy && groups_stacked && l_lines_separate && f_lines_separate &&
           tops_left_heavy && general_position && b_x_consecutive;
  }
};

GadgetProperties check_gadget_properties(const GadgetInstance& g);

/// Throws Error(InvalidInstance) when |A| is not a positive multiple of 3,
/// some a_i is outside (B/4, B/2), or sum(A) != mB. Throws
/// Error(PropertyCheckFailed) if the generated point set misses a property.
GadgetInstance gen_gadget(const PartitionInstance& inst);

/// s -> b, t -> t(S), u_i -> t(C_i); the paths of triple i fill the rest of
/// C_i bottom-to-top in triple order. Throws Error(InvalidSolution).
Mapping solution_to_embedding(const GadgetInstance& g, const PartitionSolution& sol);

/// Groups the item paths of a valid UPSE by the C_i holding them. Triples
/// come out in group order with item indices ascending. Throws
/// Error(NotAValidUPSE) if M is not an UPSE and Error(ExtractionFailed) if
/// the grouping is not a 3-partition.
PartitionSolution embedding_to_solution(const GadgetInstance& g, const Mapping& m);

}  // namespace upse
