#include "upse/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "upse/checker.hpp"
#include "upse/error.hpp"

namespace upse {
namespace {

std::vector<std::string> binucci_labels(std::size_t n) {
  std::vector<std::string> labels{"r"};
  for (const char* prefix : {"u", "v", "w"}) {
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  }
  return labels;
}

// Index of x_i in binucci_labels, path 0 = u, 1 = v, 2 = w.
std::size_t path_vertex(std::size_t n, std::size_t path, std::size_t i) {
  return 1 + path * n + (i - 1);
}

// Arcs of one n-vertex path cut into runs of k arcs. Run 0 points towards
// x_1 when first_toward_start is set, later runs alternate.
void add_runs(std::vector<Arc>& arcs, std::size_t n, std::size_t path, std::size_t k,
              bool first_toward_start) {
  for (std::size_t i = 1; i < n; ++i) {
    const bool toward_start = (((i - 1) / k) % 2 == 0) == first_toward_start;
    const std::size_t a = path_vertex(n, path, i);
    const std::size_t b = path_vertex(n, path, i + 1);
    arcs.push_back(toward_start ? Arc{b, a} : Arc{a, b});
  }
}

Digraph runs_tree(std::size_t n, std::size_t k) {
  std::vector<Arc> arcs;
  add_runs(arcs, n, 0, k, true);
  add_runs(arcs, n, 1, k, false);
  add_runs(arcs, n, 2, k, false);
  arcs.push_back({0, path_vertex(n, 0, 1)});
  arcs.push_back({path_vertex(n, 1, 1), 0});
  arcs.push_back({path_vertex(n, 2, 1), 0});
  return Digraph(binucci_labels(n), std::move(arcs));
}

Point circle_point(const Rational& s) {
  const Rational one(1);
  const Rational d = one + s * s;
  return {(one - s * s) / d, Rational(2) * s / d};
}

bool left_heavy_convex(const PointSet& s) {
  if (s.size() < 3) return true;
  if (!is_general_position(s) || !is_convex_position(s)) return false;
  return is_one_sided(s) == Sidedness::LeftHeavy;
}

PointSet pick(const PointSet& s, std::vector<std::size_t> indices) { return s.subset(indices); }

void validate_instance(const PartitionInstance& inst) {
  if (inst.A.empty() || inst.A.size() % 3 != 0) {
    throw Error(ErrorKind::InvalidInstance, "the number of items must be a positive multiple of 3");
  }
  if (inst.B <= 0) throw Error(ErrorKind::InvalidInstance, "bound B must be positive");
  // Keeps every coordinate well inside int64.
  if (inst.B > 1'000'000 || inst.m() * static_cast<std::size_t>(inst.B) > 1'000'000) {
    throw Error(ErrorKind::InvalidInstance, "instance too large (m*B must not exceed 10^6)");
  }
  std::int64_t sum = 0;
  for (std::int64_t a : inst.A) {
    if (a <= 0 || a >= inst.B || !(4 * a > inst.B && 2 * a < inst.B)) {
      throw Error(ErrorKind::InvalidInstance, "item " + std::to_string(a) +
                                                  " is not strictly between B/4 and B/2 for B = " +
                                                  std::to_string(inst.B));
    }
    sum += a;
  }
  if (sum != static_cast<std::int64_t>(inst.m()) * inst.B) {
    throw Error(ErrorKind::InvalidInstance,
                "items sum to " + std::to_string(sum) + ", expected m*B = " +
                    std::to_string(static_cast<std::int64_t>(inst.m()) * inst.B));
  }
}

std::vector<std::vector<std::size_t>> item_paths(const GadgetInstance& g) {
  const std::size_t m = g.instance.m();
  std::vector<std::vector<std::size_t>> paths;
  std::size_t next = 2 + m;
  for (std::int64_t a : g.instance.A) {
    std::vector<std::size_t> path(static_cast<std::size_t>(a));
    std::iota(path.begin(), path.end(), next);
    next += path.size();
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace

Digraph gen_binucci_tree(std::size_t n) {
  if (n < 5 || n % 2 == 0) throw Error(ErrorKind::BadN, "n must be odd and at least 5");
  return runs_tree(n, n - 1);
}

PointSet gen_binucci_pointset(std::size_t n) {
  if (n < 5 || n % 2 == 0) throw Error(ErrorKind::BadN, "n must be odd and at least 5");
  const std::size_t h = (3 * n - 1) / 2;
  const auto param = [&](std::size_t j) {
    return Rational::from_fraction(mpz_class(static_cast<long>(2 * j)),
                                   mpz_class(static_cast<long>(2 * h + 1))) -
           Rational(1);
  };
  std::vector<Point> pts{{Rational(0), Rational(-1)}};
  for (std::size_t i = 1; i <= h; ++i) {
    pts.push_back(circle_point(param(2 * i - 1)));
    Point l = circle_point(param(2 * i));
    l.x = -l.x;
    pts.push_back(l);
  }
  pts.push_back({Rational(0), Rational(1)});
  return PointSet(std::move(pts));
}

Digraph gen_kswitch_tree(std::size_t n, std::size_t k) {
  if (n < 5 || k < 2 || k > n - 1) {
    throw Error(ErrorKind::BadParameters, "need n >= 5 and 2 <= k <= n-1, got n = " +
                                              std::to_string(n) + ", k = " + std::to_string(k));
  }
  Digraph g = runs_tree(n, k);
  if (longest_directed_path_length(g) != k) {
    throw Error(ErrorKind::PropertyCheckFailed, "k-switch tree has the wrong longest path");
  }
  return g;
}

GadgetProperties check_gadget_properties(const GadgetInstance& g) {
  const PointSet& s = g.points;
  const std::size_t m = g.groups.size();
  const Point& b = s[g.b_index];
  const Point& t = s[g.t_index];
  const auto top = [&](std::size_t i) { return g.groups[i].back(); };

  GadgetProperties p;
  p.general_position = is_general_position(s);

  p.groups_left_heavy = true;
  for (const auto& c : g.groups) {
    auto idx = c;
    idx.push_back(g.b_index);
    idx.push_back(g.t_index);
    p.groups_left_heavy = p.groups_left_heavy && left_heavy_convex(pick(s, idx));
  }

  p.groups_stacked = true;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t lo : g.groups[i]) {
      for (std::size_t hi : g.groups[i + 1]) {
        p.groups_stacked = p.groups_stacked && s[lo].y < s[hi].y;
      }
    }
  }

  p.l_lines_separate = true;
  p.f_lines_separate = true;
  for (std::size_t i = 0; i < m; ++i) {
    const Point& apex = s[top(i)];
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t q : g.groups[j]) {
        if (q == top(i)) continue;
        const Side want = j <= i ? Side::Left : Side::Right;
        p.l_lines_separate = p.l_lines_separate && side_of_line(s[q], b, apex) == want;
        if (j >= i) p.f_lines_separate = p.f_lines_separate && side_of_line(s[q], t, apex) == Side::Right;
      }
    }
  }

  std::vector<std::size_t> tops;
  for (std::size_t i = 0; i < m; ++i) tops.push_back(top(i));
  p.tops_left_heavy = left_heavy_convex(pick(s, tops));

  p.b_x_consecutive = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t x : g.groups[j]) {
        auto idx = g.groups[i];
        idx.push_back(g.b_index);
        idx.push_back(x);
        const PointSet sub = pick(s, idx);
        const std::size_t ends[] = {idx.size() - 2, idx.size() - 1};
        p.b_x_consecutive = p.b_x_consecutive && left_heavy_convex(sub) && is_consecutive(ends, sub);
      }
    }
  }
  return p;
}

GadgetInstance gen_gadget(const PartitionInstance& inst) {
  validate_instance(inst);
  const std::size_t m = inst.m();
  const std::int64_t B = inst.B;
  const std::int64_t step = B + 2;

  GadgetInstance g;
  g.instance = inst;

  std::vector<std::string> labels{"s", "t"};
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i <= m; ++i) {
    labels.push_back("u" + std::to_string(i));
    arcs.push_back({0, labels.size() - 1});
    arcs.push_back({labels.size() - 1, 1});
  }
  for (std::size_t i = 0; i < inst.A.size(); ++i) {
    std::size_t prev = 0;
    for (std::int64_t j = 1; j <= inst.A[i]; ++j) {
      labels.push_back("p" + std::to_string(i + 1) + "_" + std::to_string(j));
      arcs.push_back({prev, labels.size() - 1});
      prev = labels.size() - 1;
    }
  }
  g.graph = Digraph(std::move(labels), std::move(arcs));

  // C_{m-i} = {(-j - i(B+2), j^2 - (i(B+2))^2) : j = 1..B+1}. The x-term of
  // b uses max(m, 3): with m <= 2 the closed form puts b too far left for
  // C_i + {b, t} to stay convex.
  const auto sq = [](std::int64_t v) { return v * v; };
  const std::int64_t mb = std::max<std::int64_t>(static_cast<std::int64_t>(m), 3);
  std::vector<Point> pts{{Rational(-sq(B + 1) + sq((mb - 1) * step)),
                          Rational(sq(B + 1) - sq(static_cast<std::int64_t>(m) * step))}};
  for (std::size_t c = 1; c <= m; ++c) {
    const std::int64_t i = static_cast<std::int64_t>(m - c);
    std::vector<std::size_t> group;
    for (std::int64_t j = 1; j <= B + 1; ++j) {
      group.push_back(pts.size());
      pts.push_back({Rational(-j - i * step), Rational(sq(j) - sq(i * step))});
    }
    g.groups.push_back(std::move(group));
  }
  pts.push_back({Rational(0), Rational(sq(static_cast<std::int64_t>(m) * step))});
  g.b_index = 0;
  g.t_index = pts.size() - 1;
  if (pts.size() != g.graph.vertex_count()) {
    throw Error(ErrorKind::PropertyCheckFailed, "gadget point count differs from vertex count");
  }

  // Points of different groups can be collinear. All required properties are
  // strict, so lifting the k-th group point by eps * k^2 for a small enough
  // eps keeps them and breaks the collinear triples.
  g.points = PointSet(pts);
  Rational eps = Rational::from_fraction(1, 4);
  for (int attempt = 0; attempt < 64 && !check_gadget_properties(g).all(); ++attempt) {
    std::vector<Point> lifted = pts;
    for (std::size_t k = 1; k + 1 < lifted.size(); ++k) {
      lifted[k].y += eps * Rational(static_cast<std::int64_t>(k * k));
    }
    g.points = PointSet(std::move(lifted));
    eps /= Rational(2);
  }
  if (!check_gadget_properties(g).all()) {
    throw Error(ErrorKind::PropertyCheckFailed, "gadget point set misses a required property");
  }
  return g;
}

Mapping solution_to_embedding(const GadgetInstance& g, const PartitionSolution& sol) {
  const std::size_t m = g.instance.m();
  if (sol.sets.size() != m) {
    throw Error(ErrorKind::InvalidSolution, "expected " + std::to_string(m) + " triples");
  }
  std::vector<bool> used(g.instance.A.size(), false);
  for (const auto& triple : sol.sets) {
    std::int64_t sum = 0;
    for (std::size_t item : triple) {
      if (item >= used.size() || used[item]) {
        throw Error(ErrorKind::InvalidSolution, "item index " + std::to_string(item) +
                                                    " is out of range or used twice");
      }
      used[item] = true;
      sum += g.instance.A[item];
    }
    if (sum != g.instance.B) {
      throw Error(ErrorKind::InvalidSolution, "a triple sums to " + std::to_string(sum) +
                                                  " instead of " + std::to_string(g.instance.B));
    }
  }

  const auto paths = item_paths(g);
  Mapping out;
  out.assignment.assign(g.graph.vertex_count(), 0);
  out.assignment[0] = g.b_index;
  out.assignment[1] = g.t_index;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& group = g.groups[i];
    out.assignment[2 + i] = group.back();
    std::size_t next = 0;
    for (std::size_t item : sol.sets[i]) {
      for (std::size_t v : paths[item]) out.assignment[v] = group[next++];
    }
  }
  return out;
}

PartitionSolution embedding_to_solution(const GadgetInstance& g, const Mapping& m) {
  const auto violations = verify_upse(g.graph, g.points, m);
  if (!violations.empty()) {
    throw Error(ErrorKind::NotAValidUPSE, "mapping is not an upward planar straight-line embedding (" +
                                              std::to_string(violations.size()) + " violations)");
  }
  const std::size_t groups = g.groups.size();
  std::vector<std::size_t> group_of(g.points.size(), groups);
  for (std::size_t i = 0; i < groups; ++i) {
    for (std::size_t p : g.groups[i]) group_of[p] = i;
  }
  // With m <= 2, t may sit in the top group and leave t(S) to a path vertex;
  // the top group plus t(S) still holds paths of total length B.
  if (groups > 0) group_of[g.t_index] = groups - 1;

  std::vector<std::vector<std::size_t>> items(groups);
  const auto paths = item_paths(g);
  for (std::size_t item = 0; item < paths.size(); ++item) {
    const std::size_t home = group_of[m[paths[item].front()]];
    for (std::size_t v : paths[item]) {
      if (group_of[m[v]] != home || home == groups) {
        throw Error(ErrorKind::ExtractionFailed,
                    "path of item " + std::to_string(item) + " is not drawn inside one group");
      }
    }
    items[home].push_back(item);
  }

  PartitionSolution sol;
  for (std::size_t i = 0; i < groups; ++i) {
    std::int64_t sum = 0;
    for (std::size_t item : items[i]) sum += g.instance.A[item];
    if (items[i].size() != 3 || sum != g.instance.B) {
      throw Error(ErrorKind::ExtractionFailed, "group " + std::to_string(i + 1) + " holds " +
                                                   std::to_string(items[i].size()) +
                                                   " paths of total length " + std::to_string(sum));
    }
    sol.sets.push_back({items[i][0], items[i][1], items[i][2]});
  }
  return sol;
}

}  // namespace upse
