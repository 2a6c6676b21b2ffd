#pragma once

#include <cstddef>

#include "upse/digraph.hpp"
#include "upse/geometry.hpp"
#include "upse/mapping.hpp"

namespace upse {

// Constructive upward straight-line embeddings of switch trees into convex
// point sets. Every function validates its preconditions and throws
// upse::Error with the matching ErrorKind (NotSwitchTree, NotSink/NotSource,
// SizeMismatch, NotGeneralPosition, NotConvex, NotOneSided).

/// r is a sink, S one-sided; r lands on t(S).
Mapping embed_one_sided_sink(const Digraph& tree, std::size_t root, const PointSet& points);

/// r is a source, S one-sided; r lands on b(S).
Mapping embed_one_sided_source(const Digraph& tree, std::size_t root, const PointSet& points);

/// r is a sink, S any convex point set; r lands on t(S).
///
/// Subtrees hanging off r are packed top-down on the left chain of S in arc
/// order while they fit. The first one that does not fit becomes the
/// residual subtree and every later one goes on the right chain. The
/// residual subtree takes the remaining consecutive block around b(S),
/// where its root (a source) is handled symmetrically with t of the block
/// counting as part of its left chain. The root lands on the lower end of
/// what is left after packing, and the last residual subtree recurses onto
/// the rest. Violations of the block-consecutiveness guarantee raise
/// InternalNonConsecutiveResidual.
Mapping embed_convex_sink(const Digraph& tree, std::size_t root, const PointSet& points);

/// Any switch tree into any convex point set of the same size. Roots the
/// construction at the lowest-indexed sink.
Mapping embed_switch_tree(const Digraph& tree, const PointSet& points);

}  // namespace upse
