#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "upse/digraph.hpp"
#include "upse/geometry.hpp"
#include "upse/mapping.hpp"

namespace upse::cli {

/// Canvas geometry in SVG user units.
struct RenderSpec {
  std::int64_t width = 800;
  std::int64_t height = 800;
  std::int64_t margin = 40;
  std::int64_t radius = 5;
  std::int64_t arrow = 10;
  bool labels = false;
};

/// Throws Error(InvalidArgument) unless all sizes are positive and the
/// margins leave a non-empty drawing area.
void validate(const RenderSpec& spec);

/// Standalone SVG. Points become circles; with a mapping every arc becomes a
/// straight arrow from tail to head. The point set is fitted to the canvas
/// with an exact affine map and only converted to decimals when printed.
/// Throws Error(SizeMismatch) / Error(InvalidMapping) for a mapping that does
/// not fit the graph and point set.
std::string render_svg(const Digraph& g, const PointSet& s, const std::optional<Mapping>& m,
                       const RenderSpec& spec);

}  // namespace upse::cli
