#pragma once

#include <cstddef>
#include <vector>

namespace upse {

/// A candidate drawing: assignment[v] is the point index of vertex v.
struct Mapping {
  std::vector<std::size_t> assignment;

  std::size_t size() const { return assignment.size(); }
  std::size_t operator[](std::size_t v) const { return assignment[v]; }

  friend bool operator==(const Mapping&, const Mapping&) = default;
};

}  // namespace upse
