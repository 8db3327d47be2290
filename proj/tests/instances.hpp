#pragma once

#include "graphprod/graph.hpp"

// The four reference instances used throughout the tests.
namespace inst {

inline gp::ProductSpec pentagon() {
  auto graph = gp::VertexGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  std::vector<gp::VertexGroup> groups(5, gp::cyclic_group(2));
  return gp::make_spec("pentagon-z2", std::move(graph), std::move(groups));
}

inline gp::ProductSpec path_323() {
  auto graph = gp::VertexGraph::from_edges(3, {{0, 1}, {1, 2}});
  std::vector<gp::VertexGroup> groups{gp::cyclic_group(3), gp::cyclic_group(2),
                                      gp::cyclic_group(3)};
  return gp::make_spec("path-z3-z2-z3", std::move(graph), std::move(groups));
}

inline gp::ProductSpec free_23() {
  auto graph = gp::VertexGraph::from_edges(2, {});
  std::vector<gp::VertexGroup> groups{gp::cyclic_group(2), gp::cyclic_group(3)};
  return gp::make_spec("free-z2-z3", std::move(graph), std::move(groups));
}

inline gp::ProductSpec triangle_222() {
  auto graph = gp::VertexGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<gp::VertexGroup> groups(3, gp::cyclic_group(2));
  return gp::make_spec("triangle-z2", std::move(graph), std::move(groups));
}

}  // namespace inst
