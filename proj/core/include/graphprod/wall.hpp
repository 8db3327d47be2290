#pragma once

#include <string>
#include <vector>

#include "graphprod/word.hpp"

namespace gp {

/// Half-space k*A_v, held intensionally as (reduced wall representative, v).
/// The representative never ends with a link(v) syllable.
struct Wall {
  GroupElement rep;
  int vertex = 0;

  bool operator==(const Wall& o) const { return vertex == o.vertex && rep == o.rep; }
  bool operator<(const Wall& o) const {
    if (vertex != o.vertex) return vertex < o.vertex;
    return rep < o.rep;
  }
  std::string str() const { return "(" + rep.str() + ")|" + std::to_string(vertex); }
};

/// Unique minimal representative: strips final link(v) syllables to fixpoint.
Wall canonical_wall(const GroupElement& k, int vertex);

/// g in k*A_v, i.e. k^{-1} g begins with G_v.
bool member(const GroupElement& g, const Wall& w);

/// Canonical walls separating g and h; exactly 2|h^{-1}g|_r of them.
std::vector<Wall> separating_walls(const GroupElement& g, const GroupElement& h);

int wall_distance(const GroupElement& g, const GroupElement& h);

enum class CrossVerdict { Cross, ParallelCertified, ParallelUpToRadius };

const char* verdict_code(CrossVerdict v);  // "X", "P", "P?r"

/// Crossing of two walls. Certified fast paths cover equal walls, equal or
/// non-adjacent vertices, and shared-representative adjacent vertices; the
/// rest is a four-intersection search over the radius-search_radius ball.
CrossVerdict crosses(const Wall& a, const Wall& b, int search_radius);

/// 1 iff |h^{-1}g|_r = d.
int chi_d(const GroupElement& g, const GroupElement& h, int d);

}  // namespace gp
