#include "graphprod/wall.hpp"

#include <algorithm>
#include <set>

namespace gp {

namespace {

// A syllable can reach the end of the word iff every later syllable sits at
// an adjacent (hence commuting) vertex.
bool movable_to_end(const ProductSpec& spec, const std::vector<Syllable>& w,
                    std::size_t i) {
  for (std::size_t j = i + 1; j < w.size(); ++j) {
    if (!spec.graph.adjacent(w[i].vertex, w[j].vertex)) return false;
  }
  return true;
}

// All commutation-equivalent arrangements of a reduced word.
std::vector<std::vector<Syllable>> shuffle_reps(const ProductSpec& spec,
                                                const std::vector<Syllable>& w) {
  std::set<std::vector<Syllable>> seen{w};
  std::vector<std::vector<Syllable>> frontier{w};
  while (!frontier.empty()) {
    std::vector<std::vector<Syllable>> next;
    for (const auto& cur : frontier) {
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        if (!spec.graph.adjacent(cur[i].vertex, cur[i + 1].vertex)) continue;
        auto swapped = cur;
        std::swap(swapped[i], swapped[i + 1]);
        if (seen.insert(swapped).second) next.push_back(swapped);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Wall canonical_wall(const GroupElement& k, int vertex) {
  const ProductSpec& spec = k.spec();
  GroupElement rep = k;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    const auto& w = rep.word();
    for (std::size_t i = w.size(); i-- > 0;) {
      if (w[i].vertex == vertex || !spec.graph.adjacent(w[i].vertex, vertex)) continue;
      if (!movable_to_end(spec, w, i)) continue;
      auto trimmed = w;
      trimmed.erase(trimmed.begin() + static_cast<std::ptrdiff_t>(i));
      rep = GroupElement::reduce(spec, std::move(trimmed));
      stripped = true;
      break;
    }
  }
  return Wall{rep, vertex};
}

bool member(const GroupElement& g, const Wall& w) {
  return (w.rep.inverse() * g).begins_with(w.vertex);
}

std::vector<Wall> separating_walls(const GroupElement& g, const GroupElement& h) {
  const ProductSpec& spec = g.spec();
  GroupElement u = h.inverse() * g;
  GroupElement e = GroupElement::identity(spec);

  std::set<Wall> walls;
  for (const auto& rep : shuffle_reps(spec, u.word())) {
    GroupElement prefix = e;
    for (const Syllable& s : rep) {
      GroupElement next = prefix * GroupElement::reduce(spec, {s});
      for (const GroupElement& k : {prefix, next}) {
        Wall w = canonical_wall(k, s.vertex);
        if (member(e, w) != member(u, w)) walls.insert(w);
      }
      prefix = next;
    }
  }

  std::vector<Wall> out;
  out.reserve(walls.size());
  for (const Wall& w : walls) out.push_back(canonical_wall(h * w.rep, w.vertex));
  std::sort(out.begin(), out.end());
  return out;
}

int wall_distance(const GroupElement& g, const GroupElement& h) {
  return static_cast<int>(separating_walls(g, h).size());
}

const char* verdict_code(CrossVerdict v) {
  switch (v) {
    case CrossVerdict::Cross:
      return "X";
    case CrossVerdict::ParallelCertified:
      return "P";
    default:
      return "P?r";
  }
}

CrossVerdict crosses(const Wall& a, const Wall& b, int search_radius) {
  const ProductSpec& spec = a.rep.spec();
  // Crossing is invariant under left translation; move a to base position.
  GroupElement shift = a.rep.inverse();
  Wall wa = canonical_wall(shift * a.rep, a.vertex);
  Wall wb = canonical_wall(shift * b.rep, b.vertex);

  if (wa == wb) return CrossVerdict::ParallelCertified;
  if (wa.vertex == wb.vertex) return CrossVerdict::ParallelCertified;
  if (!spec.graph.adjacent(wa.vertex, wb.vertex)) return CrossVerdict::ParallelCertified;
  if (wb.rep.is_identity()) return CrossVerdict::Cross;

  bool region[2][2] = {{false, false}, {false, false}};
  for (const GroupElement& y : enumerate_ball(spec, search_radius)) {
    region[member(y, wa) ? 1 : 0][member(y, wb) ? 1 : 0] = true;
    if (region[0][0] && region[0][1] && region[1][0] && region[1][1]) {
      return CrossVerdict::Cross;
    }
  }
  return CrossVerdict::ParallelUpToRadius;
}

int chi_d(const GroupElement& g, const GroupElement& h, int d) {
  return (h.inverse() * g).reduced_length() == d ? 1 : 0;
}

}  // namespace gp
