#include "graphprod/word.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace gp {

namespace {

// Pushes one syllable onto a reduced word, keeping it reduced. The syllable
// amalgamates with the rightmost same-vertex syllable it can shuffle next to,
// and is appended otherwise.
void push_syllable(const ProductSpec& spec, std::vector<Syllable>& w, Syllable s) {
  if (s.element == 0) return;
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    if (w[i].vertex == s.vertex) {
      const int prod = spec.groups[s.vertex].mul(w[i].element, s.element);
      if (prod == 0)
        w.erase(w.begin() + i);
      else
        w[i].element = prod;
      return;
    }
    if (!spec.graph.adjacent(w[i].vertex, s.vertex)) break;
  }
  w.push_back(s);
}

// Greedy lexicographic (Foata-style) form: repeatedly emit the
// smallest-vertex syllable among those that can shuffle to the front.
std::vector<Syllable> canonicalize(const ProductSpec& spec, std::vector<Syllable> w) {
  std::vector<Syllable> out;
  out.reserve(w.size());
  while (!w.empty()) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      bool initial = true;
      for (int j = 0; j < i; ++j) {
        if (!spec.graph.adjacent(w[j].vertex, w[i].vertex)) {
          initial = false;
          break;
        }
      }
      if (initial && (best < 0 || w[i].vertex < w[best].vertex)) best = i;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + best);
  }
  return out;
}

std::vector<int> initial_positions(const ProductSpec& spec, const std::vector<Syllable>& w) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    bool initial = true;
    for (int j = 0; j < i; ++j) {
      if (!spec.graph.adjacent(w[j].vertex, w[i].vertex)) {
        initial = false;
        break;
      }
    }
    if (initial) out.push_back(i);
  }
  return out;
}

}  // namespace

GroupElement GroupElement::identity(const ProductSpec& spec) {
  return GroupElement(&spec, {});
}

GroupElement GroupElement::reduce(const ProductSpec& spec, std::vector<Syllable> raw) {
  std::vector<Syllable> w;
  w.reserve(raw.size());
  for (const Syllable& s : raw) {
    if (s.vertex < 0 || s.vertex >= spec.graph.vertex_count)
      throw SpecError("syllable vertex out of range");
    if (s.element < 0 || s.element >= spec.groups[s.vertex].order)
      throw SpecError("syllable element out of range");
    push_syllable(spec, w, s);
  }
  return GroupElement(&spec, canonicalize(spec, std::move(w)));
}

GroupElement GroupElement::parse(const ProductSpec& spec, const std::string& text) {
  std::vector<Syllable> raw;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw SpecError("bad element token: " + tok);
    Syllable s{std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1))};
    if (s.element == 0) throw SpecError("identity syllable in input: " + tok);
    raw.push_back(s);
  }
  return reduce(spec, std::move(raw));
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  if (spec_ != rhs.spec_) throw SpecError("product of elements from different specs");
  std::vector<Syllable> w = word_;
  for (const Syllable& s : rhs.word_) push_syllable(*spec_, w, s);
  return GroupElement(spec_, canonicalize(*spec_, std::move(w)));
}

GroupElement GroupElement::inverse() const {
  std::vector<Syllable> w(word_.rbegin(), word_.rend());
  for (Syllable& s : w) s.element = spec_->groups[s.vertex].inverse(s.element);
  return GroupElement(spec_, canonicalize(*spec_, std::move(w)));
}

bool GroupElement::begins_with(int v) const {
  for (int i = 0; i < static_cast<int>(word_.size()); ++i) {
    if (word_[i].vertex == v) {
      bool initial = true;
      for (int j = 0; j < i; ++j)
        if (!spec_->graph.adjacent(word_[j].vertex, v)) { initial = false; break; }
      return initial;  // an earlier same-vertex syllable would block i anyway
    }
  }
  return false;
}

bool GroupElement::ends_with(int v) const {
  const int n = static_cast<int>(word_.size());
  for (int i = n - 1; i >= 0; --i) {
    if (word_[i].vertex == v) {
      bool final = true;
      for (int j = i + 1; j < n; ++j)
        if (!spec_->graph.adjacent(word_[j].vertex, v)) { final = false; break; }
      return final;
    }
  }
  return false;
}

std::vector<int> GroupElement::d_tail_positions(int d) const {
  const int n = static_cast<int>(word_.size());
  std::vector<int> out;
  if (d <= 0 || n == 0) return out;
  // dependence order: i < j related iff vertices equal or non-adjacent;
  // a syllable sits within the last d positions of some representative iff
  // at most d-1 syllables are forced after it.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) {
      const bool rel = word_[i].vertex == word_[j].vertex ||
                       !spec_->graph.adjacent(word_[i].vertex, word_[j].vertex);
      if (rel) {
        reach[i][j] = true;
        for (int k = j + 1; k < n; ++k)
          if (reach[j][k]) reach[i][k] = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    int forced_after = 0;
    for (int j = i + 1; j < n; ++j)
      if (reach[i][j]) ++forced_after;
    if (forced_after <= d - 1) out.push_back(i);
  }
  return out;
}

std::vector<Syllable> GroupElement::d_tail(int d) const {
  std::vector<Syllable> out;
  for (int i : d_tail_positions(d)) out.push_back(word_[i]);
  return out;
}

std::string GroupElement::str() const {
  if (word_.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out << ' ';
    out << word_[i].vertex << ':' << word_[i].element;
  }
  return out.str();
}

bool GroupElement::operator<(const GroupElement& o) const {
  if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
  return word_ < o.word_;
}

Alignment align(const GroupElement& g, const GroupElement& h) {
  if (&g.spec() != &h.spec()) throw SpecError("alignment of elements from different specs");
  const ProductSpec& spec = g.spec();
  std::vector<Syllable> gw = g.word();
  std::vector<Syllable> hw = h.word();
  Alignment a;
  std::vector<Syllable> prefix;
  // Vertices holding a leftover amalgam syllable at the junction. Any pair
  // matched later has to commute past all of them.
  std::vector<int> residue_vertices;
  const auto allowed = [&](int v) {
    for (int u : residue_vertices)
      if (!spec.graph.adjacent(u, v)) return false;
    return true;
  };
  for (;;) {
    bool progressed = false;
    // exact cancellations first
    for (;;) {
      bool found = false;
      for (int i : initial_positions(spec, gw)) {
        if (!allowed(gw[i].vertex)) continue;
        for (int j : initial_positions(spec, hw)) {
          if (gw[i] == hw[j]) {
            prefix.push_back(gw[i]);
            gw.erase(gw.begin() + i);
            hw.erase(hw.begin() + j);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) break;
      progressed = true;
    }
    // then one amalgamating pair, and rescan
    bool found = false;
    for (int i : initial_positions(spec, gw)) {
      if (!allowed(gw[i].vertex)) continue;
      for (int j : initial_positions(spec, hw)) {
        if (gw[i].vertex == hw[j].vertex) {
          a.amalgams.emplace_back(hw[j], gw[i]);
          const auto& grp = spec.groups[gw[i].vertex];
          if (grp.mul(grp.inverse(hw[j].element), gw[i].element) != 0)
            residue_vertices.push_back(gw[i].vertex);
          gw.erase(gw.begin() + i);
          hw.erase(hw.begin() + j);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (found) progressed = true;
    if (!progressed) break;
  }
  a.q = static_cast<int>(prefix.size());
  a.p = static_cast<int>(a.amalgams.size());
  a.prefix = GroupElement::reduce(spec, prefix);
  a.g_tail = std::move(gw);
  a.h_tail = std::move(hw);
  for (const auto& [hs, gs] : a.amalgams) {
    const auto& grp = spec.groups[hs.vertex];
    if (grp.mul(grp.inverse(hs.element), gs.element) != 0) ++a.nontrivial_amalgams;
  }
  return a;
}

std::vector<GroupElement> enumerate_ball(const ProductSpec& spec, int radius, std::size_t cap) {
  std::vector<GroupElement> out;
  std::unordered_set<std::string> seen;
  std::deque<GroupElement> queue;
  GroupElement e = GroupElement::identity(spec);
  out.push_back(e);
  seen.insert(e.str());
  queue.push_back(e);
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    for (int v = 0; v < spec.graph.vertex_count; ++v) {
      for (int x = 1; x < spec.groups[v].order; ++x) {
        GroupElement n = g * GroupElement::reduce(spec, {{v, x}});
        if (n.reduced_length() > radius) continue;
        if (!seen.insert(n.str()).second) continue;
        out.push_back(n);
        queue.push_back(n);
        if (out.size() > cap)
          throw BallCapError("ball cap exceeded at radius " + std::to_string(radius));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gp
