#include "graphprod/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace gp {
namespace oracle {

std::string word_key(const std::vector<Syllable>& w) {
  std::ostringstream out;
  for (const Syllable& s : w) out << s.vertex << ':' << s.element << '|';
  return out.str();
}

std::vector<std::vector<Syllable>> rewrite_steps(const ProductSpec& spec,
                                                 const std::vector<Syllable>& w) {
  std::vector<std::vector<Syllable>> out;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    if (w[i].element == 0) {
      auto u = w;
      u.erase(u.begin() + i);
      out.push_back(std::move(u));
      continue;
    }
    if (i + 1 >= n) continue;
    if (w[i].vertex == w[i + 1].vertex) {
      auto u = w;
      const int prod = spec.groups[w[i].vertex].mul(w[i].element, w[i + 1].element);
      u.erase(u.begin() + i + 1);
      if (prod == 0)
        u.erase(u.begin() + i);
      else
        u[i].element = prod;
      out.push_back(std::move(u));
    } else if (spec.graph.adjacent(w[i].vertex, w[i + 1].vertex)) {
      auto u = w;
      std::swap(u[i], u[i + 1]);
      out.push_back(std::move(u));
    }
  }
  return out;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool word_less(const std::vector<Syllable>& a, const std::vector<Syllable>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void enumerate_words(const ProductSpec& spec, int len, std::vector<Syllable>& cur,
                     std::vector<std::vector<Syllable>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v < spec.graph.vertex_count; ++v) {
    for (int x = 1; x < spec.groups[v].order; ++x) {
      cur.push_back({v, x});
      enumerate_words(spec, len, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<Syllable>> raw_words(const ProductSpec& spec, int len) {
  std::vector<std::vector<Syllable>> out;
  std::vector<Syllable> cur;
  enumerate_words(spec, len, cur, out);
  return out;
}

std::map<std::string, std::string> classify_raw_words(const ProductSpec& spec, int max_len) {
  std::vector<std::vector<Syllable>> words;
  for (int len = 0; len <= max_len; ++len) {
    auto level = raw_words(spec, len);
    words.insert(words.end(), level.begin(), level.end());
  }
  std::unordered_map<std::string, int> index;
  index.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) index[word_key(words[i])] = static_cast<int>(i);
  Dsu dsu(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (const auto& succ : rewrite_steps(spec, words[i])) {
      auto it = index.find(word_key(succ));
      if (it != index.end()) dsu.unite(static_cast<int>(i), it->second);
    }
  }
  // class label: lexicographically least shortest member
  std::unordered_map<int, int> best;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const int root = dsu.find(static_cast<int>(i));
    auto it = best.find(root);
    if (it == best.end() || word_less(words[i], words[it->second]))
      best[root] = static_cast<int>(i);
  }
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < words.size(); ++i)
    out[word_key(words[i])] = word_key(words[best[dsu.find(static_cast<int>(i))]]);
  return out;
}

namespace {

// Closure of a word under rewrites (rewrites never grow a word).
std::vector<std::vector<Syllable>> rewrite_closure(const ProductSpec& spec,
                                                   const std::vector<Syllable>& w) {
  std::vector<std::vector<Syllable>> out;
  std::unordered_set<std::string> seen;
  std::deque<std::vector<Syllable>> queue;
  queue.push_back(w);
  seen.insert(word_key(w));
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    out.push_back(cur);
    for (auto& succ : rewrite_steps(spec, cur))
      if (seen.insert(word_key(succ)).second) queue.push_back(std::move(succ));
  }
  return out;
}

std::vector<Syllable> closure_label(const ProductSpec& spec, const std::vector<Syllable>& w) {
  auto closure = rewrite_closure(spec, w);
  const std::vector<Syllable>* best = &closure.front();
  for (const auto& cand : closure)
    if (word_less(cand, *best)) best = &cand;
  return *best;
}

}  // namespace

std::vector<std::vector<Syllable>> shuffle_closure(const ProductSpec& spec,
                                                   const std::vector<Syllable>& w) {
  std::vector<std::vector<Syllable>> out;
  std::unordered_set<std::string> seen;
  std::deque<std::vector<Syllable>> queue;
  queue.push_back(w);
  seen.insert(word_key(w));
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    out.push_back(cur);
    for (int i = 0; i + 1 < static_cast<int>(cur.size()); ++i) {
      if (cur[i].vertex != cur[i + 1].vertex &&
          spec.graph.adjacent(cur[i].vertex, cur[i + 1].vertex)) {
        auto next = cur;
        std::swap(next[i], next[i + 1]);
        if (seen.insert(word_key(next)).second) queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::vector<std::vector<Syllable>> ball_words(const ProductSpec& spec, int radius) {
  std::vector<std::vector<Syllable>> out;
  std::unordered_set<std::string> labels;
  out.push_back({});
  labels.insert(word_key({}));
  std::vector<std::vector<Syllable>> frontier = {{}};
  for (int len = 1; len <= radius; ++len) {
    std::vector<std::vector<Syllable>> next;
    for (const auto& u : frontier) {
      for (int v = 0; v < spec.graph.vertex_count; ++v) {
        for (int x = 1; x < spec.groups[v].order; ++x) {
          auto cand = u;
          cand.push_back({v, x});
          auto label = closure_label(spec, cand);
          if (static_cast<int>(label.size()) < len) continue;  // not a new sphere element
          if (labels.insert(word_key(label)).second) {
            out.push_back(label);
            next.push_back(label);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<int> d_tail_positions_by_representatives(const ProductSpec& spec,
                                                     const std::vector<Syllable>& w, int d) {
  const int n = static_cast<int>(w.size());
  std::set<int> tail;
  if (d <= 0 || n == 0) return {};
  // track original positions through commuting swaps
  using Tagged = std::vector<std::pair<Syllable, int>>;
  Tagged start;
  for (int i = 0; i < n; ++i) start.emplace_back(w[i], i);
  auto key = [](const Tagged& t) {
    std::ostringstream out;
    for (const auto& [s, id] : t) out << s.vertex << ':' << s.element << ':' << id << '|';
    return out.str();
  };
  std::unordered_set<std::string> seen;
  std::deque<Tagged> queue;
  queue.push_back(start);
  seen.insert(key(start));
  while (!queue.empty()) {
    Tagged cur = queue.front();
    queue.pop_front();
    for (int i = std::max(0, n - d); i < n; ++i) tail.insert(cur[i].second);
    for (int i = 0; i + 1 < n; ++i) {
      if (cur[i].first.vertex != cur[i + 1].first.vertex &&
          spec.graph.adjacent(cur[i].first.vertex, cur[i + 1].first.vertex)) {
        Tagged next = cur;
        std::swap(next[i], next[i + 1]);
        if (seen.insert(key(next)).second) queue.push_back(std::move(next));
      }
    }
  }
  return {tail.begin(), tail.end()};
}

}  // namespace oracle
}  // namespace gp
