#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "graphprod/graph.hpp"

namespace gp {

/// One nonidentity vertex-group letter of a word.
struct Syllable {
  int vertex = 0;
  int element = 0;
  auto operator<=>(const Syllable&) const = default;
};

struct BallCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A graph-product element held as its canonical reduced word: fully
/// reduced, then ordered by greedy smallest-vertex emission among the
/// syllables that can shuffle to the front.
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement identity(const ProductSpec& spec);
  static GroupElement reduce(const ProductSpec& spec, std::vector<Syllable> raw);
  /// Parses the "v:e v:e ..." token form; "e" is the identity.
  static GroupElement parse(const ProductSpec& spec, const std::string& text);

  const ProductSpec& spec() const { return *spec_; }
  const std::vector<Syllable>& word() const { return word_; }
  int reduced_length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const;

  /// True iff some reduced representative starts (ends) with a G_v syllable.
  bool begins_with(int v) const;
  bool ends_with(int v) const;

  /// Canonical-word positions of syllables lying in the last d syllables of
  /// some reduced representative.
  std::vector<int> d_tail_positions(int d) const;
  std::vector<Syllable> d_tail(int d) const;

  std::string str() const;

  bool operator==(const GroupElement& o) const { return word_ == o.word_; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  /// Orders by reduced length, then lexicographically on syllables.
  bool operator<(const GroupElement& o) const;

 private:
  GroupElement(const ProductSpec* spec, std::vector<Syllable> word)
      : spec_(spec), word_(std::move(word)) {}

  const ProductSpec* spec_ = nullptr;
  std::vector<Syllable> word_;
};

/// The product alignment of two elements: common prefix of length q, up to
/// kappa amalgamating vertex pairs, and the residual tails, so that
///   h^{-1} g = reverse-inverse(h_tail) * (amalgam products) * g_tail.
struct Alignment {
  int q = 0;
  int p = 0;
  GroupElement prefix;
  std::vector<Syllable> g_tail;
  std::vector<Syllable> h_tail;
  std::vector<std::pair<Syllable, Syllable>> amalgams;  // (h syllable, g syllable)
  int nontrivial_amalgams = 0;
};

Alignment align(const GroupElement& g, const GroupElement& h);

/// All elements with reduced length <= radius, sorted. Throws BallCapError
/// if the ball exceeds cap elements.
std::vector<GroupElement> enumerate_ball(const ProductSpec& spec, int radius,
                                         std::size_t cap = 200000);

}  // namespace gp
