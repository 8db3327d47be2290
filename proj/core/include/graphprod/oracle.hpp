#pragma once

#include <map>
#include <string>
#include <vector>

#include "graphprod/graph.hpp"
#include "graphprod/word.hpp"

namespace gp {
namespace oracle {

// Brute-force word machinery used to cross-check the canonical-form path.
// Everything here works on raw syllable vectors and the graph alone; it
// never calls the GroupElement normal form.

std::string word_key(const std::vector<Syllable>& w);

/// Single rewrite successors: adjacent commuting swap, adjacent same-vertex
/// amalgamation, identity-syllable removal.
std::vector<std::vector<Syllable>> rewrite_steps(const ProductSpec& spec,
                                                 const std::vector<Syllable>& w);

/// All words shuffle-equivalent to a reduced word (commuting swaps only).
std::vector<std::vector<Syllable>> shuffle_closure(const ProductSpec& spec,
                                                   const std::vector<Syllable>& w);

/// Partition of all raw words of length <= max_len (syllables over all
/// vertices, nonidentity elements) into rewrite-equivalence classes. Each
/// word maps to the class label: the lexicographically least shortest word
/// reachable from it. Words connected by rewrites represent the same group
/// element, and every pair of equal-element words of bounded length is so
/// connected.
std::map<std::string, std::string> classify_raw_words(const ProductSpec& spec, int max_len);

/// All raw words of length exactly len (nonidentity syllables).
std::vector<std::vector<Syllable>> raw_words(const ProductSpec& spec, int len);

/// Independent ball enumeration: BFS over raw words with rewrite-closure
/// dedup. Returns one shortest representative per element.
std::vector<std::vector<Syllable>> ball_words(const ProductSpec& spec, int radius);

/// d-tail by definition: positions of w whose syllable sits among the last d
/// syllables of some shuffle-equivalent representative (input must be
/// reduced). Sorted.
std::vector<int> d_tail_positions_by_representatives(const ProductSpec& spec,
                                                     const std::vector<Syllable>& w, int d);

}  // namespace oracle
}  // namespace gp
