#pragma once

// Wiring diagrams for words of signed permutations.
//
// The diagram of a word a_1 ... a_p has 2n wires entering at heights
// -n, ..., -1, 1, ..., n on the right edge (n = max letter + 1) and carries
// one or two crossing cells per column: column j crosses at the signed levels
// a_j and -a_j, or at level 0 alone when a_j = 0.  The cell at level r >= 1
// swaps the wires at heights r and r+1, the cell at level -r swaps heights
// -r and -(r+1), and the cell at level 0 swaps heights -1 and 1.
//
// Wires are labeled from the right edge, where the wire at height h carries
// the label h.  The labels just right of column k then read off the signed
// permutation w^k = s_{a_p} ... s_{a_{k+1}}, so w^p is the identity and the
// left edge spells the long form of the inverse of evaluate(a).
//
// For a reduced word, each pair of wires i, j crosses at most once, and the
// crossings are exactly the inversions of evaluate(a); the wires -j and -i
// cross at the mirrored level of the same column.

#include <optional>
#include <string>
#include <utility>

#include "permutations.hpp"

namespace bcomb {

// One crossing cell together with the pair of wires passing through it.
struct Crossing {
  int column = 0;  // 1-based column index
  int level = 0;   // signed cell level; 0 for an s_0 cross
  int x = 0;       // the crossing wires, x < y
  int y = 0;
};

class WiringDiagram {
 public:
  explicit WiringDiagram(Word word);

  const Word& word() const { return word_; }
  int columns() const { return static_cast<int>(word_.size()); }
  int wire_bound() const { return n_; }

  // The signed permutation w^k of labels just right of column k, 0 <= k <= p.
  const SignedPermutation& labels_right_of(int k) const;

  // Label of the wire at height h (h != 0) just right of column k.
  int label(int k, int h) const;

  bool has_cross(int column, int level) const;

  // The wires crossing at the cell (column, level), as a pair (x, y), x < y.
  std::pair<int, int> wires_at(int column, int level) const;

  bool reduced() const { return is_reduced(word_); }

  // Plain text rendering: one row per cell level, top level first, with the
  // edge labels listed bottom to top.
  std::string to_text() const;

 private:
  Word word_;
  int n_;
  std::vector<SignedPermutation> right_labels_;
};

// The unique cell where the wires labeled i and j cross (i < j).  Requires a
// reduced diagram with (i, j) an inversion of the underlying element.  The
// wires -j and -i cross at the mirrored level of the same column, so callers
// distinguish an inversion's two namings by the sign of the level.
Crossing crossing_of_inversion(const WiringDiagram& d, int i, int j);

// The push P^delta_i: adds delta to a_i, except that a 0 letter always
// becomes 1.
Word push(const Word& a, int i, int delta);

// For a word whose deletion at position k is reduced: none if a itself is
// reduced, otherwise the unique position l != k whose deletion also leaves a
// reduced word (of the same element).
std::optional<int> find_defect(const Word& a, int k);

}  // namespace bcomb
