#pragma once

// The signed Little bump on reduced words.
//
// A bump B^delta_{(i,j)} applies to a reduced word a of w when (i, j) names
// an inversion of w with length(w t_{ij}) = length(w) - 1.  It locates the
// cell where the wires labeled i and j cross, moves that crossing one cell in
// the direction delta (+1 up, -1 down), and repeatedly resolves the defect
// this creates by moving the offending crossing the same way, until the word
// is reduced again.  Since the wiring diagram is symmetric under negation,
// B^-_{(i,j)} and B^+_{(-j,-i)} are the same map.
//
// Pushes are recorded with the sign by which the letter changed, a letter
// pushed from 0 counting as +1.

#include <utility>
#include <vector>

#include "wiring.hpp"

namespace bcomb {

// A bump is named by wires i < j and a direction.
struct BumpStart {
  int i = 0;
  int j = 0;
  int delta = 0;

  bool operator==(const BumpStart& o) const {
    return i == o.i && j == o.j && delta == o.delta;
  }
};

struct BumpTrace {
  BumpStart start;
  std::vector<std::pair<int, int>> pushes;  // (1-based position, letter change)
  std::vector<Word> words;                  // word after each push
  Word result;                              // == words.back()
};

// Run the bump; throws std::invalid_argument when the preconditions fail
// (word not reduced, wires (i, j) not an inversion, or the inversion is not
// removable).
BumpTrace little_bump(const Word& a, int i, int j, int delta);

// The bump result together with the inversion it landed on: result is a
// reduced word of evaluate(a) * t_{ij} * t_{i',j'}.  The pair is oriented so
// that a downward bump reports (l, i) with l < i and an upward bump reports
// (j, k) with j < k; bumping the result at the reported pair with -delta
// recovers the input.
struct BumpImage {
  Word result;
  int i = 0;
  int j = 0;
};

BumpImage bump_image_target(const Word& a, int i, int j, int delta);

// All valid bump names for reduced words of w: each removable inversion in
// its |i| <= j form, in both directions.
std::vector<BumpStart> bump_starts(const SignedPermutation& w);

// The downward bump at the lexicographically last inversion (r, s) of
// evaluate(a), the one the transition equation removes.  Throws
// increasing_error when the element is already increasing.
Word canonical_bump(const Word& a);

// Iterate canonical bumps until the underlying element is increasing.  The
// output is the unique word in a's communication class whose element is
// increasing, so it is a canonical representative of the class.
Word to_increasing(const Word& a);

// Whether a and b are connected by a chain of Little bumps.  Decided by
// comparing canonical representatives; equivalent to equality of the
// recording tableaux of the insertion algorithm.
bool communicate(const Word& a, const Word& b);

}  // namespace bcomb
