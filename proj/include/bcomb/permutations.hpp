#pragma once

// Signed permutations (the hyperoctahedral groups B_n, viewed inside the
// direct limit B_infinity), words in the generators s_0, s_1, s_2, ..., and
// the Coxeter-Knuth moves on those words.
//
// Conventions used throughout the library:
//
//   * A signed permutation w is stored by its window [w(1), ..., w(n)] and is
//     extended by w(i) = i for i > n and by the symmetry w(-i) = -w(i).
//     Windows are trimmed on construction, so equality and ordering are
//     window-insensitive.
//
//   * A word a_1 a_2 ... a_p is a vector of letters >= 0 and denotes the
//     product s_{a_1} s_{a_2} ... s_{a_p}.  Right multiplication by s_i
//     (i >= 1) swaps the values in positions i and i+1 of the one-line form;
//     right multiplication by s_0 negates the value in position 1.
//
//   * Inversions of w are pairs (i, j) with |i| <= j and w(i) > w(j); the
//     pair (i, j) names the same inversion as (-j, -i).  The number of
//     inversions equals the Coxeter length of w.
//
//   * Positions in words are 1-based, matching the usual notation for braid
//     and commutation moves.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcomb {

using Word = std::vector<int>;

// Thrown by transition_data when the input is already increasing and the
// transition recursion has reached a leaf.
struct increasing_error : std::domain_error {
  using std::domain_error::domain_error;
};

class SignedPermutation {
 public:
  // Identity.
  SignedPermutation() = default;

  // From a window [w(1), ..., w(n)].  The absolute values must be a
  // permutation of 1..n.  Trailing fixed points are trimmed.
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity() { return SignedPermutation(); }

  int window_size() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }

  // One-line form padded with fixed points up to n >= window_size().
  std::vector<int> window_padded(int n) const;

  // Value at a signed index i != 0, using the implicit extension.
  int operator()(int i) const;

  bool is_identity() const { return window_.empty(); }

  // True when w(1) < w(2) < ... within the window.  Increasing signed
  // permutations are exactly the leaves of the transition recursion.
  bool is_increasing() const;

  // True when every window value is positive, i.e. w lies in the symmetric
  // group generated by s_1, s_2, ...
  bool is_unsigned() const;

  SignedPermutation inverse() const;

  // Right multiplication by a generator: w * s_i, i >= 0.
  SignedPermutation times_s(int i) const;

  // Right multiplication by the reflection t_{ij}, i < j, exchanging the
  // values in positions i and j (and -i, -j).
  SignedPermutation times_t(int i, int j) const;

  // Composition: (u * v)(x) = u(v(x)).
  SignedPermutation operator*(const SignedPermutation& rhs) const;

  // Coxeter length = number of inversions.
  long long length() const;

  bool operator==(const SignedPermutation& o) const { return window_ == o.window_; }
  bool operator!=(const SignedPermutation& o) const { return window_ != o.window_; }
  bool operator<(const SignedPermutation& o) const;

 private:
  std::vector<int> window_;
};

// A reflection t_{ij} with i < j, stored in the canonical encoding: the
// lexicographically smaller of (i, j) and (-j, -i).  The inversion_form
// accessor returns the encoding with |i| <= j and j > 0, which is how
// inversion sets are written.
struct Transposition {
  int i = 0;
  int j = 0;

  Transposition() = default;
  Transposition(int a, int b);

  std::pair<int, int> inversion_form() const;

  bool operator==(const Transposition& o) const { return i == o.i && j == o.j; }
  bool operator!=(const Transposition& o) const { return !(*this == o); }
  bool operator<(const Transposition& o) const {
    return i != o.i ? i < o.i : j < o.j;
  }
};

// ---- words -----------------------------------------------------------------

SignedPermutation evaluate(const Word& a);

bool is_reduced(const Word& a);

// Letters d >= 0 with length(w * s_d) < length(w), ascending.
std::vector<int> right_descents(const SignedPermutation& w);

// All reduced words of w, sorted lexicographically.
std::vector<Word> reduced_words(const SignedPermutation& w);

long long count_reduced_words(const SignedPermutation& w);

// Inversions of w sorted by inversion_form.  |inversion_set(w)| == length(w).
std::vector<Transposition> inversion_set(const SignedPermutation& w);

// 1-based positions: ascents i with a_i < a_{i+1}, descents with a_i >
// a_{i+1}, peaks 1 < i < p with a_{i-1} < a_i > a_{i+1}.
std::vector<int> word_ascents(const Word& a);
std::vector<int> word_descents(const Word& a);
std::vector<int> word_peaks(const Word& a);

// ---- Coxeter-Knuth moves ---------------------------------------------------

// Type A Coxeter-Knuth move on the window a_pos a_{pos+1} a_{pos+2} of a
// reduced word with letters >= 1.  Applies the first matching relation among
//   i k j ~ k i j,   j i k ~ j k i   (i < j < k),
//   i, i+1, i ~ i+1, i, i+1,
// and returns the input unchanged when none matches.
Word ck_move_a(const Word& a, int pos);

// Type B Coxeter-Knuth move (the involution beta applied to the window
// a_pos ... a_{pos+3} of a reduced word).  Windows without a peak are fixed.
// A window with a peak in position 3 is handled by reversing, applying the
// peak-in-position-2 case, and reversing back.  The peak-in-position-2 case
// is, in order: the long braid 0101 -> 1010; the witnessed short braids
// a,b+1,b,b+1 -> a,b,b+1,b and b,b+1,b,a -> b+1,b,b+1,a (a < b); otherwise
// the commutation swapping adjacent letters at the smallest position that
// yields a commuting move whose result has its peak in position 3.
Word ck_move_b(const Word& a, int pos);

// ---- transition ------------------------------------------------------------

struct TransitionData {
  int r = 0;                                // last descent position
  int s = 0;                                // (r, s) lexicographically largest
  SignedPermutation v;                      // w * t_{rs}, length(v) = length(w) - 1
  std::vector<SignedPermutation> targets;   // T(w) = { v t_{ir} : length +1 }, sorted
};

// Data of the transition equation at w.  Throws increasing_error when w is
// increasing.  The candidate i for v * t_{ir} ranges over
// [-(n+1), r) \ {0} with n = max(window size, r); tests validate this bound
// against a wider brute-force scan.
TransitionData transition_data(const SignedPermutation& w);

// The increasing signed permutation [-mu_1, ..., -mu_k, complement of
// {mu_i} in [mu_1] ascending] attached to a strict partition mu.
SignedPermutation increasing_of_partition(const std::vector<int>& mu);

// Inverse of increasing_of_partition: the strict partition formed by the
// magnitudes of the negative window values.  Requires w increasing.
std::vector<int> partition_of_increasing(const SignedPermutation& w);

// ---- parsing and formatting ------------------------------------------------

// Accepts a compact digit string ("1021201") or a bracketed/comma form
// ("[1,0,2,1,2,0,1]" or "1,0,2,1,2,0,1").
Word parse_word(const std::string& text);

// Compact digit string when all letters are single digits, otherwise
// comma-separated.
std::string format_word(const Word& a);

// Accepts "[2,1,-5,4,3]" or "2,1,-5,4,3".
SignedPermutation parse_signed_permutation(const std::string& text);

std::string format_signed_permutation(const SignedPermutation& w);

}  // namespace bcomb
