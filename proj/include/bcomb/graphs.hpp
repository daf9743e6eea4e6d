#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bcomb/permutations.hpp"
#include "bcomb/tableaux.hpp"

namespace bcomb {

// Vertex-signed, edge-colored graphs.  Signatures are strings over {+,-} of
// one common length, the degree.  Peak signatures have one slot per letter
// (or tableau value) and mark interior peaks, so slots 1 and n are '-' and
// no two '+' slots are adjacent; colors run 1..n-3.  Ascent signatures have
// one slot per adjacent pair of letters (length p-1); colors run 1..p-2.
enum class SignatureScheme { peak, ascent };

struct SignedColoredGraph {
  SignatureScheme scheme = SignatureScheme::peak;
  int degree = 0;
  std::vector<std::string> vertices;
  std::vector<std::string> sigma;
  // color -> set of index pairs with u < v.  Colors with no edges are absent.
  std::map<int, std::set<std::pair<int, int>>> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int max_color() const;
  // Index of the vertex with the given id; throws std::out_of_range.
  int index_of(const std::string& id) const;
  void add_edge(int color, int u, int v);
  bool has_edge(int color, int u, int v) const;
  std::vector<int> neighbors(int color, int u) const;
  long long edge_count() const;

  bool operator==(const SignedColoredGraph&) const = default;
};

// '+' at the listed 1-based slots, '-' elsewhere.
std::string signature_string(const std::set<int>& plus, int length);

// Structural validity: distinct vertex ids, one signature of the right
// length per vertex, colors and endpoints in range, every color class a
// partial matching, and admissible signatures under the peak scheme.
bool well_formed(const SignedColoredGraph& g);

std::string word_vertex_id(const Word& a);

// Rows bottom first, entries joined by ',' and rows by '/'.
std::string tableau_vertex_id(const ShiftedTableau& t);

// Coxeter-Knuth graph of an unsigned permutation: vertices are its reduced
// words, an i-edge joins a to ck_move_a(a, i) when they differ, and the
// signature of a word is its ascent indicator.  Throws std::invalid_argument
// when the window has negative entries.
SignedColoredGraph ck_graph_a(const SignedPermutation& w);

// Signed analogue: i-edges join a to ck_move_b(a, i) when they differ, and
// the signature of a word is its peak indicator.
SignedColoredGraph ck_graph_b(const SignedPermutation& w);

// Standard shifted dual equivalence graph of degree |lambda|: vertices are
// the standard tableaux of that shape, i-edges the nontrivial pairs of
// h_move_tableau, signatures the tableau peak sets.
SignedColoredGraph sdeg_standard(const StrictPartition& lambda);

// The same vertices and edges viewed at a larger degree: peak signatures
// gain '-' slots at the top, edges are unchanged.
SignedColoredGraph pad_graph(const SignedColoredGraph& g, int degree);

// Restriction to the interval [a, b]: signature slot s becomes s-a+1 when
// a < s < b (boundary peaks are dropped), and color a+i-1 becomes i.  The
// result has degree b-a+1.  Peak scheme only; throws on a bad interval.
SignedColoredGraph restrict_graph(const SignedColoredGraph& g, int a, int b);

// Subgraph keeping only the colors a..b-3; signatures and degree unchanged.
SignedColoredGraph interval_subgraph(const SignedColoredGraph& g, int a, int b);

// Connected components across all colors, each sorted, ordered by first
// vertex index.
std::vector<std::vector<int>> components(const SignedColoredGraph& g);

SignedColoredGraph induced_subgraph(const SignedColoredGraph& g,
                                    const std::vector<int>& keep);

// True when map sends vertex v of g to map[v] of h bijectively, preserving
// signatures and matching the edge sets of every color exactly.
bool is_isomorphism(const SignedColoredGraph& g, const SignedColoredGraph& h,
                    const std::vector<int>& map);

// Backtracking search for an isomorphism, seeded by per-vertex classes of
// (signature, color degree profile).  Returns the vertex map or nullopt.
std::optional<std::vector<int>> iso(const SignedColoredGraph& g,
                                    const SignedColoredGraph& h);

// All standard graphs of shape size 0..degree, padded to the given degree.
// Cached; throws std::invalid_argument above degree 9.
const std::vector<SignedColoredGraph>& standard_catalog(int degree);

// True when g is isomorphic to some catalog entry of its degree.
bool matches_standard(const SignedColoredGraph& g);

// True when every component of g matches the catalog of g's degree.
bool is_sdeg(const SignedColoredGraph& g);

struct AxiomReport {
  bool locally_standard = true;
  bool commuting = true;
  std::string locally_standard_witness;
  std::string commuting_witness;
  bool pass() const { return locally_standard && commuting; }
};

// Two checks with first-failure witnesses.  Locally standard: for every
// interval [a, b] of size at most nine, each component of the restriction
// matches a catalog graph of that size.  Commuting: whenever edges (u,v) of
// color i and (u,w) of color j meet at u with |i-j| > 3, some y closes the
// diamond with (v,y) of color j and (w,y) of color i.
AxiomReport check_axioms(const SignedColoredGraph& g);

std::string to_dot(const SignedColoredGraph& g);

}  // namespace bcomb
