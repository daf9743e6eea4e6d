#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bcomb/permutations.hpp"

namespace bcomb {

// Partition with strictly decreasing positive parts. Cells live on a shifted
// grid: row i (1-based, bottom row first) occupies columns i through
// lambda_i + i - 1.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  bool contains(int i, int j) const;

  // Rows whose last cell can be dropped leaving a strict partition.
  std::vector<int> removable_rows() const;
  StrictPartition remove_last_of_row(int i) const;

  bool operator==(const StrictPartition& o) const { return parts_ == o.parts_; }
  bool operator!=(const StrictPartition& o) const { return parts_ != o.parts_; }
  bool operator<(const StrictPartition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

std::vector<StrictPartition> strict_partitions(int n);

// Filling of a shifted shape, stored bottom row first. Standardness and
// unimodality are properties to query, not construction invariants, so the
// recording and insertion tableaux of a word can share this type.
class ShiftedTableau {
 public:
  ShiftedTableau() = default;
  ShiftedTableau(StrictPartition shape, std::vector<std::vector<int>> rows);

  const StrictPartition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  int entry(int i, int j) const;

  // Entries are a bijection onto 1..n with rows and columns increasing.
  bool is_standard() const;
  // Entries are non-negative and each row reads as a strictly decreasing
  // run followed by a strictly increasing one.
  bool is_unimodal() const;

  std::string to_text() const;

  bool operator==(const ShiftedTableau& o) const {
    return shape_ == o.shape_ && rows_ == o.rows_;
  }
  bool operator!=(const ShiftedTableau& o) const { return !(*this == o); }
  bool operator<(const ShiftedTableau& o) const;

 private:
  StrictPartition shape_;
  std::vector<std::vector<int>> rows_;
};

std::vector<ShiftedTableau> enumerate_sst(const StrictPartition& lambda);
long long count_sst(const StrictPartition& lambda);

// Row reading word: top row first, each row left to right.
Word reading_word(const ShiftedTableau& t);

// Values j such that j appears after both j-1 and j+1 in the reading word.
std::set<int> peaks_of_tableau(const ShiftedTableau& t);

// Consecutive filling 1..n row by row from the bottom; the unique standard
// tableau whose peak set is {lambda_1, lambda_1+lambda_2, ...} cut to 2..n-1.
ShiftedTableau u_max(const StrictPartition& lambda);

// Shifted shape with some cells of an inner subshape left empty.
class SkewShiftedTableau {
 public:
  SkewShiftedTableau() = default;
  SkewShiftedTableau(StrictPartition outer,
                     std::map<std::pair<int, int>, int> entries);

  const StrictPartition& outer() const { return outer_; }
  const std::map<std::pair<int, int>, int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }

  bool has_entry(int i, int j) const;
  std::vector<std::pair<int, int>> inner_cells() const;
  std::vector<std::pair<int, int>> inner_corners() const;

  // Distinct entries increasing along rows and columns of present cells.
  bool is_standard() const;

  // Entries relabeled by rank onto 1..size().
  SkewShiftedTableau normalized() const;

  bool operator==(const SkewShiftedTableau& o) const {
    return outer_ == o.outer_ && entries_ == o.entries_;
  }
  bool operator!=(const SkewShiftedTableau& o) const { return !(*this == o); }

 private:
  StrictPartition outer_;
  std::map<std::pair<int, int>, int> entries_;
};

SkewShiftedTableau to_skew(const ShiftedTableau& t);

// Cells of t holding values in [lo, hi], values kept as they are. The cells
// below lo form the inner shape.
SkewShiftedTableau restrict_to_interval(const ShiftedTableau& t, int lo, int hi);

// One forward slide into the given inner corner: repeatedly move the smaller
// of the right and upper neighbors into the hole, then drop the freed
// boundary cell from the outer shape.
SkewShiftedTableau jdt_slide(const SkewShiftedTableau& s,
                             std::pair<int, int> empty_cell);

// Remove the cell containing 1, slide into it, subtract 1 from the rest.
ShiftedTableau delta(const ShiftedTableau& q);

// Relabel distinct values by rank onto 1..len.
std::vector<int> flatten(const std::vector<int>& seq);

// Elementary dual equivalence move on a permutation of 1..n, acting on the
// values i..i+3 through flattening. Involution; identity unless the window
// matches one of the eight swap patterns.
std::vector<int> h_move(const std::vector<int>& pi, int i);

ShiftedTableau h_move_tableau(const ShiftedTableau& t, int i);
Word reading_word(const SkewShiftedTableau& s);
SkewShiftedTableau h_move_skew(const SkewShiftedTableau& s, int i);

}  // namespace bcomb
