#pragma once

#include <optional>
#include <vector>

#include "bcomb/permutations.hpp"
#include "bcomb/tableaux.hpp"

namespace bcomb {

// Insertion tableau and recording tableau produced by row insertion. Rows
// are stored bottom row first. Signed insertion always yields strictly
// decreasing row lengths, so its results can be viewed as shifted tableaux
// through shifted_p / shifted_q; unsigned Edelman-Greene results may have
// ordinary partition shape and keep the raw row form.
struct InsertionPair {
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;

  ShiftedTableau shifted_p() const;
  ShiftedTableau shifted_q() const;

  bool operator==(const InsertionPair& o) const { return p == o.p && q == o.q; }
  bool operator!=(const InsertionPair& o) const { return !(*this == o); }
};

// Edelman-Greene insertion of k into a strictly increasing row, in place.
// If the row contains both k and k+1 the row is left unchanged and k+1 is
// bumped; otherwise the first entry larger than k is replaced by k and
// bumped, or k is appended when every entry is smaller.
std::optional<int> eg_row_insert(std::vector<int>& row, int k);

// Edelman-Greene insertion of a reduced word with letters >= 1. The p rows
// increase along rows and columns and their reading word (top row first) is
// a reduced word for the same permutation; q is standard of the same shape.
InsertionPair eg_insert(const Word& a);

struct UnimodalInsertResult {
  std::vector<int> row;
  std::optional<int> bumped;
};

// One row step of signed insertion: k enters a unimodal row. k is first
// inserted into the increasing part by the Edelman-Greene rule; any letter
// bumped there enters the decreasing part, handled by negating that part
// into an increasing row and applying the same rule. A 0 aimed at a row
// whose valley entry is already 0 skips the increasing part and bumps a 1
// directly when the valley is bare or guarded by a 1 on its left.
// The caller is responsible for keeping the configuration reduced; outside
// that regime the cases still execute but the output row may fail to be
// unimodal.
UnimodalInsertResult unimodal_insert(const std::vector<int>& row, int k);

// Insertion for reduced words of signed permutations (letters >= 0). The p
// rows are unimodal and their reading word (top row first) is a reduced
// word for the same element; q is standard of the same shifted shape.
InsertionPair kraskiewicz_insert(const Word& a);

// Recording tableau of kraskiewicz_insert.
ShiftedTableau q_prime(const Word& a);

}  // namespace bcomb
