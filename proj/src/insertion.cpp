#include "bcomb/insertion.hpp"

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace bcomb {

namespace {

StrictPartition shape_of_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return StrictPartition(parts);
}

}  // namespace

ShiftedTableau InsertionPair::shifted_p() const {
  return ShiftedTableau(shape_of_rows(p), p);
}

ShiftedTableau InsertionPair::shifted_q() const {
  return ShiftedTableau(shape_of_rows(q), q);
}

std::optional<int> eg_row_insert(std::vector<int>& row, int k) {
  std::size_t idx = 0;
  while (idx < row.size() && row[idx] <= k) ++idx;
  if (idx == row.size()) {
    row.push_back(k);
    return std::nullopt;
  }
  if (row[idx] == k + 1 && idx > 0 && row[idx - 1] == k) {
    return k + 1;
  }
  // replacing keeps the row strictly increasing only if k is not present
  assert(idx == 0 || row[idx - 1] < k);
  int bumped = row[idx];
  row[idx] = k;
  return bumped;
}

InsertionPair eg_insert(const Word& a) {
  for (int letter : a)
    if (letter < 1) throw std::invalid_argument("eg_insert: letters must be >= 1");
  if (!is_reduced(a)) throw std::invalid_argument("eg_insert: word is not reduced");
  InsertionPair out;
  for (std::size_t step = 0; step < a.size(); ++step) {
    int k = a[step];
    std::size_t r = 0;
    for (;;) {
      if (r == out.p.size()) {
        out.p.push_back({k});
        out.q.push_back({static_cast<int>(step) + 1});
        break;
      }
      std::optional<int> bumped = eg_row_insert(out.p[r], k);
      if (!bumped) {
        out.q[r].push_back(static_cast<int>(step) + 1);
        break;
      }
      k = *bumped;
      ++r;
    }
  }
  return out;
}

UnimodalInsertResult unimodal_insert(const std::vector<int>& row, int k) {
  if (k < 0) throw std::invalid_argument("unimodal_insert: letter must be >= 0");
  for (int entry : row)
    if (entry < 0)
      throw std::invalid_argument("unimodal_insert: row entries must be >= 0");
  std::size_t l = row.size();
  std::size_t j = l == 0 ? 0 : 1;
  while (j < l && row[j] < row[j - 1]) ++j;
  if (j >= 1 && j < l && row[j] == row[j - 1])
    throw std::invalid_argument("unimodal_insert: row is not unimodal");
  for (std::size_t t = j + 1; t < l; ++t)
    if (row[t] <= row[t - 1])
      throw std::invalid_argument("unimodal_insert: row is not unimodal");

  std::vector<int> tail(row.begin() + j, row.end());

  // A 0 cannot join an increasing part that starts right above a valley 0:
  // it would sit level with the valley. With nothing to its right, or with
  // the valley guarded by a 1, the increasing part stays untouched and the
  // decreasing part absorbs a 1 instead.
  bool special = k == 0 && j >= 1 && row[j - 1] == 0 &&
                 (tail.empty() || (j >= 2 && row[j - 2] == 1));

  std::optional<int> carried;
  if (special) {
    carried = 1;
  } else {
    carried = eg_row_insert(tail, k);
    if (!carried) {
      std::vector<int> out(row.begin(), row.begin() + j);
      out.insert(out.end(), tail.begin(), tail.end());
      return {std::move(out), std::nullopt};
    }
  }

  // The carried letter lands in the decreasing part. Negation turns that
  // part into an increasing row, so the same row rule applies; it always
  // gives up an entry because the carried letter exceeds the valley.
  std::vector<int> neg(j);
  for (std::size_t t = 0; t < j; ++t) neg[t] = -row[t];
  std::optional<int> neg_bumped = eg_row_insert(neg, -*carried);
  assert(neg_bumped.has_value());
  std::vector<int> out(neg.size() + tail.size());
  for (std::size_t t = 0; t < neg.size(); ++t) out[t] = -neg[t];
  for (std::size_t t = 0; t < tail.size(); ++t) out[neg.size() + t] = tail[t];
  return {std::move(out), -*neg_bumped};
}

InsertionPair kraskiewicz_insert(const Word& a) {
  for (int letter : a)
    if (letter < 0)
      throw std::invalid_argument("kraskiewicz_insert: letters must be >= 0");
  if (!is_reduced(a))
    throw std::invalid_argument("kraskiewicz_insert: word is not reduced");
  InsertionPair out;
  for (std::size_t step = 0; step < a.size(); ++step) {
    int k = a[step];
    std::size_t r = 0;
    for (;;) {
      if (r == out.p.size()) {
        out.p.push_back({k});
        out.q.push_back({static_cast<int>(step) + 1});
        break;
      }
      UnimodalInsertResult res = unimodal_insert(out.p[r], k);
      if (!res.bumped) {
        assert(res.row.size() == out.p[r].size() + 1);
        out.p[r] = std::move(res.row);
        out.q[r].push_back(static_cast<int>(step) + 1);
        break;
      }
      assert(res.row.size() == out.p[r].size());
      out.p[r] = std::move(res.row);
      k = *res.bumped;
      ++r;
    }
  }
  return out;
}

ShiftedTableau q_prime(const Word& a) { return kraskiewicz_insert(a).shifted_q(); }

}  // namespace bcomb
