#include "bcomb/tableaux.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bcomb {

StrictPartition::StrictPartition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("StrictPartition: parts must be positive");
    if (i > 0 && parts_[i] >= parts_[i - 1])
      throw std::invalid_argument("StrictPartition: parts must strictly decrease");
  }
}

int StrictPartition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool StrictPartition::contains(int i, int j) const {
  if (i < 1 || i > rows()) return false;
  return i <= j && j <= parts_[static_cast<size_t>(i) - 1] + i - 1;
}

std::vector<int> StrictPartition::removable_rows() const {
  std::vector<int> out;
  for (int i = 1; i <= rows(); ++i) {
    int below = parts_[static_cast<size_t>(i) - 1] - 1;
    if (i < rows() && below <= parts_[static_cast<size_t>(i)]) continue;
    out.push_back(i);
  }
  return out;
}

StrictPartition StrictPartition::remove_last_of_row(int i) const {
  if (i < 1 || i > rows())
    throw std::invalid_argument("remove_last_of_row: no such row");
  std::vector<int> p = parts_;
  p[static_cast<size_t>(i) - 1] -= 1;
  if (p.back() == 0) p.pop_back();
  return StrictPartition(p);
}

std::vector<StrictPartition> strict_partitions(int n) {
  std::vector<StrictPartition> out;
  std::vector<int> acc;
  auto gen = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.emplace_back(acc);
      return;
    }
    for (int part = std::min(rest, cap); part >= 1; --part) {
      acc.push_back(part);
      self(self, rest - part, part - 1);
      acc.pop_back();
    }
  };
  gen(gen, n, n);
  return out;
}

ShiftedTableau::ShiftedTableau(StrictPartition shape,
                               std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw std::invalid_argument("ShiftedTableau: row count mismatch");
  for (int r = 0; r < shape_.rows(); ++r)
    if (static_cast<int>(rows_[static_cast<size_t>(r)].size()) !=
        shape_.parts()[static_cast<size_t>(r)])
      throw std::invalid_argument("ShiftedTableau: row length mismatch");
}

int ShiftedTableau::entry(int i, int j) const {
  if (!shape_.contains(i, j))
    throw std::invalid_argument("ShiftedTableau::entry: cell outside shape");
  return rows_[static_cast<size_t>(i) - 1][static_cast<size_t>(j - i)];
}

bool ShiftedTableau::is_standard() const {
  const int n = size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (const auto& row : rows_)
    for (int v : row) {
      if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = true;
    }
  for (const auto& row : rows_)
    for (size_t c = 1; c < row.size(); ++c)
      if (row[c - 1] >= row[c]) return false;
  for (size_t r = 1; r < rows_.size(); ++r)
    for (size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] <= rows_[r - 1][c + 1]) return false;
  return true;
}

bool ShiftedTableau::is_unimodal() const {
  for (const auto& row : rows_) {
    for (int v : row)
      if (v < 0) return false;
    if (row.empty()) continue;
    size_t k = 1;
    while (k < row.size() && row[k - 1] > row[k]) ++k;
    while (k < row.size() && row[k - 1] < row[k]) ++k;
    if (k != row.size()) return false;
  }
  return true;
}

bool ShiftedTableau::operator<(const ShiftedTableau& o) const {
  if (shape_ != o.shape_) return shape_ < o.shape_;
  return rows_ < o.rows_;
}

std::string ShiftedTableau::to_text() const {
  if (shape_.empty()) return "(empty)\n";
  size_t width = 1;
  for (const auto& row : rows_)
    for (int v : row) width = std::max(width, std::to_string(v).size());
  std::ostringstream out;
  for (int r = shape_.rows(); r >= 1; --r) {
    std::string line(static_cast<size_t>(r - 1) * (width + 1), ' ');
    const auto& row = rows_[static_cast<size_t>(r) - 1];
    for (size_t c = 0; c < row.size(); ++c) {
      std::string cell = std::to_string(row[c]);
      if (c > 0) line += ' ';
      line += std::string(width - cell.size(), ' ') + cell;
    }
    out << line << '\n';
  }
  return out.str();
}

std::vector<ShiftedTableau> enumerate_sst(const StrictPartition& lambda) {
  if (lambda.empty()) return {ShiftedTableau()};
  const int n = lambda.size();
  std::vector<ShiftedTableau> out;
  for (int i : lambda.removable_rows()) {
    StrictPartition mu = lambda.remove_last_of_row(i);
    for (const ShiftedTableau& t : enumerate_sst(mu)) {
      std::vector<std::vector<int>> rows = t.rows();
      if (static_cast<int>(rows.size()) < i) rows.emplace_back();
      rows[static_cast<size_t>(i) - 1].push_back(n);
      out.emplace_back(lambda, std::move(rows));
    }
  }
  return out;
}

long long count_sst(const StrictPartition& lambda) {
  static std::mutex lock;
  static std::map<std::vector<int>, long long> memo;
  if (lambda.empty()) return 1;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = memo.find(lambda.parts());
    if (it != memo.end()) return it->second;
  }
  long long total = 0;
  for (int i : lambda.removable_rows())
    total += count_sst(lambda.remove_last_of_row(i));
  std::lock_guard<std::mutex> guard(lock);
  return memo.emplace(lambda.parts(), total).first->second;
}

Word reading_word(const ShiftedTableau& t) {
  Word out;
  for (int r = t.shape().rows(); r >= 1; --r)
    for (int v : t.rows()[static_cast<size_t>(r) - 1]) out.push_back(v);
  return out;
}

namespace {

std::set<int> peaks_of_sequence(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> pos(static_cast<size_t>(n) + 2, 0);
  for (int k = 0; k < n; ++k) {
    int v = word[static_cast<size_t>(k)];
    assert(v >= 1 && v <= n && pos[static_cast<size_t>(v)] == 0);
    pos[static_cast<size_t>(v)] = k + 1;
  }
  std::set<int> out;
  for (int j = 2; j + 1 <= n; ++j)
    if (pos[static_cast<size_t>(j)] > pos[static_cast<size_t>(j) - 1] &&
        pos[static_cast<size_t>(j)] > pos[static_cast<size_t>(j) + 1])
      out.insert(j);
  return out;
}

}  // namespace

std::set<int> peaks_of_tableau(const ShiftedTableau& t) {
  return peaks_of_sequence(reading_word(t));
}

ShiftedTableau u_max(const StrictPartition& lambda) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int part : lambda.parts()) {
    std::vector<int> row(static_cast<size_t>(part));
    std::iota(row.begin(), row.end(), next);
    next += part;
    rows.push_back(std::move(row));
  }
  return ShiftedTableau(lambda, std::move(rows));
}

SkewShiftedTableau::SkewShiftedTableau(
    StrictPartition outer, std::map<std::pair<int, int>, int> entries)
    : outer_(std::move(outer)), entries_(std::move(entries)) {
  for (const auto& [cell, value] : entries_) {
    (void)value;
    if (!outer_.contains(cell.first, cell.second))
      throw std::invalid_argument("SkewShiftedTableau: entry outside shape");
  }
}

bool SkewShiftedTableau::has_entry(int i, int j) const {
  return entries_.count({i, j}) != 0;
}

std::vector<std::pair<int, int>> SkewShiftedTableau::inner_cells() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= outer_.rows(); ++i)
    for (int j = i; outer_.contains(i, j); ++j)
      if (!has_entry(i, j)) out.push_back({i, j});
  return out;
}

std::vector<std::pair<int, int>> SkewShiftedTableau::inner_corners() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [i, j] : inner_cells()) {
    bool right_inner = outer_.contains(i, j + 1) && !has_entry(i, j + 1);
    bool above_inner = outer_.contains(i + 1, j) && !has_entry(i + 1, j);
    if (!right_inner && !above_inner) out.push_back({i, j});
  }
  return out;
}

bool SkewShiftedTableau::is_standard() const {
  std::set<int> values;
  for (const auto& [cell, value] : entries_) {
    (void)cell;
    if (!values.insert(value).second) return false;
  }
  for (const auto& [cell, value] : entries_) {
    auto [i, j] = cell;
    auto right = entries_.find({i, j + 1});
    if (right != entries_.end() && right->second <= value) return false;
    auto above = entries_.find({i + 1, j});
    if (above != entries_.end() && above->second <= value) return false;
  }
  return true;
}

SkewShiftedTableau SkewShiftedTableau::normalized() const {
  std::vector<int> values;
  for (const auto& [cell, value] : entries_) {
    (void)cell;
    values.push_back(value);
  }
  std::sort(values.begin(), values.end());
  std::map<std::pair<int, int>, int> renamed;
  for (const auto& [cell, value] : entries_) {
    auto it = std::lower_bound(values.begin(), values.end(), value);
    renamed[cell] = static_cast<int>(it - values.begin()) + 1;
  }
  return SkewShiftedTableau(outer_, std::move(renamed));
}

SkewShiftedTableau to_skew(const ShiftedTableau& t) {
  std::map<std::pair<int, int>, int> entries;
  for (int i = 1; i <= t.shape().rows(); ++i)
    for (int j = i; t.shape().contains(i, j); ++j)
      entries[{i, j}] = t.entry(i, j);
  return SkewShiftedTableau(t.shape(), std::move(entries));
}

SkewShiftedTableau restrict_to_interval(const ShiftedTableau& t, int lo,
                                        int hi) {
  std::vector<int> outer_parts;
  std::map<std::pair<int, int>, int> entries;
  for (int i = 1; i <= t.shape().rows(); ++i) {
    int kept = 0;
    for (int j = i; t.shape().contains(i, j); ++j) {
      int v = t.entry(i, j);
      if (v > hi) break;
      ++kept;
      if (v >= lo) entries[{i, j}] = v;
    }
    if (kept == 0) break;
    outer_parts.push_back(kept);
  }
  return SkewShiftedTableau(StrictPartition(outer_parts), std::move(entries));
}

SkewShiftedTableau jdt_slide(const SkewShiftedTableau& s,
                             std::pair<int, int> empty_cell) {
  auto corners = s.inner_corners();
  if (std::find(corners.begin(), corners.end(), empty_cell) == corners.end())
    throw std::invalid_argument("jdt_slide: not an inner corner");
  StrictPartition outer = s.outer();
  std::map<std::pair<int, int>, int> entries = s.entries();
  auto [i, j] = empty_cell;
  for (;;) {
    auto right = entries.find({i, j + 1});
    auto above = entries.find({i + 1, j});
    assert(right != entries.end() || !outer.contains(i, j + 1));
    assert(above != entries.end() || !outer.contains(i + 1, j));
    if (right == entries.end() && above == entries.end()) break;
    bool take_right =
        above == entries.end() ||
        (right != entries.end() && right->second < above->second);
    if (take_right) {
      entries[{i, j}] = right->second;
      entries.erase(right);
      j += 1;
    } else {
      entries[{i, j}] = above->second;
      entries.erase(above);
      i += 1;
    }
  }
  assert(j == outer.parts()[static_cast<size_t>(i) - 1] + i - 1);
  return SkewShiftedTableau(outer.remove_last_of_row(i), std::move(entries));
}

namespace {

ShiftedTableau skew_to_straight(const SkewShiftedTableau& s, int shift) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(s.outer().rows()));
  for (const auto& [cell, value] : s.entries()) {
    auto [i, j] = cell;
    assert(j - i == static_cast<int>(rows[static_cast<size_t>(i) - 1].size()));
    rows[static_cast<size_t>(i) - 1].push_back(value + shift);
  }
  return ShiftedTableau(s.outer(), std::move(rows));
}

}  // namespace

ShiftedTableau delta(const ShiftedTableau& q) {
  if (q.size() == 0) throw std::invalid_argument("delta: empty tableau");
  SkewShiftedTableau skew = to_skew(q);
  std::map<std::pair<int, int>, int> entries = skew.entries();
  assert(entries.at({1, 1}) == 1);
  entries.erase({1, 1});
  SkewShiftedTableau cut(skew.outer(), std::move(entries));
  return skew_to_straight(jdt_slide(cut, {1, 1}), -1);
}

std::vector<int> flatten(const std::vector<int>& seq) {
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("flatten: duplicate values");
  std::vector<int> out;
  out.reserve(seq.size());
  for (int v : seq) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    out.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return out;
}

namespace {

// The eight window patterns; slot 0 pins the first value and swaps positions
// 2 and 4, slot 1 pins the second value and swaps positions 1 and 4. The
// third value is pinned in every pattern.
struct WindowPattern {
  int slot;
  int pinned;
  int third;
};

constexpr WindowPattern window_patterns[8] = {
    {0, 1, 2}, {1, 1, 2}, {0, 1, 4}, {1, 1, 4},
    {0, 4, 1}, {1, 4, 1}, {0, 4, 3}, {1, 4, 3},
};

void apply_window_move(std::vector<int>& q) {
  assert(q.size() == 4);
  for (const WindowPattern& p : window_patterns) {
    if (q[static_cast<size_t>(p.slot)] != p.pinned || q[2] != p.third)
      continue;
    if (p.slot == 0)
      std::swap(q[1], q[3]);
    else
      std::swap(q[0], q[3]);
    return;
  }
}

}  // namespace

std::vector<int> h_move(const std::vector<int>& pi, int i) {
  const int n = static_cast<int>(pi.size());
  std::vector<int> sorted = pi;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(static_cast<size_t>(n));
  std::iota(expected.begin(), expected.end(), 1);
  if (sorted != expected)
    throw std::invalid_argument("h_move: not a permutation of 1..n");
  if (i < 1 || i > n - 3)
    throw std::invalid_argument("h_move: index out of range");

  std::vector<size_t> positions;
  std::vector<int> window;
  for (size_t k = 0; k < pi.size(); ++k)
    if (pi[k] >= i && pi[k] <= i + 3) {
      positions.push_back(k);
      window.push_back(pi[k]);
    }
  std::vector<int> q = flatten(window);
  apply_window_move(q);
  std::vector<int> out = pi;
  for (size_t t = 0; t < 4; ++t)
    out[positions[t]] = i + q[t] - 1;
  return out;
}

ShiftedTableau h_move_tableau(const ShiftedTableau& t, int i) {
  Word moved = h_move(reading_word(t), i);
  std::vector<std::vector<int>> rows(static_cast<size_t>(t.shape().rows()));
  size_t at = 0;
  for (int r = t.shape().rows(); r >= 1; --r) {
    size_t len = t.rows()[static_cast<size_t>(r) - 1].size();
    rows[static_cast<size_t>(r) - 1] =
        std::vector<int>(moved.begin() + static_cast<long>(at),
                         moved.begin() + static_cast<long>(at + len));
    at += len;
  }
  ShiftedTableau out(t.shape(), std::move(rows));
  if (!out.is_standard())
    throw std::logic_error("h_move_tableau: move broke standardness");
  return out;
}

Word reading_word(const SkewShiftedTableau& s) {
  Word out;
  for (int i = s.outer().rows(); i >= 1; --i)
    for (int j = i; s.outer().contains(i, j); ++j)
      if (s.has_entry(i, j)) out.push_back(s.entries().at({i, j}));
  return out;
}

SkewShiftedTableau h_move_skew(const SkewShiftedTableau& s, int i) {
  Word moved = h_move(reading_word(s), i);
  std::map<std::pair<int, int>, int> entries;
  size_t at = 0;
  for (int r = s.outer().rows(); r >= 1; --r)
    for (int j = r; s.outer().contains(r, j); ++j)
      if (s.has_entry(r, j)) entries[{r, j}] = moved[at++];
  SkewShiftedTableau out(s.outer(), std::move(entries));
  if (!out.is_standard())
    throw std::logic_error("h_move_skew: move broke standardness");
  return out;
}

}  // namespace bcomb
