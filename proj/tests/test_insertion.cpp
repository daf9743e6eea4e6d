#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "bcomb/insertion.hpp"
#include "bcomb/little.hpp"
#include "bcomb/tableaux.hpp"
#include "oracles.hpp"

using namespace bcomb;

namespace {

ShiftedTableau make(const std::vector<int>& parts,
                    std::vector<std::vector<int>> rows) {
  return ShiftedTableau(StrictPartition(parts), std::move(rows));
}

bool unimodal_row(const std::vector<int>& row) {
  for (int v : row)
    if (v < 0) return false;
  size_t j = row.empty() ? 0 : 1;
  while (j < row.size() && row[j] < row[j - 1]) ++j;
  if (j >= 1 && j < row.size() && row[j] == row[j - 1]) return false;
  for (size_t t = j + 1; t < row.size(); ++t)
    if (row[t] <= row[t - 1]) return false;
  return true;
}

void collect_unimodal(std::vector<int>& row, int max_len, int max_letter,
                      std::vector<std::vector<int>>& out) {
  out.push_back(row);
  if (static_cast<int>(row.size()) == max_len) return;
  for (int v = 0; v <= max_letter; ++v) {
    row.push_back(v);
    if (unimodal_row(row)) collect_unimodal(row, max_len, max_letter, out);
    row.pop_back();
  }
}

// left justified rows, bottom row first, strictly increasing along rows and
// up columns
bool increasing_young(const std::vector<std::vector<int>>& rows) {
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c - 1] >= rows[r][c]) return false;
      if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
    }
  }
  return true;
}

bool standard_young(const std::vector<std::vector<int>>& rows) {
  if (!increasing_young(rows)) return false;
  std::set<int> seen;
  int n = 0;
  for (const auto& row : rows) n += static_cast<int>(row.size());
  for (const auto& row : rows)
    for (int v : row) {
      if (v < 1 || v > n) return false;
      seen.insert(v);
    }
  return static_cast<int>(seen.size()) == n;
}

std::set<int> ascent_set(const Word& a) {
  std::vector<int> v = word_ascents(a);
  return {v.begin(), v.end()};
}

// values i preceding i+1 in the reading word, top row first
std::set<int> young_ascent_set(const std::vector<std::vector<int>>& rows) {
  std::map<int, int> position;
  int next = 0;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    for (int v : *it) position[v] = next++;
  std::set<int> out;
  for (int i = 1; i + 1 <= static_cast<int>(position.size()); ++i)
    if (position.at(i) < position.at(i + 1)) out.insert(i);
  return out;
}

std::set<Word> move_closure(const Word& seed) {
  std::set<Word> seen{seed};
  std::vector<Word> queue{seed};
  while (!queue.empty()) {
    Word a = queue.back();
    queue.pop_back();
    for (int pos = 1; pos + 3 <= static_cast<int>(a.size()); ++pos) {
      Word b = ck_move_b(a, pos);
      if (seen.insert(b).second) queue.push_back(b);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("row insertion into increasing rows") {
  std::vector<int> row{1, 3, 4};
  CHECK(eg_row_insert(row, 5) == std::nullopt);
  CHECK(row == std::vector<int>{1, 3, 4, 5});

  row = {1, 3, 4};
  CHECK(eg_row_insert(row, 2).value() == 3);
  CHECK(row == std::vector<int>{1, 2, 4});

  // the row holds both 3 and 4, so it stays put and passes 4 on
  row = {1, 3, 4};
  CHECK(eg_row_insert(row, 3).value() == 4);
  CHECK(row == std::vector<int>{1, 3, 4});

  row = {3, 4};
  CHECK(eg_row_insert(row, 3).value() == 4);
  CHECK(row == std::vector<int>{3, 4});

  row = {};
  CHECK(eg_row_insert(row, 7) == std::nullopt);
  CHECK(row == std::vector<int>{7});

  // negated decreasing parts run through the same rule
  row = {-4, 0};
  CHECK(eg_row_insert(row, -1).value() == 0);
  CHECK(row == std::vector<int>{-4, -1});
}

TEST_CASE("unimodal row insertion") {
  UnimodalInsertResult res = unimodal_insert({3, 4}, 3);
  CHECK(res.row == std::vector<int>{4, 3});
  CHECK(res.bumped.value() == 3);

  res = unimodal_insert({}, 5);
  CHECK(res.row == std::vector<int>{5});
  CHECK_FALSE(res.bumped.has_value());

  res = unimodal_insert({1, 3, 4}, 3);
  CHECK(res.row == std::vector<int>{4, 3, 4});
  CHECK(res.bumped.value() == 1);

  res = unimodal_insert({0, 1}, 2);
  CHECK(res.row == std::vector<int>{0, 1, 2});
  CHECK_FALSE(res.bumped.has_value());

  // a 0 falling onto a bare valley 0 turns it into a 1 and passes the 0 on
  res = unimodal_insert({0}, 0);
  CHECK(res.row == std::vector<int>{1});
  CHECK(res.bumped.value() == 0);

  res = unimodal_insert({1, 0}, 0);
  CHECK(res.row == std::vector<int>{1, 0});
  CHECK(res.bumped.value() == 0);

  res = unimodal_insert({2, 0}, 0);
  CHECK(res.row == std::vector<int>{2, 1});
  CHECK(res.bumped.value() == 0);

  // with the valley guarded by a 1 the whole row survives unchanged
  res = unimodal_insert({1, 0, 1}, 0);
  CHECK(res.row == std::vector<int>{1, 0, 1});
  CHECK(res.bumped.value() == 0);

  // without the guard the 0 does displace the increasing part
  res = unimodal_insert({0, 1}, 0);
  CHECK(res.row == std::vector<int>{1, 0});
  CHECK(res.bumped.value() == 0);

  CHECK_THROWS_AS(unimodal_insert({1, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(unimodal_insert({0, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(unimodal_insert({2, 0, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(unimodal_insert({1, 0, 1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(unimodal_insert({0, 1}, -1), std::invalid_argument);
  CHECK_THROWS_AS(unimodal_insert({-1, 0}, 1), std::invalid_argument);
}

TEST_CASE("unimodal insertion on reduced configurations") {
  std::vector<std::vector<int>> rows;
  std::vector<int> scratch;
  collect_unimodal(scratch, 5, 4, rows);

  int checked = 0;
  for (const std::vector<int>& row : rows) {
    for (int k = 0; k <= 4; ++k) {
      Word word = row;
      word.push_back(k);
      if (!is_reduced(word)) continue;
      ++checked;
      UnimodalInsertResult res = unimodal_insert(row, k);
      CHECK(unimodal_row(res.row));
      if (res.bumped) {
        CHECK(res.row.size() == row.size());
        Word after{*res.bumped};
        after.insert(after.end(), res.row.begin(), res.row.end());
        CHECK(is_reduced(after));
        CHECK(evaluate(after) == evaluate(word));
      } else {
        CHECK(res.row.size() == row.size() + 1);
        CHECK(is_reduced(res.row));
        CHECK(evaluate(res.row) == evaluate(word));
      }
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("edelman greene insertion") {
  InsertionPair pq = eg_insert({1, 3, 4, 3});
  CHECK(pq.p == std::vector<std::vector<int>>{{1, 3, 4}, {4}});
  CHECK(pq.q == std::vector<std::vector<int>>{{1, 2, 3}, {4}});

  pq = eg_insert({1});
  CHECK(pq.p == std::vector<std::vector<int>>{{1}});
  CHECK(pq.q == std::vector<std::vector<int>>{{1}});

  CHECK(eg_insert({}) == InsertionPair{});

  CHECK_THROWS_AS(eg_insert({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(eg_insert({2, 3, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(eg_insert({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(eg_insert({1, -2}), std::invalid_argument);
}

TEST_CASE("edelman greene classes and recording tableaux") {
  SignedPermutation w({2, 1, 5, 4, 3});
  std::vector<Word> words = reduced_words(w);
  REQUIRE(words.size() == 8);

  std::map<std::vector<std::vector<int>>, std::set<Word>> classes;
  for (const Word& a : words) classes[eg_insert(a).p].insert(a);
  REQUIRE(classes.size() == 3);
  CHECK(classes.at({{1, 3}, {3, 4}}) ==
        std::set<Word>{{3, 1, 4, 3}, {3, 4, 1, 3}});
  CHECK(classes.at({{1, 4}, {3}, {4}}) ==
        std::set<Word>{{3, 4, 3, 1}, {4, 3, 4, 1}, {4, 3, 1, 4}});
  CHECK(classes.at({{1, 3, 4}, {4}}) ==
        std::set<Word>{{1, 3, 4, 3}, {4, 1, 3, 4}, {1, 4, 3, 4}});

  // each class is closed under the witnessed elementary moves
  for (const auto& [p_rows, cls] : classes)
    for (const Word& a : cls)
      for (int pos = 1; pos + 2 <= static_cast<int>(a.size()); ++pos)
        CHECK(cls.count(ck_move_a(a, pos)) == 1);

  for (const Word& a : words) {
    InsertionPair pq = eg_insert(a);
    CHECK(increasing_young(pq.p));
    CHECK(standard_young(pq.q));
    for (size_t r = 0; r < pq.p.size(); ++r)
      CHECK(pq.p[r].size() == pq.q[r].size());

    // the reading word of p, top row first, reduces back to w
    Word reading;
    for (auto it = pq.p.rbegin(); it != pq.p.rend(); ++it)
      reading.insert(reading.end(), it->begin(), it->end());
    CHECK(is_reduced(reading));
    CHECK(evaluate(reading) == w);

    CHECK(young_ascent_set(pq.q) == ascent_set(a));
  }

  // within a class the recording tableaux are distinct fillings of one shape
  for (const auto& [p_rows, cls] : classes) {
    std::set<std::vector<std::vector<int>>> qs;
    for (const Word& a : cls) qs.insert(eg_insert(a).q);
    CHECK(qs.size() == cls.size());
  }
}

TEST_CASE("kraskiewicz insertion examples") {
  InsertionPair pq = kraskiewicz_insert({1, 3, 4, 3});
  CHECK(pq.shifted_p() == make({3, 1}, {{4, 3, 4}, {1}}));
  CHECK(pq.shifted_q() == make({3, 1}, {{1, 2, 3}, {4}}));

  pq = kraskiewicz_insert({0, 2, 1, 0, 3, 2, 1, 0, 1});
  CHECK(evaluate({0, 2, 1, 0, 3, 2, 1, 0, 1}) ==
        SignedPermutation({-3, -4, -1, 2}));
  CHECK(pq.shifted_p() ==
        make({5, 3, 1}, {{3, 2, 1, 0, 1}, {2, 1, 0}, {0}}));
  CHECK(pq.shifted_q() ==
        make({5, 3, 1}, {{1, 2, 4, 5, 9}, {3, 6, 8}, {7}}));

  pq = kraskiewicz_insert({0});
  CHECK(pq.p == std::vector<std::vector<int>>{{0}});
  CHECK(pq.q == std::vector<std::vector<int>>{{1}});

  CHECK(kraskiewicz_insert({}) == InsertionPair{});

  CHECK(kraskiewicz_insert({0, 1, 0}).p ==
        std::vector<std::vector<int>>{{1, 0}, {0}});
  CHECK(kraskiewicz_insert({0, 1, 0}).q ==
        std::vector<std::vector<int>>{{1, 2}, {3}});

  // the long braid pair shares p while q moves by one elementary move
  InsertionPair odd = kraskiewicz_insert({0, 1, 0, 1});
  InsertionPair even = kraskiewicz_insert({1, 0, 1, 0});
  CHECK(odd.p == std::vector<std::vector<int>>{{1, 0, 1}, {0}});
  CHECK(even.p == odd.p);
  CHECK(odd.shifted_q() == make({3, 1}, {{1, 2, 4}, {3}}));
  CHECK(even.shifted_q() == make({3, 1}, {{1, 2, 3}, {4}}));
  CHECK(h_move_tableau(odd.shifted_q(), 1) == even.shifted_q());

  CHECK_THROWS_AS(kraskiewicz_insert({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(kraskiewicz_insert({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(kraskiewicz_insert({0, 1, 0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(kraskiewicz_insert({-1, 0}), std::invalid_argument);
}

TEST_CASE("recording tableau properties") {
  for (const SignedPermutation& w : oracles::all_elements(4)) {
    if (w.length() > 6 || w.is_identity()) continue;
    for (const Word& a : reduced_words(w)) {
      InsertionPair pq = kraskiewicz_insert(a);
      ShiftedTableau p = pq.shifted_p();
      ShiftedTableau q = pq.shifted_q();
      CHECK(p.shape() == q.shape());
      CHECK(p.is_unimodal());
      CHECK(q.is_standard());

      Word reading = reading_word(p);
      CHECK(is_reduced(reading));
      CHECK(evaluate(reading) == w);

      std::vector<int> wp = word_peaks(a);
      CHECK(peaks_of_tableau(q) == std::set<int>(wp.begin(), wp.end()));

      // bumps never touch the recording tableau
      for (const BumpStart& s : bump_starts(w)) {
        BumpTrace t = little_bump(a, s.i, s.j, s.delta);
        CHECK(q_prime(t.result) == q);
      }

      // elementary moves on the word act as moves on the recording tableau
      for (int pos = 1; pos + 3 <= static_cast<int>(a.size()); ++pos)
        CHECK(q_prime(ck_move_b(a, pos)) == h_move_tableau(q, pos));

      // dropping the first letter matches the promotion slide
      CHECK(delta(q) == q_prime(Word(a.begin() + 1, a.end())));
    }
  }
}

TEST_CASE("insertion tableau classes and counting") {
  for (const SignedPermutation& w : oracles::all_elements(3)) {
    std::vector<Word> words = reduced_words(w);

    std::map<std::vector<std::vector<int>>, std::set<Word>> classes;
    std::set<std::pair<std::vector<std::vector<int>>,
                       std::vector<std::vector<int>>>>
        pairs;
    for (const Word& a : words) {
      InsertionPair pq = kraskiewicz_insert(a);
      classes[pq.p].insert(a);
      CHECK(pairs.insert({pq.p, pq.q}).second);
    }

    long long total = 0;
    for (const auto& [p_rows, cls] : classes) {
      // one insertion tableau per orbit of the elementary moves
      CHECK(move_closure(*cls.begin()) == cls);

      std::vector<int> parts;
      for (const auto& row : p_rows) parts.push_back(static_cast<int>(row.size()));
      long long fillings = count_sst(StrictPartition(parts));
      CHECK(static_cast<long long>(cls.size()) == fillings);
      total += fillings;

      // the recording tableaux exhaust the standard fillings of the shape
      std::set<std::vector<std::vector<int>>> qs;
      for (const Word& a : cls) qs.insert(kraskiewicz_insert(a).q);
      CHECK(static_cast<long long>(qs.size()) == fillings);
    }
    CHECK(total == static_cast<long long>(words.size()));

    // words communicate exactly when their recording tableaux agree
    if (w.length() <= 6) {
      std::map<Word, ShiftedTableau> rec;
      for (const Word& a : words) rec.emplace(a, q_prime(a));
      for (const Word& a : words)
        for (const Word& b : words)
          CHECK(communicate(a, b) == (rec.at(a) == rec.at(b)));
    }
  }
}
