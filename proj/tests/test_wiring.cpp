#include <doctest.h>

#include <set>

#include "bcomb/wiring.hpp"
#include "oracles.hpp"

using namespace bcomb;

TEST_CASE("diagram labels: edges and partial products") {
  WiringDiagram d(parse_word("0120312"));
  CHECK(d.columns() == 7);
  CHECK(d.wire_bound() == 4);
  CHECK(d.labels_right_of(7).is_identity());
  CHECK(d.labels_right_of(0) == evaluate(d.word()).inverse());

  // Left edge bottom to top spells the long form of the inverse.
  std::vector<int> left;
  for (int h = -4; h <= 4; ++h) {
    if (h == 0) continue;
    left.push_back(d.label(0, h));
  }
  CHECK(left == std::vector<int>{-2, -1, 3, 4, -4, -3, 1, 2});

  for (int k = 1; k <= d.columns(); ++k)
    CHECK(d.labels_right_of(k - 1) ==
          d.labels_right_of(k).times_s(d.word()[static_cast<size_t>(k) - 1]));
}

TEST_CASE("diagram crossings and cells") {
  WiringDiagram d(parse_word("0120312"));
  CHECK(d.has_cross(1, 0));
  CHECK(d.has_cross(3, 2));
  CHECK(d.has_cross(3, -2));
  CHECK_FALSE(d.has_cross(3, 1));
  CHECK_FALSE(d.has_cross(8, 0));
  CHECK(d.reduced());

  WiringDiagram empty{Word{}};
  CHECK(empty.columns() == 0);
  CHECK(empty.wire_bound() == 1);
  CHECK(empty.labels_right_of(0).is_identity());

  WiringDiagram two_zeros(parse_word("00"));
  CHECK_FALSE(two_zeros.reduced());
  CHECK(two_zeros.wires_at(1, 0) == std::pair<int, int>(-1, 1));
  CHECK(two_zeros.wires_at(2, 0) == std::pair<int, int>(-1, 1));
}

TEST_CASE("text rendering") {
  WiringDiagram d(parse_word("0120312"));
  CHECK(d.to_text() ==
        "word: 0120312\n"
        "left  (bottom to top): -2 -1 3 4 -4 -3 1 2\n"
        "right (bottom to top): -4 -3 -2 -1 1 2 3 4\n"
        "  3 | . . . . X . .\n"
        "  2 | . . X . . . X\n"
        "  1 | . X . . . X .\n"
        "  0 | X . . X . . .\n"
        " -1 | . X . . . X .\n"
        " -2 | . . X . . . X\n"
        " -3 | . . . . X . .\n");

  WiringDiagram empty{Word{}};
  CHECK(empty.to_text() ==
        "word: \n"
        "left  (bottom to top): -1 1\n"
        "right (bottom to top): -1 1\n"
        "  0 | \n");
}

TEST_CASE("crossing_of_inversion: frozen cells") {
  Crossing c = crossing_of_inversion(WiringDiagram(parse_word("1021201")), -2, 1);
  CHECK(c.column == 3);
  CHECK(c.level == 2);
  CHECK(c.x == -2);
  CHECK(c.y == 1);

  c = crossing_of_inversion(WiringDiagram(parse_word("0")), -1, 1);
  CHECK(c.column == 1);
  CHECK(c.level == 0);

  c = crossing_of_inversion(WiringDiagram(parse_word("1")), 1, 2);
  CHECK(c.column == 1);
  CHECK(c.level == 1);
  c = crossing_of_inversion(WiringDiagram(parse_word("1")), -2, -1);
  CHECK(c.column == 1);
  CHECK(c.level == -1);

  // Wires -2 and 1 do not cross in this diagram: -2 < 1 and their left-edge
  // heights keep that order.
  CHECK_THROWS_AS(
      crossing_of_inversion(WiringDiagram(parse_word("0120312")), -2, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      crossing_of_inversion(WiringDiagram(parse_word("1")), 2, 1),
      std::invalid_argument);
}

TEST_CASE("crossing_of_inversion: every inversion crosses exactly once") {
  for (const auto& w : oracles::all_elements(3)) {
    if (w.is_identity()) continue;
    for (const Word& a : reduced_words(w)) {
      WiringDiagram d(a);
      std::set<int> columns;
      for (const Transposition& t : inversion_set(w)) {
        auto [i, j] = t.inversion_form();
        Crossing c = crossing_of_inversion(d, i, j);
        CHECK(d.wires_at(c.column, c.level) == std::pair<int, int>(i, j));
        Crossing mirror = crossing_of_inversion(d, -j, -i);
        CHECK(mirror.column == c.column);
        CHECK(mirror.level == -c.level);
        columns.insert(c.column);
      }
      // One inversion per column, so all columns are hit.
      CHECK(static_cast<long long>(columns.size()) == w.length());
    }
  }
}

TEST_CASE("push") {
  CHECK(push(parse_word("1021201"), 3, -1) == parse_word("1011201"));
  CHECK(push(parse_word("000"), 2, -1) == parse_word("010"));
  CHECK(push(parse_word("000"), 2, +1) == parse_word("010"));
  CHECK(push(parse_word("1"), 1, +1) == parse_word("2"));
  CHECK(push(parse_word("1"), 1, -1) == parse_word("0"));
  CHECK_THROWS_AS(push(parse_word("1"), 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(push(parse_word("1"), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(push(parse_word("1"), 1, 2), std::invalid_argument);
}

TEST_CASE("find_defect") {
  CHECK(find_defect(parse_word("1011201"), 3) == 4);
  CHECK(find_defect(parse_word("1011201"), 4) == 3);
  CHECK_FALSE(find_defect(parse_word("1021201"), 3).has_value());
  CHECK(find_defect(parse_word("00"), 1) == 2);
  CHECK(find_defect(parse_word("00"), 2) == 1);
  CHECK_THROWS_AS(find_defect(parse_word("001"), 3), std::invalid_argument);

  // Pushing one letter of a reduced word leaves a word whose defect, if any,
  // pairs the pushed position with exactly one other.
  for (const auto& w : oracles::all_elements(3)) {
    for (const Word& a : reduced_words(w)) {
      for (int pos = 1; pos <= static_cast<int>(a.size()); ++pos) {
        // Deleting a letter from a reduced word can break reducedness
        // (010 minus the middle letter is 00); find_defect requires it.
        Word cut = a;
        cut.erase(cut.begin() + (pos - 1));
        if (!is_reduced(cut)) continue;
        for (int delta : {-1, +1}) {
          Word b = push(a, pos, delta);
          auto l = find_defect(b, pos);
          if (l.has_value()) {
            CHECK(*l != pos);
            CHECK(find_defect(b, *l) == pos);
          } else {
            CHECK(is_reduced(b));
          }
        }
      }
    }
  }
}
