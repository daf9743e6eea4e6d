#include "bcomb/little.hpp"

#include <cassert>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace bcomb {

BumpTrace little_bump(const Word& a, int i, int j, int delta) {
  if (delta != 1 && delta != -1)
    throw std::invalid_argument("little_bump: direction must be +1 or -1");
  if (i >= j || i == 0 || j == 0)
    throw std::invalid_argument("little_bump: need nonzero wires i < j");
  if (!is_reduced(a)) throw std::invalid_argument("little_bump: word not reduced");
  SignedPermutation w = evaluate(a);
  if (w(i) <= w(j))
    throw std::invalid_argument("little_bump: (i, j) is not an inversion");
  if (w.times_t(i, j).length() != w.length() - 1)
    throw std::invalid_argument("little_bump: inversion is not removable");

  BumpTrace tr;
  tr.start = {i, j, delta};
  Word b = a;
  Crossing c = crossing_of_inversion(WiringDiagram(b), i, j);
  int k = c.column;
  int r = c.level;
  const int dir = delta;
  const long long limit = 2 * w.length();
  std::set<std::pair<int, int>> seen;

  while (true) {
    // Move the crossing at cell (k, r) one cell in direction dir.  The cell
    // index of a crossing is the letter value, so the letter moves with it.
    int& letter = b[static_cast<size_t>(k) - 1];
    int old = letter;
    if (r > 0)
      letter += dir;
    else if (r == 0)
      letter = 1;
    else
      letter -= dir;
    r += dir;
    assert(letter >= 0);
    assert(std::abs(r) == letter);
    int sign = old == 0 ? 1 : letter - old;
    tr.pushes.emplace_back(k, sign);
    tr.words.push_back(b);
    assert(seen.insert({k, sign}).second);
    if (static_cast<long long>(tr.pushes.size()) > limit)
      throw std::logic_error("little_bump: push limit exceeded");
    if (is_reduced(b)) break;

    WiringDiagram d(b);
    std::pair<int, int> xy = d.wires_at(k, r);
    std::optional<int> l = find_defect(b, k);
    assert(l.has_value());
    // The tracked pair crosses a second time in the defect column; find at
    // which cell.
    int bl = b[static_cast<size_t>(*l) - 1];
    if (bl == 0) {
      assert(d.wires_at(*l, 0) == xy);
      r = 0;
    } else if (d.wires_at(*l, bl) == xy) {
      r = bl;
    } else {
      assert(d.wires_at(*l, -bl) == xy);
      r = -bl;
    }
    k = *l;
  }
  tr.result = b;
  return tr;
}

BumpImage bump_image_target(const Word& a, int i, int j, int delta) {
  BumpTrace tr = little_bump(a, i, j, delta);
  SignedPermutation v = evaluate(a).times_t(i, j);
  SignedPermutation t = v.inverse() * evaluate(tr.result);

  // t must be a reflection t_{mn}; read the pair off its window.
  int m = 0, n = 0;
  std::vector<int> moved;
  for (int x = 1; x <= t.window_size(); ++x)
    if (t(x) != x) moved.push_back(x);
  if (moved.size() == 1) {
    n = moved[0];
    m = -n;
    assert(t(n) == -n);
  } else {
    assert(moved.size() == 2);
    if (t(moved[0]) == moved[1]) {
      m = moved[0];
      n = moved[1];
      assert(t(n) == m);
    } else {
      assert(t(moved[0]) == -moved[1]);
      assert(t(moved[1]) == -moved[0]);
      m = -moved[1];
      n = moved[0];
    }
  }
  assert(v.times_t(m, n) == evaluate(tr.result));

  // Orient: a downward bump lands with the original i second, an upward bump
  // with the original j first.  (m, n) and (-n, -m) name the same reflection.
  BumpImage img;
  img.result = std::move(tr.result);
  if (delta == -1) {
    if (n == i) {
      img.i = m;
      img.j = n;
    } else {
      assert(-m == i);
      img.i = -n;
      img.j = -m;
    }
  } else {
    if (m == j) {
      img.i = m;
      img.j = n;
    } else {
      assert(-n == j);
      img.i = -n;
      img.j = -m;
    }
  }
  return img;
}

std::vector<BumpStart> bump_starts(const SignedPermutation& w) {
  std::vector<BumpStart> out;
  for (const Transposition& t : inversion_set(w)) {
    auto [i, j] = t.inversion_form();
    if (w.times_t(i, j).length() != w.length() - 1) continue;
    out.push_back({i, j, -1});
    out.push_back({i, j, +1});
  }
  return out;
}

Word canonical_bump(const Word& a) {
  TransitionData td = transition_data(evaluate(a));
  return little_bump(a, td.r, td.s, -1).result;
}

Word to_increasing(const Word& a) {
  if (!is_reduced(a))
    throw std::invalid_argument("to_increasing: word not reduced");
  Word c = a;
  int guard = 0;
  while (!evaluate(c).is_increasing()) {
    c = canonical_bump(c);
    if (++guard > 1000000)
      throw std::logic_error("to_increasing: did not terminate");
  }
  return c;
}

bool communicate(const Word& a, const Word& b) {
  if (!is_reduced(a) || !is_reduced(b))
    throw std::invalid_argument("communicate: words must be reduced");
  if (a.size() != b.size()) return false;
  if (a == b) return true;
  return to_increasing(a) == to_increasing(b);
}

}  // namespace bcomb
