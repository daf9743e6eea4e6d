#include "bcomb/wiring.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace bcomb {

WiringDiagram::WiringDiagram(Word word) : word_(std::move(word)) {
  int maxl = 0;
  for (int x : word_) {
    if (x < 0) throw std::invalid_argument("WiringDiagram: negative letter");
    maxl = std::max(maxl, x);
  }
  n_ = maxl + 1;
  const int p = columns();
  right_labels_.assign(static_cast<size_t>(p) + 1, SignedPermutation());
  for (int k = p - 1; k >= 0; --k)
    right_labels_[static_cast<size_t>(k)] =
        right_labels_[static_cast<size_t>(k) + 1].times_s(
            word_[static_cast<size_t>(k)]);
}

const SignedPermutation& WiringDiagram::labels_right_of(int k) const {
  if (k < 0 || k > columns())
    throw std::invalid_argument("labels_right_of: column out of range");
  return right_labels_[static_cast<size_t>(k)];
}

int WiringDiagram::label(int k, int h) const { return labels_right_of(k)(h); }

bool WiringDiagram::has_cross(int column, int level) const {
  if (column < 1 || column > columns()) return false;
  int m = word_[static_cast<size_t>(column) - 1];
  return level == m || level == -m;
}

std::pair<int, int> WiringDiagram::wires_at(int column, int level) const {
  if (!has_cross(column, level))
    throw std::invalid_argument("wires_at: no cross at that cell");
  int a, b;
  if (level == 0) {
    b = label(column, 1);
    a = -b;
  } else if (level > 0) {
    a = label(column, level);
    b = label(column, level + 1);
  } else {
    a = label(column, level);
    b = label(column, level - 1);
  }
  if (a > b) std::swap(a, b);
  return {a, b};
}

std::string WiringDiagram::to_text() const {
  std::ostringstream out;
  out << "word: " << format_word(word_) << "\n";
  auto edge = [&](int k) {
    std::string s;
    for (int h = -n_; h <= n_; ++h) {
      if (h == 0) continue;
      if (!s.empty()) s += ' ';
      s += std::to_string(label(k, h));
    }
    return s;
  };
  out << "left  (bottom to top): " << edge(0) << "\n";
  out << "right (bottom to top): " << edge(columns()) << "\n";
  for (int level = n_ - 1; level >= -(n_ - 1); --level) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%3d | ", level);
    out << buf;
    for (int j = 1; j <= columns(); ++j) {
      out << (has_cross(j, level) ? 'X' : '.');
      if (j < columns()) out << ' ';
    }
    out << "\n";
  }
  return out.str();
}

Crossing crossing_of_inversion(const WiringDiagram& d, int i, int j) {
  if (i >= j || i == 0 || j == 0)
    throw std::invalid_argument("crossing_of_inversion: need nonzero i < j");
  const std::pair<int, int> want = {i, j};
  for (int k = 1; k <= d.columns(); ++k) {
    int m = d.word()[static_cast<size_t>(k) - 1];
    if (m == 0) {
      if (d.wires_at(k, 0) == want) return Crossing{k, 0, i, j};
    } else {
      if (d.wires_at(k, m) == want) return Crossing{k, m, i, j};
      if (d.wires_at(k, -m) == want) return Crossing{k, -m, i, j};
    }
  }
  throw std::invalid_argument("crossing_of_inversion: wires do not cross");
}

Word push(const Word& a, int i, int delta) {
  if (i < 1 || i > static_cast<int>(a.size()))
    throw std::invalid_argument("push: position out of range");
  if (delta != 1 && delta != -1)
    throw std::invalid_argument("push: direction must be +1 or -1");
  Word b = a;
  int& letter = b[static_cast<size_t>(i) - 1];
  letter = letter == 0 ? 1 : letter + delta;
  return b;
}

namespace {

Word erase_at(const Word& a, int pos) {
  Word b = a;
  b.erase(b.begin() + (pos - 1));
  return b;
}

}  // namespace

std::optional<int> find_defect(const Word& a, int k) {
  const int p = static_cast<int>(a.size());
  if (k < 1 || k > p) throw std::invalid_argument("find_defect: bad position");
  if (!is_reduced(erase_at(a, k)))
    throw std::invalid_argument("find_defect: deletion at k is not reduced");
  if (is_reduced(a)) return std::nullopt;
  std::vector<int> hits;
  for (int l = 1; l <= p; ++l) {
    if (l == k) continue;
    if (is_reduced(erase_at(a, l))) hits.push_back(l);
  }
  assert(hits.size() == 1);
  assert(evaluate(erase_at(a, hits[0])) == evaluate(erase_at(a, k)));
  return hits[0];
}

}  // namespace bcomb
