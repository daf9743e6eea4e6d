#include "bcomb/permutations.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <sstream>

namespace bcomb {

namespace {

void trim_window(std::vector<int>& v) {
  while (!v.empty() && v.back() == static_cast<int>(v.size())) v.pop_back();
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> window)
    : window_(std::move(window)) {
  const int n = static_cast<int>(window_.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : window_) {
    int m = std::abs(v);
    if (m < 1 || m > n || seen[static_cast<size_t>(m)])
      throw std::invalid_argument("SignedPermutation: window is not a signed permutation");
    seen[static_cast<size_t>(m)] = 1;
  }
  trim_window(window_);
}

std::vector<int> SignedPermutation::window_padded(int n) const {
  if (n < window_size())
    throw std::invalid_argument("window_padded: n smaller than window");
  std::vector<int> v = window_;
  for (int i = window_size() + 1; i <= n; ++i) v.push_back(i);
  return v;
}

int SignedPermutation::operator()(int i) const {
  if (i == 0) throw std::invalid_argument("SignedPermutation: index 0");
  int m = std::abs(i);
  int val = m <= window_size() ? window_[static_cast<size_t>(m) - 1] : m;
  return i > 0 ? val : -val;
}

bool SignedPermutation::is_increasing() const {
  for (size_t k = 1; k < window_.size(); ++k)
    if (window_[k - 1] > window_[k]) return false;
  return true;
}

bool SignedPermutation::is_unsigned() const {
  for (int v : window_)
    if (v < 0) return false;
  return true;
}

SignedPermutation SignedPermutation::inverse() const {
  const int n = window_size();
  std::vector<int> inv(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int v = window_[static_cast<size_t>(i) - 1];
    if (v > 0)
      inv[static_cast<size_t>(v) - 1] = i;
    else
      inv[static_cast<size_t>(-v) - 1] = -i;
  }
  return SignedPermutation(std::move(inv));
}

SignedPermutation SignedPermutation::times_s(int i) const {
  if (i < 0) throw std::invalid_argument("times_s: negative letter");
  const int need = i == 0 ? 1 : i + 1;
  std::vector<int> v = window_padded(std::max(need, window_size()));
  if (i == 0)
    v[0] = -v[0];
  else
    std::swap(v[static_cast<size_t>(i) - 1], v[static_cast<size_t>(i)]);
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::times_t(int i, int j) const {
  if (i >= j || i == 0 || j == 0)
    throw std::invalid_argument("times_t: need nonzero i < j");
  const int need = std::max(std::abs(i), std::abs(j));
  std::vector<int> v = window_padded(std::max(need, window_size()));
  // (w t)(m) = w(t(m)); t exchanges i <-> j and -i <-> -j.
  auto value_at = [&](int m) {
    return m > 0 ? v[static_cast<size_t>(m) - 1] : -v[static_cast<size_t>(-m) - 1];
  };
  int wi = value_at(i), wj = value_at(j);
  auto assign = [&](int m, int val) {
    if (m > 0)
      v[static_cast<size_t>(m) - 1] = val;
    else
      v[static_cast<size_t>(-m) - 1] = -val;
  };
  assign(i, wj);
  assign(j, wi);
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& rhs) const {
  const int n = std::max(window_size(), rhs.window_size());
  std::vector<int> v(static_cast<size_t>(n));
  for (int x = 1; x <= n; ++x) v[static_cast<size_t>(x) - 1] = (*this)(rhs(x));
  return SignedPermutation(std::move(v));
}

long long SignedPermutation::length() const {
  const int n = window_size();
  long long count = 0;
  for (int j = 1; j <= n; ++j) {
    int wj = (*this)(j);
    for (int i = -j; i <= j; ++i) {
      if (i == 0) continue;
      if ((*this)(i) > wj) ++count;
    }
  }
  // The loop counts i == j too; w(j) > w(j) never holds, so no correction.
  return count;
}

bool SignedPermutation::operator<(const SignedPermutation& o) const {
  return window_ < o.window_;
}

Transposition::Transposition(int a, int b) {
  if (a == b || a == 0 || b == 0)
    throw std::invalid_argument("Transposition: need distinct nonzero entries");
  if (a > b) std::swap(a, b);
  // Canonical encoding: lex-min of (a, b) and (-b, -a).
  if (std::pair<int, int>(-b, -a) < std::pair<int, int>(a, b)) {
    i = -b;
    j = -a;
  } else {
    i = a;
    j = b;
  }
}

std::pair<int, int> Transposition::inversion_form() const {
  if (j > 0 && std::abs(i) <= j) return {i, j};
  return {-j, -i};
}

SignedPermutation evaluate(const Word& a) {
  int maxl = 0;
  for (int x : a) {
    if (x < 0) throw std::invalid_argument("evaluate: negative letter");
    maxl = std::max(maxl, x);
  }
  const int n = a.empty() ? 0 : maxl + 1;
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = i;
  for (int x : a) {
    if (x == 0)
      v[0] = -v[0];
    else
      std::swap(v[static_cast<size_t>(x) - 1], v[static_cast<size_t>(x)]);
  }
  return SignedPermutation(std::move(v));
}

bool is_reduced(const Word& a) {
  int maxl = 0;
  for (int x : a) {
    if (x < 0) throw std::invalid_argument("is_reduced: negative letter");
    maxl = std::max(maxl, x);
  }
  const int n = a.empty() ? 1 : maxl + 1;
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = i;
  // Reduced iff every letter is an ascent of the prefix product.
  for (int x : a) {
    if (x == 0) {
      if (v[0] < 0) return false;
      v[0] = -v[0];
    } else {
      if (v[static_cast<size_t>(x) - 1] > v[static_cast<size_t>(x)]) return false;
      std::swap(v[static_cast<size_t>(x) - 1], v[static_cast<size_t>(x)]);
    }
  }
  return true;
}

std::vector<int> right_descents(const SignedPermutation& w) {
  std::vector<int> out;
  if (w(1) < 0) out.push_back(0);
  for (int d = 1; d < w.window_size(); ++d)
    if (w(d) > w(d + 1)) out.push_back(d);
  return out;
}

namespace {

void reduced_words_rec(const SignedPermutation& w,
                       std::map<std::vector<int>, std::vector<Word>>& memo,
                       const std::vector<Word>** out) {
  auto it = memo.find(w.window());
  if (it != memo.end()) {
    *out = &it->second;
    return;
  }
  std::vector<Word> words;
  if (w.is_identity()) {
    words.push_back({});
  } else {
    for (int d : right_descents(w)) {
      const std::vector<Word>* sub = nullptr;
      reduced_words_rec(w.times_s(d), memo, &sub);
      for (const Word& r : *sub) {
        Word a = r;
        a.push_back(d);
        words.push_back(std::move(a));
      }
    }
  }
  auto res = memo.emplace(w.window(), std::move(words));
  *out = &res.first->second;
}

}  // namespace

std::vector<Word> reduced_words(const SignedPermutation& w) {
  std::map<std::vector<int>, std::vector<Word>> memo;
  const std::vector<Word>* ptr = nullptr;
  reduced_words_rec(w, memo, &ptr);
  std::vector<Word> out = *ptr;
  std::sort(out.begin(), out.end());
  return out;
}

long long count_reduced_words(const SignedPermutation& w) {
  std::map<std::vector<int>, long long> memo;
  struct Rec {
    std::map<std::vector<int>, long long>& memo;
    long long run(const SignedPermutation& u) {
      if (u.is_identity()) return 1;
      auto it = memo.find(u.window());
      if (it != memo.end()) return it->second;
      long long total = 0;
      for (int d : right_descents(u)) total += run(u.times_s(d));
      memo.emplace(u.window(), total);
      return total;
    }
  } rec{memo};
  return rec.run(w);
}

std::vector<Transposition> inversion_set(const SignedPermutation& w) {
  std::vector<Transposition> out;
  const int n = w.window_size();
  for (int j = 1; j <= n; ++j)
    for (int i = -j; i < j; ++i) {
      if (i == 0) continue;
      if (w(i) > w(j)) out.push_back(Transposition(i, j));
    }
  std::sort(out.begin(), out.end(),
            [](const Transposition& a, const Transposition& b) {
              return a.inversion_form() < b.inversion_form();
            });
  return out;
}

std::vector<int> word_ascents(const Word& a) {
  std::vector<int> out;
  for (size_t k = 0; k + 1 < a.size(); ++k)
    if (a[k] < a[k + 1]) out.push_back(static_cast<int>(k) + 1);
  return out;
}

std::vector<int> word_descents(const Word& a) {
  std::vector<int> out;
  for (size_t k = 0; k + 1 < a.size(); ++k)
    if (a[k] > a[k + 1]) out.push_back(static_cast<int>(k) + 1);
  return out;
}

std::vector<int> word_peaks(const Word& a) {
  std::vector<int> out;
  for (size_t k = 1; k + 1 < a.size(); ++k)
    if (a[k - 1] < a[k] && a[k] > a[k + 1]) out.push_back(static_cast<int>(k) + 1);
  return out;
}

Word ck_move_a(const Word& a, int pos) {
  const int p = static_cast<int>(a.size());
  if (pos < 1 || pos + 2 > p)
    throw std::invalid_argument("ck_move_a: window out of range");
  for (int letter : a)
    if (letter < 1) throw std::invalid_argument("ck_move_a: letters must be >= 1");
  if (!is_reduced(a)) throw std::invalid_argument("ck_move_a: word is not reduced");
  Word b = a;
  int& x = b[static_cast<size_t>(pos) - 1];
  int& y = b[static_cast<size_t>(pos)];
  int& z = b[static_cast<size_t>(pos) + 1];
  if (x == z && std::abs(x - y) == 1) {
    // i, i+1, i <-> i+1, i, i+1
    int old_x = x;
    x = y;
    z = y;
    y = old_x;
  } else if ((x < z && z < y) || (y < z && z < x)) {
    // i k j <-> k i j  (the smallest letter is third)
    std::swap(x, y);
  } else if ((y < x && x < z) || (z < x && x < y)) {
    // j i k <-> j k i  (the largest letter is first... the middle value leads)
    std::swap(y, z);
  }
  return b;
}

namespace {

bool peak_at(const std::vector<int>& q, int pos) {
  // pos is 2 or 3 within a length-4 window, 1-based.
  return q[static_cast<size_t>(pos) - 2] < q[static_cast<size_t>(pos) - 1] &&
         q[static_cast<size_t>(pos) - 1] > q[static_cast<size_t>(pos)];
}

std::vector<int> beta_window(std::vector<int> q);

std::vector<int> beta_peak2(std::vector<int> q) {
  if (q == std::vector<int>{0, 1, 0, 1}) return {1, 0, 1, 0};
  std::vector<int> distinct = q;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() == 3) {
    // a, b+1, b, b+1 -> a, b, b+1, b  with a < b
    if (q[1] == q[3] && q[2] + 1 == q[1] && q[0] < q[2])
      return {q[0], q[2], q[1], q[2]};
    // b, b+1, b, a -> b+1, b, b+1, a  with a < b
    if (q[0] == q[2] && q[1] == q[0] + 1 && q[3] < q[0])
      return {q[1], q[0], q[1], q[3]};
  }
  for (int j = 1; j <= 3; ++j) {
    if (std::abs(q[static_cast<size_t>(j) - 1] - q[static_cast<size_t>(j)]) < 2) continue;
    std::vector<int> c = q;
    std::swap(c[static_cast<size_t>(j) - 1], c[static_cast<size_t>(j)]);
    if (peak_at(c, 3)) return c;
  }
  throw std::logic_error("ck_move_b: no applicable move for a peaked window");
}

std::vector<int> beta_window(std::vector<int> q) {
  bool p2 = peak_at(q, 2), p3 = peak_at(q, 3);
  if (!p2 && !p3) return q;
  if (p3) {
    std::reverse(q.begin(), q.end());
    q = beta_peak2(std::move(q));
    std::reverse(q.begin(), q.end());
    return q;
  }
  return beta_peak2(std::move(q));
}

}  // namespace

Word ck_move_b(const Word& a, int pos) {
  const int p = static_cast<int>(a.size());
  if (pos < 1 || pos + 3 > p)
    throw std::invalid_argument("ck_move_b: window out of range");
  if (!is_reduced(a)) throw std::invalid_argument("ck_move_b: word is not reduced");
  std::vector<int> q(a.begin() + (pos - 1), a.begin() + (pos + 3));
  q = beta_window(std::move(q));
  Word b = a;
  std::copy(q.begin(), q.end(), b.begin() + (pos - 1));
  return b;
}

TransitionData transition_data(const SignedPermutation& w) {
  const int n = w.window_size();
  int r = 0;
  for (int d = 1; d < n; ++d)
    if (w(d) > w(d + 1)) r = d;
  if (r == 0) throw increasing_error("transition_data: signed permutation is increasing");
  int s = 0;
  for (int c = r + 1; c <= n; ++c)
    if (w(r) > w(c)) s = c;
  TransitionData td;
  td.r = r;
  td.s = s;
  td.v = w.times_t(r, s);
  if (td.v.length() != w.length() - 1)
    throw std::logic_error("transition_data: (r, s) is not a length-1 drop");
  const int bound = std::max(n, r) + 1;
  for (int i = -bound; i < r; ++i) {
    if (i == 0) continue;
    SignedPermutation u = td.v.times_t(i, r);
    if (u.length() == w.length()) td.targets.push_back(std::move(u));
  }
  std::sort(td.targets.begin(), td.targets.end());
  return td;
}

SignedPermutation increasing_of_partition(const std::vector<int>& mu) {
  for (size_t k = 0; k < mu.size(); ++k) {
    if (mu[k] < 1) throw std::invalid_argument("increasing_of_partition: parts must be positive");
    if (k > 0 && mu[k] >= mu[k - 1])
      throw std::invalid_argument("increasing_of_partition: parts must strictly decrease");
  }
  if (mu.empty()) return SignedPermutation::identity();
  const int n = mu[0];
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  std::vector<int> v;
  for (int part : mu) {
    v.push_back(-part);
    used[static_cast<size_t>(part)] = 1;
  }
  for (int x = 1; x <= n; ++x)
    if (!used[static_cast<size_t>(x)]) v.push_back(x);
  return SignedPermutation(std::move(v));
}

std::vector<int> partition_of_increasing(const SignedPermutation& w) {
  if (!w.is_increasing())
    throw std::invalid_argument("partition_of_increasing: not increasing");
  std::vector<int> mu;
  for (int v : w.window())
    if (v < 0) mu.push_back(-v);
  std::sort(mu.begin(), mu.end(), std::greater<int>());
  return mu;
}

Word parse_word(const std::string& text) {
  Word out;
  bool has_sep = text.find(',') != std::string::npos ||
                 text.find('[') != std::string::npos ||
                 text.find(' ') != std::string::npos;
  if (!has_sep) {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("parse_word: unexpected character");
      out.push_back(c - '0');
    }
    return out;
  }
  std::string cleaned;
  for (char c : text)
    cleaned += (c == '[' || c == ']' || c == ',') ? ' ' : c;
  std::istringstream in(cleaned);
  int x = 0;
  while (in >> x) {
    if (x < 0) throw std::invalid_argument("parse_word: negative letter");
    out.push_back(x);
  }
  if (!in.eof()) throw std::invalid_argument("parse_word: unexpected character");
  return out;
}

std::string format_word(const Word& a) {
  bool compact = true;
  for (int x : a)
    if (x > 9) compact = false;
  std::string out;
  for (size_t k = 0; k < a.size(); ++k) {
    if (compact) {
      out += static_cast<char>('0' + a[k]);
    } else {
      if (k) out += ',';
      out += std::to_string(a[k]);
    }
  }
  return out;
}

SignedPermutation parse_signed_permutation(const std::string& text) {
  std::string cleaned;
  for (char c : text)
    cleaned += (c == '[' || c == ']' || c == ',') ? ' ' : c;
  std::istringstream in(cleaned);
  std::vector<int> v;
  int x = 0;
  while (in >> x) v.push_back(x);
  if (!in.eof()) throw std::invalid_argument("parse_signed_permutation: unexpected character");
  return SignedPermutation(std::move(v));
}

std::string format_signed_permutation(const SignedPermutation& w) {
  std::string out = "[";
  const auto& v = w.window();
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  out += ']';
  return out;
}

}  // namespace bcomb
