#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace bcomb {
namespace oracles {

std::vector<SignedPermutation> all_elements(int n) {
  std::vector<int> base(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i + 1;
  std::vector<SignedPermutation> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> v = base;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) v[static_cast<size_t>(i)] = -v[static_cast<size_t>(i)];
      out.push_back(SignedPermutation(std::move(v)));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long long brute_length(const SignedPermutation& w, int pad) {
  long long count = 0;
  for (int j = 1; j <= pad; ++j)
    for (int i = -j; i <= j; ++i) {
      if (i == 0) continue;
      if (w(i) > w(j)) ++count;
    }
  return count;
}

std::set<Word> coxeter_closure(const Word& seed) {
  std::set<Word> seen{seed};
  std::deque<Word> queue{seed};
  while (!queue.empty()) {
    Word a = queue.front();
    queue.pop_front();
    auto push = [&](Word b) {
      if (seen.insert(b).second) queue.push_back(std::move(b));
    };
    for (size_t k = 0; k + 1 < a.size(); ++k) {
      if (std::abs(a[k] - a[k + 1]) >= 2) {
        Word b = a;
        std::swap(b[k], b[k + 1]);
        push(std::move(b));
      }
    }
    for (size_t k = 0; k + 2 < a.size(); ++k) {
      if (a[k] >= 1 && a[k + 1] >= 1 && a[k + 2] == a[k] &&
          std::abs(a[k + 1] - a[k]) == 1) {
        Word b = a;
        b[k] = a[k + 1];
        b[k + 1] = a[k];
        b[k + 2] = a[k + 1];
        push(std::move(b));
      }
    }
    for (size_t k = 0; k + 3 < a.size(); ++k) {
      bool fwd = a[k] == 0 && a[k + 1] == 1 && a[k + 2] == 0 && a[k + 3] == 1;
      bool bwd = a[k] == 1 && a[k + 1] == 0 && a[k + 2] == 1 && a[k + 3] == 0;
      if (fwd || bwd) {
        Word b = a;
        b[k] = 1 - a[k];
        b[k + 1] = 1 - a[k + 1];
        b[k + 2] = 1 - a[k + 2];
        b[k + 3] = 1 - a[k + 3];
        push(std::move(b));
      }
    }
  }
  return seen;
}

long long shifted_standard_count(const std::vector<int>& parts) {
  long long n = 0;
  for (int p : parts) n += p;
  long long num = 1;
  for (long long v = 2; v <= n; ++v) num *= v;
  for (int p : parts)
    for (long long v = 2; v <= p; ++v) num /= v;
  long long den = 1;
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j) {
      num *= parts[i] - parts[j];
      den *= parts[i] + parts[j];
    }
  if (num % den != 0) std::abort();
  return num / den;
}

}  // namespace oracles
}  // namespace bcomb
