#include "bcomb/symmetric.hpp"

#include <cassert>
#include <stdexcept>

#include "bcomb/insertion.hpp"

namespace bcomb {

long long FinitePolynomial::coefficient(
    const std::vector<int>& exponents) const {
  auto it = coefficients.find(exponents);
  return it == coefficients.end() ? 0 : it->second;
}

void FinitePolynomial::add_term(const std::vector<int>& exponents,
                                long long c) {
  assert(static_cast<int>(exponents.size()) == num_vars);
  auto it = coefficients.find(exponents);
  if (it == coefficients.end()) {
    if (c != 0) coefficients.emplace(exponents, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coefficients.erase(it);
}

void FinitePolynomial::add_scaled(const FinitePolynomial& other,
                                  long long factor) {
  if (other.num_vars != num_vars || other.degree != degree)
    throw std::invalid_argument("add_scaled shape mismatch");
  for (const auto& term : other.coefficients)
    add_term(term.first, factor * term.second);
}

FinitePolynomial theta(const std::set<int>& peaks, int d, int m) {
  if (m < 1) throw std::invalid_argument("theta needs at least one variable");
  if (d < 0) throw std::invalid_argument("theta needs a non-negative degree");
  for (int p : peaks) {
    if (p < 2 || p > d - 1)
      throw std::invalid_argument("peak slot out of range");
    if (peaks.count(p + 1))
      throw std::invalid_argument("adjacent peak slots");
  }
  FinitePolynomial out;
  out.num_vars = m;
  out.degree = d;
  std::vector<int> seq;
  auto emit = [&]() {
    int distinct = 0;
    std::vector<int> exps(static_cast<std::size_t>(m), 0);
    for (std::size_t t = 0; t < seq.size(); ++t) {
      if (t == 0 || seq[t] != seq[t - 1]) ++distinct;
      ++exps[static_cast<std::size_t>(seq[t] - 1)];
    }
    out.add_term(exps, 1LL << distinct);
  };
  auto rec = [&](auto&& self, int low) -> void {
    int j = static_cast<int>(seq.size());
    if (j == d) {
      emit();
      return;
    }
    for (int v = low; v <= m; ++v) {
      // the new entry completes the triple centered at slot j
      if (j >= 2 && peaks.count(j) && seq[static_cast<std::size_t>(j - 2)] == v &&
          seq[static_cast<std::size_t>(j - 1)] == v)
        continue;
      seq.push_back(v);
      self(self, v);
      seq.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

FinitePolynomial q_schur(const StrictPartition& mu, int m) {
  FinitePolynomial out;
  out.num_vars = m;
  out.degree = mu.size();
  for (const ShiftedTableau& t : enumerate_sst(mu))
    out.add_scaled(theta(peaks_of_tableau(t), mu.size(), m), 1);
  return out;
}

FinitePolynomial stanley_c(const SignedPermutation& w, int m) {
  int d = static_cast<int>(w.length());
  FinitePolynomial out;
  out.num_vars = m;
  out.degree = d;
  for (const Word& a : reduced_words(w)) {
    std::vector<int> ps = word_peaks(a);
    out.add_scaled(theta(std::set<int>(ps.begin(), ps.end()), d, m), 1);
  }
  return out;
}

QExpansion g_coefficients(const SignedPermutation& w) {
  std::map<StrictPartition, std::set<std::vector<std::vector<int>>>> tableaux;
  for (const Word& a : reduced_words(w)) {
    InsertionPair pq = kraskiewicz_insert(a);
    tableaux[pq.shifted_p().shape()].insert(pq.p);
  }
  QExpansion out;
  for (const auto& e : tableaux)
    out.terms.emplace(e.first, static_cast<long long>(e.second.size()));
  return out;
}

std::map<SignedPermutation, long long> transition_expand(
    const SignedPermutation& w) {
  std::map<SignedPermutation, std::map<SignedPermutation, long long>> memo;
  auto rec = [&](auto&& self, const SignedPermutation& u)
      -> const std::map<SignedPermutation, long long>& {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    std::map<SignedPermutation, long long> acc;
    if (u.is_increasing()) {
      acc.emplace(u, 1);
    } else {
      for (const SignedPermutation& t : transition_data(u).targets)
        for (const auto& leaf : self(self, t)) acc[leaf.first] += leaf.second;
    }
    return memo.emplace(u, std::move(acc)).first->second;
  };
  return rec(rec, w);
}

}  // namespace bcomb
