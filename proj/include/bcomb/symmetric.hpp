#pragma once

#include <map>
#include <set>
#include <vector>

#include "bcomb/permutations.hpp"
#include "bcomb/tableaux.hpp"

namespace bcomb {

// Homogeneous polynomial of fixed total degree in variables x_1..x_m,
// stored as exponent vector -> coefficient with zero coefficients absent.
struct FinitePolynomial {
  int num_vars = 0;
  int degree = 0;
  std::map<std::vector<int>, long long> coefficients;

  long long coefficient(const std::vector<int>& exponents) const;
  // Adds c to one term, dropping the entry when it cancels to zero.
  void add_term(const std::vector<int>& exponents, long long c);
  // Adds factor * other; variable counts and degrees must agree.
  void add_scaled(const FinitePolynomial& other, long long factor);

  bool operator==(const FinitePolynomial&) const = default;
};

// Expansion coefficients indexed by shape.
struct QExpansion {
  std::map<StrictPartition, long long> terms;
  bool operator==(const QExpansion&) const = default;
};

// Peak fundamental quasisymmetric polynomial of degree d in m variables:
// the sum of 2^(number of distinct indices) x_{i_1}...x_{i_d} over weakly
// increasing sequences with values in 1..m such that i_{k-1}=i_k=i_{k+1}
// happens only for k outside peaks.  peaks must lie in [2, d-1] with no two
// slots adjacent, and m must be at least 1.
FinitePolynomial theta(const std::set<int>& peaks, int d, int m);

// Schur Q-polynomial: the sum of theta over the peak sets of the standard
// tableaux of shape mu.
FinitePolynomial q_schur(const StrictPartition& mu, int m);

// Signed Stanley symmetric polynomial: the sum of theta over the peak sets
// of the reduced words of w.
FinitePolynomial stanley_c(const SignedPermutation& w, int m);

// Number of distinct insertion tableaux of each shape over the reduced
// words of w.
QExpansion g_coefficients(const SignedPermutation& w);

// Fully expands w through the transition equation until every leaf is
// increasing; returns leaf multiplicities.  An increasing w yields {w: 1}.
std::map<SignedPermutation, long long> transition_expand(
    const SignedPermutation& w);

}  // namespace bcomb
