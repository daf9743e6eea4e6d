#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bcomb/permutations.hpp"

namespace bcomb {

struct VerifyOptions {
  // Suites that walk a hyperoctahedral group use B_rank.
  int rank = 3;
  // Cap on the Coxeter length of the elements visited, -1 for no cap.  The
  // ckcommute suite reads it as the exact word length instead (4 when unset).
  int max_length = -1;
  // Cap on |lambda| for the tableau-driven suites.
  int max_cells = 8;
  // Worker threads for the instance fan-out.
  int jobs = 1;
};

struct VerificationReport {
  std::string suite;
  long long instances = 0;
  long long passes = 0;
  // One witness per failing instance, in instance order.
  std::vector<std::string> failures;
  double seconds = 0.0;

  bool ok() const {
    return failures.empty() &&
           passes == instances;
  }
};

// The available suite names, sorted.
const std::vector<std::string>& suite_names();

// Runs one suite and reports per-instance results.  Throws
// std::invalid_argument for an unknown suite name.
//
//   transition           canonical bumps biject R(w) onto the transition
//                        targets, with matching cardinalities
//   qpreserve            bumps preserve the recording tableau and peak set;
//                        equal recording tableaux iff connected by bumps;
//                        one increasing representative per class
//   ckcommute            Coxeter-Knuth moves commute with every bump
//   sdeg-axioms          generated graphs pass the local axiom checkers
//   insertion-bijection  insertion is a bijection onto (P, Q) pairs with
//                        full standard fibers
//   peaks                word peak sets match recording tableau peak sets
//   delta                h-move involutivity, the delta intertwiner, and
//                        h_i(Q'(a)) = Q'(beta_i(a))
VerificationReport run_suite(const std::string& name,
                             const VerifyOptions& opts);

// Applies fn to each index 0..count-1, fanning out over up to `jobs`
// threads.  fn must be safe to run concurrently for distinct indices.
void parallel_for(int jobs, int count, const std::function<void(int)>& fn);

// All 2^n n! elements of B_n, sorted.
std::vector<SignedPermutation> group_elements(int n);

}  // namespace bcomb
