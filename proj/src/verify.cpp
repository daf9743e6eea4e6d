#include "bcomb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bcomb/graphs.hpp"
#include "bcomb/insertion.hpp"
#include "bcomb/little.hpp"
#include "bcomb/tableaux.hpp"

namespace bcomb {

namespace {

std::string shape_label(const StrictPartition& lambda) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i) out << ',';
    out << lambda.parts()[i];
  }
  out << ')';
  return out.str();
}

std::string bump_label(const BumpStart& s) {
  std::ostringstream out;
  out << '(' << s.i << ',' << s.j << ',' << (s.delta > 0 ? '+' : '-') << ')';
  return out.str();
}

// Runs check over 0..count-1, each call returning an empty string on pass
// and a witness on failure, and folds the results into the report in index
// order.
void fan_out(VerificationReport& rep, int count, int jobs,
             const std::function<std::string(int)>& check) {
  std::vector<std::string> results(static_cast<size_t>(count));
  parallel_for(jobs, count, [&](int k) {
    results[static_cast<size_t>(k)] = check(k);
  });
  rep.instances += count;
  for (const std::string& r : results) {
    if (r.empty())
      ++rep.passes;
    else
      rep.failures.push_back(r);
  }
}

std::vector<SignedPermutation> bounded_elements(int rank, int max_length) {
  std::vector<SignedPermutation> out;
  for (const SignedPermutation& w : group_elements(rank))
    if (max_length < 0 || w.length() <= max_length) out.push_back(w);
  return out;
}

// All reduced words of the given exact length with letters in 0..rank-1.
// Every prefix of a reduced word is reduced, so prune on prefixes.
void collect_reduced_words(int rank, int len, Word& prefix,
                           std::vector<Word>& out) {
  if (static_cast<int>(prefix.size()) == len) {
    out.push_back(prefix);
    return;
  }
  for (int d = 0; d < rank; ++d) {
    prefix.push_back(d);
    if (is_reduced(prefix)) collect_reduced_words(rank, len, prefix, out);
    prefix.pop_back();
  }
}

std::string check_transition(const SignedPermutation& w) {
  const std::string name = format_signed_permutation(w);
  TransitionData td = transition_data(w);
  std::vector<Word> words = reduced_words(w);
  std::set<Word> images;
  std::map<SignedPermutation, long long> counts;
  for (const Word& a : words) {
    Word b = canonical_bump(a);
    if (!is_reduced(b))
      return name + ": bump image of " + format_word(a) + " is not reduced";
    if (!images.insert(b).second)
      return name + ": bump images collide at " + format_word(b);
    ++counts[evaluate(b)];
  }
  long long total = 0;
  for (const SignedPermutation& t : td.targets) {
    long long expect = count_reduced_words(t);
    auto it = counts.find(t);
    long long got = it == counts.end() ? 0 : it->second;
    if (got != expect)
      return name + ": target " + format_signed_permutation(t) +
             " receives " + std::to_string(got) + " of " +
             std::to_string(expect) + " words";
    total += expect;
    if (it != counts.end()) counts.erase(it);
  }
  if (!counts.empty())
    return name + ": bump image lands outside the transition set at " +
           format_signed_permutation(counts.begin()->first);
  if (total != static_cast<long long>(words.size()))
    return name + ": transition cardinalities sum to " +
           std::to_string(total) + " instead of " +
           std::to_string(words.size());
  return {};
}

VerificationReport suite_transition(const VerifyOptions& opts) {
  VerificationReport rep;
  std::vector<SignedPermutation> items;
  for (const SignedPermutation& w :
       bounded_elements(opts.rank, opts.max_length))
    if (!w.is_increasing()) items.push_back(w);
  fan_out(rep, static_cast<int>(items.size()), opts.jobs, [&](int k) {
    return check_transition(items[static_cast<size_t>(k)]);
  });
  return rep;
}

VerificationReport suite_qpreserve(const VerifyOptions& opts) {
  VerificationReport rep;
  std::vector<Word> words;
  for (const SignedPermutation& w :
       bounded_elements(opts.rank, opts.max_length))
    for (Word& a : reduced_words(w)) words.push_back(std::move(a));

  struct ClassKeys {
    std::string tableau;
    std::string rep;
  };
  std::vector<ClassKeys> keys(words.size());
  fan_out(rep, static_cast<int>(words.size()), opts.jobs, [&](int k) {
    const Word& a = words[static_cast<size_t>(k)];
    SignedPermutation w = evaluate(a);
    ShiftedTableau q0 = q_prime(a);
    std::vector<int> peaks0 = word_peaks(a);
    for (const BumpStart& s : bump_starts(w)) {
      Word r = little_bump(a, s.i, s.j, s.delta).result;
      if (q_prime(r) != q0)
        return format_word(a) + ": bump " + bump_label(s) +
               " changes the recording tableau";
      if (word_peaks(r) != peaks0)
        return format_word(a) + ": bump " + bump_label(s) +
               " changes the peak set";
    }
    Word u = to_increasing(a);
    if (!evaluate(u).is_increasing())
      return format_word(a) + ": canonical representative " + format_word(u) +
             " has a non-increasing element";
    if (!communicate(a, u))
      return format_word(a) + ": word does not communicate with its" +
             " canonical representative";
    keys[static_cast<size_t>(k)] = {tableau_vertex_id(q0), format_word(u)};
    return std::string{};
  });

  // Words with the same recording tableau must form exactly one
  // communication class, and vice versa.
  std::map<std::string, std::set<std::string>> reps_by_tableau;
  std::map<std::string, std::set<std::string>> tableaux_by_rep;
  for (const ClassKeys& k : keys) {
    reps_by_tableau[k.tableau].insert(k.rep);
    tableaux_by_rep[k.rep].insert(k.tableau);
  }
  for (const auto& [tab, reps] : reps_by_tableau) {
    ++rep.instances;
    if (reps.size() == 1)
      ++rep.passes;
    else
      rep.failures.push_back("tableau " + tab + ": " +
                             std::to_string(reps.size()) +
                             " communication classes share one tableau");
  }
  for (const auto& [cls, tabs] : tableaux_by_rep) {
    ++rep.instances;
    if (tabs.size() == 1)
      ++rep.passes;
    else
      rep.failures.push_back("class of " + cls +
                             ": recording tableau is not constant");
  }
  return rep;
}

VerificationReport suite_ckcommute(const VerifyOptions& opts) {
  VerificationReport rep;
  int len = opts.max_length < 0 ? 4 : opts.max_length;
  std::vector<Word> words;
  Word prefix;
  collect_reduced_words(opts.rank, len, prefix, words);
  fan_out(rep, static_cast<int>(words.size()), opts.jobs, [&](int k) {
    const Word& a = words[static_cast<size_t>(k)];
    std::vector<BumpStart> starts = bump_starts(evaluate(a));
    for (int pos = 1; pos + 3 <= static_cast<int>(a.size()); ++pos) {
      Word moved = ck_move_b(a, pos);
      for (const BumpStart& s : starts) {
        Word lhs = little_bump(moved, s.i, s.j, s.delta).result;
        Word rhs =
            ck_move_b(little_bump(a, s.i, s.j, s.delta).result, pos);
        if (lhs != rhs)
          return format_word(a) + ": move at " + std::to_string(pos) +
                 " and bump " + bump_label(s) + " do not commute";
      }
    }
    return std::string{};
  });
  return rep;
}

VerificationReport suite_sdeg_axioms(const VerifyOptions& opts) {
  VerificationReport rep;
  std::vector<StrictPartition> shapes;
  for (int m = 0; m <= opts.max_cells; ++m)
    for (const StrictPartition& lam : strict_partitions(m))
      shapes.push_back(lam);
  fan_out(rep, static_cast<int>(shapes.size()), opts.jobs, [&](int k) {
    const StrictPartition& lam = shapes[static_cast<size_t>(k)];
    SignedColoredGraph g = sdeg_standard(lam);
    AxiomReport r = check_axioms(g);
    std::string label = "shape " + shape_label(lam);
    if (!r.locally_standard) return label + ": " + r.locally_standard_witness;
    if (!r.commuting) return label + ": " + r.commuting_witness;
    if (!is_sdeg(g)) return label + ": component matches no standard graph";
    return std::string{};
  });

  std::vector<SignedPermutation> elements =
      bounded_elements(opts.rank, opts.max_length);
  fan_out(rep, static_cast<int>(elements.size()), opts.jobs, [&](int k) {
    const SignedPermutation& w = elements[static_cast<size_t>(k)];
    SignedColoredGraph g = ck_graph_b(w);
    AxiomReport r = check_axioms(g);
    std::string label = "element " + format_signed_permutation(w);
    if (!r.locally_standard) return label + ": " + r.locally_standard_witness;
    if (!r.commuting) return label + ": " + r.commuting_witness;
    if (!is_sdeg(g)) return label + ": component matches no standard graph";
    return std::string{};
  });
  return rep;
}

std::string check_insertion(const SignedPermutation& w) {
  const std::string name = format_signed_permutation(w);
  std::vector<Word> words = reduced_words(w);
  std::set<std::pair<ShiftedTableau, ShiftedTableau>> seen;
  std::map<ShiftedTableau, std::set<ShiftedTableau>> fibers;
  for (const Word& a : words) {
    InsertionPair pq = kraskiewicz_insert(a);
    ShiftedTableau p = pq.shifted_p();
    ShiftedTableau q = pq.shifted_q();
    if (!p.is_unimodal())
      return name + ": insertion tableau of " + format_word(a) +
             " is not unimodal";
    Word reading = reading_word(p);
    if (!is_reduced(reading) || evaluate(reading) != w)
      return name + ": reading word of the insertion tableau of " +
             format_word(a) + " does not represent the element";
    if (!q.is_standard())
      return name + ": recording tableau of " + format_word(a) +
             " is not standard";
    if (!(p.shape() == q.shape()))
      return name + ": tableau shapes differ at " + format_word(a);
    if (!seen.insert({p, q}).second)
      return name + ": insertion pair repeats at " + format_word(a);
    fibers[p].insert(q);
  }
  for (const auto& [p, qs] : fibers) {
    std::vector<ShiftedTableau> all = enumerate_sst(p.shape());
    std::set<ShiftedTableau> expect(all.begin(), all.end());
    if (qs != expect)
      return name + ": fiber over " + tableau_vertex_id(p) + " holds " +
             std::to_string(qs.size()) + " of " +
             std::to_string(expect.size()) + " standard tableaux";
  }
  return {};
}

VerificationReport suite_insertion(const VerifyOptions& opts) {
  VerificationReport rep;
  std::vector<SignedPermutation> items =
      bounded_elements(opts.rank, opts.max_length);
  fan_out(rep, static_cast<int>(items.size()), opts.jobs, [&](int k) {
    return check_insertion(items[static_cast<size_t>(k)]);
  });
  return rep;
}

VerificationReport suite_peaks(const VerifyOptions& opts) {
  VerificationReport rep;
  std::vector<Word> words;
  for (const SignedPermutation& w :
       bounded_elements(opts.rank, opts.max_length))
    for (Word& a : reduced_words(w)) words.push_back(std::move(a));
  fan_out(rep, static_cast<int>(words.size()), opts.jobs, [&](int k) {
    const Word& a = words[static_cast<size_t>(k)];
    std::vector<int> wp = word_peaks(a);
    std::set<int> word_set(wp.begin(), wp.end());
    if (word_set != peaks_of_tableau(q_prime(a)))
      return format_word(a) +
             ": word peaks differ from recording tableau peaks";
    return std::string{};
  });
  return rep;
}

std::string check_delta_shape(const StrictPartition& lam) {
  const std::string label = "shape " + shape_label(lam);
  int n = lam.size();
  for (const ShiftedTableau& t : enumerate_sst(lam)) {
    for (int i = 1; i + 3 <= n; ++i) {
      ShiftedTableau moved = h_move_tableau(t, i);
      if (!moved.is_standard() || !(moved.shape() == lam))
        return label + ": move " + std::to_string(i) +
               " leaves the standard tableaux at " + tableau_vertex_id(t);
      if (h_move_tableau(moved, i) != t)
        return label + ": move " + std::to_string(i) +
               " is not an involution at " + tableau_vertex_id(t);
    }
    for (int i = 2; i + 3 <= n; ++i)
      if (delta(h_move_tableau(t, i)) != h_move_tableau(delta(t), i - 1))
        return label + ": delta fails to intertwine move " +
               std::to_string(i) + " at " + tableau_vertex_id(t);
  }
  return {};
}

std::string check_delta_element(const SignedPermutation& w) {
  for (const Word& a : reduced_words(w)) {
    ShiftedTableau q = q_prime(a);
    for (int i = 1; i + 3 <= static_cast<int>(a.size()); ++i)
      if (q_prime(ck_move_b(a, i)) != h_move_tableau(q, i))
        return format_word(a) + ": recording tableau of the move at " +
               std::to_string(i) + " is not the h-move image";
  }
  return {};
}

VerificationReport suite_delta(const VerifyOptions& opts) {
  VerificationReport rep;
  std::vector<StrictPartition> shapes;
  for (int m = 1; m <= opts.max_cells; ++m)
    for (const StrictPartition& lam : strict_partitions(m))
      shapes.push_back(lam);
  fan_out(rep, static_cast<int>(shapes.size()), opts.jobs, [&](int k) {
    return check_delta_shape(shapes[static_cast<size_t>(k)]);
  });

  std::vector<SignedPermutation> elements =
      bounded_elements(opts.rank, opts.max_length);
  fan_out(rep, static_cast<int>(elements.size()), opts.jobs, [&](int k) {
    return check_delta_element(elements[static_cast<size_t>(k)]);
  });
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "ckcommute",  "delta", "insertion-bijection", "peaks",
      "qpreserve",  "sdeg-axioms", "transition"};
  return names;
}

VerificationReport run_suite(const std::string& name,
                             const VerifyOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  if (name == "transition")
    rep = suite_transition(opts);
  else if (name == "qpreserve")
    rep = suite_qpreserve(opts);
  else if (name == "ckcommute")
    rep = suite_ckcommute(opts);
  else if (name == "sdeg-axioms")
    rep = suite_sdeg_axioms(opts);
  else if (name == "insertion-bijection")
    rep = suite_insertion(opts);
  else if (name == "peaks")
    rep = suite_peaks(opts);
  else if (name == "delta")
    rep = suite_delta(opts);
  else
    throw std::invalid_argument("unknown suite: " + name);
  rep.suite = name;
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

void parallel_for(int jobs, int count, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<int> next{0};
  int workers = std::min(jobs, count);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int k = next++; k < count; k = next++) fn(k);
    });
  for (std::thread& th : pool) th.join();
}

std::vector<SignedPermutation> group_elements(int n) {
  if (n < 0) throw std::invalid_argument("group_elements: negative rank");
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> window = perm;
      for (int b = 0; b < n; ++b)
        if (mask & (1 << b)) window[static_cast<size_t>(b)] *= -1;
      out.emplace_back(SignedPermutation(std::move(window)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bcomb
