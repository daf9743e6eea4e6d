#include <doctest.h>

#include <atomic>
#include <set>

#include "bcomb/insertion.hpp"
#include "bcomb/json_io.hpp"
#include "bcomb/little.hpp"
#include "bcomb/symmetric.hpp"
#include "bcomb/verify.hpp"
#include "oracles.hpp"

using namespace bcomb;

namespace {

SignedPermutation sp(std::vector<int> window) {
  return SignedPermutation(std::move(window));
}

VerifyOptions small(int rank, int max_length = -1, int max_cells = 4) {
  VerifyOptions o;
  o.rank = rank;
  o.max_length = max_length;
  o.max_cells = max_cells;
  return o;
}

}  // namespace

TEST_CASE("json layouts are frozen") {
  nlohmann::json trace = little_bump({1, 0, 2, 1, 2, 0, 1}, -2, 1, -1);
  CHECK(trace.dump() ==
        "{\"pushes\":[[3,-1],[4,-1],[6,1],[7,1],[1,-1],[2,1],[3,1],[5,1]],"
        "\"result\":[0,1,2,0,3,1,2],"
        "\"start\":{\"delta\":-1,\"i\":-2,\"j\":1}}");

  nlohmann::json tableau = q_prime({1, 3, 4, 3});
  CHECK(tableau.dump() == "{\"rows\":[[1,2,3],[4]],\"shape\":[3,1]}");

  nlohmann::json pair = eg_insert({1, 3, 4, 3});
  CHECK(pair.dump() ==
        "{\"p\":{\"rows\":[[1,3,4],[4]],\"shape\":[3,1]},"
        "\"q\":{\"rows\":[[1,2,3],[4]],\"shape\":[3,1]}}");

  nlohmann::json poly = theta({}, 1, 2);
  CHECK(poly.dump() ==
        "{\"degree\":1,\"num_vars\":2,\"terms\":{\"0,1\":2,\"1,0\":2}}");

  nlohmann::json expansion = g_coefficients(increasing_of_partition({2, 1}));
  CHECK(expansion.dump() == "{\"terms\":{\"2,1\":1}}");

  nlohmann::json graph = ck_graph_b(sp({-1, -2}));
  CHECK(graph.dump() ==
        "{\"degree\":4,\"edges\":{\"1\":[[0,1]]},\"scheme\":\"peak\","
        "\"sigma\":[\"-+--\",\"--+-\"],\"vertices\":[\"0101\",\"1010\"]}");

  CHECK(expansion_json(transition_expand(sp({2, -1}))).dump() ==
        "{\"[-2,1]\":1}");

  CHECK(partition_key(StrictPartition({5, 3, 1})) == "5,3,1");
  CHECK(partition_key(StrictPartition()) == "");
}

TEST_CASE("suite names are sorted and dispatch") {
  const std::vector<std::string>& names = suite_names();
  CHECK(names.size() == 7);
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK_THROWS_AS(run_suite("nonsense", small(2)), std::invalid_argument);
}

TEST_CASE("every suite passes at small bounds") {
  for (const std::string& name : suite_names()) {
    VerificationReport rep = run_suite(name, small(2));
    CAPTURE(name);
    CHECK(rep.suite == name);
    CHECK(rep.instances > 0);
    CHECK(rep.passes == rep.instances);
    CHECK(rep.failures.empty());
    CHECK(rep.ok());
    CHECK(rep.seconds >= 0.0);
  }
}

TEST_CASE("suites pass on the rank three group") {
  CHECK(run_suite("transition", small(3)).ok());
  CHECK(run_suite("qpreserve", small(3, 5)).ok());
  CHECK(run_suite("peaks", small(3, 6)).ok());
  CHECK(run_suite("insertion-bijection", small(3)).ok());
  CHECK(run_suite("ckcommute", small(3, 4)).ok());
  CHECK(run_suite("sdeg-axioms", small(2, 4, 5)).ok());
  CHECK(run_suite("delta", small(2, -1, 6)).ok());
}

TEST_CASE("worker pool leaves the report unchanged") {
  for (const std::string& name : {std::string("transition"),
                                  std::string("qpreserve"),
                                  std::string("sdeg-axioms")}) {
    VerifyOptions serial = small(2, -1, 5);
    VerifyOptions pooled = serial;
    pooled.jobs = 4;
    VerificationReport a = run_suite(name, serial);
    VerificationReport b = run_suite(name, pooled);
    CHECK(a.suite == b.suite);
    CHECK(a.instances == b.instances);
    CHECK(a.passes == b.passes);
    CHECK(a.failures == b.failures);
  }
}

TEST_CASE("parallel for touches each index once") {
  std::vector<std::atomic<int>> hits(100);
  for (auto& h : hits) h = 0;
  parallel_for(4, 100, [&](int k) { ++hits[static_cast<size_t>(k)]; });
  for (const auto& h : hits) CHECK(h == 1);
  parallel_for(3, 0, [&](int) { FAIL("no indices expected"); });
}

TEST_CASE("group enumeration matches the oracle") {
  CHECK(group_elements(0) ==
        std::vector<SignedPermutation>{SignedPermutation::identity()});
  CHECK(group_elements(1).size() == 2);
  CHECK(group_elements(2).size() == 8);
  for (int n = 0; n <= 3; ++n) {
    std::vector<SignedPermutation> mine = group_elements(n);
    std::vector<SignedPermutation> want = oracles::all_elements(n);
    std::sort(want.begin(), want.end());
    CHECK(mine == want);
    CHECK(std::adjacent_find(mine.begin(), mine.end()) == mine.end());
  }
}
