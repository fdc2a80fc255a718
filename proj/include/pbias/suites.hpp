#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pbias/graph.hpp"

namespace pbias::suites {

// Every forward DAG on nodes s=0 < 1 < ... < n-1=t in which each node lies on
// an s-t path. Ids are "s", "a", "b", ..., "t".
std::vector<std::shared_ptr<const Topology>> forward_topologies(int n);

// Number of weighted graphs in the exhaustive suite for n nodes and integer
// weights 0..max_weight.
std::uint64_t exhaustive_count(int n, int max_weight);

// Calls fn for every weighted graph with 2..max_nodes nodes, serially. The
// weight vector is written into `field` (costs or rewards), the other is 0.
void for_each_small_dag(int max_nodes, int max_weight, bool rewards, const std::function<void(const Graph&)>& fn);

struct SuiteStats {
    std::uint64_t graphs = 0;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::string first_violation; // JSON-free description of the first failing case
};

enum class Property {
    SophisticatedCostRatio, // cost(Sophisticated b) <= b * C_o(s)
    RewardChain,            // C_o(s) <= R_d <= R^min <= b * C_o(s)
    NaiveRewardBound,       // b * R_n(s) >= R_o(s)
};

// Checks the property on the exhaustive suite for every bias. The parallel
// version splits graphs across threads with per-thread scratch buffers and no
// allocation in the inner loop; the serial one is the reference.
SuiteStats run_exhaustive(Property property, const std::vector<Rational>& biases, int max_nodes = 5,
                          int max_weight = 3, TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);
SuiteStats run_exhaustive_serial(Property property, const std::vector<Rational>& biases, int max_nodes = 5,
                                 int max_weight = 3, TieBreakPolicy tie = TieBreakPolicy::MinTrueContinuation);

// Seeds 1..count; n cycles through 2..max_nodes; density 1/2; weights 0..max_weight.
struct RandomSuite {
    int count = 1000;
    int max_nodes = 12;
    std::int64_t max_weight = 9;
    bool rewards = false;
    std::uint64_t seed_base = 0;
};
std::vector<Graph> random_suite(const RandomSuite& suite);

} // namespace pbias::suites
