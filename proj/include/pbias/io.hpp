#pragma once

#include <string>

#include <json.hpp>

#include "pbias/agents.hpp"
#include "pbias/commitment.hpp"
#include "pbias/goal_reward.hpp"
#include "pbias/graph.hpp"
#include "pbias/oracle.hpp"

namespace pbias::io {

using json = nlohmann::ordered_json;

// Rationals are written as strings; integers and "p/q" strings are accepted.
json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& what);

GraphSpec graph_spec_from_json(const json& j); // throws InvalidInput on malformed documents
Graph graph_from_json(const json& j);          // also validates
json to_json(const Graph& g);
std::string to_dot(const Graph& g);

// {"kind": "sophisticated", "b": "2", "b_prime": "3/2", "tie_break": "min_true_continuation", "objective": "cost"}
AgentSpec agent_from_json(const json& j);
json to_json(const AgentSpec& a);

// [{"from": "u", "to": "v", "reward": "3"}, ...] or {"edges": [...], "terminal": "r"}
EdgeRewards placement_from_json(const json& j, Rational* terminal = nullptr);
json to_json(const EdgeRewards& r);

json to_json(const Path& p);
json to_json(const TraversalTrace& t);
json to_json(const CostTable& table, const Graph& g);
json to_json(const PruneReport& r, const Graph& g);
json to_json(const RewardIntervalSet& s);
json to_json(const DeletionResult& d);
json to_json(const InternalCheck& c);
json to_json(const InternalSearchResult& r);
json to_json(const CommitmentResult& r);
json to_json(const oracle::Verdict& v);

} // namespace pbias::io
