// pbias: command-line front end for the present-bias library.
//
//   pbias simulate --graph g.json --agent '{"kind":"sophisticated","b":"2"}'
//   pbias rewards min --graph g.json --b 2
//   pbias gen counter --n 3 --c 8/5 | pbias rewards feasible-set --b 13/8
//
// Exit status: 0 success, 1 domain error (named), 2 usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "pbias/agents.hpp"
#include "pbias/commitment.hpp"
#include "pbias/fixtures.hpp"
#include "pbias/goal_reward.hpp"
#include "pbias/io.hpp"
#include "pbias/oracle.hpp"
#include "pbias/reward_seeking.hpp"

using namespace pbias;
using io::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format = "json";
    std::string tie;
    std::uint64_t seed = 1;
};

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, what + ": malformed JSON: " + e.what());
    }
}

Graph load_graph(const std::string& path) { return io::graph_from_json(parse_json(slurp(path), "graph")); }

// Inline JSON when the text starts with '{', otherwise a file name.
json inline_or_file(const std::string& text, const std::string& what) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return parse_json(text, what);
    return parse_json(slurp(text), what);
}

Rational rat(const std::string& text, const std::string& flag) {
    try {
        return Rational::parse(text);
    } catch (const Error&) {
        throw UsageError(flag + ": not a rational: " + text);
    }
}

TieBreakPolicy tie_of(const Globals& g, TieBreakPolicy fallback = TieBreakPolicy::MinTrueContinuation) {
    if (g.tie.empty()) return fallback;
    try {
        return parse_tie_break(g.tie);
    } catch (const Error&) {
        throw UsageError("--tie-break: unknown policy " + g.tie);
    }
}

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (g.format == f) return;
    throw UsageError("--format " + g.format + " is not supported by this command");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string dash_join(const std::vector<NodeId>& nodes) {
    std::string out;
    for (std::size_t i = 0; i < nodes.size(); ++i) out += (i ? "-" : "") + nodes[i];
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Present-biased agents on weighted DAGs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));
    app.add_option("--tie-break", g.tie, "Tie-break policy (min_true_continuation, max_true_continuation, "
                                         "prefer_earlier_successor_id, prefer_later_successor_id, "
                                         "max_immediate_edge_weight)");
    app.add_option("--seed", g.seed, "Seed for gen random");

    std::string graph_path = "-", agent_text, b_text, r_text, placement_path, terminal_text;
    std::function<void()> action;

    // simulate
    auto* sim = app.add_subcommand("simulate", "Simulate an agent on a cost graph");
    sim->add_option("--graph", graph_path, "Graph JSON file ('-' for stdin)");
    sim->add_option("--agent", agent_text, "Agent JSON, inline or file")->required();
    sim->callback([&] {
        action = [&] {
            require_format(g, {"json", "dot"});
            Graph graph = load_graph(graph_path);
            AgentSpec agent = io::agent_from_json(inline_or_file(agent_text, "agent"));
            if (!g.tie.empty()) agent.tie_break = tie_of(g);
            TraversalTrace tr = agent.objective == Objective::MaximizeReward ? simulate_rewards(graph, agent)
                                                                            : simulate(graph, agent);
            if (g.format == "dot") {
                std::cout << io::to_dot(graph);
                return;
            }
            json j = io::to_json(tr);
            j["agent"] = io::to_json(agent);
            emit(j);
        };
    });

    // rewards
    auto* rw = app.add_subcommand("rewards", "Reward at the target");
    rw->require_subcommand(1);
    auto add_graph_b = [&](CLI::App* c) {
        c->add_option("--graph", graph_path, "Graph JSON file ('-' for stdin)");
        c->add_option("--b", b_text, "Present bias b >= 1")->required();
    };
    auto* rw_prune = rw->add_subcommand("prune", "Prune abandoned nodes for reward R");
    add_graph_b(rw_prune);
    rw_prune->add_option("--R,--reward", r_text, "Reward at the target")->required();
    rw_prune->callback([&] {
        action = [&] {
            require_format(g, {"json"});
            Graph graph = load_graph(graph_path);
            emit(io::to_json(prune(graph, rat(b_text, "--b"), rat(r_text, "--R"), tie_of(g)), graph));
        };
    });
    auto* rw_trav = rw->add_subcommand("traverse", "Traverse with reward R");
    add_graph_b(rw_trav);
    rw_trav->add_option("--R,--reward", r_text, "Reward at the target")->required();
    rw_trav->callback([&] {
        action = [&] {
            require_format(g, {"json"});
            Graph graph = load_graph(graph_path);
            TraversalTrace tr = traverse_with_reward(graph, rat(b_text, "--b"), rat(r_text, "--R"), tie_of(g));
            json j = io::to_json(tr);
            j["traversable"] = tr.reached_target();
            emit(j);
        };
    });
    auto* rw_set = rw->add_subcommand("feasible-set", "Exact set of rewards that get the agent to the target");
    add_graph_b(rw_set);
    rw_set->callback([&] {
        action = [&] {
            require_format(g, {"json"});
            Graph graph = load_graph(graph_path);
            emit(io::to_json(feasible_reward_set(graph, rat(b_text, "--b"), tie_of(g))));
        };
    });
    auto* rw_min = rw->add_subcommand("min", "Minimum reward R^min");
    add_graph_b(rw_min);
    rw_min->callback([&] {
        action = [&] {
            require_format(g, {"json"});
            Graph graph = load_graph(graph_path);
            emit(json{{"r_min", io::to_json(min_reward(graph, rat(b_text, "--b"), tie_of(g)))}});
        };
    });
    auto* rw_del = rw->add_subcommand("min-deletion", "Minimum reward R_d when edges may be deleted");
    add_graph_b(rw_del);
    rw_del->callback([&] {
        action = [&] {
            require_format(g, {"json"});
            Graph graph = load_graph(graph_path);
            emit(io::to_json(min_reward_with_deletion(graph, rat(b_text, "--b"))));
        };
    });
    auto* rw_chk = rw->add_subcommand("check-internal", "Check an internal reward placement");
    add_graph_b(rw_chk);
    rw_chk->add_option("--placement", placement_path, "Placement JSON, inline or file")->required();
    rw_chk->add_option("--terminal", terminal_text, "Reward at the target in addition to edge rewards");
    rw_chk->callback([&] {
        action = [&] {
            require_format(g, {"json"});
            Graph graph = load_graph(graph_path);
            Rational terminal;
            EdgeRewards placement = io::placement_from_json(inline_or_file(placement_path, "placement"), &terminal);
            if (!terminal_text.empty()) terminal = rat(terminal_text, "--terminal");
            emit(io::to_json(check_internal_distribution(graph, rat(b_text, "--b"), placement, tie_of(g), terminal)));
        };
    });
    std::size_t budget = kDefaultSearchBudget;
    auto* rw_int = rw->add_subcommand("min-internal", "Exact search for the least total internal reward R_i");
    add_graph_b(rw_int);
    rw_int->add_option("--budget", budget, "Maximum behaviour profiles");
    rw_int->callback([&] {
        action = [&] {
            require_format(g, {"json"});
            Graph graph = load_graph(graph_path);
            emit(io::to_json(min_internal_reward_search(graph, rat(b_text, "--b"), tie_of(g), budget)));
        };
    });

    // reward-seek
    auto* rs = app.add_subcommand("reward-seek", "Edge rewards collected along the way");
    rs->require_subcommand(1);
    auto* rs_sim = rs->add_subcommand("simulate", "Simulate a reward-seeking agent");
    auto* rs_ratio = rs->add_subcommand("ratio", "R_o(s) over the collected reward");
    for (auto* c : {rs_sim, rs_ratio}) {
        c->add_option("--graph", graph_path, "Graph JSON file ('-' for stdin)");
        c->add_option("--agent", agent_text, "Agent JSON, inline or file")->required();
    }
    auto rs_agent = [&] {
        AgentSpec agent = io::agent_from_json(inline_or_file(agent_text, "agent")).rewards();
        if (!g.tie.empty()) agent.tie_break = tie_of(g);
        return agent;
    };
    rs_sim->callback([&] {
        action = [&] {
            require_format(g, {"json"});
            Graph graph = load_graph(graph_path);
            AgentSpec agent = rs_agent();
            json j = io::to_json(simulate_rewards(graph, agent));
            j["agent"] = io::to_json(agent);
            emit(j);
        };
    });
    rs_ratio->callback([&] {
        action = [&] {
            require_format(g, {"json"});
            Graph graph = load_graph(graph_path);
            emit(json{{"ratio", io::to_json(reward_ratio(graph, rs_agent()))}});
        };
    });

    // commit
    auto* cm = app.add_subcommand("commit", "Commitment devices for a sophisticated reward-seeking agent");
    cm->require_subcommand(1);
    int k = 3;
    auto* cm_del = cm->add_subcommand("delete", "Interval edge deletion");
    add_graph_b(cm_del);
    cm_del->add_option("--k", k, "Interval parameter k > 2")->required();
    cm_del->callback([&] {
        action = [&] {
            require_format(g, {"json"});
            Graph graph = load_graph(graph_path);
            emit(io::to_json(commit_by_deletion(graph, rat(b_text, "--b"), k, tie_of(g))));
        };
    });
    auto* cm_zero = cm->add_subcommand("zero-edge", "Best single added zero-reward edge");
    add_graph_b(cm_zero);
    cm_zero->callback([&] {
        action = [&] {
            require_format(g, {"json"});
            Graph graph = load_graph(graph_path);
            emit(io::to_json(best_zero_edge(graph, rat(b_text, "--b"), tie_of(g))));
        };
    });
    bool search = false;
    auto* cm_plan = cm->add_subcommand("plan", "Planning-phase reward placement");
    add_graph_b(cm_plan);
    auto* search_flag = cm_plan->add_flag("--search", search, "Search for the best placement");
    auto* placement_opt = cm_plan->add_option("--placement", placement_path, "Placement JSON, inline or file");
    search_flag->excludes(placement_opt);
    cm_plan->add_option("--budget", budget, "Maximum behaviour profiles for --search");
    cm_plan->callback([&] {
        action = [&] {
            require_format(g, {"json"});
            if (!search && placement_path.empty()) throw UsageError("commit plan: give --search or --placement");
            Graph graph = load_graph(graph_path);
            Rational b = rat(b_text, "--b");
            if (search) {
                emit(io::to_json(search_plan(graph, b, tie_of(g), budget)));
            } else {
                EdgeRewards placement = io::placement_from_json(inline_or_file(placement_path, "placement"));
                emit(io::to_json(evaluate_plan(graph, b, placement, tie_of(g))));
            }
        };
    });

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a fixture graph: gen <family> --param k=v | gen list | gen random");
    gen->allow_extras();
    gen->fallthrough(false); // family parameters arrive as unknown --k v pairs
    gen->add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));
    gen->add_option("--seed", g.seed, "Seed for gen random");
    std::string family;
    std::vector<std::string> params;
    int rnd_n = 8;
    std::string density = "1/2";
    std::int64_t wmin = 0, wmax = 3;
    bool rnd_rewards = false;
    gen->add_option("family", family, "Family name, 'list' or 'random'")->required();
    gen->add_option("--param", params, "Parameter k=v (repeatable); --k v also works");
    gen->add_option("--nodes", rnd_n, "random: node count");
    gen->add_option("--density", density, "random: edge density");
    gen->add_option("--wmin", wmin, "random: least weight");
    gen->add_option("--wmax", wmax, "random: largest weight");
    gen->add_flag("--rewards", rnd_rewards, "random: fill rewards instead of costs");
    gen->callback([&] {
        action = [&] {
            if (family == "list") {
                require_format(g, {"json", "csv"});
                if (g.format == "csv") {
                    std::cout << "family,parameters,constraints,description\n";
                    for (const auto& f : fixture_families())
                        std::cout << f.name << ",\"" << f.parameters << "\",\"" << f.constraints << "\",\""
                                  << f.description << "\"\n";
                    return;
                }
                json a = json::array();
                for (const auto& f : fixture_families())
                    a.push_back({{"family", f.name}, {"parameters", f.parameters}, {"constraints", f.constraints},
                                 {"description", f.description}});
                emit(a);
                return;
            }
            require_format(g, {"json", "dot"});
            Graph graph = [&] {
                if (family == "random") {
                    if (!gen->remaining().empty()) throw UsageError("gen random: unexpected " + gen->remaining()[0]);
                    RandomDagOptions opt;
                    opt.density = rat(density, "--density");
                    opt.weight_min = wmin;
                    opt.weight_max = wmax;
                    opt.costs = !rnd_rewards;
                    opt.rewards = rnd_rewards;
                    return random_dag(g.seed, rnd_n, opt);
                }
                FixtureSpec spec{family, {}};
                for (const auto& p : params) {
                    auto eq = p.find('=');
                    if (eq == std::string::npos) throw UsageError("--param expects k=v, got " + p);
                    spec.params[p.substr(0, eq)] = p.substr(eq + 1);
                }
                std::vector<std::string> rest = gen->remaining();
                for (std::size_t i = 0; i < rest.size(); ++i) {
                    const std::string& a = rest[i];
                    if (a.rfind("--", 0) != 0) throw UsageError("gen: unexpected argument " + a);
                    auto eq = a.find('=');
                    if (eq != std::string::npos) {
                        spec.params[a.substr(2, eq - 2)] = a.substr(eq + 1);
                    } else {
                        if (i + 1 >= rest.size()) throw UsageError(a + ": missing value");
                        spec.params[a.substr(2)] = rest[++i];
                    }
                }
                return generate(spec).graph;
            }();
            if (g.format == "dot") std::cout << io::to_dot(graph);
            else emit(io::to_json(graph));
        };
    });

    // verify
    auto* vf = app.add_subcommand("verify", "Brute-force oracles");
    vf->require_subcommand(1);
    auto* vf_eq = vf->add_subcommand("equilibrium", "Check the agent's table edge by edge");
    vf_eq->add_option("--graph", graph_path, "Graph JSON file ('-' for stdin)");
    vf_eq->add_option("--agent", agent_text, "Agent JSON, inline or file")->required();
    vf_eq->callback([&] {
        action = [&] {
            require_format(g, {"json"});
            Graph graph = load_graph(graph_path);
            AgentSpec agent = io::agent_from_json(inline_or_file(agent_text, "agent"));
            if (!g.tie.empty()) agent.tie_break = tie_of(g);
            emit(io::to_json(oracle::brute_force_equilibrium_check(graph, agent, cost_table(graph, agent))));
        };
    });
    std::vector<std::string> samples;
    std::string grid_from, grid_to;
    int grid_count = 0;
    auto* vf_grid = vf->add_subcommand("grid", "Traversability at sample rewards, checked against the exact set");
    add_graph_b(vf_grid);
    vf_grid->add_option("--samples", samples, "Explicit sample rewards");
    vf_grid->add_option("--from", grid_from, "Grid start");
    vf_grid->add_option("--to", grid_to, "Grid end");
    vf_grid->add_option("--count", grid_count, "Grid points");
    vf_grid->callback([&] {
        action = [&] {
            require_format(g, {"json", "csv"});
            Graph graph = load_graph(graph_path);
            Rational b = rat(b_text, "--b");
            std::vector<Rational> rs;
            for (const auto& s : samples) rs.push_back(rat(s, "--samples"));
            if (grid_count > 0) {
                if (grid_from.empty() || grid_to.empty()) throw UsageError("--count needs --from and --to");
                Rational lo = rat(grid_from, "--from"), hi = rat(grid_to, "--to");
                for (int i = 0; i < grid_count; ++i)
                    rs.push_back(grid_count == 1 ? lo : lo + (hi - lo) * Rational(i) / Rational(grid_count - 1));
            }
            if (rs.empty()) throw UsageError("verify grid: give --samples or --from/--to/--count");
            std::vector<char> verdict = oracle::feasibility_grid(graph, b, rs, tie_of(g));
            RewardIntervalSet set = feasible_reward_set(graph, b, tie_of(g));
            std::size_t disagreements = 0;
            if (g.format == "csv") std::cout << "reward,traversable,in_set\n";
            json rows = json::array();
            for (std::size_t i = 0; i < rs.size(); ++i) {
                bool in = set.contains(rs[i]);
                disagreements += (in != (verdict[i] != 0));
                if (g.format == "csv")
                    std::cout << rs[i] << ',' << (verdict[i] ? "yes" : "no") << ',' << (in ? "yes" : "no") << '\n';
                else
                    rows.push_back({{"reward", io::to_json(rs[i])}, {"traversable", verdict[i] != 0}, {"in_set", in}});
            }
            if (g.format == "json") emit(json{{"samples", rows}, {"disagreements", disagreements}});
        };
    });

    // sweep
    std::string sweep_param = "b", sweep_from, sweep_to;
    int steps = 11;
    auto* sw = app.add_subcommand("sweep", "Vary b or R over a grid; CSV of parameter, path, true_total, ratio");
    sw->add_option("--graph", graph_path, "Graph JSON file ('-' for stdin)");
    sw->add_option("--agent", agent_text, "Agent JSON, inline or file (b is replaced when sweeping b)")->required();
    sw->add_option("--param", sweep_param, "b or R")->check(CLI::IsMember({"b", "R"}));
    sw->add_option("--from", sweep_from, "First value")->required();
    sw->add_option("--to", sweep_to, "Last value")->required();
    sw->add_option("--steps", steps, "Grid points")->check(CLI::Range(1, 100000));
    sw->callback([&] {
        action = [&] {
            if (g.format == "json") g.format = "csv";
            require_format(g, {"csv"});
            Graph graph = load_graph(graph_path);
            AgentSpec agent = io::agent_from_json(inline_or_file(agent_text, "agent"));
            if (!g.tie.empty()) agent.tie_break = tie_of(g);
            Rational lo = rat(sweep_from, "--from"), hi = rat(sweep_to, "--to");
            std::vector<Rational> grid;
            for (int i = 0; i < steps; ++i)
                grid.push_back(steps == 1 ? lo : lo + (hi - lo) * Rational(i) / Rational(steps - 1));
            const bool reward_model = agent.objective == Objective::MaximizeReward;
            const NodeId src = graph.topo().id(graph.topo().source());
            Rational opt = reward_model ? heaviest_path(graph, src).table.value[0] : shortest_path(graph, src).table.value[0];
            if (sweep_param == "b") check_agent(agent); // bad kinds fail before the parallel loop
            std::vector<std::string> lines(grid.size());
            std::vector<std::string> errors(grid.size());
#pragma omp parallel for schedule(dynamic, 1)
            for (long i = 0; i < static_cast<long>(grid.size()); ++i) {
                const Rational& x = grid[static_cast<std::size_t>(i)];
                std::ostringstream line;
                try {
                    TraversalTrace tr;
                    if (sweep_param == "b") {
                        AgentSpec a = agent;
                        a.b = x;
                        tr = reward_model ? simulate_rewards(graph, a) : simulate(graph, a);
                    } else {
                        tr = traverse_with_reward(graph, agent.b, x, agent.tie_break);
                    }
                    line << x << ',';
                    if (tr.reached_target()) {
                        line << dash_join(tr.path.nodes) << ',' << tr.true_total << ',';
                        if (reward_model ? !tr.true_total.is_zero() : !opt.is_zero())
                            line << (reward_model ? opt / tr.true_total : tr.true_total / opt);
                    } else {
                        line << ",,";
                    }
                } catch (const Error& e) {
                    errors[static_cast<std::size_t>(i)] = std::string(e.name()) + ": " + e.what();
                }
                lines[static_cast<std::size_t>(i)] = line.str();
            }
            for (const auto& e : errors)
                if (!e.empty()) throw Error(ErrorCode::InvalidInput, "sweep: " + e);
            std::cout << "parameter,path,true_total,ratio\n";
            for (const auto& l : lines) std::cout << l << '\n';
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (action) action();
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    }
}
