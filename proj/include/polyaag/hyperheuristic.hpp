#ifndef POLYAAG_HYPERHEURISTIC_HPP
#define POLYAAG_HYPERHEURISTIC_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "polyaag/ea.hpp"
#include "polyaag/heuristics.hpp"

namespace polyaag {

// Three-component chain metric, compared lexicographically. In the standard
// (train/test) order the components are:
//   1. mean best unweighted cost-sum over the unsuccessful EA runs (0 if none)
//   2. negated success rate, in [-1, 0]
//   3. mean generations used over the successful EA runs (0 if none)
// The validation variant swaps components 1 and 2 (success rate first).
struct ObjectiveVector {
    std::array<Rational, 3> v{};

    bool operator==(const ObjectiveVector&) const = default;
};

int compare_objective(const ObjectiveVector& a, const ObjectiveVector& b);
std::string format_objective(const ObjectiveVector& o);

ObjectiveVector objective(const std::vector<EaRunResult>& results);
ObjectiveVector validation_objective(const std::vector<EaRunResult>& results);

struct HhConfig {
    int chain_budget = 20;      // C_max: chains examined, counting the initial one
    int n_train = 15;
    int n_test = 50;
    int n_valid = 50;
    double p_insert = 0.4;      // p_i
    double p_substitute = 0.4;  // p_s
    double p_delete = 0.2;      // p_d
    double p_accept = 0.1;      // p_h: chance a non-improving chain becomes incumbent
    // Empty => start from a random chain of length [random_init_min, random_init_max].
    std::optional<HeuristicChain> initial_chain;
    int random_init_min = 2;
    int random_init_max = 10;
    int maxsteps_train = 50;
    int maxsteps_test = 50;
    int maxsteps_valid = 1250;
    std::size_t edit_budget = 10000;  // chain-generator loop cap
    // Advisory wall-clock budget; exceeding it stops chain generation early
    // (timed_out flag) but the validation phase still runs.
    std::optional<double> wall_clock_budget_seconds;
};

void validate_hh_config(const HhConfig& cfg);

// Algorithm-2 style mutation: repeatedly edits a copy of the incumbent
// (insert/substitute a uniform heuristic at a uniform position, or delete a
// position) until the chain is novel, non-empty and not pure deletion.
// Draw order per edit: operation coin, then position, then heuristic id
// (no heuristic draw for deletions). Throws when edit_budget is exhausted.
HeuristicChain generate_chain(const HeuristicChain& incumbent,
                              const std::unordered_set<std::string>& seen,
                              const HhConfig& cfg, Rng& rng);

struct HhChainRecord {
    int iteration = 0;  // 1-based
    HeuristicChain chain;
    ObjectiveVector train;
    std::optional<ObjectiveVector> test;
    bool accepted = false;     // became the incumbent for the next mutation
    bool became_best = false;  // strictly improved the stored best test objective
};

struct HhRunReport {
    std::vector<HhChainRecord> chains;
    int best_index = 1;  // i*, 1-based
    HeuristicChain initial_chain;
    HeuristicChain best_chain;
    std::optional<ObjectiveVector> validation_best;     // present iff best_index != 1
    std::optional<ObjectiveVector> validation_initial;  // present iff best_index != 1
    bool timed_out = false;
    double wall_seconds = 0.0;
    std::uint64_t master_seed = 0;
};

struct HhInstanceSets {
    std::vector<AagInstance> train;
    std::vector<AagInstance> test;
    std::vector<AagInstance> valid;
};

// Generate-and-test search over heuristic chains. Chain 1 is the initial
// chain; every later chain is a mutation of the incumbent. A chain that
// improves the incumbent's training objective is scored on the test set
// (the initial chain's test objective is computed lazily, at most once) and
// becomes the best chain i* when it strictly improves the stored best test
// objective. Chains that do not become best are accepted as incumbent with
// probability p_accept, else the incumbent rewinds to the best chain. When
// i* != 1 the best and initial chains are compared on the validation set
// with the swapped objective.
//
// EA seeds are pre-assigned per (phase, chain, instance) from master_seed, so
// reports are identical for any worker count; workers parallelize the EA runs
// across a phase's instances.
HhRunReport run_hyperheuristic(const GroupSpec& spec, const HhInstanceSets& sets,
                               const EaConfig& ea_template, const HhConfig& cfg,
                               std::uint64_t master_seed, int workers = 1);

// One row per examined chain: iteration, chain, objective components,
// accepted/became_best flags. RFC-quoted CSV with a header row.
std::string hh_report_csv(const HhRunReport& report);

// Human-readable run summary (chain log, best chain, validation verdict).
std::string hh_report_text(const HhRunReport& report);

}  // namespace polyaag

#endif
