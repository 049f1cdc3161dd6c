#ifndef POLYAAG_LBA_HPP
#define POLYAAG_LBA_HPP

#include <cstdint>
#include <optional>

#include "polyaag/ea.hpp"
#include "polyaag/heuristics.hpp"

namespace polyaag {

// Single-heuristic hillclimber baseline: repeatedly perturb one word with one
// heuristic and keep the change only when the full cost vector strictly
// improves.
struct LbaConfig {
    HeuristicId heuristic = HeuristicId::H2;
    long max_iterations = 0;
    int initial_word_length = 10;
    // Test hook: start from this word instead of a random one.
    std::optional<Word> initial_word;
};

void validate_lba_config(const LbaConfig& cfg);

// generations_used reports the iteration at which cost reached zero (0 when
// the initial word already solves) or max_iterations on failure. The trace,
// when recorded, holds the initial word plus every accepted move; its cost
// column is strictly decreasing.
EaRunResult run_lba(const GroupSpec& spec, const AagInstance& inst, const LbaConfig& cfg,
                    std::uint64_t seed, bool record_trace = false);

}  // namespace polyaag

#endif
