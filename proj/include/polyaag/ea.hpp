#ifndef POLYAAG_EA_HPP
#define POLYAAG_EA_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "polyaag/aag.hpp"
#include "polyaag/heuristics.hpp"

namespace polyaag {

// Offspring slots of one generation, in assembly order. Each generation is
// built from exactly these slots, so the per-slot counts below must sum to
// the population size.
enum class EaSlot {
    h1 = 0, h2, h3, h4, h5, h6, crossover, selection, chain,
};
inline constexpr int kEaSlotCount = 9;

struct EaConfig {
    int population_size = 25;
    double truncation_fraction = 0.40;
    std::array<int, kEaSlotCount> offspring_counts = {6, 1, 1, 5, 1, 1, 4, 2, 4};
    int maxsteps = 0;            // generation cap, counting the initial one
    int initial_word_length = 10;
    std::size_t letter_cap = 10000;
    HeuristicChain injected_chain;
    // Test hook: words seeded verbatim into generation 1 before the random
    // fill. Must not exceed population_size.
    std::vector<Word> initial_population;
};

void validate_ea_config(const EaConfig& cfg);

// Number of ranked individuals eligible as parents ("top 40%").
int truncation_count(const EaConfig& cfg);

struct EaIndividual {
    Word word;
    CostVector cost;
};

struct EaTraceRecord {
    int generation = 0;
    CostVector best_cost;
    Word best_word;
};

struct EaRunResult {
    bool success = false;
    int generations_used = 0;
    CostVector best_cost;
    Word best_word;
    std::uint64_t seed = 0;
    // Total offspring attributed to each slot over all assembled generations;
    // audit: equals offspring_counts * (generations_used - 1).
    std::array<long long, kEaSlotCount> operator_offspring{};
    std::vector<EaTraceRecord> trace;  // filled only when record_trace is set
};

// One-point splice crossover: draws r1 <= len(w1), r2 <= len(w2), then emits
// one of w1[1..r1]w2[r2+1..] / w2[1..r2]w1[r1+1..] uniformly, freely reduced.
// An empty parent contributes nothing and skips its cut draw.
Word crossover(const Word& w1, const Word& w2, Rng& rng);

// Cost-ranks words ascending by compare_cost; ties keep input order.
std::vector<EaIndividual> rank_population(const GroupSpec& spec, const AagInstance& inst,
                                          const std::vector<Word>& words, int workers = 1);

// Runs the EA on one instance until some word has cost sum zero (success) or
// maxsteps generations have been evaluated (failure). Only cost evaluation is
// parallel; assembly is sequential, so results are identical for any workers.
EaRunResult run_ea(const GroupSpec& spec, const AagInstance& inst, const EaConfig& cfg,
                   std::uint64_t seed, int workers = 1, bool record_trace = false);

}  // namespace polyaag

#endif
