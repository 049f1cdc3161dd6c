#include "polyaag/lba.hpp"

#include <stdexcept>

namespace polyaag {

void validate_lba_config(const LbaConfig& cfg) {
    if (cfg.max_iterations < 0) throw std::invalid_argument("lba: max_iterations must be >= 0");
    if (cfg.initial_word_length < 1) {
        throw std::invalid_argument("lba: initial_word_length must be >= 1");
    }
    if (cfg.initial_word && !is_freely_reduced(*cfg.initial_word)) {
        throw std::invalid_argument("lba: initial_word must be freely reduced");
    }
}

EaRunResult run_lba(const GroupSpec& spec, const AagInstance& inst, const LbaConfig& cfg,
                    std::uint64_t seed, bool record_trace) {
    validate_lba_config(cfg);
    Rng rng(seed);

    Word current = cfg.initial_word
                       ? *cfg.initial_word
                       : random_word_of_naive_length(
                             spec, static_cast<std::size_t>(cfg.initial_word_length), rng);
    CostVector current_cost = cost(spec, inst, current);

    EaRunResult result;
    result.seed = seed;
    if (record_trace) result.trace.push_back(EaTraceRecord{0, current_cost, current});

    for (long iteration = 1; iteration <= cfg.max_iterations; ++iteration) {
        if (current_cost.is_zero()) break;
        Word candidate = apply_heuristic(cfg.heuristic, spec, inst, current, rng);
        CostVector candidate_cost = cost(spec, inst, candidate);
        if (compare_cost(candidate_cost, current_cost) < 0) {
            current = std::move(candidate);
            current_cost = std::move(candidate_cost);
            if (record_trace) {
                result.trace.push_back(
                    EaTraceRecord{static_cast<int>(iteration), current_cost, current});
            }
            if (current_cost.is_zero()) {
                result.success = true;
                result.generations_used = static_cast<int>(iteration);
                break;
            }
        }
    }
    if (current_cost.is_zero() && !result.success) {
        // Initial word already solved the instance.
        result.success = true;
        result.generations_used = 0;
    }
    if (!result.success) result.generations_used = static_cast<int>(cfg.max_iterations);
    result.best_cost = std::move(current_cost);
    result.best_word = std::move(current);
    return result;
}

}  // namespace polyaag
