#include "polyaag/ea.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "polyaag/parallel.hpp"

namespace polyaag {

namespace {

constexpr std::array<HeuristicId, 6> kSlotHeuristics = {
    HeuristicId::H1, HeuristicId::H2, HeuristicId::H3,
    HeuristicId::H4, HeuristicId::H5, HeuristicId::H6,
};

std::size_t draw_parent(Rng& rng, int top) {
    return std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(top) - 1)(rng);
}

std::vector<CostVector> evaluate_costs(const GroupSpec& spec, const AagInstance& inst,
                                       const std::vector<Word>& words, int workers) {
    return parallel_map<CostVector>(words.size(), workers, [&](std::size_t i) {
        return cost(spec, inst, words[i]);
    });
}

}  // namespace

void validate_ea_config(const EaConfig& cfg) {
    if (cfg.population_size < 1) throw std::invalid_argument("ea: population_size must be >= 1");
    if (!(cfg.truncation_fraction > 0.0) || cfg.truncation_fraction > 1.0) {
        throw std::invalid_argument("ea: truncation_fraction must be in (0, 1]");
    }
    int total = 0;
    for (int c : cfg.offspring_counts) {
        if (c < 0) throw std::invalid_argument("ea: offspring counts must be >= 0");
        total += c;
    }
    if (total != cfg.population_size) {
        throw std::invalid_argument("ea: offspring counts must sum to population_size");
    }
    if (cfg.maxsteps < 1) throw std::invalid_argument("ea: maxsteps must be >= 1");
    if (cfg.initial_word_length < 1) {
        throw std::invalid_argument("ea: initial_word_length must be >= 1");
    }
    if (cfg.letter_cap < 1) throw std::invalid_argument("ea: letter_cap must be >= 1");
    if (cfg.offspring_counts[static_cast<int>(EaSlot::chain)] > 0 &&
        cfg.injected_chain.ids.empty()) {
        throw std::invalid_argument("ea: chain slot requires a non-empty injected chain");
    }
    if (cfg.offspring_counts[static_cast<int>(EaSlot::selection)] > 0 &&
        cfg.population_size < 1) {
        throw std::invalid_argument("ea: selection slot needs a population");
    }
    if (cfg.initial_population.size() > static_cast<std::size_t>(cfg.population_size)) {
        throw std::invalid_argument("ea: initial_population exceeds population_size");
    }
}

int truncation_count(const EaConfig& cfg) {
    const int top = static_cast<int>(
        std::floor(cfg.truncation_fraction * cfg.population_size + 1e-9));
    return std::max(1, top);
}

Word crossover(const Word& w1, const Word& w2, Rng& rng) {
    const std::size_t len1 = w1.letters.size();
    const std::size_t len2 = w2.letters.size();
    const std::size_t r1 =
        len1 == 0 ? 0 : std::uniform_int_distribution<std::size_t>(1, len1)(rng);
    const std::size_t r2 =
        len2 == 0 ? 0 : std::uniform_int_distribution<std::size_t>(1, len2)(rng);
    const bool first = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
    std::vector<Letter> out;
    if (first) {
        out.assign(w1.letters.begin(), w1.letters.begin() + static_cast<std::ptrdiff_t>(r1));
        out.insert(out.end(), w2.letters.begin() + static_cast<std::ptrdiff_t>(r2),
                   w2.letters.end());
    } else {
        out.assign(w2.letters.begin(), w2.letters.begin() + static_cast<std::ptrdiff_t>(r2));
        out.insert(out.end(), w1.letters.begin() + static_cast<std::ptrdiff_t>(r1),
                   w1.letters.end());
    }
    return free_reduce(out);
}

std::vector<EaIndividual> rank_population(const GroupSpec& spec, const AagInstance& inst,
                                          const std::vector<Word>& words, int workers) {
    std::vector<CostVector> costs = evaluate_costs(spec, inst, words, workers);
    std::vector<EaIndividual> ranked;
    ranked.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        ranked.push_back(EaIndividual{words[i], std::move(costs[i])});
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const EaIndividual& a, const EaIndividual& b) {
                         return compare_cost(a.cost, b.cost) < 0;
                     });
    return ranked;
}

EaRunResult run_ea(const GroupSpec& spec, const AagInstance& inst, const EaConfig& cfg,
                   std::uint64_t seed, int workers, bool record_trace) {
    validate_ea_config(cfg);
    Rng rng(seed);
    const int top = truncation_count(cfg);

    EaRunResult result;
    result.seed = seed;

    std::vector<Word> words = cfg.initial_population;
    words.reserve(static_cast<std::size_t>(cfg.population_size));
    while (words.size() < static_cast<std::size_t>(cfg.population_size)) {
        words.push_back(random_word_of_naive_length(
            spec, static_cast<std::size_t>(cfg.initial_word_length), rng));
    }

    std::vector<EaIndividual> ranked = rank_population(spec, inst, words, workers);
    result.best_cost = ranked.front().cost;
    result.best_word = ranked.front().word;

    // Applies one mutation slot with the letter-cap policy: retry the operator
    // once on oversize output, then fall back to copying the parent.
    const auto mutate = [&](const Word& parent, auto&& op) -> Word {
        Word child = op(parent);
        if (child.letters.size() <= cfg.letter_cap) return child;
        child = op(parent);
        if (child.letters.size() <= cfg.letter_cap) return child;
        return parent;
    };

    for (int generation = 1;; ++generation) {
        if (record_trace) {
            result.trace.push_back(
                EaTraceRecord{generation, ranked.front().cost, ranked.front().word});
        }
        if (compare_cost(ranked.front().cost, result.best_cost) < 0) {
            result.best_cost = ranked.front().cost;
            result.best_word = ranked.front().word;
        }
        if (result.best_cost.is_zero()) {
            result.success = true;
            result.generations_used = generation;
            return result;
        }
        if (generation >= cfg.maxsteps) {
            result.success = false;
            result.generations_used = cfg.maxsteps;
            return result;
        }

        std::vector<Word> next;
        next.reserve(static_cast<std::size_t>(cfg.population_size));
        for (int slot = 0; slot < kEaSlotCount; ++slot) {
            const int count = cfg.offspring_counts[static_cast<std::size_t>(slot)];
            result.operator_offspring[static_cast<std::size_t>(slot)] += count;
            switch (static_cast<EaSlot>(slot)) {
                case EaSlot::h1:
                case EaSlot::h2:
                case EaSlot::h3:
                case EaSlot::h4:
                case EaSlot::h5:
                case EaSlot::h6: {
                    const HeuristicId id = kSlotHeuristics[static_cast<std::size_t>(slot)];
                    for (int k = 0; k < count; ++k) {
                        const Word& parent = ranked[draw_parent(rng, top)].word;
                        next.push_back(mutate(parent, [&](const Word& p) {
                            return apply_heuristic(id, spec, inst, p, rng);
                        }));
                    }
                    break;
                }
                case EaSlot::crossover: {
                    for (int k = 0; k < count; ++k) {
                        const Word& p1 = ranked[draw_parent(rng, top)].word;
                        const Word& p2 = ranked[draw_parent(rng, top)].word;
                        next.push_back(mutate(p1, [&](const Word&) {
                            return crossover(p1, p2, rng);
                        }));
                    }
                    break;
                }
                case EaSlot::selection: {
                    for (int k = 0; k < count; ++k) {
                        if (k == 0) {
                            next.push_back(ranked.front().word);
                        } else {
                            next.push_back(ranked[draw_parent(rng, top)].word);
                        }
                    }
                    break;
                }
                case EaSlot::chain: {
                    for (int k = 0; k < count; ++k) {
                        const Word& parent = ranked[draw_parent(rng, top)].word;
                        next.push_back(mutate(parent, [&](const Word& p) {
                            return apply_chain(cfg.injected_chain, spec, inst, p, rng);
                        }));
                    }
                    break;
                }
            }
        }
        ranked = rank_population(spec, inst, next, workers);
    }
}

}  // namespace polyaag
