#ifndef POLYAAG_HARNESS_HPP
#define POLYAAG_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "polyaag/ea.hpp"
#include "polyaag/hyperheuristic.hpp"
#include "polyaag/lba.hpp"

namespace polyaag {

// Generation caps scale with the field degree: small degrees use the small
// caps, degrees above 3 the larger ones.
int default_maxsteps_train_test(int degree);
int default_maxsteps_valid(int degree);

// Worker-count resolution: the POLYAAG_WORKERS environment variable wins when
// set, then a positive requested value, else 1.
int resolve_workers(int requested);

// `count` instances seeded from derive_seed(master_seed, tag + "/inst<j>").
// Worker count never changes the output (seeds are pre-assigned per index).
std::vector<AagInstance> generate_instance_batch(const GroupSpec& spec,
                                                 const AagParams& params, int count,
                                                 std::uint64_t master_seed,
                                                 const std::string& tag, int workers);

// Independent EA runs over a batch, seeded per instance index as above.
std::vector<EaRunResult> run_ea_batch(const GroupSpec& spec,
                                      const std::vector<AagInstance>& instances,
                                      const EaConfig& cfg, std::uint64_t master_seed,
                                      const std::string& tag, int workers,
                                      bool record_trace = false);

struct LbaSweepRow {
    HeuristicId heuristic;
    int instances = 0;
    int successes = 0;
    Rational success_rate;
    Rational mean_success_iterations;  // 0 when there were no successes
};

// Runs the single-heuristic hillclimber for H1..H6 (H7 too when include_h7)
// over every instance; one task per (heuristic, instance) pair.
std::vector<LbaSweepRow> run_lba_sweep(const GroupSpec& spec,
                                       const std::vector<AagInstance>& instances,
                                       long max_iterations, int initial_word_length,
                                       bool include_h7, std::uint64_t master_seed,
                                       int workers);

// CSV writers. Every writer emits a header row and RFC-quoted fields; exact
// rationals are written as "p/q" (plain decimal when integral).
std::string instance_batch_csv(const GroupSpec& spec,
                               const std::vector<AagInstance>& instances);
std::string ea_batch_csv(const std::vector<AagInstance>& instances,
                         const std::vector<EaRunResult>& runs);
std::string ea_summary_csv(const GroupSpec& spec, const HeuristicChain& chain,
                           const std::vector<EaRunResult>& runs);
std::string ea_trace_csv(const EaRunResult& run);
std::string lba_sweep_csv(const std::vector<LbaSweepRow>& rows);

// True when the run's per-slot offspring totals are exactly the configured
// counts times the number of assembled generations.
bool check_offspring_audit(const EaConfig& cfg, const EaRunResult& run);

const char* heuristic_name(HeuristicId id);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace polyaag

#endif
