#include "polyaag/harness.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "polyaag/csv.hpp"
#include "polyaag/parallel.hpp"

namespace polyaag {

int default_maxsteps_train_test(int degree) { return degree <= 3 ? 50 : 100; }

int default_maxsteps_valid(int degree) { return degree <= 3 ? 1250 : 2500; }

int resolve_workers(int requested) {
    if (const char* env = std::getenv("POLYAAG_WORKERS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || value < 1) {
            throw std::runtime_error("POLYAAG_WORKERS must be a positive integer");
        }
        return static_cast<int>(value);
    }
    return requested >= 1 ? requested : 1;
}

std::vector<AagInstance> generate_instance_batch(const GroupSpec& spec,
                                                 const AagParams& params, int count,
                                                 std::uint64_t master_seed,
                                                 const std::string& tag, int workers) {
    if (count < 1) throw std::invalid_argument("generate_instance_batch: count must be >= 1");
    return parallel_map<AagInstance>(static_cast<std::size_t>(count), workers,
                                     [&](std::size_t j) {
        return generate_instance(
            spec, params, derive_seed(master_seed, tag + "/inst" + std::to_string(j)));
    });
}

std::vector<EaRunResult> run_ea_batch(const GroupSpec& spec,
                                      const std::vector<AagInstance>& instances,
                                      const EaConfig& cfg, std::uint64_t master_seed,
                                      const std::string& tag, int workers,
                                      bool record_trace) {
    validate_ea_config(cfg);
    return parallel_map<EaRunResult>(instances.size(), workers, [&](std::size_t j) {
        const std::uint64_t seed = derive_seed(master_seed, tag + "/inst" + std::to_string(j));
        return run_ea(spec, instances[j], cfg, seed, 1, record_trace);
    });
}

std::vector<LbaSweepRow> run_lba_sweep(const GroupSpec& spec,
                                       const std::vector<AagInstance>& instances,
                                       long max_iterations, int initial_word_length,
                                       bool include_h7, std::uint64_t master_seed,
                                       int workers) {
    std::vector<HeuristicId> heuristics = {HeuristicId::H1, HeuristicId::H2, HeuristicId::H3,
                                           HeuristicId::H4, HeuristicId::H5, HeuristicId::H6};
    if (include_h7) heuristics.push_back(HeuristicId::H7);

    const std::size_t per = instances.size();
    std::vector<EaRunResult> results = parallel_map<EaRunResult>(
        heuristics.size() * per, workers, [&](std::size_t flat) {
            const std::size_t h = flat / per;
            const std::size_t j = flat % per;
            LbaConfig cfg;
            cfg.heuristic = heuristics[h];
            cfg.max_iterations = max_iterations;
            cfg.initial_word_length = initial_word_length;
            const std::string tag = std::string("lba/") + heuristic_name(heuristics[h]) +
                                    "/inst" + std::to_string(j);
            return run_lba(spec, instances[j], cfg, derive_seed(master_seed, tag));
        });

    std::vector<LbaSweepRow> rows;
    rows.reserve(heuristics.size());
    for (std::size_t h = 0; h < heuristics.size(); ++h) {
        LbaSweepRow row;
        row.heuristic = heuristics[h];
        row.instances = static_cast<int>(per);
        long iteration_sum = 0;
        for (std::size_t j = 0; j < per; ++j) {
            const EaRunResult& r = results[h * per + j];
            if (r.success) {
                ++row.successes;
                iteration_sum += r.generations_used;
            }
        }
        row.success_rate = Rational(BigInt(row.successes), BigInt(per));
        row.success_rate.canonicalize();
        if (row.successes > 0) {
            row.mean_success_iterations =
                Rational(BigInt(iteration_sum), BigInt(row.successes));
            row.mean_success_iterations.canonicalize();
        } else {
            row.mean_success_iterations = Rational(0);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::vector<std::string> cost_fields(const CostVector& cv) {
    return {format_rational(cv.unweighted_sum),  format_rational(cv.unweighted_max),
            format_rational(cv.unweighted_mean), format_rational(cv.weighted_sum),
            format_rational(cv.weighted_max),    format_rational(cv.weighted_mean)};
}

void append_fields(std::vector<std::string>& row, std::vector<std::string> extra) {
    for (std::string& f : extra) row.push_back(std::move(f));
}

}  // namespace

std::string instance_batch_csv(const GroupSpec& spec,
                               const std::vector<AagInstance>& instances) {
    std::string out = csv_row({"instance", "degree", "N", "L", "L1", "L2", "seed",
                               "planted_key_letters", "planted_cost_sum"});
    for (std::size_t j = 0; j < instances.size(); ++j) {
        const AagInstance& inst = instances[j];
        const CostVector planted = cost(spec, inst, inst.planted_key);
        out += csv_row({std::to_string(j), std::to_string(spec.degree),
                        std::to_string(inst.params.equation_count),
                        std::to_string(inst.params.key_length),
                        std::to_string(inst.params.generator_length_lo),
                        std::to_string(inst.params.generator_length_hi),
                        std::to_string(inst.seed),
                        std::to_string(inst.planted_key.letters.size()),
                        format_rational(planted.unweighted_sum)});
    }
    return out;
}

std::string ea_batch_csv(const std::vector<AagInstance>& instances,
                         const std::vector<EaRunResult>& runs) {
    if (instances.size() != runs.size()) {
        throw std::invalid_argument("ea_batch_csv: instance/run count mismatch");
    }
    std::string out = csv_row({"instance", "instance_seed", "ea_seed", "success",
                               "generations", "cost_usum", "cost_umax", "cost_umean",
                               "cost_wsum", "cost_wmax", "cost_wmean", "best_word"});
    for (std::size_t j = 0; j < runs.size(); ++j) {
        std::vector<std::string> row = {std::to_string(j),
                                        std::to_string(instances[j].seed),
                                        std::to_string(runs[j].seed),
                                        runs[j].success ? "1" : "0",
                                        std::to_string(runs[j].generations_used)};
        append_fields(row, cost_fields(runs[j].best_cost));
        row.push_back(format_word(runs[j].best_word));
        out += csv_row(row);
    }
    return out;
}

std::string ea_summary_csv(const GroupSpec& spec, const HeuristicChain& chain,
                           const std::vector<EaRunResult>& runs) {
    const ObjectiveVector o = objective(runs);
    int successes = 0;
    for (const EaRunResult& r : runs) successes += r.success ? 1 : 0;
    std::string out = csv_row({"degree", "chain", "instances", "successes", "success_rate",
                               "mean_fail_cost", "mean_success_generations"});
    Rational rate(BigInt(successes), BigInt(runs.size()));
    rate.canonicalize();
    out += csv_row({std::to_string(spec.degree), format_chain(chain),
                    std::to_string(runs.size()), std::to_string(successes),
                    format_rational(rate), format_rational(o.v[0]),
                    format_rational(o.v[2])});
    return out;
}

std::string ea_trace_csv(const EaRunResult& run) {
    std::string out = csv_row({"generation", "cost_usum", "cost_umax", "cost_umean",
                               "cost_wsum", "cost_wmax", "cost_wmean", "best_word"});
    for (const EaTraceRecord& rec : run.trace) {
        std::vector<std::string> row = {std::to_string(rec.generation)};
        append_fields(row, cost_fields(rec.best_cost));
        row.push_back(format_word(rec.best_word));
        out += csv_row(row);
    }
    return out;
}

std::string lba_sweep_csv(const std::vector<LbaSweepRow>& rows) {
    std::string out = csv_row(
        {"heuristic", "instances", "successes", "success_rate", "mean_success_iterations"});
    for (const LbaSweepRow& row : rows) {
        out += csv_row({heuristic_name(row.heuristic), std::to_string(row.instances),
                        std::to_string(row.successes), format_rational(row.success_rate),
                        format_rational(row.mean_success_iterations)});
    }
    return out;
}

bool check_offspring_audit(const EaConfig& cfg, const EaRunResult& run) {
    const long long assembled = run.generations_used - 1;
    long long total = 0;
    for (int slot = 0; slot < kEaSlotCount; ++slot) {
        const long long expected =
            static_cast<long long>(cfg.offspring_counts[static_cast<std::size_t>(slot)]) *
            assembled;
        if (run.operator_offspring[static_cast<std::size_t>(slot)] != expected) return false;
        total += run.operator_offspring[static_cast<std::size_t>(slot)];
    }
    return total == static_cast<long long>(cfg.population_size) * assembled;
}

const char* heuristic_name(HeuristicId id) {
    switch (id) {
        case HeuristicId::H1: return "H1";
        case HeuristicId::H2: return "H2";
        case HeuristicId::H3: return "H3";
        case HeuristicId::H4: return "H4";
        case HeuristicId::H5: return "H5";
        case HeuristicId::H6: return "H6";
        case HeuristicId::H7: return "H7";
    }
    return "?";
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("short write to " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace polyaag
