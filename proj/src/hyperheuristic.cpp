#include "polyaag/hyperheuristic.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "polyaag/csv.hpp"
#include "polyaag/parallel.hpp"

namespace polyaag {

namespace {

Rational mean(const Rational& sum, long count) {
    if (count == 0) return Rational(0);
    Rational m = sum / Rational(BigInt(count));
    m.canonicalize();
    return m;
}

// Shared component computation; `swap_first_two` selects the validation order.
ObjectiveVector make_objective(const std::vector<EaRunResult>& results,
                               bool swap_first_two) {
    if (results.empty()) throw std::invalid_argument("objective: no EA results");
    long successes = 0;
    long success_generations = 0;
    Rational fail_cost_sum(0);
    long failures = 0;
    for (const EaRunResult& r : results) {
        if (r.success) {
            ++successes;
            success_generations += r.generations_used;
        } else {
            ++failures;
            fail_cost_sum += r.best_cost.unweighted_sum;
        }
    }
    Rational mean_fail_cost = mean(fail_cost_sum, failures);
    Rational neg_rate(BigInt(-successes), BigInt(results.size()));
    neg_rate.canonicalize();
    Rational mean_generations = mean(Rational(BigInt(success_generations)), successes);
    ObjectiveVector o;
    o.v[0] = swap_first_two ? neg_rate : mean_fail_cost;
    o.v[1] = swap_first_two ? mean_fail_cost : neg_rate;
    o.v[2] = mean_generations;
    return o;
}

double to_double(const Rational& v) { return v.get_d(); }

}  // namespace

int compare_objective(const ObjectiveVector& a, const ObjectiveVector& b) {
    for (std::size_t i = 0; i < a.v.size(); ++i) {
        if (int c = cmp(a.v[i], b.v[i]); c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string format_objective(const ObjectiveVector& o) {
    std::string out = "(";
    for (std::size_t i = 0; i < o.v.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(o.v[i]);
    }
    out += ")";
    return out;
}

ObjectiveVector objective(const std::vector<EaRunResult>& results) {
    return make_objective(results, false);
}

ObjectiveVector validation_objective(const std::vector<EaRunResult>& results) {
    return make_objective(results, true);
}

void validate_hh_config(const HhConfig& cfg) {
    if (cfg.chain_budget < 1) throw std::invalid_argument("hh: C_max must be >= 1");
    if (cfg.n_train < 1 || cfg.n_test < 1 || cfg.n_valid < 1) {
        throw std::invalid_argument("hh: instance counts must be >= 1");
    }
    const auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!in_unit(cfg.p_insert) || !in_unit(cfg.p_substitute) || !in_unit(cfg.p_delete) ||
        !in_unit(cfg.p_accept)) {
        throw std::invalid_argument("hh: probabilities must lie in [0, 1]");
    }
    if (std::abs(cfg.p_insert + cfg.p_substitute + cfg.p_delete - 1.0) > 1e-9) {
        throw std::invalid_argument("hh: p_i + p_s + p_d must equal 1");
    }
    if (cfg.initial_chain && cfg.initial_chain->ids.empty()) {
        throw std::invalid_argument("hh: initial chain must be non-empty");
    }
    if (cfg.random_init_min < 1 || cfg.random_init_max < cfg.random_init_min) {
        throw std::invalid_argument("hh: need 1 <= random_init_min <= random_init_max");
    }
    if (cfg.maxsteps_train < 1 || cfg.maxsteps_test < 1 || cfg.maxsteps_valid < 1) {
        throw std::invalid_argument("hh: per-phase maxsteps must be >= 1");
    }
    if (cfg.edit_budget < 1) throw std::invalid_argument("hh: edit_budget must be >= 1");
}

HeuristicChain generate_chain(const HeuristicChain& incumbent,
                              const std::unordered_set<std::string>& seen,
                              const HhConfig& cfg, Rng& rng) {
    HeuristicChain chain = incumbent;
    const auto draw_id = [&] {
        return static_cast<HeuristicId>(
            std::uniform_int_distribution<int>(1, 7)(rng));
    };
    for (std::size_t edits = 0; edits < cfg.edit_budget; ++edits) {
        if (!chain.ids.empty() && !is_pure_deletion(chain) &&
            seen.find(format_chain(chain)) == seen.end()) {
            return chain;
        }
        const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const std::size_t len = chain.ids.size();
        if (u < cfg.p_insert) {
            const std::size_t pos =
                std::uniform_int_distribution<std::size_t>(0, len)(rng);
            chain.ids.insert(chain.ids.begin() + static_cast<std::ptrdiff_t>(pos), draw_id());
        } else if (u < cfg.p_insert + cfg.p_substitute) {
            if (len == 0) continue;
            const std::size_t pos =
                std::uniform_int_distribution<std::size_t>(0, len - 1)(rng);
            chain.ids[pos] = draw_id();
        } else {
            if (len == 0) continue;
            const std::size_t pos =
                std::uniform_int_distribution<std::size_t>(0, len - 1)(rng);
            chain.ids.erase(chain.ids.begin() + static_cast<std::ptrdiff_t>(pos));
        }
    }
    throw std::runtime_error("generate_chain: edit budget exhausted without a novel chain");
}

namespace {

// Runs the EA with the given chain on every instance of a phase. Seeds are a
// pure function of (master, phase tag, chain iteration, instance index), so
// the result vector is independent of the worker count.
std::vector<EaRunResult> evaluate_phase(const GroupSpec& spec,
                                        const std::vector<AagInstance>& instances,
                                        const EaConfig& ea_template,
                                        const HeuristicChain& chain, int maxsteps,
                                        std::uint64_t master_seed, const std::string& tag,
                                        int workers) {
    EaConfig cfg = ea_template;
    cfg.injected_chain = chain;
    cfg.maxsteps = maxsteps;
    validate_ea_config(cfg);
    return parallel_map<EaRunResult>(instances.size(), workers, [&](std::size_t j) {
        const std::uint64_t seed = derive_seed(master_seed, tag + "/inst" + std::to_string(j));
        return run_ea(spec, instances[j], cfg, seed, 1, false);
    });
}

HeuristicChain random_initial_chain(const HhConfig& cfg, Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int len = std::uniform_int_distribution<int>(cfg.random_init_min,
                                                           cfg.random_init_max)(rng);
        HeuristicChain chain;
        chain.ids.reserve(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) {
            chain.ids.push_back(
                static_cast<HeuristicId>(std::uniform_int_distribution<int>(1, 7)(rng)));
        }
        if (!is_pure_deletion(chain)) return chain;
    }
    throw std::logic_error("random_initial_chain: rejection loop stuck");
}

}  // namespace

HhRunReport run_hyperheuristic(const GroupSpec& spec, const HhInstanceSets& sets,
                               const EaConfig& ea_template, const HhConfig& cfg,
                               std::uint64_t master_seed, int workers) {
    validate_hh_config(cfg);
    if (static_cast<int>(sets.train.size()) != cfg.n_train ||
        static_cast<int>(sets.test.size()) != cfg.n_test ||
        static_cast<int>(sets.valid.size()) != cfg.n_valid) {
        throw std::invalid_argument("hh: instance set sizes must match the config");
    }

    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    HhRunReport report;
    report.master_seed = master_seed;

    Rng outer_rng(derive_seed(master_seed, "hh/outer"));
    HeuristicChain initial =
        cfg.initial_chain ? *cfg.initial_chain : random_initial_chain(cfg, outer_rng);
    report.initial_chain = initial;

    std::unordered_set<std::string> seen;

    // Incumbent = mutation base; best = reported i*. The stored best test
    // objective starts as the lazily computed baseline M_{1,test}.
    HeuristicChain incumbent = initial;
    ObjectiveVector incumbent_train;
    HeuristicChain best_chain = initial;
    ObjectiveVector best_train;
    std::optional<ObjectiveVector> best_test;

    for (int i = 1; i <= cfg.chain_budget; ++i) {
        HeuristicChain chain;
        if (i == 1) {
            chain = initial;
        } else {
            chain = generate_chain(incumbent, seen, cfg, outer_rng);
        }
        seen.insert(format_chain(chain));

        HhChainRecord record;
        record.iteration = i;
        record.chain = chain;
        record.train = objective(evaluate_phase(spec, sets.train, ea_template, chain,
                                                cfg.maxsteps_train, master_seed,
                                                "train/chain" + std::to_string(i), workers));

        if (i == 1) {
            incumbent_train = record.train;
            best_train = record.train;
            record.accepted = true;
            record.became_best = true;
            report.best_index = 1;
        } else {
            bool became_best = false;
            if (compare_objective(record.train, incumbent_train) < 0) {
                if (!best_test) {
                    best_test = objective(evaluate_phase(spec, sets.test, ea_template,
                                                         initial, cfg.maxsteps_test,
                                                         master_seed, "test/chain1", workers));
                    report.chains.front().test = best_test;
                }
                ObjectiveVector test_i =
                    objective(evaluate_phase(spec, sets.test, ea_template, chain,
                                             cfg.maxsteps_test, master_seed,
                                             "test/chain" + std::to_string(i), workers));
                record.test = test_i;
                if (compare_objective(test_i, *best_test) < 0) {
                    became_best = true;
                    best_test = test_i;
                    best_chain = chain;
                    best_train = record.train;
                    report.best_index = i;
                }
            }
            if (became_best) {
                record.accepted = true;
                record.became_best = true;
                incumbent = chain;
                incumbent_train = record.train;
            } else if (std::uniform_real_distribution<double>(0.0, 1.0)(outer_rng) <
                       cfg.p_accept) {
                record.accepted = true;
                incumbent = chain;
                incumbent_train = record.train;
            } else {
                incumbent = best_chain;
                incumbent_train = best_train;
            }
        }
        report.chains.push_back(std::move(record));

        if (cfg.wall_clock_budget_seconds && elapsed() > *cfg.wall_clock_budget_seconds &&
            i < cfg.chain_budget) {
            report.timed_out = true;
            break;
        }
    }

    report.best_chain = best_chain;
    if (report.best_index != 1) {
        report.validation_best = validation_objective(
            evaluate_phase(spec, sets.valid, ea_template, best_chain, cfg.maxsteps_valid,
                           master_seed, "valid/best", workers));
        report.validation_initial = validation_objective(
            evaluate_phase(spec, sets.valid, ea_template, initial, cfg.maxsteps_valid,
                           master_seed, "valid/init", workers));
    }
    report.wall_seconds = elapsed();
    return report;
}

std::string hh_report_csv(const HhRunReport& report) {
    std::string out = csv_row({"iteration", "chain", "train_fail_cost", "train_neg_success",
                               "train_mean_generations", "test_fail_cost", "test_neg_success",
                               "test_mean_generations", "accepted", "became_best"});
    for (const HhChainRecord& rec : report.chains) {
        std::vector<std::string> row;
        row.push_back(std::to_string(rec.iteration));
        row.push_back(format_chain(rec.chain));
        for (const Rational& c : rec.train.v) row.push_back(format_rational(c));
        if (rec.test) {
            for (const Rational& c : rec.test->v) row.push_back(format_rational(c));
        } else {
            row.insert(row.end(), {"", "", ""});
        }
        row.push_back(rec.accepted ? "1" : "0");
        row.push_back(rec.became_best ? "1" : "0");
        out += csv_row(row);
    }
    return out;
}

std::string hh_report_text(const HhRunReport& report) {
    std::ostringstream out;
    out << "hyper-heuristic run (master seed " << report.master_seed << ")\n";
    out << "chains examined: " << report.chains.size();
    if (report.timed_out) out << " (stopped early: wall-clock budget)";
    out << "\n\n";
    for (const HhChainRecord& rec : report.chains) {
        out << "  [" << rec.iteration << "] " << format_chain(rec.chain)
            << "  train " << format_objective(rec.train);
        if (rec.test) out << "  test " << format_objective(*rec.test);
        if (rec.became_best) {
            out << "  <- new best";
        } else if (rec.accepted) {
            out << "  (accepted)";
        }
        out << "\n";
    }
    out << "\nbest chain: i* = " << report.best_index << " ("
        << format_chain(report.best_chain) << ")\n";
    if (report.validation_best) {
        out << "validation (success rate first):\n";
        out << "  best    " << format_chain(report.best_chain) << "  "
            << format_objective(*report.validation_best) << "\n";
        out << "  initial " << format_chain(report.initial_chain) << "  "
            << format_objective(*report.validation_initial) << "\n";
        const int cmp_result =
            compare_objective(*report.validation_best, *report.validation_initial);
        out << "  verdict: best chain "
            << (cmp_result < 0 ? "improves on" : cmp_result == 0 ? "ties" : "loses to")
            << " the initial chain\n";
    } else {
        out << "validation: skipped (initial chain was never beaten)\n";
    }
    out << "wall clock: " << report.wall_seconds << " s\n";
    return out.str();
}

}  // namespace polyaag
