#include <polyaag/builtin_groups.hpp>
#include <polyaag/csv.hpp>
#include <polyaag/harness.hpp>
#include <polyaag/parallel.hpp>
#include <polyaag/rng.hpp>

#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "test_util.hpp"

using namespace polyaag;

namespace {

AagParams small_params() {
    AagParams p;
    p.equation_count = 5;
    p.key_length = 5;
    p.generator_length_lo = 5;
    p.generator_length_hi = 8;
    return p;
}

}  // namespace

TEST_CASE("derive_seed splits streams by tag") {
    CHECK(derive_seed(1, "a") == derive_seed(1, "a"));
    CHECK(derive_seed(1, "a") != derive_seed(1, "b"));
    CHECK(derive_seed(1, "a") != derive_seed(2, "a"));
    std::set<std::uint64_t> seeds;
    for (int j = 0; j < 100; ++j) {
        seeds.insert(derive_seed(99, "gen/inst" + std::to_string(j)));
    }
    CHECK(seeds.size() == 100);
}

TEST_CASE("parallel_map keeps results index-aligned") {
    const std::size_t n = 97;
    const auto square = [](std::size_t i) { return i * i; };
    const auto seq = parallel_map<std::size_t>(n, 1, square);
    const auto par = parallel_map<std::size_t>(n, 8, square);
    REQUIRE(seq.size() == n);
    CHECK(seq == par);
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(seq[i] == i * i);
    }
}

TEST_CASE("parallel_for propagates the first failure") {
    CHECK_THROWS_AS(parallel_for(10, 4,
                                 [](std::size_t i) {
                                     if (i == 3) {
                                         throw std::runtime_error("boom");
                                     }
                                 }),
                    std::runtime_error);
    std::atomic<int> count{0};
    parallel_for(100, 4, [&](std::size_t) { count.fetch_add(1); });
    CHECK(count.load() == 100);
}

TEST_CASE("resolve_workers") {
    unsetenv("POLYAAG_WORKERS");
    CHECK(resolve_workers(4) == 4);
    CHECK(resolve_workers(0) == 1);
    CHECK(resolve_workers(-2) == 1);
    setenv("POLYAAG_WORKERS", "6", 1);
    CHECK(resolve_workers(1) == 6);
    setenv("POLYAAG_WORKERS", "junk", 1);
    CHECK_THROWS_AS(resolve_workers(1), std::runtime_error);
    setenv("POLYAAG_WORKERS", "0", 1);
    CHECK_THROWS_AS(resolve_workers(1), std::runtime_error);
    unsetenv("POLYAAG_WORKERS");
}

TEST_CASE("default maxsteps scale with degree") {
    CHECK(default_maxsteps_train_test(1) == 50);
    CHECK(default_maxsteps_train_test(3) == 50);
    CHECK(default_maxsteps_train_test(5) == 100);
    CHECK(default_maxsteps_valid(2) == 1250);
    CHECK(default_maxsteps_valid(7) == 2500);
}

TEST_CASE("generate_instance_batch is worker-count invariant") {
    const GroupSpec spec = builtin_group_spec(2);
    const auto one = generate_instance_batch(spec, small_params(), 6, 2024, "gen", 1);
    const auto eight = generate_instance_batch(spec, small_params(), 6, 2024, "gen", 8);
    REQUIRE(one.size() == 6);
    REQUIRE(eight.size() == 6);
    for (std::size_t j = 0; j < one.size(); ++j) {
        CHECK(one[j].seed == derive_seed(2024, "gen/inst" + std::to_string(j)));
        CHECK(instance_to_json(spec, one[j]) == instance_to_json(spec, eight[j]));
    }
    CHECK(instance_batch_csv(spec, one) == instance_batch_csv(spec, eight));
}

TEST_CASE("run_ea_batch is worker-count invariant and audited") {
    const GroupSpec spec = builtin_group_spec(1);
    AagParams p;
    p.equation_count = 20;
    p.key_length = 5;
    p.generator_length_lo = 10;
    p.generator_length_hi = 13;
    const auto instances = generate_instance_batch(spec, p, 4, 11, "gen", 1);
    EaConfig cfg;
    cfg.maxsteps = 1250;
    cfg.injected_chain = HeuristicChain{{HeuristicId::H2}};
    const auto one = run_ea_batch(spec, instances, cfg, 77, "ea", 1);
    const auto eight = run_ea_batch(spec, instances, cfg, 77, "ea", 8);
    CHECK(ea_batch_csv(instances, one) == ea_batch_csv(instances, eight));
    for (std::size_t j = 0; j < one.size(); ++j) {
        CHECK(one[j].seed == derive_seed(77, "ea/inst" + std::to_string(j)));
        CHECK(check_offspring_audit(cfg, one[j]));
    }
    const std::string summary = ea_summary_csv(spec, cfg.injected_chain, one);
    const auto rows = parse_csv(summary);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][0] == "degree");
    CHECK(rows[1][0] == "1");
    CHECK(rows[1][1] == "H2");
    CHECK(rows[1][2] == "4");
}

TEST_CASE("run_lba_sweep aggregates per heuristic") {
    const GroupSpec spec = builtin_group_spec(1);
    const auto instances = generate_instance_batch(spec, small_params(), 3, 5, "gen", 1);
    const auto rows = run_lba_sweep(spec, instances, 200, 10, false, 9, 1);
    REQUIRE(rows.size() == 6);
    for (std::size_t h = 0; h < rows.size(); ++h) {
        CHECK(rows[h].heuristic == static_cast<HeuristicId>(h + 1));
        CHECK(rows[h].instances == 3);
        CHECK(rows[h].successes >= 0);
        CHECK(rows[h].successes <= 3);
        Rational expect(BigInt(rows[h].successes), BigInt(3));
        expect.canonicalize();
        CHECK(rows[h].success_rate == expect);
    }
    const auto with_h7 = run_lba_sweep(spec, instances, 200, 10, true, 9, 1);
    REQUIRE(with_h7.size() == 7);
    CHECK(with_h7.back().heuristic == HeuristicId::H7);
    // H7 appends to the task list without disturbing the H1..H6 seeds.
    for (std::size_t h = 0; h < 6; ++h) {
        CHECK(with_h7[h].successes == rows[h].successes);
    }

    const auto par = run_lba_sweep(spec, instances, 200, 10, false, 9, 8);
    CHECK(lba_sweep_csv(rows) == lba_sweep_csv(par));

    const auto parsed = parse_csv(lba_sweep_csv(rows));
    REQUIRE(parsed.size() == 7);
    CHECK(parsed[0] == std::vector<std::string>{"heuristic", "instances", "successes",
                                                "success_rate",
                                                "mean_success_iterations"});
    CHECK(parsed[1][0] == "H1");
    CHECK(parsed[6][0] == "H6");
}

TEST_CASE("csv quoting round-trips awkward fields") {
    const std::vector<std::string> fields = {"plain", "with,comma", "with\"quote",
                                             "multi\nline", ""};
    const std::string row = csv_row(fields);
    const auto parsed = parse_csv(row);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0] == fields);
    CHECK(csv_quote("plain") == "plain");
    CHECK(csv_quote("a,b") == "\"a,b\"");
    CHECK(csv_quote("a\"b") == "\"a\"\"b\"");
}

TEST_CASE("ea trace csv lists one row per generation") {
    const GroupSpec spec = builtin_group_spec(1);
    const auto instances = generate_instance_batch(spec, small_params(), 1, 3, "gen", 1);
    EaConfig cfg;
    cfg.maxsteps = 10;
    cfg.injected_chain = HeuristicChain{{HeuristicId::H2}};
    const auto runs = run_ea_batch(spec, instances, cfg, 4, "ea", 1, true);
    const auto rows = parse_csv(ea_trace_csv(runs[0]));
    REQUIRE(rows.size() == runs[0].trace.size() + 1);
    CHECK(rows[0][0] == "generation");
    CHECK(rows[1][0] == "1");
}

TEST_CASE("check_offspring_audit rejects tampered totals") {
    const GroupSpec spec = builtin_group_spec(1);
    const auto instances = generate_instance_batch(spec, small_params(), 1, 21, "gen", 1);
    EaConfig cfg;
    cfg.maxsteps = 5;
    cfg.injected_chain = HeuristicChain{{HeuristicId::H2}};
    EaRunResult run = run_ea(spec, instances[0], cfg, 8, 1);
    CHECK(check_offspring_audit(cfg, run));
    if (run.generations_used > 1) {
        run.operator_offspring[0] += 1;
        CHECK(!check_offspring_audit(cfg, run));
    }
}

TEST_CASE("write_text_file creates parent directories") {
    const auto dir = std::filesystem::temp_directory_path() / "polyaag_harness_test";
    std::filesystem::remove_all(dir);
    const auto path = dir / "nested" / "file.txt";
    write_text_file(path, "payload\n");
    CHECK(read_text_file(path) == "payload\n");
    std::filesystem::remove_all(dir);
    CHECK_THROWS(read_text_file(path));
}
