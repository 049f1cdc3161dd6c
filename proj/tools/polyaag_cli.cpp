// Command-line front end: instance generation, EA / LBA / hyper-heuristic
// runs, CSV aggregation and run auditing. Every run directory is
// self-contained (group, instances, outputs, run_meta.json) and can be
// re-derived byte-for-byte with `audit`.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "polyaag/builtin_groups.hpp"
#include "polyaag/csv.hpp"
#include "polyaag/harness.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using namespace polyaag;

namespace {

struct GroupArgs {
    int degree = 0;
    std::string group_path;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--degree", degree, "Built-in group by field degree (1, 2 or 3)");
        cmd->add_option("--group", group_path, "Path to a group spec JSON file");
    }

    GroupSpec resolve() const {
        if (!group_path.empty()) return load_group_spec(group_path);
        if (degree != 0) return builtin_group_spec(degree);
        throw CLI::ValidationError("group", "need --group <file> or --degree <1|2|3>");
    }
};

AagParams parse_params_arg(const std::string& text, const std::string& mode) {
    AagParams params;
    long n = 0, l = 0, l1 = 0, l2 = 0;
    char trailing = 0;
    if (std::sscanf(text.c_str(), "%ld,%ld,%ld,%ld%c", &n, &l, &l1, &l2, &trailing) != 4) {
        throw CLI::ValidationError("--params", "expected N,L,L1,L2 (e.g. 20,5,10,13)");
    }
    params.equation_count = static_cast<int>(n);
    params.key_length = static_cast<int>(l);
    params.generator_length_lo = l1;
    params.generator_length_hi = l2;
    if (mode == "collected") {
        params.length_mode = LengthMode::collected;
    } else if (mode == "free") {
        params.length_mode = LengthMode::free_word;
    } else {
        throw CLI::ValidationError("--length-mode", "must be 'collected' or 'free'");
    }
    validate_params(params);
    return params;
}

std::string params_to_string(const AagParams& p) {
    return std::to_string(p.equation_count) + "," + std::to_string(p.key_length) + "," +
           std::to_string(p.generator_length_lo) + "," +
           std::to_string(p.generator_length_hi);
}

std::string length_mode_name(LengthMode mode) {
    return mode == LengthMode::collected ? "collected" : "free";
}

std::string instance_file_name(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "inst%04zu.json", index);
    return buf;
}

void save_instance_dir(const GroupSpec& spec, const std::vector<AagInstance>& instances,
                       const fs::path& dir) {
    fs::create_directories(dir);
    for (std::size_t j = 0; j < instances.size(); ++j) {
        save_instance(spec, instances[j], dir / instance_file_name(j));
    }
}

std::vector<AagInstance> load_instance_dir(const GroupSpec& spec, const fs::path& dir) {
    std::vector<AagInstance> instances;
    const std::string group_json = group_spec_to_json(spec);
    for (std::size_t j = 0;; ++j) {
        const fs::path file = dir / instance_file_name(j);
        if (!fs::exists(file)) break;
        LoadedInstance loaded = load_instance(file);
        if (group_spec_to_json(loaded.group) != group_json) {
            throw std::runtime_error(file.string() + ": group differs from the run's group");
        }
        instances.push_back(std::move(loaded.instance));
    }
    if (instances.empty()) throw std::runtime_error("no instances found under " + dir.string());
    return instances;
}

void write_meta(const fs::path& dir, const ordered_json& meta) {
    write_text_file(dir / "run_meta.json", meta.dump(2) + "\n");
}

ordered_json params_meta(const AagParams& params) {
    ordered_json j;
    j["params"] = params_to_string(params);
    j["length_mode"] = length_mode_name(params.length_mode);
    return j;
}

AagParams params_from_meta(const ordered_json& meta) {
    return parse_params_arg(meta.at("params").get<std::string>(),
                            meta.at("length_mode").get<std::string>());
}

// Shared shape of every run command: a group, a parameter set, a master seed
// and an output directory holding the generated/loaded instances.
struct RunContext {
    GroupSpec spec;
    std::vector<AagInstance> instances;
    AagParams params;
    std::uint64_t seed = 0;
    int workers = 1;
    fs::path out;
};

bool compare_artifact(const fs::path& path, const std::string& expected,
                      std::vector<std::string>& mismatches) {
    if (!fs::exists(path) || read_text_file(path) != expected) {
        mismatches.push_back(path.string());
        return false;
    }
    return true;
}

int run_gen_group(int degree, std::string out_path) {
    const GroupSpec spec = builtin_group_spec(degree);
    if (out_path.empty()) out_path = "group_d" + std::to_string(degree) + ".json";
    save_group_spec(spec, out_path);
    std::cout << "wrote " << out_path << " (degree " << spec.degree << ", "
              << spec.generator_count << " generators)\n";
    return 0;
}

struct GenArgs {
    GroupArgs group;
    std::string params_text = "20,5,10,13";
    std::string length_mode = "collected";
    int count = 10;
    std::uint64_t seed = 1;
    int workers = 0;
    std::string out;
};

RunContext make_context(const GenArgs& args, const std::string& instances_dir) {
    RunContext ctx;
    ctx.spec = args.group.resolve();
    ctx.params = parse_params_arg(args.params_text, args.length_mode);
    ctx.seed = args.seed;
    ctx.workers = resolve_workers(args.workers);
    ctx.out = args.out;
    if (!instances_dir.empty()) {
        ctx.instances = load_instance_dir(ctx.spec, instances_dir);
    } else {
        if (args.count < 1) throw CLI::ValidationError("--count", "must be >= 1");
        ctx.instances = generate_instance_batch(ctx.spec, ctx.params, args.count, ctx.seed,
                                                "gen", ctx.workers);
    }
    fs::create_directories(ctx.out);
    save_group_spec(ctx.spec, ctx.out / "group.json");
    save_instance_dir(ctx.spec, ctx.instances, ctx.out / "instances");
    return ctx;
}

int run_gen_instances(const GenArgs& args) {
    RunContext ctx = make_context(args, "");
    write_text_file(ctx.out / "instances.csv", instance_batch_csv(ctx.spec, ctx.instances));
    ordered_json meta = params_meta(ctx.params);
    meta["format"] = "polyaag-run";
    meta["command"] = "gen-instances";
    meta["count"] = ctx.instances.size();
    meta["seed"] = std::to_string(ctx.seed);
    write_meta(ctx.out, meta);
    std::cout << "generated " << ctx.instances.size() << " instances under " << ctx.out
              << "\n";
    return 0;
}

struct EaArgs {
    GenArgs gen;
    std::string instances_dir;
    std::string chain_text = "H2";
    int maxsteps = 0;
    bool no_trace = false;
};

EaConfig ea_config_for(const GroupSpec& spec, const std::string& chain_text, int maxsteps) {
    EaConfig cfg;
    cfg.injected_chain = parse_chain(chain_text);
    cfg.maxsteps = maxsteps > 0 ? maxsteps : default_maxsteps_valid(spec.degree);
    validate_ea_config(cfg);
    return cfg;
}

void write_ea_outputs(const RunContext& ctx, const EaConfig& cfg,
                      const std::vector<EaRunResult>& runs, bool trace) {
    write_text_file(ctx.out / "ea_runs.csv", ea_batch_csv(ctx.instances, runs));
    write_text_file(ctx.out / "ea_summary.csv",
                    ea_summary_csv(ctx.spec, cfg.injected_chain, runs));
    if (trace) {
        for (std::size_t j = 0; j < runs.size(); ++j) {
            write_text_file(ctx.out / "traces" / (instance_file_name(j) + ".csv"),
                            ea_trace_csv(runs[j]));
        }
    }
}

int run_run_ea(const EaArgs& args) {
    RunContext ctx = make_context(args.gen, args.instances_dir);
    const EaConfig cfg = ea_config_for(ctx.spec, args.chain_text, args.maxsteps);
    const std::vector<EaRunResult> runs =
        run_ea_batch(ctx.spec, ctx.instances, cfg, ctx.seed, "ea", ctx.workers, !args.no_trace);
    for (const EaRunResult& r : runs) {
        if (!check_offspring_audit(cfg, r)) {
            throw std::runtime_error("offspring audit failed (operator counts off)");
        }
    }
    write_ea_outputs(ctx, cfg, runs, !args.no_trace);

    ordered_json meta = params_meta(ctx.params);
    meta["format"] = "polyaag-run";
    meta["command"] = "run-ea";
    meta["count"] = ctx.instances.size();
    meta["seed"] = std::to_string(ctx.seed);
    meta["chain"] = format_chain(cfg.injected_chain);
    meta["maxsteps"] = cfg.maxsteps;
    meta["trace"] = !args.no_trace;
    write_meta(ctx.out, meta);

    int successes = 0;
    for (const EaRunResult& r : runs) successes += r.success ? 1 : 0;
    std::cout << "ea: " << successes << "/" << runs.size() << " instances solved; outputs in "
              << ctx.out << "\n";
    return 0;
}

struct LbaArgs {
    GenArgs gen;
    std::string instances_dir;
    long budget = 5000;
    int initial_length = 10;
    bool include_h7 = false;
};

int run_run_lba(const LbaArgs& args) {
    RunContext ctx = make_context(args.gen, args.instances_dir);
    const std::vector<LbaSweepRow> rows =
        run_lba_sweep(ctx.spec, ctx.instances, args.budget, args.initial_length,
                      args.include_h7, ctx.seed, ctx.workers);
    write_text_file(ctx.out / "lba_sweep.csv", lba_sweep_csv(rows));

    ordered_json meta = params_meta(ctx.params);
    meta["format"] = "polyaag-run";
    meta["command"] = "run-lba";
    meta["count"] = ctx.instances.size();
    meta["seed"] = std::to_string(ctx.seed);
    meta["budget"] = args.budget;
    meta["initial_length"] = args.initial_length;
    meta["include_h7"] = args.include_h7;
    write_meta(ctx.out, meta);

    for (const LbaSweepRow& row : rows) {
        std::cout << heuristic_name(row.heuristic) << ": " << row.successes << "/"
                  << row.instances << " solved\n";
    }
    std::cout << "outputs in " << ctx.out << "\n";
    return 0;
}

struct HhArgs {
    GroupArgs group;
    std::string params_text = "20,5,10,13";
    std::string length_mode = "collected";
    std::uint64_t seed = 1;
    int workers = 0;
    std::string out;
    int cmax = 20;
    int n_train = 15;
    int n_test = 50;
    int n_valid = 50;
    double p_accept = 0.1;
    std::string initial_chain = "random";
    int maxsteps = 0;        // train/test cap; 0 = degree default
    int maxsteps_valid = 0;  // validation cap; 0 = degree default
};

HhConfig hh_config_for(const HhArgs& args, const GroupSpec& spec) {
    HhConfig cfg;
    cfg.chain_budget = args.cmax;
    cfg.n_train = args.n_train;
    cfg.n_test = args.n_test;
    cfg.n_valid = args.n_valid;
    cfg.p_accept = args.p_accept;
    if (args.initial_chain != "random") cfg.initial_chain = parse_chain(args.initial_chain);
    cfg.maxsteps_train = cfg.maxsteps_test =
        args.maxsteps > 0 ? args.maxsteps : default_maxsteps_train_test(spec.degree);
    if (args.maxsteps_valid > 0) {
        cfg.maxsteps_valid = args.maxsteps_valid;
    } else {
        cfg.maxsteps_valid = default_maxsteps_valid(spec.degree);
    }
    validate_hh_config(cfg);
    return cfg;
}

int run_run_hh(const HhArgs& args) {
    const GroupSpec spec = args.group.resolve();
    const AagParams params = parse_params_arg(args.params_text, args.length_mode);
    const int workers = resolve_workers(args.workers);
    const fs::path out = args.out;
    const HhConfig cfg = hh_config_for(args, spec);

    HhInstanceSets sets;
    sets.train = generate_instance_batch(spec, params, cfg.n_train, args.seed, "gen/train",
                                         workers);
    sets.test =
        generate_instance_batch(spec, params, cfg.n_test, args.seed, "gen/test", workers);
    sets.valid =
        generate_instance_batch(spec, params, cfg.n_valid, args.seed, "gen/valid", workers);

    fs::create_directories(out);
    save_group_spec(spec, out / "group.json");
    save_instance_dir(spec, sets.train, out / "instances" / "train");
    save_instance_dir(spec, sets.test, out / "instances" / "test");
    save_instance_dir(spec, sets.valid, out / "instances" / "valid");

    const HhRunReport report =
        run_hyperheuristic(spec, sets, EaConfig{}, cfg, args.seed, workers);
    write_text_file(out / "hh_report.csv", hh_report_csv(report));
    write_text_file(out / "hh_report.txt", hh_report_text(report));

    ordered_json meta = params_meta(params);
    meta["format"] = "polyaag-run";
    meta["command"] = "run-hh";
    meta["seed"] = std::to_string(args.seed);
    meta["cmax"] = cfg.chain_budget;
    meta["n_train"] = cfg.n_train;
    meta["n_test"] = cfg.n_test;
    meta["n_valid"] = cfg.n_valid;
    meta["p_accept"] = cfg.p_accept;
    meta["initial_chain"] = args.initial_chain;
    meta["maxsteps_train_test"] = cfg.maxsteps_train;
    meta["maxsteps_valid"] = cfg.maxsteps_valid;
    write_meta(out, meta);

    std::cout << hh_report_text(report);
    return 0;
}

int run_report(const std::vector<std::string>& inputs, const std::string& out_path) {
    std::string combined = csv_row({"source", "degree", "chain", "instances", "successes",
                                    "success_rate", "mean_fail_cost",
                                    "mean_success_generations"});
    std::cout << "degree  chain        success_rate  mean_fail_cost  mean_generations\n";
    for (const std::string& input : inputs) {
        const fs::path summary = fs::path(input) / "ea_summary.csv";
        if (!fs::exists(summary)) {
            throw std::runtime_error(summary.string() + " not found (expected a run-ea directory)");
        }
        const auto rows = parse_csv(read_text_file(summary));
        if (rows.size() < 2 || rows[1].size() < 7) {
            throw std::runtime_error(summary.string() + ": malformed summary");
        }
        const auto& r = rows[1];
        std::vector<std::string> row = {input};
        row.insert(row.end(), r.begin(), r.end());
        combined += csv_row(row);
        std::printf("%-7s %-12s %-13s %-15s %s\n", r[0].c_str(), r[1].c_str(), r[4].c_str(),
                    r[5].c_str(), r[6].c_str());
    }
    if (!out_path.empty()) {
        write_text_file(out_path, combined);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

// Re-derives every artifact of a run directory from run_meta.json with the
// sequential executor and byte-compares against what is on disk.
int run_audit(const std::string& dir_text) {
    const fs::path dir = dir_text;
    const ordered_json meta = ordered_json::parse(read_text_file(dir / "run_meta.json"));
    if (meta.at("format").get<std::string>() != "polyaag-run") {
        throw std::runtime_error("run_meta.json: unexpected format tag");
    }
    const std::string command = meta.at("command").get<std::string>();
    const GroupSpec spec = load_group_spec(dir / "group.json");
    const std::uint64_t seed = std::stoull(meta.at("seed").get<std::string>());

    std::vector<std::string> mismatches;
    if (command == "gen-instances" || command == "run-ea" || command == "run-lba") {
        const AagParams params = params_from_meta(meta);
        const int count = meta.at("count").get<int>();
        const std::vector<AagInstance> regenerated =
            generate_instance_batch(spec, params, count, seed, "gen", 1);
        const std::vector<AagInstance> on_disk = load_instance_dir(spec, dir / "instances");
        // Instance files are only re-derivable when they were generated by this
        // run (not copied in from --instances); compare content, flag loosely.
        bool instances_match = on_disk.size() == regenerated.size();
        for (std::size_t j = 0; instances_match && j < on_disk.size(); ++j) {
            instances_match = instance_to_json(spec, on_disk[j]) ==
                              instance_to_json(spec, regenerated[j]);
        }
        const std::vector<AagInstance>& instances = instances_match ? regenerated : on_disk;
        if (command == "gen-instances") {
            if (!instances_match) mismatches.push_back((dir / "instances").string());
            compare_artifact(dir / "instances.csv", instance_batch_csv(spec, instances),
                             mismatches);
        } else if (command == "run-ea") {
            const EaConfig cfg =
                ea_config_for(spec, meta.at("chain").get<std::string>(),
                              meta.at("maxsteps").get<int>());
            const bool trace = meta.at("trace").get<bool>();
            const std::vector<EaRunResult> runs =
                run_ea_batch(spec, instances, cfg, seed, "ea", 1, trace);
            for (const EaRunResult& r : runs) {
                if (!check_offspring_audit(cfg, r)) {
                    mismatches.push_back("offspring-audit inst" + std::to_string(r.seed));
                }
            }
            compare_artifact(dir / "ea_runs.csv", ea_batch_csv(instances, runs), mismatches);
            compare_artifact(dir / "ea_summary.csv",
                             ea_summary_csv(spec, cfg.injected_chain, runs), mismatches);
            if (trace) {
                for (std::size_t j = 0; j < runs.size(); ++j) {
                    compare_artifact(dir / "traces" / (instance_file_name(j) + ".csv"),
                                     ea_trace_csv(runs[j]), mismatches);
                }
            }
        } else {
            const std::vector<LbaSweepRow> rows = run_lba_sweep(
                spec, instances, meta.at("budget").get<long>(),
                meta.at("initial_length").get<int>(), meta.at("include_h7").get<bool>(),
                seed, 1);
            compare_artifact(dir / "lba_sweep.csv", lba_sweep_csv(rows), mismatches);
        }
    } else if (command == "run-hh") {
        const AagParams params = params_from_meta(meta);
        HhArgs args;
        args.cmax = meta.at("cmax").get<int>();
        args.n_train = meta.at("n_train").get<int>();
        args.n_test = meta.at("n_test").get<int>();
        args.n_valid = meta.at("n_valid").get<int>();
        args.p_accept = meta.at("p_accept").get<double>();
        args.initial_chain = meta.at("initial_chain").get<std::string>();
        args.maxsteps = meta.at("maxsteps_train_test").get<int>();
        args.maxsteps_valid = meta.at("maxsteps_valid").get<int>();
        const HhConfig cfg = hh_config_for(args, spec);
        HhInstanceSets sets;
        sets.train = generate_instance_batch(spec, params, cfg.n_train, seed, "gen/train", 1);
        sets.test = generate_instance_batch(spec, params, cfg.n_test, seed, "gen/test", 1);
        sets.valid = generate_instance_batch(spec, params, cfg.n_valid, seed, "gen/valid", 1);
        const HhRunReport report = run_hyperheuristic(spec, sets, EaConfig{}, cfg, seed, 1);
        compare_artifact(dir / "hh_report.csv", hh_report_csv(report), mismatches);
    } else {
        throw std::runtime_error("audit: unknown command in run_meta.json: " + command);
    }

    if (mismatches.empty()) {
        std::cout << "audit OK: " << dir << " re-derives byte-for-byte\n";
        return 0;
    }
    std::cerr << "audit FAILED for " << dir << ":\n";
    for (const std::string& m : mismatches) std::cerr << "  mismatch: " << m << "\n";
    return 1;
}

void add_gen_flags(CLI::App* cmd, GenArgs& args, bool with_count) {
    args.group.add_flags(cmd);
    cmd->add_option("--params", args.params_text, "Instance parameters N,L,L1,L2")
        ->capture_default_str();
    cmd->add_option("--length-mode", args.length_mode,
                    "Generator length measure: collected | free")
        ->capture_default_str();
    if (with_count) {
        cmd->add_option("--count", args.count, "Number of instances")->capture_default_str();
    }
    cmd->add_option("--seed", args.seed, "Master seed")->capture_default_str();
    cmd->add_option("--workers", args.workers,
                    "Worker threads (0 = 1; POLYAAG_WORKERS overrides)");
    cmd->add_option("--out", args.out, "Output directory")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Length-based attacks on AAG key exchange over polycyclic groups"};
    app.require_subcommand(1);

    int gg_degree = 1;
    std::string gg_out;
    CLI::App* gen_group = app.add_subcommand("gen-group", "Write a built-in group spec file");
    gen_group->add_option("--degree", gg_degree, "Field degree (1, 2 or 3)")->required();
    gen_group->add_option("--out", gg_out, "Output path (default group_d<degree>.json)");

    GenArgs gi_args;
    CLI::App* gen_instances =
        app.add_subcommand("gen-instances", "Generate seeded problem instances");
    add_gen_flags(gen_instances, gi_args, true);

    EaArgs ea_args;
    CLI::App* run_ea_cmd = app.add_subcommand("run-ea", "Run the EA over an instance batch");
    add_gen_flags(run_ea_cmd, ea_args.gen, true);
    run_ea_cmd->add_option("--instances", ea_args.instances_dir,
                           "Load instances from this directory instead of generating");
    run_ea_cmd->add_option("--chain", ea_args.chain_text, "Injected heuristic chain")
        ->capture_default_str();
    run_ea_cmd->add_option("--maxsteps", ea_args.maxsteps,
                           "Generation cap (0 = degree default)");
    run_ea_cmd->add_flag("--no-trace", ea_args.no_trace, "Skip per-run trace CSVs");

    LbaArgs lba_args;
    CLI::App* run_lba_cmd =
        app.add_subcommand("run-lba", "Run the single-heuristic hillclimber sweep");
    add_gen_flags(run_lba_cmd, lba_args.gen, true);
    run_lba_cmd->add_option("--instances", lba_args.instances_dir,
                            "Load instances from this directory instead of generating");
    run_lba_cmd->add_option("--budget", lba_args.budget, "Iterations per run")
        ->capture_default_str();
    run_lba_cmd->add_option("--initial-length", lba_args.initial_length,
                            "Initial word length")
        ->capture_default_str();
    run_lba_cmd->add_flag("--include-h7", lba_args.include_h7, "Also sweep H7");

    HhArgs hh_args;
    CLI::App* run_hh_cmd = app.add_subcommand("run-hh", "Run the hyper-heuristic search");
    hh_args.group.add_flags(run_hh_cmd);
    run_hh_cmd->add_option("--params", hh_args.params_text, "Instance parameters N,L,L1,L2")
        ->capture_default_str();
    run_hh_cmd->add_option("--length-mode", hh_args.length_mode,
                           "Generator length measure: collected | free")
        ->capture_default_str();
    run_hh_cmd->add_option("--seed", hh_args.seed, "Master seed")->capture_default_str();
    run_hh_cmd->add_option("--workers", hh_args.workers,
                           "Worker threads (0 = 1; POLYAAG_WORKERS overrides)");
    run_hh_cmd->add_option("--out", hh_args.out, "Output directory")->required();
    run_hh_cmd->add_option("--cmax", hh_args.cmax, "Chains to examine")->capture_default_str();
    run_hh_cmd->add_option("--train", hh_args.n_train, "Training instances")
        ->capture_default_str();
    run_hh_cmd->add_option("--test", hh_args.n_test, "Testing instances")
        ->capture_default_str();
    run_hh_cmd->add_option("--valid", hh_args.n_valid, "Validation instances")
        ->capture_default_str();
    run_hh_cmd->add_option("--ph", hh_args.p_accept,
                           "Acceptance probability for non-improving chains")
        ->capture_default_str();
    run_hh_cmd->add_option("--initial-chain", hh_args.initial_chain,
                           "Initial chain, or 'random'")
        ->capture_default_str();
    run_hh_cmd->add_option("--maxsteps", hh_args.maxsteps,
                           "Train/test generation cap (0 = degree default)");
    run_hh_cmd->add_option("--maxsteps-valid", hh_args.maxsteps_valid,
                           "Validation generation cap (0 = degree default)");

    std::vector<std::string> report_inputs;
    std::string report_out;
    CLI::App* report_cmd =
        app.add_subcommand("report", "Aggregate run-ea summaries into one table");
    report_cmd->add_option("--inputs", report_inputs, "run-ea output directories")
        ->required()
        ->expected(-1);
    report_cmd->add_option("--out", report_out, "Write the combined CSV here");

    std::string audit_dir;
    CLI::App* audit_cmd =
        app.add_subcommand("audit", "Re-derive a run directory and byte-compare outputs");
    audit_cmd->add_option("--dir", audit_dir, "Run directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_group->parsed()) return run_gen_group(gg_degree, gg_out);
        if (gen_instances->parsed()) return run_gen_instances(gi_args);
        if (run_ea_cmd->parsed()) return run_run_ea(ea_args);
        if (run_lba_cmd->parsed()) return run_run_lba(lba_args);
        if (run_hh_cmd->parsed()) return run_run_hh(hh_args);
        if (report_cmd->parsed()) return run_report(report_inputs, report_out);
        if (audit_cmd->parsed()) return run_audit(audit_dir);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}
