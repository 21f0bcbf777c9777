#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgo/baselines.hpp"
#include "dgo/core.hpp"
#include "dgo/errors.hpp"
#include "dgo/objective.hpp"
#include "dgo/objectives.hpp"
#include "dgo/serialize.hpp"

namespace dgo {

inline const std::vector<std::string>& optimizer_names() {
    static const std::vector<std::string> names = {
        "dgo", "dgo_binary", "monte_carlo", "gradient_descent", "genetic", "annealing"};
    return names;
}

inline bool is_dgo_optimizer(std::string_view name) {
    return name == "dgo" || name == "dgo_binary";
}

inline BaselineMethod baseline_method_from_name(std::string_view name) {
    if (name == "monte_carlo") return BaselineMethod::monte_carlo;
    if (name == "gradient_descent") return BaselineMethod::gradient_descent;
    if (name == "genetic") return BaselineMethod::genetic;
    if (name == "annealing") return BaselineMethod::annealing;
    throw config_error("unknown optimizer: " + std::string(name));
}

struct ExperimentConfig {
    std::string objective;
    std::string optimizer = "dgo";
    unsigned repetitions = 1;
    std::uint64_t seed = 1;
    std::size_t dimension = 0;  // overrides synthetic_highdim's default when nonzero
    std::string out_dir;        // empty: no files written
    DgoConfig dgo;
    BaselineConfig baseline;
    std::optional<std::vector<double>> start;

    void validate() const {
        if (objective.empty()) throw config_error("an objective name is required");
        if (repetitions < 1) throw config_error("repetitions must be at least 1");
        if (std::find(optimizer_names().begin(), optimizer_names().end(), optimizer) ==
            optimizer_names().end())
            throw config_error("unknown optimizer: " + optimizer);
        if (is_dgo_optimizer(optimizer))
            dgo.validate();
        else {
            BaselineConfig b = baseline;
            b.method = baseline_method_from_name(optimizer);
            b.validate();
        }
    }
};

inline Objective resolve_objective(const std::string& name, std::size_t dimension) {
    if (name == "synthetic_highdim" && dimension != 0)
        return make_synthetic_highdim(dimension);
    const Objective& o = find_objective(name);
    if (dimension != 0 && dimension != o.dimension)
        throw config_error("dimension override is only available for synthetic_highdim");
    return o;
}

// Repetition 0 runs with the master seed itself so a single run is
// reproducible from the command line verbatim; later repetitions derive.
inline std::uint64_t seed_for_repetition(std::uint64_t master, unsigned repetition) {
    return repetition == 0 ? master : derive_seed(master, repetition);
}

inline RunRecord run_one(const Objective& f, const ExperimentConfig& cfg,
                         std::uint64_t run_seed, unsigned repetition) {
    RunRecord rec;
    rec.objective = f.name;
    rec.optimizer = cfg.optimizer;
    rec.seed = run_seed;
    rec.repetition = repetition;
    rec.dimension = f.dimension;

    const auto t0 = std::chrono::steady_clock::now();
    RunResult result;
    std::uint64_t total_evaluations = 0;
    if (is_dgo_optimizer(cfg.optimizer)) {
        DgoConfig c = cfg.dgo;
        c.seed = run_seed;
        if (cfg.optimizer == "dgo_binary") c.transform = ChildTransform::plain_binary;
        std::span<const double> start =
            cfg.start ? std::span<const double>(*cfg.start) : std::span<const double>{};
        MultiStartResult ms = multi_start(f, f.bounds, c, start);
        total_evaluations = ms.total_evaluations;
        result = std::move(ms.runs[ms.best_index]);
    } else {
        BaselineConfig b = cfg.baseline;
        b.method = baseline_method_from_name(cfg.optimizer);
        b.seed = run_seed;
        b.start = cfg.start;
        result = run_baseline(f, f.bounds, b);
        total_evaluations = result.evaluations;
    }
    const auto t1 = std::chrono::steady_clock::now();

    rec.best_value = result.best_value;
    rec.best_point = result.best_point;
    rec.distance_to_optimum = f.distance_to_optimum(result.best_point);
    rec.evaluations = total_evaluations;
    rec.termination = to_string(result.termination);
    rec.trace = std::move(result.trace);
    rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

struct ExperimentOutcome {
    std::vector<RunRecord> records;
    std::vector<std::string> failures;  // one diagnostic per failed repetition
};

inline void write_outputs(const std::string& dir, std::span<const RunRecord> records) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    {
        std::ofstream out(fs::path(dir) / "results.tsv");
        write_results_tsv(out, records);
    }
    {
        std::ofstream out(fs::path(dir) / "trace.tsv");
        write_trace_tsv(out, records);
    }
    {
        std::ofstream out(fs::path(dir) / "results.jsonl");
        write_results_jsonl(out, records);
    }
}

// Runs cfg.repetitions independent repetitions. Validation happens before any
// evaluation or file output; per-repetition failures are collected, not fatal.
inline ExperimentOutcome run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const Objective f = resolve_objective(cfg.objective, cfg.dimension);
    ExperimentOutcome out;
    for (unsigned rep = 0; rep < cfg.repetitions; ++rep) {
        const std::uint64_t run_seed = seed_for_repetition(cfg.seed, rep);
        try {
            out.records.push_back(run_one(f, cfg, run_seed, rep));
        } catch (const std::exception& e) {
            out.failures.push_back("repetition " + std::to_string(rep) + ": " + e.what());
        }
    }
    if (!cfg.out_dir.empty()) write_outputs(cfg.out_dir, out.records);
    return out;
}

// ---------------------------------------------------------------------------
// Benchmark suites
// ---------------------------------------------------------------------------

inline std::vector<std::string> suite_objectives(std::string_view suite) {
    if (suite == "1d") return {"quadratic_1d", "f2_1d", "f3_1d"};
    if (suite == "2d") return {"sphere_2d", "camel6_2d"};
    if (suite == "nn") return {"xor"};
    if (suite == "highdim") return {"synthetic_highdim"};
    if (suite == "all") {
        std::vector<std::string> all;
        for (const char* s : {"1d", "2d", "nn", "highdim"})
            for (std::string& n : suite_objectives(s)) all.push_back(std::move(n));
        return all;
    }
    throw config_error("unknown suite: " + std::string(suite) +
                       " (available: 1d, 2d, nn, highdim, all)");
}

struct BenchConfig {
    std::string suite = "1d";
    std::vector<std::string> optimizers = {"dgo", "monte_carlo", "gradient_descent",
                                           "genetic", "annealing"};
    std::uint64_t seed = 1;
    unsigned repetitions = 1;
    std::string out_dir;
};

// Per-objective engine settings the bench table uses. The high-dimensional
// row starts coarse with random refinement under an explicit budget; the rest
// run the deterministic-refine multi-start configuration.
inline DgoConfig bench_dgo_config(const std::string& objective) {
    DgoConfig c;
    c.initial_bits = 8;
    c.max_bits = 32;
    c.deterministic_refine = true;
    c.starts = 40;
    if (objective == "xor") {
        c.initial_bits = 16;
        c.starts = 10;
    } else if (objective == "synthetic_highdim") {
        c.initial_bits = 1;
        c.deterministic_refine = false;
        c.starts = 1;
        c.max_evaluations = 2000000;
    }
    return c;
}

inline ExperimentOutcome run_bench(const BenchConfig& cfg) {
    if (cfg.repetitions < 1) throw config_error("repetitions must be at least 1");
    const std::vector<std::string> names = suite_objectives(cfg.suite);
    for (const std::string& opt : cfg.optimizers)
        if (std::find(optimizer_names().begin(), optimizer_names().end(), opt) ==
            optimizer_names().end())
            throw config_error("unknown optimizer: " + opt);

    ExperimentOutcome out;
    std::uint64_t cell = 0;
    for (const std::string& objective : names) {
        const Objective f = resolve_objective(objective, 0);
        for (const std::string& optimizer : cfg.optimizers) {
            ExperimentConfig one;
            one.objective = objective;
            one.optimizer = optimizer;
            one.dgo = bench_dgo_config(objective);
            if (optimizer == "dgo_binary") {
                one.dgo.max_evaluations =
                    one.dgo.max_evaluations ? one.dgo.max_evaluations : 500000;
            }
            for (unsigned rep = 0; rep < cfg.repetitions; ++rep) {
                const std::uint64_t run_seed = derive_seed(cfg.seed, cell++);
                try {
                    out.records.push_back(run_one(f, one, run_seed, rep));
                } catch (const std::exception& e) {
                    out.failures.push_back(objective + "/" + optimizer + " repetition " +
                                           std::to_string(rep) + ": " + e.what());
                }
            }
        }
    }
    if (!cfg.out_dir.empty()) write_outputs(cfg.out_dir, out.records);
    return out;
}

}  // namespace dgo
