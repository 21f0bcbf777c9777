// Command-line harness for the dgo library: single runs, benchmark suites,
// and registry listings, with deterministic seeded output files.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dgo/dgo.hpp"

namespace {

void print_records(const std::vector<dgo::RunRecord>& records) {
    for (const dgo::RunRecord& r : records) {
        std::cout << "objective=" << r.objective << " optimizer=" << r.optimizer
                  << " seed=" << r.seed << " repetition=" << r.repetition
                  << " best_value=" << dgo::format_full(r.best_value)
                  << " distance_to_optimum=" << dgo::format_full(r.distance_to_optimum)
                  << " evaluations=" << r.evaluations << " termination=" << r.termination
                  << " best_point=" << dgo::format_point(r.best_point) << '\n';
    }
}

int report_outcome(const dgo::ExperimentOutcome& outcome, const std::string& out_dir) {
    print_records(outcome.records);
    if (!out_dir.empty())
        std::cout << "wrote " << out_dir << "/results.tsv, trace.tsv, results.jsonl\n";
    if (!outcome.failures.empty()) {
        std::cerr << "failed runs:\n";
        for (const std::string& f : outcome.failures) std::cerr << "  " << f << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dgo: derivative-free global optimization over Gray-coded bit strings"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI file (sections per subcommand)");

    dgo::ExperimentConfig run_cfg;
    std::vector<double> start_point;
    CLI::App* run = app.add_subcommand("run", "Run one optimizer on one objective");
    run->add_option("--objective", run_cfg.objective, "Objective name (see list-objectives)")
        ->required();
    run->add_option("--optimizer", run_cfg.optimizer,
                    "Optimizer name (see list-optimizers), default dgo");
    run->add_option("--seed", run_cfg.seed, "Master seed (default 1)");
    run->add_option("--repetitions", run_cfg.repetitions, "Independent repetitions (default 1)");
    run->add_option("--dim", run_cfg.dimension, "Dimension override for synthetic_highdim");
    run->add_option("--out", run_cfg.out_dir,
                    "Directory for results.tsv, trace.tsv, results.jsonl");
    run->add_option("--start", start_point, "Start point coordinates (first start only)");
    run->add_option("--starts", run_cfg.dgo.starts, "dgo: multi-start count (default 1)");
    run->add_option("--initial-bits", run_cfg.dgo.initial_bits,
                    "dgo: starting per-variable resolution (default 8)");
    run->add_option("--max-bits", run_cfg.dgo.max_bits,
                    "dgo: final per-variable resolution (default 32)");
    run->add_option("--max-iterations", run_cfg.dgo.max_iterations,
                    "dgo: step cap per start (default 100000)");
    run->add_option("--max-evaluations", run_cfg.dgo.max_evaluations,
                    "dgo: evaluation cap per start, 0 = uncapped");
    run->add_flag("--deterministic-refine", run_cfg.dgo.deterministic_refine,
                  "dgo: append zero bits instead of random bits when refining");
    run->add_option("--threads", run_cfg.dgo.threads,
                    "dgo: threads for child evaluation (default 1)");
    run->add_option("--budget", run_cfg.baseline.evaluation_budget,
                    "baselines: evaluation budget (default 10000)");
    run->add_option("--step-size", run_cfg.baseline.step_size,
                    "gradient_descent: step scale (default 0.01)");
    run->add_option("--population", run_cfg.baseline.population,
                    "genetic: population size (default 50)");
    run->add_option("--crossover", run_cfg.baseline.crossover_rate,
                    "genetic: crossover rate (default 0.9)");
    run->add_option("--mutation", run_cfg.baseline.mutation_rate,
                    "genetic: per-bit mutation rate (default 1/genome length)");
    run->add_option("--genome-bits", run_cfg.baseline.genome_bits,
                    "genetic: per-variable genome resolution (default 16)");
    run->add_option("--tournament", run_cfg.baseline.tournament,
                    "genetic: tournament size (default 3)");
    run->add_option("--temp", run_cfg.baseline.initial_temp,
                    "annealing: initial temperature, 0 = estimate from probes");
    run->add_option("--cooling", run_cfg.baseline.cooling,
                    "annealing: geometric cooling factor (default 0.995)");
    run->add_option("--sa-step", run_cfg.baseline.sa_step_fraction,
                    "annealing: perturbation scale as box-width fraction (default 0.1)");

    dgo::BenchConfig bench_cfg;
    std::string optimizer_list;
    CLI::App* bench = app.add_subcommand("bench", "Run a benchmark suite");
    bench->add_option("--suite", bench_cfg.suite, "Suite: 1d, 2d, nn, highdim, all (default 1d)");
    bench->add_option("--optimizers", optimizer_list,
                      "Comma-separated optimizer names (default: dgo and all baselines)");
    bench->add_option("--seed", bench_cfg.seed, "Master seed (default 1)");
    bench->add_option("--repetitions", bench_cfg.repetitions, "Repetitions per cell (default 1)");
    bench->add_option("--out", bench_cfg.out_dir,
                      "Directory for results.tsv, trace.tsv, results.jsonl");

    CLI::App* list_obj = app.add_subcommand("list-objectives", "List registered objectives");
    CLI::App* list_opt = app.add_subcommand("list-optimizers", "List registered optimizers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) {
            if (!start_point.empty()) run_cfg.start = start_point;
            return report_outcome(dgo::run_experiment(run_cfg), run_cfg.out_dir);
        }
        if (bench->parsed()) {
            if (!optimizer_list.empty()) {
                bench_cfg.optimizers.clear();
                std::size_t pos = 0;
                while (pos <= optimizer_list.size()) {
                    const std::size_t comma = optimizer_list.find(',', pos);
                    const std::size_t end =
                        comma == std::string::npos ? optimizer_list.size() : comma;
                    if (end > pos)
                        bench_cfg.optimizers.push_back(optimizer_list.substr(pos, end - pos));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            }
            return report_outcome(dgo::run_bench(bench_cfg), bench_cfg.out_dir);
        }
        if (list_obj->parsed()) {
            for (const dgo::Objective& o : dgo::objective_registry()) {
                std::cout << o.name << "\tdimension=" << o.dimension << "\tbounds=";
                for (std::size_t i = 0; i < o.bounds.size(); ++i) {
                    if (i) std::cout << 'x';
                    std::cout << '[' << dgo::format_full(o.bounds[i].lower) << ','
                              << dgo::format_full(o.bounds[i].upper) << ']';
                    if (o.dimension > 2 && i == 0) {
                        std::cout << "^" << o.dimension;
                        break;
                    }
                }
                if (o.optimum_value)
                    std::cout << "\toptimum_value=" << dgo::format_full(*o.optimum_value);
                else
                    std::cout << "\toptimum_value=unknown";
                std::cout << '\n';
            }
            return 0;
        }
        if (list_opt->parsed()) {
            for (const std::string& name : dgo::optimizer_names()) std::cout << name << '\n';
            return 0;
        }
    } catch (const dgo::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
