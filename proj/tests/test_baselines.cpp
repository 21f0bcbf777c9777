#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

#include "dgo/baselines.hpp"
#include "dgo/objectives.hpp"

using dgo::BaselineConfig;
using dgo::BaselineMethod;
using dgo::BitString;
using dgo::Interval;
using dgo::Objective;
using dgo::RunResult;
using dgo::Termination;

namespace {

Objective identity_1d() {
    return {"ident", 1, {{0.0, 1.0}},
            [](std::span<const double> x) { return x[0]; }, {{0.0}}, 0.0};
}

// Two basins separated by a high wall too wide for a single SA step: the left
// basin bottoms at 0, the right at -1.
Objective barrier_1d() {
    return {"barrier", 1, {{0.0, 1.0}},
            [](std::span<const double> x) {
                const double v = x[0];
                if (v >= 0.4 && v <= 0.6) return 10.0;
                if (v < 0.4) return (v - 0.2) * (v - 0.2);
                return -1.0 + (v - 0.8) * (v - 0.8);
            },
            {{0.8}}, -1.0};
}

}  // namespace

TEST_CASE("monte carlo: budget, trace, determinism") {
    const Objective f = dgo::make_camel6();
    BaselineConfig cfg;
    cfg.method = BaselineMethod::monte_carlo;
    cfg.evaluation_budget = 500;
    cfg.seed = 8;
    const RunResult a = dgo::monte_carlo(f, f.bounds, cfg);
    CHECK(a.evaluations == 500);
    CHECK(a.termination == Termination::budget_exhausted);
    REQUIRE_FALSE(a.trace.empty());
    CHECK(a.trace.front().event == dgo::TraceEvent::start);
    double best = a.trace.front().best_value;
    for (const auto& rec : a.trace) {
        CHECK(rec.best_value <= best);
        best = rec.best_value;
    }
    CHECK(a.best_value == best);
    CHECK(a.best_value == f(a.best_point));

    const RunResult b = dgo::monte_carlo(f, f.bounds, cfg);
    CHECK(a.best_point == b.best_point);
    CHECK(a.trace == b.trace);

    cfg.evaluation_budget = 1;
    const RunResult single = dgo::monte_carlo(f, f.bounds, cfg);
    CHECK(single.evaluations == 1);
    CHECK(single.best_value == single.trace.front().best_value);
}

TEST_CASE("monte carlo order statistics on the identity objective") {
    // the minimum of k uniform draws has mean 1/(k+1)
    const Objective f = identity_1d();
    BaselineConfig cfg;
    cfg.method = BaselineMethod::monte_carlo;
    cfg.evaluation_budget = 9;
    double sum = 0.0;
    const int reps = 1000;
    for (int r = 0; r < reps; ++r) {
        cfg.seed = 1000 + r;
        sum += dgo::monte_carlo(f, f.bounds, cfg).best_value;
    }
    const double mean = sum / reps;
    CHECK(mean > 0.1 * 0.8);
    CHECK(mean < 0.1 * 1.2);
}

TEST_CASE("finite differences match the analytic quadratic gradient") {
    const Objective quad = dgo::make_quadratic_1d();
    std::uint64_t count = 0;
    for (double x0 : {0.0, 1.7, 3.0, 9.2}) {
        const std::vector<double> x = {x0};
        const std::vector<double> g =
            dgo::finite_difference_gradient(quad, x, quad.bounds, count);
        CHECK(std::abs(g[0] - 2.0 * (x0 - 3.0)) <= 1e-5);
    }
    CHECK(count == 8);
}

TEST_CASE("gradient descent converges on the quadratic") {
    const Objective quad = dgo::make_quadratic_1d();
    BaselineConfig cfg;
    cfg.method = BaselineMethod::gradient_descent;
    cfg.evaluation_budget = 10000;
    cfg.seed = 4;
    cfg.start = std::vector<double>{0.0};
    const RunResult res = dgo::gradient_descent(quad, quad.bounds, cfg);
    CHECK(res.termination == Termination::gradient_converged);
    CHECK(std::abs(res.best_point[0] - 3.0) <= 1e-4);
    CHECK(res.evaluations <= cfg.evaluation_budget);

    // starting exactly at the stationary point stops immediately
    cfg.start = std::vector<double>{3.0};
    const RunResult still = dgo::gradient_descent(quad, quad.bounds, cfg);
    CHECK(still.termination == Termination::gradient_converged);
    CHECK(still.evaluations == 3);  // initial value + one 2-point gradient
    CHECK(still.best_point[0] == 3.0);

    // budget-capped on a multimodal function, deterministic
    BaselineConfig hard;
    hard.method = BaselineMethod::gradient_descent;
    hard.evaluation_budget = 200;
    hard.seed = 17;
    const Objective camel = dgo::make_camel6();
    const RunResult a = dgo::gradient_descent(camel, camel.bounds, hard);
    const RunResult b = dgo::gradient_descent(camel, camel.bounds, hard);
    CHECK(a.evaluations <= 200);
    CHECK(a.trace == b.trace);
    CHECK(a.best_value <= a.trace.front().best_value);
}

TEST_CASE("genetic: fixed point with no variation, budget, determinism") {
    const Objective camel = dgo::make_camel6();
    BaselineConfig cfg;
    cfg.method = BaselineMethod::genetic;
    cfg.evaluation_budget = 2000;
    cfg.seed = 21;
    cfg.population = 20;

    // identical initial population + zero mutation: nothing ever changes
    dgo::Rng seed_rng(77);
    const dgo::SearchSpace space = dgo::SearchSpace::uniform(camel.bounds, cfg.genome_bits);
    BaselineConfig frozen = cfg;
    frozen.mutation_rate = 0.0;
    frozen.seed_genome = BitString::random(space.total_bits(), seed_rng);
    const RunResult fixed = dgo::genetic(camel, camel.bounds, frozen);
    CHECK(fixed.best_bits == *frozen.seed_genome);
    CHECK(fixed.best_value == camel(space.decode(*frozen.seed_genome)));
    CHECK(fixed.trace.size() == 1);  // only the start record, no improvements
    CHECK(fixed.evaluations == 2000);

    // normal runs: budget respected, reproducible, monotone best
    const RunResult a = dgo::genetic(camel, camel.bounds, cfg);
    const RunResult b = dgo::genetic(camel, camel.bounds, cfg);
    CHECK(a.evaluations <= cfg.evaluation_budget);
    CHECK(a.trace == b.trace);
    CHECK(a.best_value == camel(a.best_point));
    double best = a.trace.front().best_value;
    for (const auto& rec : a.trace) {
        CHECK(rec.best_value <= best);
        best = rec.best_value;
    }

    BaselineConfig bad = cfg;
    bad.population = 1;
    CHECK_THROWS_AS(dgo::genetic(camel, camel.bounds, bad), dgo::config_error);
    bad = cfg;
    bad.evaluation_budget = 10;  // smaller than the population
    CHECK_THROWS_AS(dgo::genetic(camel, camel.bounds, bad), dgo::config_error);
}

TEST_CASE("annealing: greedy at vanishing temperature cannot cross the wall") {
    const Objective f = barrier_1d();
    BaselineConfig cfg;
    cfg.method = BaselineMethod::annealing;
    cfg.evaluation_budget = 10000;
    cfg.sa_step_fraction = 0.1;  // max step 0.1 < wall width 0.2
    cfg.initial_temp = 1e-12;
    cfg.start = std::vector<double>{0.3};  // left basin
    cfg.seed = 33;
    const RunResult greedy = dgo::annealing(f, f.bounds, cfg);
    // stays in the left basin: descends toward 0 but never reaches -1
    CHECK(greedy.best_value >= -0.5);
    CHECK(greedy.best_value <= 0.01);
    CHECK(greedy.evaluations == cfg.evaluation_budget);

    // with a hot start the same chain crosses and finds the right basin
    cfg.initial_temp = 100.0;
    const RunResult hot = dgo::annealing(f, f.bounds, cfg);
    CHECK(hot.best_value < -0.9);

    // determinism
    const RunResult hot2 = dgo::annealing(f, f.bounds, cfg);
    CHECK(hot.trace == hot2.trace);
    CHECK(hot.best_point == hot2.best_point);
}

TEST_CASE("annealing auto-temperature probes count against the budget") {
    const Objective camel = dgo::make_camel6();
    BaselineConfig cfg;
    cfg.method = BaselineMethod::annealing;
    cfg.evaluation_budget = 50;  // smaller than the probe default of 100
    cfg.seed = 9;
    const RunResult res = dgo::annealing(camel, camel.bounds, cfg);
    CHECK(res.evaluations == 50);
    CHECK(res.termination == Termination::budget_exhausted);
}

TEST_CASE("GA and SA improve on the camel function in at least 18 of 20 seeds") {
    const Objective camel = dgo::make_camel6();
    int ga_improved = 0;
    int sa_improved = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        BaselineConfig ga;
        ga.method = BaselineMethod::genetic;
        ga.evaluation_budget = 10000;
        ga.seed = 500 + seed;
        const RunResult g = dgo::genetic(camel, camel.bounds, ga);
        if (g.best_value < g.trace.front().best_value) ++ga_improved;

        BaselineConfig sa;
        sa.method = BaselineMethod::annealing;
        sa.evaluation_budget = 10000;
        sa.seed = 900 + seed;
        const RunResult s = dgo::annealing(camel, camel.bounds, sa);
        if (s.best_value < s.trace.front().best_value) ++sa_improved;
    }
    CHECK(ga_improved >= 18);
    CHECK(sa_improved >= 18);
}

TEST_CASE("baseline validation rejects bad configurations") {
    BaselineConfig cfg;
    cfg.evaluation_budget = 0;
    CHECK_THROWS_AS(cfg.validate(), dgo::config_error);
    cfg.evaluation_budget = 100;
    cfg.method = BaselineMethod::gradient_descent;
    cfg.step_size = 0.0;
    CHECK_THROWS_AS(cfg.validate(), dgo::config_error);
    cfg = BaselineConfig{};
    cfg.method = BaselineMethod::annealing;
    cfg.cooling = 1.5;
    CHECK_THROWS_AS(cfg.validate(), dgo::config_error);

    const Objective quad = dgo::make_quadratic_1d();
    BaselineConfig far;
    far.method = BaselineMethod::gradient_descent;
    far.start = std::vector<double>{42.0};  // outside [0, 10]
    CHECK_THROWS_AS(dgo::gradient_descent(quad, quad.bounds, far), dgo::config_error);
}

TEST_CASE("dgo_binary ablation runs the plain-inversion engine") {
    const Objective f2 = dgo::make_f2();
    dgo::DgoConfig cfg;
    cfg.initial_bits = 8;
    cfg.max_bits = 16;
    cfg.deterministic_refine = true;
    cfg.seed = 13;
    const dgo::MultiStartResult plain = dgo::dgo_binary(f2, f2.bounds, cfg);
    REQUIRE(plain.runs.size() == 1);
    CHECK(plain.best().best_value <= plain.best().trace.front().best_value);
    CHECK(plain.best().best_value == f2(plain.best().best_point));

    // both variants emit comparable traces from the same seed
    const dgo::MultiStartResult gray = dgo::multi_start(f2, f2.bounds, cfg);
    CHECK_FALSE(gray.best().trace.empty());
    CHECK_FALSE(plain.best().trace.empty());
}
