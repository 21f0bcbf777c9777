#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dgo/core.hpp"
#include "dgo/encoding.hpp"
#include "dgo/errors.hpp"
#include "dgo/objective.hpp"
#include "dgo/rng.hpp"

namespace dgo {

enum class BaselineMethod { monte_carlo, gradient_descent, genetic, annealing };

inline const char* to_string(BaselineMethod m) {
    switch (m) {
        case BaselineMethod::monte_carlo: return "monte_carlo";
        case BaselineMethod::gradient_descent: return "gradient_descent";
        case BaselineMethod::genetic: return "genetic";
        case BaselineMethod::annealing: return "annealing";
    }
    return "?";
}

struct BaselineConfig {
    BaselineMethod method = BaselineMethod::monte_carlo;
    std::uint64_t evaluation_budget = 10000;
    std::uint64_t seed = 0;
    std::optional<std::vector<double>> start;  // gradient descent / annealing start point

    // gradient descent
    double step_size = 0.01;        // per-coordinate step = step_size * box width * gradient

    // genetic algorithm
    std::size_t population = 50;
    double crossover_rate = 0.9;
    double mutation_rate = -1.0;    // negative selects the 1/genome-length default
    unsigned genome_bits = 16;      // per-variable resolution of the genome
    std::size_t tournament = 3;
    std::optional<BitString> seed_genome;  // fills the whole initial population when set

    // simulated annealing
    double initial_temp = 0.0;      // <= 0 selects the probe-based estimate
    double cooling = 0.995;
    double sa_step_fraction = 0.1;  // perturbation scale as a fraction of box width

    void validate() const {
        if (evaluation_budget < 1) throw config_error("evaluation_budget must be at least 1");
        switch (method) {
            case BaselineMethod::monte_carlo:
                break;
            case BaselineMethod::gradient_descent:
                if (!(step_size > 0)) throw config_error("step_size must be positive");
                break;
            case BaselineMethod::genetic:
                if (population < 2) throw config_error("population must be at least 2");
                if (!(crossover_rate >= 0 && crossover_rate <= 1))
                    throw config_error("crossover_rate must be in [0, 1]");
                if (mutation_rate > 1) throw config_error("mutation_rate must be at most 1");
                if (genome_bits < 1 || genome_bits > 64)
                    throw config_error("genome_bits must be in [1, 64]");
                if (tournament < 1) throw config_error("tournament must be at least 1");
                if (evaluation_budget < population)
                    throw config_error("evaluation_budget must cover the initial population");
                break;
            case BaselineMethod::annealing:
                if (!(cooling > 0 && cooling < 1))
                    throw config_error("cooling must be in (0, 1)");
                if (!(sa_step_fraction > 0)) throw config_error("sa_step_fraction must be positive");
                break;
        }
    }
};

namespace detail {

inline double eval_point(const Objective& f, std::span<const double> x, std::uint64_t& count) {
    const double v = f(x);
    if (std::isnan(v)) throw evaluation_error("objective returned NaN");
    ++count;
    return v;
}

inline std::vector<double> random_point(std::span<const Interval> bounds, Rng& rng) {
    std::vector<double> x(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i)
        x[i] = rng.next_in(bounds[i].lower, bounds[i].upper);
    return x;
}

inline void check_start(const std::optional<std::vector<double>>& start,
                        std::span<const Interval> bounds) {
    if (!start) return;
    if (start->size() != bounds.size())
        throw config_error("start point dimension does not match bounds");
    for (std::size_t i = 0; i < bounds.size(); ++i)
        if (!((*start)[i] >= bounds[i].lower && (*start)[i] <= bounds[i].upper))
            throw config_error("start point is outside the bounds");
}

}  // namespace detail

// Central differences with h = 1e-6 of each coordinate's box width. Probes may
// poke slightly past the box edge; every objective formula is total there.
inline std::vector<double> finite_difference_gradient(const Objective& f,
                                                      std::span<const double> x,
                                                      std::span<const Interval> bounds,
                                                      std::uint64_t& count) {
    std::vector<double> g(x.size());
    std::vector<double> probe(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double h = 1e-6 * (bounds[i].upper - bounds[i].lower);
        probe[i] = x[i] + h;
        const double fp = detail::eval_point(f, probe, count);
        probe[i] = x[i] - h;
        const double fm = detail::eval_point(f, probe, count);
        probe[i] = x[i];
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

// Uniform random sampling over the box; the running minimum is the result.
inline RunResult monte_carlo(const Objective& f, std::span<const Interval> bounds,
                             const BaselineConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    RunResult res;
    std::uint64_t evals = 0;
    std::vector<double> x = detail::random_point(bounds, rng);
    double v = detail::eval_point(f, x, evals);
    res.best_point = x;
    res.best_value = v;
    res.trace.push_back({0, TraceEvent::start, 0, evals, v, v});
    for (std::uint64_t k = 1; evals < cfg.evaluation_budget; ++k) {
        x = detail::random_point(bounds, rng);
        v = detail::eval_point(f, x, evals);
        if (v < res.best_value) {
            res.best_value = v;
            res.best_point = x;
            res.trace.push_back({k, TraceEvent::improve, 0, evals, v, v});
        }
    }
    res.evaluations = evals;
    res.termination = Termination::budget_exhausted;
    return res;
}

// Fixed-step steepest descent with central-difference gradients, projected
// onto the box. Stops when the gradient norm drops below 1e-10 or the next
// iteration would overrun the budget.
inline RunResult gradient_descent(const Objective& f, std::span<const Interval> bounds,
                                  const BaselineConfig& cfg) {
    cfg.validate();
    detail::check_start(cfg.start, bounds);
    Rng rng(cfg.seed);
    const std::size_t d = bounds.size();
    RunResult res;
    std::uint64_t evals = 0;
    std::vector<double> x = cfg.start ? *cfg.start : detail::random_point(bounds, rng);
    double v = detail::eval_point(f, x, evals);
    res.best_point = x;
    res.best_value = v;
    res.trace.push_back({0, TraceEvent::start, 0, evals, v, v});
    res.termination = Termination::budget_exhausted;
    for (std::uint64_t k = 1;; ++k) {
        if (evals + 2 * d + 1 > cfg.evaluation_budget) break;
        const std::vector<double> g = finite_difference_gradient(f, x, bounds, evals);
        double norm2 = 0.0;
        for (const double gi : g) norm2 += gi * gi;
        if (std::sqrt(norm2) < 1e-10) {
            res.termination = Termination::gradient_converged;
            break;
        }
        for (std::size_t i = 0; i < d; ++i) {
            const double width = bounds[i].upper - bounds[i].lower;
            x[i] = std::clamp(x[i] - cfg.step_size * width * g[i], bounds[i].lower,
                              bounds[i].upper);
        }
        v = detail::eval_point(f, x, evals);
        if (v < res.best_value) {
            res.best_value = v;
            res.best_point = x;
            res.trace.push_back({k, TraceEvent::improve, 0, evals, v, v});
        }
    }
    res.evaluations = evals;
    return res;
}

// Minimal binary GA: genomes share the encoding module's fixed-point layout,
// tournament selection, one-point crossover, per-bit mutation, elitism of 1.
inline RunResult genetic(const Objective& f, std::span<const Interval> bounds,
                         const BaselineConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const SearchSpace space = SearchSpace::uniform(bounds, cfg.genome_bits);
    const std::size_t length = space.total_bits();
    if (cfg.seed_genome && cfg.seed_genome->length() != length)
        throw config_error("seed_genome length does not match the genome layout");
    const double mutation =
        cfg.mutation_rate < 0 ? 1.0 / static_cast<double>(length) : cfg.mutation_rate;

    RunResult res;
    std::uint64_t evals = 0;
    auto evaluate = [&](const BitString& b) {
        const std::vector<double> x = space.decode(b);
        const double v = f(x);
        if (std::isnan(v)) throw evaluation_error("objective returned NaN");
        ++evals;
        return v;
    };

    std::vector<BitString> pop;
    std::vector<double> fit;
    pop.reserve(cfg.population);
    fit.reserve(cfg.population);
    for (std::size_t i = 0; i < cfg.population; ++i)
        pop.push_back(cfg.seed_genome ? *cfg.seed_genome : BitString::random(length, rng));
    std::size_t best = 0;
    for (std::size_t i = 0; i < cfg.population; ++i) {
        fit.push_back(evaluate(pop[i]));
        if (fit[i] < fit[best]) best = i;
    }
    res.best_bits = pop[best];
    res.best_point = space.decode(pop[best]);
    res.best_value = fit[best];
    res.trace.push_back({0, TraceEvent::start, cfg.genome_bits, evals, fit[best], fit[best]});

    auto tournament_pick = [&]() {
        std::size_t winner = rng.next_below(pop.size());
        for (std::size_t k = 1; k < cfg.tournament; ++k) {
            const std::size_t c = rng.next_below(pop.size());
            if (fit[c] < fit[winner]) winner = c;
        }
        return winner;
    };

    for (std::uint64_t gen = 1; evals < cfg.evaluation_budget; ++gen) {
        std::size_t elite = 0;
        for (std::size_t i = 1; i < pop.size(); ++i)
            if (fit[i] < fit[elite]) elite = i;
        std::vector<BitString> next = {pop[elite]};
        std::vector<double> next_fit = {fit[elite]};
        while (next.size() < cfg.population && evals < cfg.evaluation_budget) {
            const std::size_t a = tournament_pick();
            const std::size_t b = tournament_pick();
            BitString child = pop[a];
            if (rng.next_double() < cfg.crossover_rate) {
                const std::size_t cut = 1 + rng.next_below(length > 1 ? length - 1 : 1);
                for (std::size_t i = cut; i < length; ++i) child.set_bit(i, pop[b].bit(i));
            }
            for (std::size_t i = 0; i < length; ++i)
                if (rng.next_double() < mutation) child.flip_bit(i);
            const double v = evaluate(child);
            if (v < res.best_value) {
                res.best_value = v;
                res.best_bits = child;
                res.best_point = space.decode(child);
                res.trace.push_back({gen, TraceEvent::improve, cfg.genome_bits, evals, v, v});
            }
            next.push_back(std::move(child));
            next_fit.push_back(v);
        }
        if (next.size() < cfg.population) break;  // budget ran out mid-generation
        pop = std::move(next);
        fit = std::move(next_fit);
    }
    res.evaluations = evals;
    res.termination = Termination::budget_exhausted;
    return res;
}

// Metropolis annealing: one uniform coordinate perturbation per step,
// acceptance exp(-delta/T), geometric cooling. The initial temperature
// defaults to the value spread of up to 100 probe points (budget permitting).
inline RunResult annealing(const Objective& f, std::span<const Interval> bounds,
                           const BaselineConfig& cfg) {
    cfg.validate();
    detail::check_start(cfg.start, bounds);
    Rng rng(cfg.seed);
    const std::size_t d = bounds.size();
    RunResult res;
    std::uint64_t evals = 0;
    std::vector<double> x = cfg.start ? *cfg.start : detail::random_point(bounds, rng);
    double v = detail::eval_point(f, x, evals);
    res.best_point = x;
    res.best_value = v;
    res.trace.push_back({0, TraceEvent::start, 0, evals, v, v});

    double temp = cfg.initial_temp;
    if (temp <= 0) {
        double lo = v, hi = v;
        const std::uint64_t probes =
            std::min<std::uint64_t>(100, cfg.evaluation_budget > evals
                                             ? cfg.evaluation_budget - evals
                                             : 0);
        for (std::uint64_t i = 0; i < probes; ++i) {
            const std::vector<double> p = detail::random_point(bounds, rng);
            const double pv = detail::eval_point(f, p, evals);
            lo = std::min(lo, pv);
            hi = std::max(hi, pv);
            if (pv < res.best_value) {
                res.best_value = pv;
                res.best_point = p;
                res.trace.push_back({i + 1, TraceEvent::improve, 0, evals, pv, pv});
            }
        }
        temp = hi > lo ? hi - lo : 1.0;
    }

    std::vector<double> y = x;
    for (std::uint64_t k = res.trace.back().iteration + 1; evals < cfg.evaluation_budget; ++k) {
        const std::size_t j = d > 1 ? static_cast<std::size_t>(rng.next_below(d)) : 0;
        const double width = bounds[j].upper - bounds[j].lower;
        y = x;
        y[j] = std::clamp(x[j] + rng.next_in(-1.0, 1.0) * cfg.sa_step_fraction * width,
                          bounds[j].lower, bounds[j].upper);
        const double vy = detail::eval_point(f, y, evals);
        const double delta = vy - v;
        if (delta < 0 || rng.next_double() < std::exp(-delta / temp)) {
            x = y;
            v = vy;
            if (v < res.best_value) {
                res.best_value = v;
                res.best_point = x;
                res.trace.push_back({k, TraceEvent::improve, 0, evals, v, v});
            }
        }
        temp *= cfg.cooling;
    }
    res.evaluations = evals;
    res.termination = Termination::budget_exhausted;
    return res;
}

inline RunResult run_baseline(const Objective& f, std::span<const Interval> bounds,
                              const BaselineConfig& cfg) {
    switch (cfg.method) {
        case BaselineMethod::monte_carlo: return monte_carlo(f, bounds, cfg);
        case BaselineMethod::gradient_descent: return gradient_descent(f, bounds, cfg);
        case BaselineMethod::genetic: return genetic(f, bounds, cfg);
        case BaselineMethod::annealing: return annealing(f, bounds, cfg);
    }
    throw config_error("unknown baseline method");
}

// Ablation: the main engine with raw binary segment inversion instead of the
// Gray-domain transform. Observational; run side by side with the default.
inline MultiStartResult dgo_binary(const Objective& f, std::span<const Interval> bounds,
                                   const DgoConfig& cfg, std::span<const double> start = {}) {
    DgoConfig ablated = cfg;
    ablated.transform = ChildTransform::plain_binary;
    return multi_start(f, bounds, ablated, start);
}

}  // namespace dgo
