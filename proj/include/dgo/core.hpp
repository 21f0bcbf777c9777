#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dgo/bitstring.hpp"
#include "dgo/encoding.hpp"
#include "dgo/errors.hpp"
#include "dgo/objective.hpp"
#include "dgo/rng.hpp"

namespace dgo {

struct DgoConfig {
    unsigned initial_bits = 8;         // per-variable starting resolution
    unsigned max_bits = 32;            // per-variable final resolution
    unsigned starts = 1;               // multi-start count
    std::uint64_t seed = 0;
    std::uint64_t max_iterations = 100000;  // dgo_step calls per start (safety net)
    bool deterministic_refine = false;      // zero-append instead of random bits
    std::uint64_t max_evaluations = 0;      // per start; 0 means uncapped
    unsigned threads = 1;                   // child evaluations per step run on this many threads
    ChildTransform transform = ChildTransform::gray_code;

    void validate() const {
        if (initial_bits < 1 || initial_bits > 64)
            throw config_error("initial_bits must be in [1, 64]");
        if (max_bits < initial_bits || max_bits > 64)
            throw config_error("max_bits must be in [initial_bits, 64]");
        unsigned w = initial_bits;
        while (w < max_bits) w *= 2;
        if (w != max_bits)
            throw config_error("max_bits must be initial_bits times a power of two");
        if (starts < 1) throw config_error("starts must be at least 1");
        if (max_iterations < 1) throw config_error("max_iterations must be at least 1");
        if (threads < 1) throw config_error("threads must be at least 1");
    }
};

enum class TraceEvent { start, improve, refine };

inline const char* to_string(TraceEvent e) {
    switch (e) {
        case TraceEvent::start: return "start";
        case TraceEvent::improve: return "improve";
        case TraceEvent::refine: return "refine";
    }
    return "?";
}

struct IterationRecord {
    std::uint64_t iteration;      // dgo_step calls completed when the event fired
    TraceEvent event;
    unsigned resolution_bits;     // per-variable width in effect after the event
    std::uint64_t evaluations;    // cumulative objective calls
    double parent_value;          // value of the current parent after the event
    double best_value;            // running best across the whole start

    friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

enum class Termination {
    max_resolution_converged,  // no strictly better child at max_bits
    iteration_cap,             // step or evaluation cap reached
    budget_exhausted,          // baseline spent its evaluation budget
    gradient_converged,        // baseline gradient norm fell below threshold
};

inline const char* to_string(Termination t) {
    switch (t) {
        case Termination::max_resolution_converged: return "max_resolution_converged";
        case Termination::iteration_cap: return "iteration_cap";
        case Termination::budget_exhausted: return "budget_exhausted";
        case Termination::gradient_converged: return "gradient_converged";
    }
    return "?";
}

struct RunResult {
    std::vector<double> best_point;
    double best_value = std::numeric_limits<double>::quiet_NaN();
    BitString best_bits;               // encoding of best_point at the width it was found
    std::vector<IterationRecord> trace;
    std::uint64_t evaluations = 0;
    Termination termination = Termination::iteration_cap;
};

struct MultiStartResult {
    std::vector<RunResult> runs;
    std::size_t best_index = 0;
    std::uint64_t total_evaluations = 0;

    const RunResult& best() const { return runs[best_index]; }
};

struct StepImprovement {
    BitString child;
    double value;
    std::size_t child_index;  // segment enumeration index of the winning child
};

namespace detail {

inline double eval_checked(const Objective& f, const SearchSpace& space, const BitString& b,
                           std::size_t child_index) {
    const std::vector<double> x = space.decode(b);
    const double v = f(x);
    if (std::isnan(v))
        throw evaluation_error("objective returned NaN", child_index);
    return v;
}

// Values for all children, written into fixed slots so the result does not
// depend on evaluation order or thread count.
inline std::vector<double> eval_children(const Objective& f, const SearchSpace& space,
                                         const std::vector<BitString>& children,
                                         unsigned threads) {
    std::vector<double> vals(children.size());
    if (threads <= 1 || children.size() < 2) {
        for (std::size_t i = 0; i < children.size(); ++i)
            vals[i] = eval_checked(f, space, children[i], i);
        return vals;
    }
    const std::size_t workers = std::min<std::size_t>(threads, children.size());
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::size_t> error_index(workers, evaluation_error::npos);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < children.size() && !errors[t]; i += workers) {
                try {
                    vals[i] = eval_checked(f, space, children[i], i);
                } catch (...) {
                    errors[t] = std::current_exception();
                    error_index[t] = i;
                }
            }
        });
    }
    for (std::thread& th : pool) th.join();
    std::size_t first = evaluation_error::npos;
    std::size_t who = workers;
    for (std::size_t t = 0; t < workers; ++t) {
        if (errors[t] && error_index[t] < first) {
            first = error_index[t];
            who = t;
        }
    }
    if (who != workers) std::rethrow_exception(errors[who]);
    return vals;
}

}  // namespace detail

// One generation: evaluate all 2n-1 children of the parent and return the
// best strict improvement, ties broken by lowest segment enumeration index.
// nullopt when no child beats parent_value.
inline std::optional<StepImprovement> dgo_step(const BitString& parent, double parent_value,
                                               const SearchSpace& space, const Objective& f,
                                               unsigned threads = 1,
                                               ChildTransform transform = ChildTransform::gray_code) {
    std::vector<BitString> children = generate_children(parent, transform);
    const std::vector<double> vals = detail::eval_children(f, space, children, threads);
    std::size_t best = vals.size();
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (vals[i] < parent_value && (best == vals.size() || vals[i] < vals[best])) best = i;
    if (best == vals.size()) return std::nullopt;
    return StepImprovement{std::move(children[best]), vals[best], best};
}

// The main loop: descend with dgo_step until no child improves, then double
// the resolution and continue; stop when the finest level is converged or a
// cap is hit. After each refinement the refined parent is re-evaluated and
// becomes the new improvement threshold (the appended low bits shift the
// decoded point, so the coarse value is stale); the overall best is tracked
// separately and is what the result reports.
inline RunResult optimize(const Objective& f, std::span<const Interval> bounds,
                          const DgoConfig& cfg, std::span<const double> start = {}) {
    cfg.validate();
    if (bounds.empty()) throw config_error("at least one variable is required");
    if (f.dimension != bounds.size())
        throw config_error("objective dimension does not match bounds");
    if (!start.empty() && start.size() != bounds.size())
        throw config_error("start point dimension does not match bounds");
    if (bounds.size() * cfg.max_bits > 4096)
        throw config_error("total bit length at max_bits exceeds the 4096-bit cap");

    Rng rng(cfg.seed);
    SearchSpace space = SearchSpace::uniform(bounds, cfg.initial_bits);
    BitString parent = start.empty() ? BitString::random(space.total_bits(), rng)
                                     : space.encode_nearest(start);

    RunResult res;
    std::uint64_t evaluations = 0;
    std::uint64_t steps = 0;

    double parent_value = detail::eval_checked(f, space, parent, evaluation_error::npos);
    ++evaluations;
    double best_value = parent_value;
    BitString best_bits = parent;
    std::vector<double> best_point = space.decode(parent);
    res.trace.push_back({steps, TraceEvent::start, cfg.initial_bits, evaluations,
                         parent_value, best_value});

    Termination termination = Termination::iteration_cap;
    for (;;) {
        const std::uint64_t step_cost = 2 * space.total_bits() - 1;
        if (steps >= cfg.max_iterations ||
            (cfg.max_evaluations != 0 && evaluations + step_cost > cfg.max_evaluations)) {
            termination = Termination::iteration_cap;
            break;
        }
        std::optional<StepImprovement> imp =
            dgo_step(parent, parent_value, space, f, cfg.threads, cfg.transform);
        ++steps;
        evaluations += step_cost;
        const unsigned width = space.variables()[0].bits;
        if (imp) {
            parent = std::move(imp->child);
            parent_value = imp->value;
            if (parent_value < best_value) {
                best_value = parent_value;
                best_bits = parent;
                best_point = space.decode(parent);
            }
            res.trace.push_back({steps, TraceEvent::improve, width, evaluations,
                                 parent_value, best_value});
            continue;
        }
        if (width >= cfg.max_bits) {
            termination = Termination::max_resolution_converged;
            break;
        }
        if (cfg.max_evaluations != 0 && evaluations + 1 > cfg.max_evaluations) {
            termination = Termination::iteration_cap;
            break;
        }
        auto [finer, refined] =
            refine_space(space, parent, cfg.deterministic_refine ? nullptr : &rng);
        space = std::move(finer);
        parent = std::move(refined);
        parent_value = detail::eval_checked(f, space, parent, evaluation_error::npos);
        ++evaluations;
        if (parent_value < best_value) {
            best_value = parent_value;
            best_bits = parent;
            best_point = space.decode(parent);
        }
        res.trace.push_back({steps, TraceEvent::refine, space.variables()[0].bits, evaluations,
                             parent_value, best_value});
    }

    res.best_point = std::move(best_point);
    res.best_value = best_value;
    res.best_bits = std::move(best_bits);
    res.evaluations = evaluations;
    res.termination = termination;
    return res;
}

// Independent restarts; start 0 runs with the master seed itself (so one
// start reduces to plain optimize) and later starts derive their seeds from
// (seed, start index). A user-supplied start point applies to the first start
// only. The winner is the minimal best_value, ties broken by lowest index.
inline MultiStartResult multi_start(const Objective& f, std::span<const Interval> bounds,
                                    const DgoConfig& cfg, std::span<const double> start = {}) {
    cfg.validate();
    MultiStartResult out;
    out.runs.reserve(cfg.starts);
    for (unsigned s = 0; s < cfg.starts; ++s) {
        DgoConfig one = cfg;
        one.starts = 1;
        one.seed = s == 0 ? cfg.seed : derive_seed(cfg.seed, s);
        out.runs.push_back(optimize(f, bounds, one, s == 0 ? start : std::span<const double>{}));
        out.total_evaluations += out.runs.back().evaluations;
        if (out.runs.back().best_value < out.runs[out.best_index].best_value)
            out.best_index = s;
    }
    return out;
}

}  // namespace dgo
