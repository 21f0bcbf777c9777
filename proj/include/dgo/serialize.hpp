#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgo/core.hpp"

namespace dgo {

// Full-precision, locale-independent float formatting shared by every writer.
inline std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_point(std::span<const double> x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ',';
        s += format_full(x[i]);
    }
    return s;
}

// One completed optimization run as the harness reports it. The TSV writers
// below are byte-stable across reruns (wall time appears only in the JSON
// lines output, which is informational).
struct RunRecord {
    std::string objective;
    std::string optimizer;
    std::uint64_t seed = 0;
    unsigned repetition = 0;
    std::size_t dimension = 0;
    double best_value = 0.0;
    double distance_to_optimum = 0.0;  // NaN when the objective has no known optimum
    std::uint64_t evaluations = 0;
    std::string termination;
    std::vector<double> best_point;
    double wall_ms = 0.0;
    std::vector<IterationRecord> trace;
};

inline constexpr const char* kResultsHeader =
    "objective\toptimizer\tseed\trepetition\tdimension\tbest_value\t"
    "distance_to_optimum\tevaluations\ttermination\tbest_point";

inline void write_results_tsv(std::ostream& out, std::span<const RunRecord> records,
                              bool header = true) {
    if (header) out << kResultsHeader << '\n';
    for (const RunRecord& r : records) {
        out << r.objective << '\t' << r.optimizer << '\t' << r.seed << '\t' << r.repetition
            << '\t' << r.dimension << '\t' << format_full(r.best_value) << '\t'
            << format_full(r.distance_to_optimum) << '\t' << r.evaluations << '\t'
            << r.termination << '\t' << format_point(r.best_point) << '\n';
    }
}

inline constexpr const char* kTraceHeader =
    "objective\toptimizer\tseed\trepetition\titeration\tevent\tresolution_bits\t"
    "evaluations\tparent_value\tbest_value";

inline void write_trace_tsv(std::ostream& out, std::span<const RunRecord> records,
                            bool header = true) {
    if (header) out << kTraceHeader << '\n';
    for (const RunRecord& r : records) {
        for (const IterationRecord& t : r.trace) {
            out << r.objective << '\t' << r.optimizer << '\t' << r.seed << '\t' << r.repetition
                << '\t' << t.iteration << '\t' << to_string(t.event) << '\t'
                << t.resolution_bits << '\t' << t.evaluations << '\t'
                << format_full(t.parent_value) << '\t' << format_full(t.best_value) << '\n';
        }
    }
}

// JSON Lines: one self-describing object per run, append-safe. Carries the
// informational wall_time_ms field that the TSV deliberately omits.
inline void write_results_jsonl(std::ostream& out, std::span<const RunRecord> records) {
    for (const RunRecord& r : records) {
        nlohmann::json j;
        j["objective"] = r.objective;
        j["optimizer"] = r.optimizer;
        j["seed"] = r.seed;
        j["repetition"] = r.repetition;
        j["dimension"] = r.dimension;
        j["best_value"] = r.best_value;
        if (std::isnan(r.distance_to_optimum))
            j["distance_to_optimum"] = nullptr;
        else
            j["distance_to_optimum"] = r.distance_to_optimum;
        j["evaluations"] = r.evaluations;
        j["termination"] = r.termination;
        j["best_point"] = r.best_point;
        j["wall_time_ms"] = r.wall_ms;
        nlohmann::json trace = nlohmann::json::array();
        for (const IterationRecord& t : r.trace) {
            trace.push_back({{"iteration", t.iteration},
                             {"event", to_string(t.event)},
                             {"resolution_bits", t.resolution_bits},
                             {"evaluations", t.evaluations},
                             {"parent_value", t.parent_value},
                             {"best_value", t.best_value}});
        }
        j["trace"] = std::move(trace);
        out << j.dump() << '\n';
    }
}

}  // namespace dgo
