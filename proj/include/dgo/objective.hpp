#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dgo/encoding.hpp"

namespace dgo {

// A bounded-box minimization target. eval must be pure (same input, same
// output) and total on the box. optima holds the known global minimizers when
// there are any; all entries share objective value optimum_value.
struct Objective {
    std::string name;
    std::size_t dimension = 0;
    std::vector<Interval> bounds;
    std::function<double(std::span<const double>)> eval;
    std::vector<std::vector<double>> optima;
    std::optional<double> optimum_value;

    double operator()(std::span<const double> x) const { return eval(x); }

    // Euclidean distance to the nearest known minimizer; NaN when none stored.
    double distance_to_optimum(std::span<const double> x) const {
        if (optima.empty()) return std::numeric_limits<double>::quiet_NaN();
        double best = std::numeric_limits<double>::infinity();
        for (const std::vector<double>& o : optima) {
            double d2 = 0.0;
            for (std::size_t i = 0; i < o.size(); ++i) {
                const double d = x[i] - o[i];
                d2 += d * d;
            }
            if (d2 < best) best = d2;
        }
        return std::sqrt(best);
    }
};

}  // namespace dgo
