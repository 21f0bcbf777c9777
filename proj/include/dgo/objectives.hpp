#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgo/errors.hpp"
#include "dgo/objective.hpp"
#include "dgo/rng.hpp"

namespace dgo {

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

inline double f2_formula(double x) { return std::sin(x) + std::sin(2.0 * x / 3.0); }

inline double f3_formula(double x) {
    double s = 0.0;
    for (int k = 2; k <= 6; ++k) s += std::sin(k * x + (k - 1));
    return -s;
}

inline double camel6_formula(double x, double y) {
    return (4.0 - 2.1 * x * x + x * x * x * x / 3.0) * x * x + x * y +
           (-4.0 + 4.0 * y * y) * y * y;
}

inline double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

// 2-2-1 fully connected sigmoid network. Weight layout:
// [w_ih (2x2, row per hidden unit), b_h (2), w_ho (2), b_o]. Returns the
// summed squared error over the four XOR patterns with {0,1} targets.
inline double xor_error(std::span<const double> w) {
    assert(w.size() == 9);
    static constexpr double patterns[4][3] = {
        {0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    double err = 0.0;
    for (const auto& p : patterns) {
        const double h0 = sigmoid(w[0] * p[0] + w[1] * p[1] + w[4]);
        const double h1 = sigmoid(w[2] * p[0] + w[3] * p[1] + w[5]);
        const double out = sigmoid(w[6] * h0 + w[7] * h1 + w[8]);
        err += (p[2] - out) * (p[2] - out);
    }
    return err;
}

// Shift vector for the synthetic high-dimensional objective; deterministic in
// (dimension, seed) and independent of any optimizer RNG stream.
inline std::vector<double> highdim_shift(std::size_t dimension, std::uint64_t seed) {
    Rng rng(mix64(seed));
    std::vector<double> s(dimension);
    for (double& v : s) v = rng.next_in(-2.56, 2.56);
    return s;
}

// Shifted Rastrigin sum: sum_i [(x_i - s_i)^2 - 10 cos(2 pi (x_i - s_i)) + 10].
inline double rastrigin_shifted(std::span<const double> x, std::span<const double> shift) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double z = x[i] - shift[i];
        s += z * z - 10.0 * std::cos(2.0 * std::numbers::pi * z) + 10.0;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Registered objectives
// ---------------------------------------------------------------------------
// Minimizer constants below are Newton-polished roots of the respective
// gradients, cross-checked by dense grid scans in the test suite.

inline Objective make_quadratic_1d(double c = 3.0) {
    return {"quadratic_1d",
            1,
            {{0.0, 10.0}},
            [c](std::span<const double> x) { return (x[0] - c) * (x[0] - c); },
            {{c}},
            0.0};
}

inline Objective make_f2() {
    return {"f2_1d",
            1,
            {{3.1, 20.4}},
            [](std::span<const double> x) { return f2_formula(x[0]); },
            {{17.039198947601760}},
            -1.9059611187157852};
}

inline Objective make_f3() {
    // Three equal-valued global minima on [-10, 10], exactly 2 pi apart.
    return {"f3_1d",
            1,
            {{-10.0, 10.0}},
            [](std::span<const double> x) { return f3_formula(x[0]); },
            {{-6.7200374873739839}, {-0.43685218019439744}, {5.8463331269851890}},
            -3.3728978728299739};
}

inline Objective make_camel6() {
    return {"camel6_2d",
            2,
            {{-3.0, 3.0}, {-2.0, 2.0}},
            [](std::span<const double> x) { return camel6_formula(x[0], x[1]); },
            {{0.089842013100318062, -0.71265640302073963},
             {-0.089842013100318062, 0.71265640302073963}},
            -1.0316284534898774};
}

inline Objective make_sphere_2d() {
    return {"sphere_2d",
            2,
            {{-5.12, 5.12}, {-5.12, 5.12}},
            [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; },
            {{0.0, 0.0}},
            0.0};
}

inline Objective make_xor() {
    // The infimum 0 is not attained for finite weights, so no optimum is
    // registered; runs are scored by raw error instead of distance.
    std::vector<Interval> box(9, Interval{-20.0, 20.0});
    return {"xor", 9, std::move(box),
            [](std::span<const double> w) { return xor_error(w); },
            {},
            std::nullopt};
}

inline constexpr std::uint64_t kHighdimShiftSeed = 77;

inline Objective make_synthetic_highdim(std::size_t dimension = 100,
                                        std::uint64_t shift_seed = kHighdimShiftSeed) {
    if (dimension < 1) throw config_error("synthetic_highdim needs dimension >= 1");
    std::vector<Interval> box(dimension, Interval{-5.12, 5.12});
    std::vector<double> shift = highdim_shift(dimension, shift_seed);
    std::vector<std::vector<double>> optima = {shift};
    return {"synthetic_highdim",
            dimension,
            std::move(box),
            [shift = std::move(shift)](std::span<const double> x) {
                return rastrigin_shifted(x, shift);
            },
            std::move(optima),
            0.0};
}

inline const std::vector<Objective>& objective_registry() {
    static const std::vector<Objective> objectives = {
        make_quadratic_1d(), make_f2(),     make_f3(),
        make_camel6(),       make_sphere_2d(), make_xor(),
        make_synthetic_highdim(),
    };
    return objectives;
}

inline std::vector<std::string> objective_names() {
    std::vector<std::string> names;
    for (const Objective& o : objective_registry()) names.push_back(o.name);
    return names;
}

inline const Objective& find_objective(std::string_view name) {
    for (const Objective& o : objective_registry())
        if (o.name == name) return o;
    throw config_error("unknown objective: " + std::string(name));
}

}  // namespace dgo
