#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codoa/problem.hpp"

namespace codoa::bench {

double booth(double x, double y);
double beale(double x, double y);
double goldstein_price(double x, double y);
double mccormick(double x, double y);
double three_hump_camel(double x, double y);

/// Sum of squares. Throws InputError on an empty vector.
double sphere(std::span<const double> x);

/// Throws InputError when x has fewer than two coordinates.
double rosenbrock(std::span<const double> x);

struct Interval {
    double lower;
    double upper;
};

struct BenchmarkSpec {
    std::string name;
    std::string display_name;
    // set for the two-variable functions; empty means any n >= min_dimension
    std::optional<std::size_t> fixed_dimension;
    std::size_t min_dimension = 2;
    // one interval per coordinate for fixed-dimension functions,
    // a single interval replicated per coordinate otherwise
    std::vector<Interval> domain;
    double known_minimum_value = 0.0;
    // full minimizer for fixed-dimension functions, one repeated coordinate otherwise
    std::vector<double> known_minimizer;
    double optimum_tolerance = 1e-9;

    bool accepts_dimension(std::size_t n) const noexcept;
    std::vector<double> minimizer(std::size_t n) const;
    Interval bounds(std::size_t coordinate) const;
};

/// The seven registered functions in table order.
std::span<const BenchmarkSpec> registry();

/// nullptr when `name` is not registered. Hyphens match underscores.
const BenchmarkSpec* find_benchmark(std::string_view name);

/// Throws ConfigError naming the function or the dimension.
ObjectiveProblem make_problem(std::string_view name, std::size_t dimension);

}  // namespace codoa::bench
