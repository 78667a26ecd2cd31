#include "codoa/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "codoa/errors.hpp"

namespace codoa::bench {

double booth(double x, double y)
{
    const double a = x + 2.0 * y - 7.0;
    const double b = 2.0 * x + y - 5.0;
    return a * a + b * b;
}

double beale(double x, double y)
{
    const double a = 1.5 - x + x * y;
    const double b = 2.25 - x + x * y * y;
    const double c = 2.625 - x + x * y * y * y;
    return a * a + b * b + c * c;
}

double goldstein_price(double x, double y)
{
    const double s = x + y + 1.0;
    const double t = 2.0 * x - 3.0 * y;
    const double first = 1.0 + s * s * (19.0 - 14.0 * x + 3.0 * x * x - 14.0 * y + 6.0 * x * y + 3.0 * y * y);
    const double second =
        30.0 + t * t * (18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y - 36.0 * x * y + 27.0 * y * y);
    return first * second;
}

double mccormick(double x, double y)
{
    const double diff = x - y;
    return std::sin(x + y) + diff * diff - 1.5 * x + 2.5 * y + 1.0;
}

double three_hump_camel(double x, double y)
{
    const double x2 = x * x;
    return 2.0 * x2 - 1.05 * x2 * x2 + x2 * x2 * x2 / 6.0 + x * y + y * y;
}

double sphere(std::span<const double> x)
{
    if (x.empty())
        throw InputError("sphere: empty input vector");
    double sum = 0.0;
    for (double v : x)
        sum += v * v;
    return sum;
}

double rosenbrock(std::span<const double> x)
{
    if (x.size() < 2)
        throw InputError("rosenbrock: needs at least 2 coordinates");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

bool BenchmarkSpec::accepts_dimension(std::size_t n) const noexcept
{
    if (fixed_dimension)
        return n == *fixed_dimension;
    return n >= min_dimension;
}

std::vector<double> BenchmarkSpec::minimizer(std::size_t n) const
{
    if (fixed_dimension)
        return known_minimizer;
    return std::vector<double>(n, known_minimizer.front());
}

Interval BenchmarkSpec::bounds(std::size_t coordinate) const
{
    return fixed_dimension ? domain.at(coordinate) : domain.front();
}

namespace {

std::vector<BenchmarkSpec> build_registry()
{
    std::vector<BenchmarkSpec> specs;
    auto add_2d = [&](std::string name, std::string display, Interval dx, Interval dy, double fmin,
                      std::vector<double> xmin, double tol = 1e-9) {
        specs.push_back({std::move(name), std::move(display), 2, 2, {dx, dy}, fmin, std::move(xmin), tol});
    };
    add_2d("booth", "Booth's", {-10, 10}, {-10, 10}, 0.0, {1.0, 3.0});
    add_2d("beale", "Beale's", {-4.5, 4.5}, {-4.5, 4.5}, 0.0, {3.0, 0.5});
    add_2d("goldstein_price", "Goldstein-Price", {-2, 2}, {-2, 2}, 3.0, {0.0, -1.0});
    // published optimum is rounded to 5 (position) and 4 (value) decimals
    add_2d("mccormick", "McCormick", {-1.5, 4}, {-3, 4}, -1.9133, {-0.54719, -1.54719}, 1e-4);
    add_2d("three_hump_camel", "Three-hump camel", {-5, 5}, {-5, 5}, 0.0, {0.0, 0.0});
    specs.push_back({"sphere", "Sphere", std::nullopt, 1, {{-100, 100}}, 0.0, {0.0}, 1e-9});
    specs.push_back({"rosenbrock", "Rosenbrock", std::nullopt, 2, {{-30, 30}}, 0.0, {1.0}, 1e-9});
    return specs;
}

std::string normalize(std::string_view name)
{
    std::string out(name);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return c == '-' ? '_' : static_cast<char>(std::tolower(c));
    });
    return out;
}

Objective objective_for(const std::string& name)
{
    auto two = [](double (*f)(double, double)) {
        return Objective([f](std::span<const double> v) { return f(v[0], v[1]); });
    };
    if (name == "booth")
        return two(booth);
    if (name == "beale")
        return two(beale);
    if (name == "goldstein_price")
        return two(goldstein_price);
    if (name == "mccormick")
        return two(mccormick);
    if (name == "three_hump_camel")
        return two(three_hump_camel);
    if (name == "sphere")
        return [](std::span<const double> v) { return sphere(v); };
    return [](std::span<const double> v) { return rosenbrock(v); };
}

}  // namespace

std::span<const BenchmarkSpec> registry()
{
    static const std::vector<BenchmarkSpec> specs = build_registry();
    return specs;
}

const BenchmarkSpec* find_benchmark(std::string_view name)
{
    const std::string key = normalize(name);
    for (const BenchmarkSpec& spec : registry()) {
        if (spec.name == key)
            return &spec;
    }
    return nullptr;
}

ObjectiveProblem make_problem(std::string_view name, std::size_t dimension)
{
    const BenchmarkSpec* spec = find_benchmark(name);
    if (!spec)
        throw ConfigError("function: unknown benchmark '" + std::string(name) + "'");
    if (!spec->accepts_dimension(dimension)) {
        const std::string allowed = spec->fixed_dimension ? "exactly " + std::to_string(*spec->fixed_dimension)
                                                          : "at least " + std::to_string(spec->min_dimension);
        throw ConfigError("dimension: " + spec->name + " requires " + allowed + ", got " +
                          std::to_string(dimension));
    }

    ObjectiveProblem problem;
    problem.name = spec->name;
    problem.lower_bounds.resize(dimension);
    problem.upper_bounds.resize(dimension);
    for (std::size_t d = 0; d < dimension; ++d) {
        const Interval iv = spec->bounds(d);
        problem.lower_bounds[d] = iv.lower;
        problem.upper_bounds[d] = iv.upper;
    }
    problem.evaluator = objective_for(spec->name);
    problem.known_minimum_value = spec->known_minimum_value;
    problem.known_minimizer = spec->minimizer(dimension);
    problem.optimum_tolerance = spec->optimum_tolerance;
    return problem;
}

}  // namespace codoa::bench
