#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace codoa {

/// Uniform [0, 1) source for every "rand" factor in the update equations.
///
/// A seeded stream is a 64-bit Mersenne Twister; a pinned stream returns the
/// same value forever and exists so the equations can be checked by hand.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed = 0);

    /// Stream that always yields `value`, which must lie in [0, 1]. The closed
    /// upper end lets tests evaluate the equations at their extreme.
    static RandomStream pinned(double value);

    double next();

    std::uint64_t seed() const noexcept { return seed_; }
    bool is_pinned() const noexcept { return pinned_.has_value(); }

    bool operator==(const RandomStream&) const = default;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::optional<double> pinned_;
};

}  // namespace codoa
