#include "codoa/random.hpp"

#include <stdexcept>

namespace codoa {

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

RandomStream RandomStream::pinned(double value)
{
    if (!(value >= 0.0 && value <= 1.0))
        throw std::invalid_argument("pinned random value must lie in [0, 1]");
    RandomStream stream(0);
    stream.pinned_ = value;
    return stream;
}

double RandomStream::next()
{
    if (pinned_)
        return *pinned_;
    // top 53 bits -> [0, 1) with exact dyadic spacing
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace codoa
