#pragma once

#include <cstdint>
#include <random>

namespace rmt {

/// Reproducible random source identified by (seed, stream). Monte-Carlo
/// trials use stream = trial index so results do not depend on how trials
/// are scheduled across threads.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    double normal() { return normal_(engine_); }
    /// Uniform on the open interval (0, 1).
    double uniform();

    /// Gamma(shape, scale 1) by Marsaglia-Tsang squeeze/rejection; shape > 0.
    double gamma(double shape);

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

}  // namespace rmt
