#pragma once

#include <cstdint>

#include "scatter/vec3.hpp"

namespace scatter::numerics {

// Counter-based pseudorandom stream.  Identical (seed, stream_id) pairs
// produce identical sequences on every platform: the generator is pure
// 64-bit integer arithmetic and the normal variates use an explicit
// Box-Muller transform rather than library distributions.
class SeededStream {
  public:
    SeededStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t next_u64();

    // Uniform in [0, 1).
    double uniform();

    // Standard normal.
    double normal();

    // Three independent normals with the given per-component sigma.
    Vec3 normal3(double sigma);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace scatter::numerics
