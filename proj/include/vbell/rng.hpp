#pragma once

#include <cstdint>

namespace vbell
{
/*!
 * Counter-based generator built on the SplitMix64 output function.
 *
 * The n-th draw of stream s under seed k is mix(k, s, n), so any draw of
 * any stream can be reproduced without replaying the others. Streams are
 * used as independent, platform-stable sources for optimizer restarts.
 */
class CounterRng
{
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(seed ^ mix(stream + 0x6a09e667f3bcc909ull)))
    {
    }

    std::uint64_t next() { return mix(key_ + golden_gamma * ++counter_); }

    //! Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    std::uint64_t counter() const { return counter_; }

    //! SplitMix64 finalizer.
    static constexpr std::uint64_t mix(std::uint64_t z)
    {
        z += golden_gamma;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    static constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ull;

    std::uint64_t key_;
    std::uint64_t counter_{0};
};

}  // namespace vbell
