#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace urn {

// Reproducible pseudo-random stream: xoshiro256++ with its 256-bit state
// derived by splitmix64 from the pair (master_seed, stream_index).
// Identical pairs give identical sequences; distinct stream indices give
// streams that are independent for simulation purposes.
//
// Replacing the generator invalidates recorded trajectories and needs a
// changelog entry; tests assert sampled frequencies, not raw words.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}

  RngStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept {
    // splitmix64 counter opened at a point determined by the pair
    std::uint64_t c = mix(master_seed) + kGolden * stream_index;
    for (auto& word : state_) {
      c += kGolden;
      word = mix(c);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::array<std::uint64_t, 4> state_;
};

}  // namespace urn
