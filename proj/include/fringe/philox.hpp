#pragma once

#include <array>
#include <cstdint>

namespace fringe {

/// Name recorded in run metadata so an independent implementation can
/// reproduce the draw sequence from (seed, stream_index) alone.
inline constexpr const char* kGeneratorId = "philox4x32-10";

/// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
/// numbers: as easy as 1, 2, 3", SC 2011). The 64-bit key holds the seed;
/// counter words 0..1 hold the block number and words 2..3 the stream index.
/// Every 128-bit output block is a pure function of (seed, stream, block).
class Philox4x32 {
 public:
  Philox4x32(std::uint64_t seed, std::uint64_t stream_index)
      : key_lo_(static_cast<std::uint32_t>(seed)),
        key_hi_(static_cast<std::uint32_t>(seed >> 32)),
        stream_lo_(static_cast<std::uint32_t>(stream_index)),
        stream_hi_(static_cast<std::uint32_t>(stream_index >> 32)) {}

  std::array<std::uint32_t, 4> block(std::uint64_t block_index) const {
    std::array<std::uint32_t, 4> counter{
        static_cast<std::uint32_t>(block_index),
        static_cast<std::uint32_t>(block_index >> 32), stream_lo_, stream_hi_};
    std::uint32_t k0 = key_lo_;
    std::uint32_t k1 = key_hi_;
    for (int round = 0; round < 10; ++round) {
      counter = single_round(counter, k0, k1);
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    return counter;
  }

  /// Two uniform doubles in [0, 1) per block, each from the top 53 bits of a
  /// 64-bit lane: lane0 = out[0]:out[1], lane1 = out[2]:out[3].
  std::array<double, 2> uniforms(std::uint64_t block_index) const {
    const auto out = block(block_index);
    const auto lane0 = (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
    const auto lane1 = (static_cast<std::uint64_t>(out[2]) << 32) | out[3];
    constexpr double scale = 1.0 / 9007199254740992.0;  // 2^-53
    return {static_cast<double>(lane0 >> 11) * scale,
            static_cast<double>(lane1 >> 11) * scale};
  }

 private:
  static std::array<std::uint32_t, 4> single_round(
      std::array<std::uint32_t, 4> c, std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = 0xD2511F53ull * c[0];
    const std::uint64_t p1 = 0xCD9E8D57ull * c[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    return {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
  }

  std::uint32_t key_lo_, key_hi_, stream_lo_, stream_hi_;
};

/// Sequential view over a Philox stream: the i-th call to next() returns
/// uniform draw i, independent of how calls are batched.
class UniformStream {
 public:
  UniformStream(std::uint64_t seed, std::uint64_t stream_index)
      : engine_(seed, stream_index) {}

  double next() {
    const std::uint64_t index = draw_index_++;
    return engine_.uniforms(index / 2)[index % 2];
  }

 private:
  Philox4x32 engine_;
  std::uint64_t draw_index_ = 0;
};

}  // namespace fringe
