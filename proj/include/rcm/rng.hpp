#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace rcm {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11 formulation).
// Output block i of a stream is a pure function of (key, stream, domain, i),
// so draws are reproducible under any parallel schedule and any evaluation
// order. The 64-bit master seed is the cipher key; the 128-bit counter holds
// (block index, domain, stream low, stream high).
namespace philox {

inline std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                          std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kMul0 = 0xD2511F53u;
  constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
           static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
           static_cast<std::uint32_t>(p0)};
  }
  return ctr;
}

}  // namespace philox

// Domain tags keep logically distinct draw sequences of one realization
// (coefficients vs. pair selection) on non-overlapping counters.
inline constexpr std::uint32_t kDomainCoefficients = 0;
inline constexpr std::uint32_t kDomainPairSelection = 1;
inline constexpr std::uint32_t kDomainLawSampling = 2;

class Substream {
 public:
  Substream(std::uint64_t key, std::uint64_t stream, std::uint32_t domain)
      : key_{static_cast<std::uint32_t>(key),
             static_cast<std::uint32_t>(key >> 32)},
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)),
        domain_(domain) {}

  std::uint64_t next_u64() {
    if (pos_ == 2) {
      refill();
    }
    return buf_[pos_++];
  }

  // Uniform on the open interval (0, 1); never returns an endpoint.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller on a pair of uniforms. The transform is
  // exact in distribution; callers scale by sigma afterwards, which keeps
  // streams at different ensemble scales proportional draw by draw.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // Uniform integer in [0, bound); single fixed-width multiply-high draw
  // (bias below bound / 2^64).
  std::uint64_t next_below(std::uint64_t bound) {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<u128>(next_u64()) * bound) >> 64);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  void refill() {
    const auto words = philox::block({block_, domain_, stream_lo_, stream_hi_}, key_);
    buf_[0] = (std::uint64_t{words[1]} << 32) | words[0];
    buf_[1] = (std::uint64_t{words[3]} << 32) | words[2];
    ++block_;
    pos_ = 0;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint32_t stream_lo_;
  std::uint32_t stream_hi_;
  std::uint32_t domain_;
  std::uint32_t block_ = 0;
  std::array<std::uint64_t, 2> buf_{};
  int pos_ = 2;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rcm
