#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "rcm/rng.hpp"

namespace {

using rcm::Substream;

}  // namespace

TEST_CASE("philox known-answer vectors") {
  // Published 10-round test vectors for the 4x32 configuration.
  const std::uint32_t all_ones = 0xFFFFFFFFu;

  auto out = rcm::philox::block({0, 0, 0, 0}, {0, 0});
  CHECK(out == std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});

  out = rcm::philox::block({all_ones, all_ones, all_ones, all_ones}, {all_ones, all_ones});
  CHECK(out == std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});

  out = rcm::philox::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                           {0xa4093822u, 0x299f31d0u});
  CHECK(out == std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("substreams are deterministic and independent of construction order") {
  Substream a(42, 7, 0);
  std::vector<std::uint64_t> first;
  for (int i = 0; i < 32; ++i) {
    first.push_back(a.next_u64());
  }
  Substream b(42, 7, 0);
  for (int i = 0; i < 32; ++i) {
    CHECK(b.next_u64() == first[i]);
  }

  Substream other_stream(42, 8, 0);
  Substream other_domain(42, 7, 1);
  Substream other_key(43, 7, 0);
  CHECK(other_stream.next_u64() != first[0]);
  CHECK(other_domain.next_u64() != first[0]);
  CHECK(other_key.next_u64() != first[0]);
}

TEST_CASE("uniform draws stay strictly inside (0, 1)") {
  Substream s(1, 0, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = s.next_uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("gaussian draws have standard moments") {
  Substream s(2024, 0, 0);
  const int n = 200000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = s.next_gaussian();
    sum += g;
    sum_sq += g * g;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) < 3.0 / std::sqrt(static_cast<double>(n)));
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("bounded draws cover [0, bound) uniformly") {
  Substream s(7, 3, 1);
  std::array<int, 5> counts{};
  const int n = 50000;
  for (int i = 0; i < n; ++i) {
    const auto v = s.next_below(5);
    REQUIRE(v < 5);
    ++counts[v];
  }
  for (int c : counts) {
    CHECK(c == doctest::Approx(n / 5.0).epsilon(0.05));
  }
}
