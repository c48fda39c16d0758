#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace bclab {

/// Deterministic random stream. All randomness in the lab flows from one
/// root seed through named sub-streams so runs replay bit-identically and
/// components (data, poison selection, init, batching) are independently
/// reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Derives an independent stream from (root_seed, stream name).
  static Rng sub(std::uint64_t root_seed, std::string_view stream);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal via Box-Muller (explicit so the sequence is pinned,
  /// not left to the standard library's unspecified algorithm).
  double normal();
  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n);

  void shuffle(std::vector<std::size_t>& items);

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// FNV-1a over a byte string; used for stream derivation and config hashing.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace bclab
