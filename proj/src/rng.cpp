#include "bclab/rng.hpp"

#include <cmath>

namespace bclab {

namespace {

// splitmix64; a full-period mixer that turns any seed into a usable stream.
std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rng::Rng(std::uint64_t seed) : state_(seed) {
  // Warm up so nearby seeds diverge immediately.
  for (int i = 0; i < 4; ++i) (void)splitmix64(state_);
}

Rng Rng::sub(std::uint64_t root_seed, std::string_view stream) {
  return Rng(root_seed ^ fnv1a64(stream));
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform() {
  // 53 random bits -> [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

std::size_t Rng::index(std::size_t n) {
  // Rejection-free modulo is fine here: n is tiny relative to 2^64.
  return static_cast<std::size_t>(next_u64() % static_cast<std::uint64_t>(n));
}

void Rng::shuffle(std::vector<std::size_t>& items) {
  if (items.empty()) return;
  for (std::size_t i = items.size() - 1; i > 0; --i) {
    std::size_t j = index(i + 1);
    std::swap(items[i], items[j]);
  }
}

}  // namespace bclab
