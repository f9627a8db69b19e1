#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcp {

/// Root seed plus the labels used to derive it. Streams depend only on value();
/// the path is kept for diagnostics and reproduction messages.
class Seed {
 public:
  Seed() = default;
  explicit Seed(std::uint64_t value) : value_(value) {}

  std::uint64_t value() const noexcept { return value_; }
  const std::vector<std::string>& path() const noexcept { return path_; }

  Seed derive(std::string_view label) const { return derive(label, 0); }

  Seed derive(std::string_view label, std::uint64_t index) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the label
    for (unsigned char c : label) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    Seed child(mix(mix(value_ ^ h) + index));
    child.path_ = path_;
    child.path_.push_back(std::string(label) + ":" + std::to_string(index));
    return child;
  }

  std::string describe() const {
    std::string s = std::to_string(value_);
    for (const auto& p : path_) s += "/" + p;
    return s;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t value_ = 0;
  std::vector<std::string> path_;
};

/// Portable random stream: the engine is fully specified by the standard and the
/// distributions below are implemented here, so output is identical across toolchains.
class Rng {
 public:
  explicit Rng(const Seed& seed) : engine_(seed.value()) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(engine_()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bcp
