#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace pathlab {

std::uint64_t splitmix64(std::uint64_t x);

// Stream derivation: substreams (driving noise, mixing component, jumps, ...)
// are seeded as splitmix64(master ^ fnv1a(tag)), so swapping one component
// never disturbs another. Ensemble member i uses derive_seed(master, i).
std::uint64_t fnv1a(std::string_view s);
std::uint64_t derive_stream(std::uint64_t master, std::string_view tag);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// mt19937_64 with explicit uniform/gaussian mappings so the byte stream is
// pinned by this code, not by library internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // uniform on (0,1); never returns an exact endpoint
  double uniform() {
    return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // standard normal via Box-Muller, spare value cached
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace pathlab
