#pragma once

// Seeded sampling. std::mt19937_64 is fully specified by the standard, and the
// bit-to-double mapping below is fixed, so sample streams are reproducible
// across platforms and standard libraries.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace moufang {

class Sampler {
 public:
  /// Independent stream `stream` derived from `seed`.
  explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(seed ^ (0x9E3779B97F4A7C15ull * (stream + 1))) {}

  /// Uniform on [0, 1) from the top 53 bits of one engine draw.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform in the open ball of the given radius, by rejection from the cube.
  std::vector<double> in_ball(std::size_t dim, double radius) {
    std::vector<double> x(dim);
    for (;;) {
      double n2 = 0.0;
      for (auto& c : x) {
        c = uniform(-radius, radius);
        n2 += c * c;
      }
      if (n2 < radius * radius) return x;
    }
  }

  /// Uniform in the cube [-1, 1]^dim; used for tangent arguments.
  std::vector<double> in_cube(std::size_t dim) {
    std::vector<double> x(dim);
    for (auto& c : x) c = uniform(-1.0, 1.0);
    return x;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace moufang
