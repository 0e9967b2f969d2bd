#pragma once

#include <cmath>
#include <cstdint>

namespace lgpf::rng {

// splitmix64 finalizer. Bijective 64-bit mix with good avalanche; used both
// as the stream generator and to derive independent substream keys.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Derives a stream key from a user seed and up to three stream coordinates
// (purpose tag, particle index, step index, ...). Streams with distinct
// coordinates are independent, so the draw sequence of one particle/step does
// not depend on the particle count or on thread scheduling.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                               std::uint64_t c = 0) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ (a * 0xA24BAED4963EE407ull + 1));
  h = mix64(h ^ (b * 0x9FB21C651E98DF25ull + 1));
  h = mix64(h ^ (c * 0xD6E8FEB86659FD93ull + 1));
  return h;
}

// Purpose tags for the first substream coordinate.
enum StreamTag : std::uint64_t {
  kTruthInit = 1,     // X_0 draw of a truth trajectory
  kTruthProcess = 2,  // per-step dB of a truth trajectory
  kTruthObs = 3,      // per-step dW of a truth trajectory
  kEnsembleInit = 4,  // per-particle initial draw
  kEnsembleStep = 5,  // per-(particle, step) dB̄ / dW̄ draws
  kEquivInit = 6,     // X̄_0 draw of the estimator/particle equivalence check
  kEquivNoise = 7,    // per-step particle-noise draws of the same check
  kPerturbation = 8,  // control perturbations of the optimality probe
  kModelGen = 9,      // random model generation
  kDirection = 10,    // random direction vectors a
};

// Counter-style standard-normal stream: splitmix64 uniforms fed through
// Box-Muller. Stateless apart from the advancing counter, so a stream is
// fully determined by its key.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t key) : state_(key) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = u01();
    const double u2 = u01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  void fill(double* out, int n) {
    for (int i = 0; i < n; ++i) out[i] = next();
  }

 private:
  // uniform in the open interval (0,1); never 0, so log(u) is finite
  double u01() {
    const std::uint64_t bits = mix64(state_++);
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace lgpf::rng
