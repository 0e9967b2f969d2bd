#pragma once

#include <cstdint>

#include "lgpf/model.hpp"

namespace lgpf::models {

// Scalar steady-state model: A=0, C=Q=R=1, m0=0, Sigma0=1. The Riccati fixed
// point is Sigma ≡ 1, so every closed-form check has unit scale.
ModelSpec scalar_ss();

// Same model with Sigma0=0.5; the Riccati solution is
// Sigma(t) = tanh(t + atanh(0.5)).
ModelSpec scalar_tanh();

// Fixed 2-d damped-oscillator model with a single observed coordinate; used
// by the Monte Carlo exactness runs.
ModelSpec oscillator_2d();

// Seeded random model of the given dimensions: mildly scaled A and C, well
// conditioned SPD Q, R, Sigma0. Same seed, same model.
ModelSpec random_model(int dim_x, int dim_z, std::uint64_t seed);

}  // namespace lgpf::models
