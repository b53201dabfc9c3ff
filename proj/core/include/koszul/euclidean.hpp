#pragma once

#include <vector>

#include "koszul/lie.hpp"

namespace koszul {

// Classical e_i-basis realization, integer-scaled (F4 is doubled so the
// half-sum roots become integral; G2 lives in R^3). Supported for
// A/B/C/D/G2/F4; throws std::invalid_argument for E6/E7/E8. Positive roots
// are enumerated directly per family, not generated from the Cartan matrix,
// so this is an independent route to every quantity derived from R+.
struct EuclideanRealization {
  LieType type;
  int ambient_dim;
  std::vector<Vec> simple_roots;    // ambient integer vectors
  std::vector<Vec> positive_roots;  // ambient integer vectors
};

EuclideanRealization euclidean_realization(const LieType& t);

// Simple-root coordinates of each Euclidean positive root, solved exactly
// over the rationals; verifies integrality and nonnegativity.
std::vector<Vec> euclidean_positive_coords(const EuclideanRealization& e);

// Sum of all positive roots in simple-root coordinates, via the realization.
Vec two_sigma_oracle(const LieType& t);

// Koszul numbers over the black nodes (ascending), computed as
// 2(sigma, beta)/(beta, beta) with ambient inner products. `white` holds
// 1-based node indices.
Vec koszul_vector_oracle(const LieType& t, const std::vector<int>& white);

}  // namespace koszul
