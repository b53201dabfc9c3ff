#pragma once

#include <memory>
#include <vector>

#include "koszul/lie.hpp"

namespace koszul {

// Exact integer model of a simple root system. Positive roots are stored as
// coordinate vectors over the simple roots alpha_1..alpha_rank, ordered by
// height. Immutable after construction.
struct RootSystem {
  LieType type;
  Mat cartan;
  std::vector<Vec> positive_roots;
  Vec highest_root;
  Vec dynkin_marks;  // coordinates of the highest root
  Vec two_sigma;     // sum of all positive roots

  int rank() const { return type.rank; }
};

// Height-ladder generation from the Cartan matrix: a root a extends to
// a + alpha_i iff p - <a, alpha_i^vee> > 0 with p = max{k : a - k*alpha_i is a
// root}. Construction verifies |R+| against the closed formula and that
// to_weight_coords(two_sigma) is the all-2 vector; both failing would mean a
// broken Cartan convention.
RootSystem build_root_system(const LieType& t);

// Memoized shared instances for sweeps; thread-safe.
std::shared_ptr<const RootSystem> shared_root_system(const LieType& t);

Vec two_sigma_g(const RootSystem& rs);

// Fundamental-weight coordinates: out_j = sum_i v_i * c_ij. Exact, no
// inversion. Throws on length mismatch.
Vec to_weight_coords(const RootSystem& rs, const Vec& v);

// Node permutations (0-based) preserving the Cartan matrix; identity first.
std::vector<std::vector<int>> diagram_automorphisms(const LieType& t);

}  // namespace koszul
