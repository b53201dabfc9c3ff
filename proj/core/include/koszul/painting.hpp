#pragma once

#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "koszul/root_system.hpp"

namespace koszul {

// Painted Dynkin diagram: a root system with a white/black node partition.
// Node indices are 1-based throughout the public surface, matching the
// G(j1,...,ju) naming of flag manifolds by their white sets.
struct Painting {
  std::shared_ptr<const RootSystem> rs;
  std::vector<int> white;  // ascending
  std::vector<int> black;  // ascending, never empty

  int rank() const { return rs->rank(); }
  bool is_black(int node) const;
};

// Throws std::invalid_argument on out-of-range nodes or the all-white set.
// white == {} is the full flag.
Painting make_painting(std::shared_ptr<const RootSystem> rs, const std::set<int>& white);
Painting make_painting(const LieType& t, const std::set<int>& white);

// R_H^+: positive roots supported on the white nodes only.
std::vector<Vec> subsystem_positive_roots(const Painting& p);

// R_F^+ = R^+ \ R_H^+.
std::vector<Vec> complementary_positive_roots(const Painting& p);

struct KoszulForm {
  Vec root_coords;    // over alpha_1..alpha_rank
  Vec weight_coords;  // over Lambda_1..Lambda_rank; zero on white nodes
  Vec koszul_vector;  // weight coords restricted to black nodes, ascending
};

// Sum of the complementary positive roots in both coordinate systems.
// Throws std::logic_error if a white weight coordinate is nonzero or some
// black coefficient drops below 2 (either indicates a convention bug).
KoszulForm koszul_form(const Painting& p);

// A flag manifold carries an invariant spin structure iff every Koszul
// number is even; the metaplectic criterion is the same parity test.
bool is_spin(const Painting& p);
bool is_metaplectic(const Painting& p);

// Restriction classes of complementary roots: key = tuple of black
// coordinates (ascending node order), value = multiplicity d_xi.
struct TRootTable {
  std::map<Vec, Int> entries;

  Int d() const { return static_cast<Int>(entries.size()); }
  Int total_multiplicity() const;
};

TRootTable t_root_table(const Painting& p);

int second_betti(const Painting& p);
Int real_dimension(const Painting& p);

// signs: +1/-1 per T-root key; must cover exactly the table keys.
// Returns (2N-, 2N+).
std::pair<Int, Int> metric_signature(const Painting& p, const std::map<Vec, int>& signs);

// For |black| = 1: sum of the complementary roots whose black coordinate is
// exactly 1, in weight coordinates. Always a positive multiple of the black
// fundamental weight.
Vec level_one_sum(const Painting& p);

// White set image under a diagram automorphism (0-based permutation).
std::set<int> apply_automorphism(const std::vector<int>& perm, const std::vector<int>& white);

// Canonical representative of the white set's orbit under the diagram
// automorphism group; used to deduplicate isomorphic paintings.
std::set<int> canonical_white_set(const LieType& t, const std::set<int>& white);

}  // namespace koszul
