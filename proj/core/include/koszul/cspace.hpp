#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "koszul/lattice.hpp"
#include "koszul/painting.hpp"

namespace koszul {

// Torus bundle over a flag manifold. The center of the stabilizer is modeled
// as Z^v with basis dual to the black fundamental weights; t0 is spanned by
// integer generator rows in that basis, and p1 is the sublattice of weight
// vectors annihilating t0.
struct CSpace {
  Painting base;
  Mat t0_rows;      // m x v, full row rank
  LatticeBasis p1;  // kernel of t0_rows, rank v - m

  int v() const { return static_cast<int>(base.black.size()); }
  int m() const { return static_cast<int>(t0_rows.size()); }
  int fiber_dim() const { return v() - m(); }
  bool is_m_space() const { return m() == 0; }
};

// Throws std::invalid_argument on wrong row length, rationally dependent
// rows, or odd fiber dimension. Empty rows give the M-space over the base.
CSpace make_cspace(Painting base, Mat t0_rows);

// Spin criterion: the Koszul vector of the base must become even in the
// quotient Z^v / p1, i.e. lie in 2 Z^v + p1.
bool is_spin_cspace(const CSpace& cs);

// The first Chern class vanishes iff the Koszul vector lies in p1 itself.
bool has_trivial_c1(const CSpace& cs);

// b2 of the total space = number of t0 generators.
int cspace_second_betti(const CSpace& cs);

// Builds `trials` random full-rank generator matrices (entries in [-5, 5],
// every admissible m) over a spin base and checks each bundle is spin.
// Throws std::invalid_argument if the base is not spin.
bool base_spin_implies_cspace_spin(const Painting& base, int trials,
                                   std::uint64_t seed = 0x5eed);

// One admissible split of the black nodes: every Koszul number over pi0 is
// even and |pi1| is a positive even fiber dimension.
struct SpinCSpaceReport {
  std::vector<int> pi0;  // black nodes spanning t0 (1-based node indices)
  std::vector<int> pi1;  // complement in black
  int fiber_dim;         // |pi1|
  CSpace space;
};

// Enumerates all subsets pi0 of the black nodes with even Koszul numbers
// over pi0 and even nonzero |pi1|; each yields t0 = span of the dual basis
// vectors indexed by pi0 and a spin bundle. Requires b2(base) >= 2.
std::vector<SpinCSpaceReport> construct_spin_cspaces(const Painting& base);

struct SpinFibration {
  Painting base;
  int fiber_dim;
};

// For each spin flag with b2 = v, one fibration per even fiber dimension
// 2 <= 2k <= v. Inputs must be spin paintings of `group`; they are
// deduplicated by diagram automorphisms first.
std::vector<SpinFibration> enumerate_spin_fibrations(const LieType& group,
                                                     const std::vector<Painting>& spin_flags);

}  // namespace koszul
