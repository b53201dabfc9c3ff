#pragma once

#include <vector>

#include "koszul/painting.hpp"

namespace koszul {

// Parameters of a classical flag-manifold family:
//   A: SU_{n+1} / U_1^{n0} x S(U_{n1} x ... x U_{ns}), n0 + sum(blocks) = n+1
//   B: SO_{2n+1} / U_1^{n0} x U_{n1} x ... x U_{ns} x SO_{2r+1}
//   C: Sp_n / U_1^{n0} x U_{n1} x ... x U_{ns} x Sp_r
//   D: SO_{2n} / U_1^{n0} x U_{n1} x ... x U_{ns} x SO_{2r}, r != 1
// Blocks of size 1 are expressed through n0, so each block is >= 2.
struct ClassicalParams {
  Family family;
  int n0 = 0;
  std::vector<int> blocks;
  int r = 0;  // always 0 for family A

  int s() const { return static_cast<int>(blocks.size()); }
  int rank() const;
  int black_count() const;  // b2 of the standard painting
};

// Validates ranges, derived rank and that at least one node is black.
ClassicalParams make_classical_params(Family family, int n0, std::vector<int> blocks, int r);

// Standard painted diagram: n0 leading black nodes, then each block as a
// white string of length n_i - 1 followed by a black node (family A omits
// the black node after the last block), then a white tail of length r.
// For D with r = 0 the last black node is the fork tip n.
Painting standard_painting(const ClassicalParams& params);

// Koszul vector of the standard painting from the per-family closed form.
Vec koszul_closed_form(const ClassicalParams& params);

// Koszul vector by counting white strings adjacent to each black node, with
// the tail weightings: B tail counts 2 per long white plus 1 for the short
// one, C tail counts 2 per white, D tail counts as a chain of length 2(r-1).
// When the last simple root is black, B doubles its white-string count and
// D uses 2(n_s - 1) at the painted fork tip.
Vec koszul_string_count(const ClassicalParams& params);

// Case analysis on the block parities (all-odd / all-even / same-parity per
// family and the n0, r corner cases).
bool spin_closed_form(const ClassicalParams& params);

// All valid parameter tuples of the given family with derived rank == n.
std::vector<ClassicalParams> enumerate_params(Family family, int n);

}  // namespace koszul
