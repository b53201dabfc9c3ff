#pragma once

#include <vector>

#include "koszul/lie.hpp"

namespace koszul {

// A list of linearly independent integer vectors of common length; the empty
// list is the trivial sublattice.
using LatticeBasis = std::vector<Vec>;

struct HnfResult {
  Mat h;  // h = m * u, column-style Hermite normal form
  Mat u;  // unimodular
};

// Column-style HNF: pivot columns first with strictly increasing pivot rows,
// positive pivots, zeros to the right of each pivot in its row and reduced
// entries (0 <= x < pivot) to the left; zero columns last. Minimal-absolute-
// value pivoting keeps intermediate entries small; all arithmetic is
// overflow-checked. The column lattice is preserved and the form is
// idempotent.
HnfResult hnf_with_transform(const Mat& m);
Mat hnf(const Mat& m);

// Basis of {x in Z^cols : m x = 0}. The result is saturated: Z^cols modulo
// the kernel is torsion free. Vectors are sign-normalized (first nonzero
// entry positive). Empty kernel -> empty basis. `width` fixes the ambient
// dimension when m has no rows (kernel = all of Z^width).
LatticeBasis kernel_lattice(const Mat& m, int width = -1);

// x in span_Z(basis)? Back-substitution over the HNF of the basis columns.
bool member(const LatticeBasis& basis, const Vec& x);

// x in 2 Z^v + span_Z(basis)? Membership over the column lattice of
// [2I | basis].
bool member_mod2(const Vec& x, const LatticeBasis& basis);

// Rank of an integer matrix (exact).
int integer_rank(const Mat& m);

}  // namespace koszul
