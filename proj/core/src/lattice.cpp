#include "koszul/lattice.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "koszul/checked.hpp"

namespace koszul {

namespace {

// Intermediate entries during the reduction can exceed 64 bits even when the
// input and the finished form are small, so the elimination runs on 128-bit
// integers with overflow checks and narrows at the end.
using Wide = __int128;

Wide wadd(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("lattice reduction overflow");
  return r;
}

Wide wmul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("lattice reduction overflow");
  return r;
}

Wide wabs(Wide a) { return a < 0 ? -a : a; }

Int narrow(Wide a) {
  if (a > std::numeric_limits<Int>::max() || a < std::numeric_limits<Int>::min())
    throw std::overflow_error("lattice result exceeds int64");
  return static_cast<Int>(a);
}

using WVec = std::vector<Wide>;
using WMat = std::vector<WVec>;

int rows_of(const Mat& m) { return static_cast<int>(m.size()); }

int cols_of(const Mat& m) {
  if (m.empty()) return 0;
  const std::size_t c = m.front().size();
  for (const Vec& row : m)
    if (row.size() != c) throw std::invalid_argument("ragged matrix");
  return static_cast<int>(c);
}

// col_j -= q * col_k
void add_column_multiple(WMat& h, WMat& u, int j, int k, Wide q) {
  if (q == 0) return;
  for (auto* m : {&h, &u})
    for (WVec& row : *m) row[j] = wadd(row[j], wmul(-q, row[k]));
}

void swap_columns(WMat& h, WMat& u, int j, int k) {
  if (j == k) return;
  for (auto* m : {&h, &u})
    for (WVec& row : *m) std::swap(row[j], row[k]);
}

void negate_column(WMat& h, WMat& u, int j) {
  for (auto* m : {&h, &u})
    for (WVec& row : *m) row[j] = -row[j];
}

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Egcd {
  Wide g, p, q;  // g = p*a + q*b, g > 0 unless a = b = 0
};

Egcd extended_gcd(Wide a, Wide b) {
  Wide old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Wide quot = old_r / r;
    Wide tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// (col_a, col_b) <- (p*col_a + q*col_b, v*col_a + w*col_b); p*w - q*v = +-1
void combine_columns(WMat& h, WMat& u, int a, int b, Wide p, Wide q, Wide v, Wide w) {
  for (auto* m : {&h, &u})
    for (WVec& row : *m) {
      const Wide x = row[a], y = row[b];
      row[a] = wadd(wmul(p, x), wmul(q, y));
      row[b] = wadd(wmul(v, x), wmul(w, y));
    }
}

}  // namespace

HnfResult hnf_with_transform(const Mat& m) {
  const int rows = rows_of(m);
  const int cols = cols_of(m);
  WMat h(rows, WVec(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) h[i][j] = m[i][j];
  WMat u(cols, WVec(cols, 0));
  for (int i = 0; i < cols; ++i) u[i][i] = 1;

  int pc = 0;  // next pivot column
  for (int pr = 0; pr < rows && pc < cols; ++pr) {
    // move the smallest nonzero entry of the row into the pivot column, then
    // fold the other columns in by increasing magnitude, one unimodular gcd
    // step each
    int best = -1;
    for (int j = pc; j < cols; ++j) {
      if (h[pr][j] == 0) continue;
      if (best < 0 || wabs(h[pr][j]) < wabs(h[pr][best])) best = j;
    }
    if (best < 0) continue;  // row is zero from pc on
    swap_columns(h, u, pc, best);

    std::vector<int> pending;
    for (int j = pc + 1; j < cols; ++j)
      if (h[pr][j] != 0) pending.push_back(j);
    std::sort(pending.begin(), pending.end(),
              [&](int a, int b) { return wabs(h[pr][a]) < wabs(h[pr][b]); });
    for (int j : pending) {
      const Wide a = h[pr][pc], b = h[pr][j];
      if (b % a == 0) {
        add_column_multiple(h, u, j, pc, b / a);
        continue;
      }
      const Egcd e = extended_gcd(a, b);
      combine_columns(h, u, pc, j, e.p, e.q, -(b / e.g), a / e.g);
    }
    if (h[pr][pc] < 0) negate_column(h, u, pc);
    for (int j = 0; j < pc; ++j)
      add_column_multiple(h, u, j, pc, floor_div(h[pr][j], h[pr][pc]));
    ++pc;
  }

  HnfResult res;
  res.h.assign(rows, Vec(cols, 0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) res.h[i][j] = narrow(h[i][j]);
  res.u.assign(cols, Vec(cols, 0));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) res.u[i][j] = narrow(u[i][j]);
  return res;
}

Mat hnf(const Mat& m) { return hnf_with_transform(m).h; }

namespace {

// In-order pivot positions (row, col) of a column HNF.
std::vector<std::pair<int, int>> pivots_of(const Mat& h) {
  std::vector<std::pair<int, int>> pivots;
  const int rows = rows_of(h);
  const int cols = cols_of(h);
  int col = 0;
  for (int row = 0; row < rows && col < cols; ++row)
    if (h[row][col] != 0) pivots.emplace_back(row, col++);
  return pivots;
}

Mat columns_from_basis(const LatticeBasis& basis, int length) {
  Mat m(length, Vec(basis.size(), 0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (static_cast<int>(basis[j].size()) != length)
      throw std::invalid_argument("basis vector length mismatch");
    for (int i = 0; i < length; ++i) m[i][j] = basis[j][i];
  }
  return m;
}

bool member_of_columns(const Mat& h, const Vec& x) {
  Vec residual = x;
  for (const auto& [row, col] : pivots_of(h)) {
    if (residual[row] % h[row][col] != 0) return false;
    const Int q = residual[row] / h[row][col];
    for (int i = 0; i < static_cast<int>(residual.size()); ++i)
      residual[i] = checked::sub(residual[i], checked::mul(q, h[i][col]));
  }
  for (Int v : residual)
    if (v != 0) return false;
  return true;
}

}  // namespace

LatticeBasis kernel_lattice(const Mat& m, int width) {
  const int cols = rows_of(m) == 0 ? std::max(width, 0) : cols_of(m);
  if (width >= 0 && rows_of(m) > 0 && cols != width)
    throw std::invalid_argument("kernel width disagrees with matrix shape");
  if (rows_of(m) == 0) {
    // kernel of the empty map is everything
    LatticeBasis basis;
    for (int i = 0; i < cols; ++i) {
      Vec e(cols, 0);
      e[i] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  const HnfResult res = hnf_with_transform(m);
  const int pivot_count = static_cast<int>(pivots_of(res.h).size());
  LatticeBasis basis;
  for (int j = pivot_count; j < cols; ++j) {
    Vec v(cols);
    for (int i = 0; i < cols; ++i) v[i] = res.u[i][j];
    for (Int entry : v)
      if (entry != 0) {
        if (entry < 0)
          for (Int& e : v) e = -e;
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool member(const LatticeBasis& basis, const Vec& x) {
  if (basis.empty()) {
    for (Int v : x)
      if (v != 0) return false;
    return true;
  }
  const int length = static_cast<int>(basis.front().size());
  if (static_cast<int>(x.size()) != length)
    throw std::invalid_argument("vector length mismatch");
  return member_of_columns(hnf(columns_from_basis(basis, length)), x);
}

bool member_mod2(const Vec& x, const LatticeBasis& basis) {
  const int v = static_cast<int>(x.size());
  for (const Vec& b : basis)
    if (static_cast<int>(b.size()) != v) throw std::invalid_argument("vector length mismatch");
  Mat m(v, Vec(v + basis.size(), 0));
  for (int i = 0; i < v; ++i) m[i][i] = 2;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (int i = 0; i < v; ++i) m[i][v + j] = basis[j][i];
  return member_of_columns(hnf(m), x);
}

int integer_rank(const Mat& m) {
  if (rows_of(m) == 0 || cols_of(m) == 0) return 0;
  return static_cast<int>(pivots_of(hnf(m)).size());
}

}  // namespace koszul
