#include <random>
#include <stdexcept>

#include "doctest.h"
#include "koszul/lattice.hpp"

using namespace koszul;

namespace {

// exhaustive small-coefficient combination search
bool brute_member(const Mat& columns, const Vec& x, int bound) {
  const int cols = columns.empty() ? 0 : static_cast<int>(columns.front().size());
  const int rows = static_cast<int>(columns.size());
  std::vector<int> coeff(cols, -bound);
  while (true) {
    bool match = true;
    for (int i = 0; i < rows && match; ++i) {
      Int sum = 0;
      for (int j = 0; j < cols; ++j) sum += coeff[j] * columns[i][j];
      match = sum == x[i];
    }
    if (match && cols > 0) return true;
    if (cols == 0) break;
    int k = 0;
    while (k < cols && coeff[k] == bound) coeff[k++] = -bound;
    if (k == cols) break;
    ++coeff[k];
  }
  for (Int v : x)
    if (v != 0) return false;
  return true;
}

bool brute_member_mod2(const Vec& x, const LatticeBasis& basis) {
  const int k = static_cast<int>(basis.size());
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Vec residual = x;
    for (int j = 0; j < k; ++j)
      if (mask & (1u << j))
        for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= basis[j][i];
    bool even = true;
    for (Int v : residual)
      if (v % 2 != 0) even = false;
    if (even) return true;
  }
  return false;
}

LatticeBasis columns_as_basis(const Mat& m) {
  LatticeBasis basis;
  if (m.empty()) return basis;
  for (std::size_t j = 0; j < m.front().size(); ++j) {
    Vec v;
    for (const Vec& row : m) v.push_back(row[j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

TEST_CASE("hnf fixed points") {
  CHECK(hnf(Mat{{1, 0}, {0, 1}}) == Mat{{1, 0}, {0, 1}});
  CHECK(hnf(Mat{{0, 0}, {0, 0}}) == Mat{{0, 0}, {0, 0}});
}

TEST_CASE("hnf of a small matrix preserves the column lattice") {
  const Mat m = {{2, 1}, {0, 1}};
  const Mat h = hnf(m);
  CHECK(h[0][0] > 0);
  for (Int x = -4; x <= 4; ++x)
    for (Int y = -4; y <= 4; ++y) {
      const Vec v{x, y};
      CHECK(member(columns_as_basis(h), v) == brute_member(m, v, 8));
    }
}

TEST_CASE("hnf is idempotent and membership-stable on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    Mat m(rows, Vec(cols));
    for (Vec& row : m)
      for (Int& x : row) x = entry(rng);
    const Mat h = hnf(m);
    CHECK(hnf(h) == h);
    Vec x(rows);
    for (Int& v : x) v = entry(rng);
    CHECK(member(columns_as_basis(m), x) == member(columns_as_basis(h), x));
  }
}

TEST_CASE("kernel lattices") {
  CHECK(kernel_lattice(Mat{{1, 1}}) == LatticeBasis{{1, -1}});
  CHECK(kernel_lattice(Mat{{1, 0, 0}}) == LatticeBasis{{0, 1, 0}, {0, 0, 1}});
  CHECK(kernel_lattice(Mat{{2, 3}}) == LatticeBasis{{3, -2}});
  CHECK(kernel_lattice(Mat{}, 3).size() == 3);
  CHECK(kernel_lattice(Mat{{1, 0}, {0, 1}}).empty());
}

TEST_CASE("kernel vectors annihilate the matrix; ranks add up; kernels are saturated") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    Mat m(rows, Vec(cols));
    for (Vec& row : m)
      for (Int& x : row) x = entry(rng);
    const LatticeBasis kernel = kernel_lattice(m);
    for (const Vec& v : kernel)
      for (int i = 0; i < rows; ++i) {
        Int sum = 0;
        for (int j = 0; j < cols; ++j) sum += m[i][j] * v[j];
        CHECK(sum == 0);
      }
    CHECK(static_cast<int>(kernel.size()) + integer_rank(m) == cols);

    // saturation: k*x in the kernel span forces x in the kernel span
    Vec x(cols);
    for (Int& v : x) v = entry(rng);
    for (Int k : {Int{2}, Int{3}}) {
      Vec kx(cols);
      for (int j = 0; j < cols; ++j) kx[j] = k * x[j];
      if (member(kernel, kx)) CHECK(member(kernel, x));
    }
  }
}

TEST_CASE("membership") {
  CHECK(member(LatticeBasis{{1, -1}}, {2, -2}));
  CHECK_FALSE(member(LatticeBasis{{1, -1}}, {1, 0}));
  CHECK(member(LatticeBasis{{3, -2}}, {6, -4}));
  CHECK(member(LatticeBasis{}, {0, 0, 0}));
  CHECK_FALSE(member(LatticeBasis{}, {1, 0}));
  CHECK_THROWS_AS((member(LatticeBasis{{1, -1}}, {1, 0, 0})), std::invalid_argument);
}

TEST_CASE("membership mod 2") {
  CHECK(member_mod2({6, 3, 2}, LatticeBasis{{0, 1, 0}, {0, 0, 1}}));
  CHECK_FALSE(member_mod2({3, 0}, LatticeBasis{}));
  CHECK(member_mod2({3, 2, 2}, LatticeBasis{{1, 0, 0}, {0, 1, -1}}));
}

TEST_CASE("membership mod 2 agrees with residue enumeration on small instances") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const int v = dim(rng);
    const int k = std::uniform_int_distribution<int>(0, v)(rng);
    LatticeBasis basis(k, Vec(v));
    for (Vec& b : basis)
      for (Int& x : b) x = entry(rng);
    Vec x(v);
    for (Int& e : x) e = entry(rng);
    CHECK(member_mod2(x, basis) == brute_member_mod2(x, basis));
  }
}
