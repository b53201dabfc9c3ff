#include "koszul/euclidean.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "koszul/checked.hpp"

namespace koszul {

namespace {

struct Rat {
  Int num = 0;
  Int den = 1;

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};

Rat make_rat(Int n, Int d = 1) {
  Rat r{n, d};
  r.reduce();
  return r;
}

Rat operator+(Rat a, Rat b) {
  Rat r{checked::add(checked::mul(a.num, b.den), checked::mul(b.num, a.den)),
        checked::mul(a.den, b.den)};
  r.reduce();
  return r;
}

Rat operator-(Rat a, Rat b) { return a + make_rat(-b.num, b.den); }

Rat operator*(Rat a, Rat b) {
  Rat r{checked::mul(a.num, b.num), checked::mul(a.den, b.den)};
  r.reduce();
  return r;
}

Rat operator/(Rat a, Rat b) {
  if (b.num == 0) throw std::domain_error("rational division by zero");
  Rat r{checked::mul(a.num, b.den), checked::mul(a.den, b.num)};
  r.reduce();
  return r;
}

bool is_zero(const Rat& a) { return a.num == 0; }

Vec basis_vec(int dim, int i, Int value) {
  Vec v(dim, 0);
  v[i] = value;
  return v;
}

Vec add_vecs(const Vec& a, const Vec& b, Int sb) {
  Vec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + sb * b[i];
  return v;
}

// Solve S x = target where the columns of S are the simple roots; exact
// rational elimination. Throws if inconsistent.
std::vector<Rat> solve_coords(const std::vector<Vec>& simple, const Vec& target) {
  const int rows = static_cast<int>(target.size());
  const int cols = static_cast<int>(simple.size());
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a[i][j] = make_rat(simple[j][i]);
    a[i][cols] = make_rat(target[i]);
  }
  std::vector<int> pivot_col_of_row(rows, -1);
  int prow = 0;
  for (int col = 0; col < cols && prow < rows; ++col) {
    int sel = -1;
    for (int i = prow; i < rows; ++i)
      if (!is_zero(a[i][col])) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[sel], a[prow]);
    for (int i = 0; i < rows; ++i) {
      if (i == prow || is_zero(a[i][col])) continue;
      Rat f = a[i][col] / a[prow][col];
      for (int j = col; j <= cols; ++j) a[i][j] = a[i][j] - f * a[prow][j];
    }
    pivot_col_of_row[prow] = col;
    ++prow;
  }
  std::vector<Rat> x(cols, make_rat(0));
  for (int i = 0; i < prow; ++i) {
    int col = pivot_col_of_row[i];
    x[col] = a[i][cols] / a[i][col];
  }
  for (int i = prow; i < rows; ++i)
    if (!is_zero(a[i][cols])) throw std::logic_error("root not in span of simple roots");
  return x;
}

}  // namespace

EuclideanRealization euclidean_realization(const LieType& t) {
  make_lie_type(t.family, t.rank);
  if (t.family == Family::E6 || t.family == Family::E7 || t.family == Family::E8)
    throw std::invalid_argument("no Euclidean realization shipped for " + group_token(t));

  EuclideanRealization e;
  e.type = t;
  const int n = t.rank;

  switch (t.family) {
    case Family::A: {
      e.ambient_dim = n + 1;
      for (int i = 0; i < n; ++i)
        e.simple_roots.push_back(
            add_vecs(basis_vec(n + 1, i, 1), basis_vec(n + 1, i + 1, 1), -1));
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          e.positive_roots.push_back(add_vecs(basis_vec(n + 1, i, 1), basis_vec(n + 1, j, 1), -1));
      break;
    }
    case Family::B: {
      e.ambient_dim = n;
      for (int i = 0; i + 1 < n; ++i)
        e.simple_roots.push_back(add_vecs(basis_vec(n, i, 1), basis_vec(n, i + 1, 1), -1));
      e.simple_roots.push_back(basis_vec(n, n - 1, 1));
      for (int i = 0; i < n; ++i) e.positive_roots.push_back(basis_vec(n, i, 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          e.positive_roots.push_back(add_vecs(basis_vec(n, i, 1), basis_vec(n, j, 1), -1));
          e.positive_roots.push_back(add_vecs(basis_vec(n, i, 1), basis_vec(n, j, 1), 1));
        }
      break;
    }
    case Family::C: {
      e.ambient_dim = n;
      for (int i = 0; i + 1 < n; ++i)
        e.simple_roots.push_back(add_vecs(basis_vec(n, i, 1), basis_vec(n, i + 1, 1), -1));
      e.simple_roots.push_back(basis_vec(n, n - 1, 2));
      for (int i = 0; i < n; ++i) e.positive_roots.push_back(basis_vec(n, i, 2));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          e.positive_roots.push_back(add_vecs(basis_vec(n, i, 1), basis_vec(n, j, 1), -1));
          e.positive_roots.push_back(add_vecs(basis_vec(n, i, 1), basis_vec(n, j, 1), 1));
        }
      break;
    }
    case Family::D: {
      e.ambient_dim = n;
      for (int i = 0; i + 1 < n; ++i)
        e.simple_roots.push_back(add_vecs(basis_vec(n, i, 1), basis_vec(n, i + 1, 1), -1));
      e.simple_roots.push_back(add_vecs(basis_vec(n, n - 2, 1), basis_vec(n, n - 1, 1), 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          e.positive_roots.push_back(add_vecs(basis_vec(n, i, 1), basis_vec(n, j, 1), -1));
          e.positive_roots.push_back(add_vecs(basis_vec(n, i, 1), basis_vec(n, j, 1), 1));
        }
      break;
    }
    case Family::G2: {
      // In the hyperplane x1+x2+x3=0; alpha_1 long, alpha_2 short.
      e.ambient_dim = 3;
      e.simple_roots = {{-2, 1, 1}, {1, -1, 0}};
      e.positive_roots = {{1, -1, 0}, {0, -1, 1}, {-1, 0, 1},
                          {-2, 1, 1}, {1, -2, 1}, {-1, -1, 2}};
      break;
    }
    case Family::F4: {
      // Doubled so the (e1 +- e2 +- e3 +- e4)/2 family is integral.
      e.ambient_dim = 4;
      e.simple_roots = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      for (int i = 0; i < 4; ++i) e.positive_roots.push_back(basis_vec(4, i, 2));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          e.positive_roots.push_back(add_vecs(basis_vec(4, i, 2), basis_vec(4, j, 2), -1));
          e.positive_roots.push_back(add_vecs(basis_vec(4, i, 2), basis_vec(4, j, 2), 1));
        }
      for (int s2 = -1; s2 <= 1; s2 += 2)
        for (int s3 = -1; s3 <= 1; s3 += 2)
          for (int s4 = -1; s4 <= 1; s4 += 2) e.positive_roots.push_back({1, s2, s3, s4});
      break;
    }
    default:
      throw std::logic_error("unreachable");
  }
  return e;
}

std::vector<Vec> euclidean_positive_coords(const EuclideanRealization& e) {
  std::vector<Vec> coords;
  coords.reserve(e.positive_roots.size());
  for (const Vec& root : e.positive_roots) {
    std::vector<Rat> x = solve_coords(e.simple_roots, root);
    Vec c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].den != 1 || x[i].num < 0)
        throw std::logic_error("Euclidean root with non-integral or negative expansion");
      c[i] = x[i].num;
    }
    coords.push_back(std::move(c));
  }
  return coords;
}

Vec two_sigma_oracle(const LieType& t) {
  const EuclideanRealization e = euclidean_realization(t);
  const std::vector<Vec> coords = euclidean_positive_coords(e);
  Vec sum(t.rank, 0);
  for (const Vec& c : coords)
    for (int i = 0; i < t.rank; ++i) sum[i] += c[i];
  return sum;
}

Vec koszul_vector_oracle(const LieType& t, const std::vector<int>& white) {
  const EuclideanRealization e = euclidean_realization(t);
  const std::vector<Vec> coords = euclidean_positive_coords(e);
  std::set<int> white_set(white.begin(), white.end());
  for (int w : white_set)
    if (w < 1 || w > t.rank) throw std::invalid_argument("white node out of range");
  if (static_cast<int>(white_set.size()) == t.rank)
    throw std::invalid_argument("all-white painting has no black node");

  Vec sigma(e.ambient_dim, 0);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    bool complementary = false;
    for (int i = 0; i < t.rank; ++i)
      if (coords[k][i] != 0 && !white_set.count(i + 1)) complementary = true;
    if (!complementary) continue;
    for (int d = 0; d < e.ambient_dim; ++d) sigma[d] += e.positive_roots[k][d];
  }

  Vec ks;
  for (int i = 0; i < t.rank; ++i) {
    if (white_set.count(i + 1)) continue;
    const Vec& beta = e.simple_roots[i];
    Int num = 0, den = 0;
    for (int d = 0; d < e.ambient_dim; ++d) {
      num = checked::add(num, checked::mul(sigma[d], beta[d]));
      den = checked::add(den, checked::mul(beta[d], beta[d]));
    }
    num = checked::mul(2, num);
    if (den == 0 || num % den != 0)
      throw std::logic_error("non-integral Koszul number in Euclidean route");
    ks.push_back(num / den);
  }
  return ks;
}

}  // namespace koszul
