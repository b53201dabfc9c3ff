#include "koszul/cspace.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace koszul {

CSpace make_cspace(Painting base, Mat t0_rows) {
  const int v = static_cast<int>(base.black.size());
  for (const Vec& row : t0_rows)
    if (static_cast<int>(row.size()) != v)
      throw std::invalid_argument("t0 generator length must equal b2 of the base");
  const int m = static_cast<int>(t0_rows.size());
  if (m > v) throw std::invalid_argument("more t0 generators than b2");
  if (integer_rank(t0_rows) != m)
    throw std::invalid_argument("t0 generators are linearly dependent");
  if ((v - m) % 2 != 0) throw std::invalid_argument("fiber dimension must be even");
  CSpace cs{std::move(base), std::move(t0_rows), {}};
  cs.p1 = kernel_lattice(cs.t0_rows, v);
  return cs;
}

bool is_spin_cspace(const CSpace& cs) {
  return member_mod2(koszul_form(cs.base).koszul_vector, cs.p1);
}

bool has_trivial_c1(const CSpace& cs) {
  return member(cs.p1, koszul_form(cs.base).koszul_vector);
}

int cspace_second_betti(const CSpace& cs) { return cs.m(); }

bool base_spin_implies_cspace_spin(const Painting& base, int trials, std::uint64_t seed) {
  if (!is_spin(base)) throw std::invalid_argument("base painting is not spin");
  const int v = static_cast<int>(base.black.size());
  std::vector<int> admissible;
  for (int m = 0; m <= v; ++m)
    if ((v - m) % 2 == 0) admissible.push_back(m);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<std::size_t> pick(0, admissible.size() - 1);

  for (int t = 0; t < trials; ++t) {
    const int m = admissible[pick(rng)];
    Mat rows;
    while (true) {
      rows.assign(m, Vec(v, 0));
      for (Vec& row : rows)
        for (Int& x : row) x = entry(rng);
      if (integer_rank(rows) == m) break;
    }
    if (!is_spin_cspace(make_cspace(base, rows))) return false;
  }
  return true;
}

std::vector<SpinCSpaceReport> construct_spin_cspaces(const Painting& base) {
  const int v = static_cast<int>(base.black.size());
  if (v < 2) throw std::invalid_argument("construction needs b2 >= 2");
  const Vec ks = koszul_form(base).koszul_vector;

  std::vector<SpinCSpaceReport> reports;
  for (unsigned mask = 0; mask < (1u << v); ++mask) {
    std::vector<int> pi0, pi1;
    bool even_over_pi0 = true;
    for (int i = 0; i < v; ++i) {
      if (mask & (1u << i)) {
        pi0.push_back(base.black[i]);
        if (ks[i] % 2 != 0) even_over_pi0 = false;
      } else {
        pi1.push_back(base.black[i]);
      }
    }
    if (!even_over_pi0) continue;
    const int fiber = static_cast<int>(pi1.size());
    if (fiber == 0 || fiber % 2 != 0) continue;

    Mat rows;
    for (int i = 0; i < v; ++i)
      if (mask & (1u << i)) {
        Vec e(v, 0);
        e[i] = 1;
        rows.push_back(e);
      }
    SpinCSpaceReport rep{pi0, pi1, fiber, make_cspace(base, rows)};
    if (!is_spin_cspace(rep.space))
      throw std::logic_error("constructed bundle failed the spin criterion");
    reports.push_back(std::move(rep));
  }
  return reports;
}

std::vector<SpinFibration> enumerate_spin_fibrations(const LieType& group,
                                                     const std::vector<Painting>& spin_flags) {
  std::set<std::set<int>> seen;
  std::vector<SpinFibration> out;
  for (const Painting& p : spin_flags) {
    if (!(p.rs->type == group)) throw std::invalid_argument("painting of a different group");
    if (!is_spin(p)) throw std::invalid_argument("non-spin painting in census input");
    std::set<int> white(p.white.begin(), p.white.end());
    if (!seen.insert(canonical_white_set(group, white)).second) continue;
    const int v = static_cast<int>(p.black.size());
    for (int fiber = 2; fiber <= v; fiber += 2) out.push_back({p, fiber});
  }
  return out;
}

}  // namespace koszul
