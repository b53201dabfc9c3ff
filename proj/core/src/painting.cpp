#include "koszul/painting.hpp"

#include <algorithm>
#include <stdexcept>

namespace koszul {

bool Painting::is_black(int node) const {
  return std::binary_search(black.begin(), black.end(), node);
}

Painting make_painting(std::shared_ptr<const RootSystem> rs, const std::set<int>& white) {
  if (!rs) throw std::invalid_argument("null root system");
  const int n = rs->rank();
  for (int w : white)
    if (w < 1 || w > n) throw std::invalid_argument("node index out of range: " + std::to_string(w));
  if (static_cast<int>(white.size()) == n)
    throw std::invalid_argument("all-white painting does not define a flag manifold");
  Painting p;
  p.rs = std::move(rs);
  p.white.assign(white.begin(), white.end());
  for (int i = 1; i <= n; ++i)
    if (!white.count(i)) p.black.push_back(i);
  return p;
}

Painting make_painting(const LieType& t, const std::set<int>& white) {
  return make_painting(shared_root_system(t), white);
}

namespace {

bool supported_on_white(const Painting& p, const Vec& root) {
  for (int b : p.black)
    if (root[b - 1] != 0) return false;
  return true;
}

}  // namespace

std::vector<Vec> subsystem_positive_roots(const Painting& p) {
  std::vector<Vec> out;
  for (const Vec& a : p.rs->positive_roots)
    if (supported_on_white(p, a)) out.push_back(a);
  return out;
}

std::vector<Vec> complementary_positive_roots(const Painting& p) {
  std::vector<Vec> out;
  for (const Vec& a : p.rs->positive_roots)
    if (!supported_on_white(p, a)) out.push_back(a);
  return out;
}

KoszulForm koszul_form(const Painting& p) {
  const int n = p.rank();
  KoszulForm f;
  f.root_coords = p.rs->two_sigma;
  for (const Vec& a : subsystem_positive_roots(p))
    for (int i = 0; i < n; ++i) f.root_coords[i] -= a[i];
  f.weight_coords = to_weight_coords(*p.rs, f.root_coords);
  for (int w : p.white)
    if (f.weight_coords[w - 1] != 0)
      throw std::logic_error("Koszul form has a nonzero white coordinate");
  for (int b : p.black) {
    if (f.weight_coords[b - 1] < 2) throw std::logic_error("Koszul coefficient below 2");
    f.koszul_vector.push_back(f.weight_coords[b - 1]);
  }
  return f;
}

bool is_spin(const Painting& p) {
  for (Int k : koszul_form(p).koszul_vector)
    if (k % 2 != 0) return false;
  return true;
}

bool is_metaplectic(const Painting& p) { return is_spin(p); }

Int TRootTable::total_multiplicity() const {
  Int total = 0;
  for (const auto& [key, mult] : entries) total += mult;
  return total;
}

TRootTable t_root_table(const Painting& p) {
  TRootTable table;
  for (const Vec& a : complementary_positive_roots(p)) {
    Vec key;
    key.reserve(p.black.size());
    for (int b : p.black) key.push_back(a[b - 1]);
    ++table.entries[key];
  }
  return table;
}

int second_betti(const Painting& p) { return static_cast<int>(p.black.size()); }

Int real_dimension(const Painting& p) {
  return 2 * static_cast<Int>(complementary_positive_roots(p).size());
}

std::pair<Int, Int> metric_signature(const Painting& p, const std::map<Vec, int>& signs) {
  const TRootTable table = t_root_table(p);
  if (signs.size() != table.entries.size())
    throw std::invalid_argument("sign assignment does not cover the T-root set");
  Int minus = 0, plus = 0;
  for (const auto& [key, mult] : table.entries) {
    auto it = signs.find(key);
    if (it == signs.end()) throw std::invalid_argument("missing sign for a T-root");
    if (it->second > 0)
      plus += mult;
    else if (it->second < 0)
      minus += mult;
    else
      throw std::invalid_argument("sign must be +1 or -1");
  }
  return {2 * minus, 2 * plus};
}

Vec level_one_sum(const Painting& p) {
  if (p.black.size() != 1)
    throw std::invalid_argument("level-one sum is defined for a single black node");
  const int beta = p.black.front();
  Vec sum(p.rank(), 0);
  for (const Vec& a : complementary_positive_roots(p)) {
    if (a[beta - 1] != 1) continue;
    for (int i = 0; i < p.rank(); ++i) sum[i] += a[i];
  }
  Vec w = to_weight_coords(*p.rs, sum);
  for (int i = 0; i < p.rank(); ++i) {
    if (i + 1 == beta) {
      if (w[i] < 1) throw std::logic_error("level-one sum not a positive weight multiple");
    } else if (w[i] != 0) {
      throw std::logic_error("level-one sum not proportional to the black weight");
    }
  }
  return w;
}

std::set<int> apply_automorphism(const std::vector<int>& perm, const std::vector<int>& white) {
  std::set<int> out;
  for (int w : white) out.insert(perm[w - 1] + 1);
  return out;
}

std::set<int> canonical_white_set(const LieType& t, const std::set<int>& white) {
  std::vector<int> white_list(white.begin(), white.end());
  std::set<int> best = white;
  for (const auto& perm : diagram_automorphisms(t)) {
    std::set<int> image = apply_automorphism(perm, white_list);
    if (image < best) best = image;
  }
  return best;
}

}  // namespace koszul
