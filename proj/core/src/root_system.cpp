#include "koszul/root_system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "koszul/checked.hpp"

namespace koszul {

RootSystem build_root_system(const LieType& t) {
  RootSystem rs;
  rs.type = make_lie_type(t.family, t.rank);
  rs.cartan = cartan_matrix(rs.type);
  const int n = rs.type.rank;

  std::set<Vec> found;
  std::vector<Vec> layer;
  for (int i = 0; i < n; ++i) {
    Vec simple(n, 0);
    simple[i] = 1;
    found.insert(simple);
    layer.push_back(simple);
  }

  while (!layer.empty()) {
    for (const Vec& a : layer) rs.positive_roots.push_back(a);
    std::set<Vec> next;
    for (const Vec& a : layer) {
      for (int i = 0; i < n; ++i) {
        // p = length of the downward alpha_i-string through a
        Int p = 0;
        Vec down = a;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !found.count(down)) break;
          ++p;
        }
        Int pairing = 0;  // <a, alpha_i^vee>
        for (int j = 0; j < n; ++j) pairing += a[j] * rs.cartan[j][i];
        if (p - pairing > 0) {
          Vec up = a;
          up[i] += 1;
          if (!found.count(up)) {
            found.insert(up);
            next.insert(up);
          }
        }
      }
    }
    layer.assign(next.begin(), next.end());
  }

  if (rs.positive_roots.size() != positive_root_count(rs.type))
    throw std::logic_error("positive root count mismatch for " + group_token(rs.type));

  auto height = [](const Vec& v) {
    Int h = 0;
    for (Int x : v) h += x;
    return h;
  };
  std::stable_sort(rs.positive_roots.begin(), rs.positive_roots.end(),
                   [&](const Vec& a, const Vec& b) {
                     Int ha = height(a), hb = height(b);
                     return ha != hb ? ha < hb : a < b;
                   });

  const Int top = height(rs.positive_roots.back());
  std::size_t at_top = 0;
  for (const Vec& a : rs.positive_roots)
    if (height(a) == top) ++at_top;
  if (at_top != 1) throw std::logic_error("highest root not unique");
  rs.highest_root = rs.positive_roots.back();
  rs.dynkin_marks = rs.highest_root;

  rs.two_sigma.assign(n, 0);
  for (const Vec& a : rs.positive_roots)
    for (int i = 0; i < n; ++i) rs.two_sigma[i] += a[i];

  // Enumeration self-check: sum of positive roots must convert to (2,...,2).
  for (Int w : to_weight_coords(rs, rs.two_sigma))
    if (w != 2) throw std::logic_error("Cartan convention self-check failed");

  return rs;
}

std::shared_ptr<const RootSystem> shared_root_system(const LieType& t) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const RootSystem>> cache;
  const auto key = std::make_pair(static_cast<int>(t.family), t.rank);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(build_root_system(t));
  cache.emplace(key, rs);
  return rs;
}

Vec two_sigma_g(const RootSystem& rs) { return rs.two_sigma; }

Vec to_weight_coords(const RootSystem& rs, const Vec& v) {
  const int n = rs.rank();
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("coordinate vector length mismatch");
  Vec out(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      out[j] = checked::add(out[j], checked::mul(v[i], rs.cartan[i][j]));
  return out;
}

namespace {

void search_automorphisms(const Mat& c, std::vector<int>& perm, std::vector<bool>& used, int i,
                          std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(c.size());
  if (i == n) {
    out.push_back(perm);
    return;
  }
  for (int img = 0; img < n; ++img) {
    if (used[img]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j)
      ok = c[perm[j]][img] == c[j][i] && c[img][perm[j]] == c[i][j];
    if (!ok) continue;
    perm[i] = img;
    used[img] = true;
    search_automorphisms(c, perm, used, i + 1, out);
    used[img] = false;
  }
}

}  // namespace

std::vector<std::vector<int>> diagram_automorphisms(const LieType& t) {
  const Mat c = cartan_matrix(t);
  std::vector<int> perm(t.rank, -1);
  std::vector<bool> used(t.rank, false);
  std::vector<std::vector<int>> out;
  search_automorphisms(c, perm, used, 0, out);
  std::vector<int> id(t.rank);
  for (int i = 0; i < t.rank; ++i) id[i] = i;
  std::stable_partition(out.begin(), out.end(), [&](const std::vector<int>& p) { return p == id; });
  return out;
}

}  // namespace koszul
