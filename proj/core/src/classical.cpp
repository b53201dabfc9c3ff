#include "koszul/classical.hpp"

#include <numeric>
#include <stdexcept>

namespace koszul {

namespace {

std::vector<int> columns(const ClassicalParams& p) {
  std::vector<int> cols(p.n0, 1);
  cols.insert(cols.end(), p.blocks.begin(), p.blocks.end());
  return cols;
}

// 1-based positions of the black nodes in the standard layout.
std::vector<int> black_positions(const ClassicalParams& p) {
  const std::vector<int> cols = columns(p);
  std::vector<int> blacks;
  int pos = 0;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    pos += cols[i] - 1;
    const bool trailing_black = p.family != Family::A || i + 1 < cols.size();
    if (trailing_black) blacks.push_back(++pos);
  }
  return blacks;
}

}  // namespace

int ClassicalParams::rank() const {
  int sum = std::accumulate(blocks.begin(), blocks.end(), 0);
  if (family == Family::A) return n0 + sum - 1;
  return n0 + sum + r;
}

int ClassicalParams::black_count() const {
  return family == Family::A ? n0 + s() - 1 : n0 + s();
}

ClassicalParams make_classical_params(Family family, int n0, std::vector<int> blocks, int r) {
  if (!is_classical(family)) throw std::invalid_argument("classical family expected");
  if (n0 < 0 || r < 0) throw std::invalid_argument("n0 and r must be nonnegative");
  for (int b : blocks)
    if (b < 2) throw std::invalid_argument("blocks must be >= 2 (size-1 factors go through n0)");
  if (family == Family::A && r != 0)
    throw std::invalid_argument("family A takes no tail parameter");
  if (family == Family::D && r == 1) throw std::invalid_argument("family D requires r != 1");

  ClassicalParams p{family, n0, std::move(blocks), r};
  if (p.black_count() < 1) throw std::invalid_argument("parameters paint no node black");
  make_lie_type(family, p.rank());  // range check on the derived rank
  return p;
}

Painting standard_painting(const ClassicalParams& params) {
  const LieType type = make_lie_type(params.family, params.rank());
  std::set<int> white;
  for (int i = 1; i <= params.rank(); ++i) white.insert(i);
  for (int b : black_positions(params)) white.erase(b);
  return make_painting(type, white);
}

Vec koszul_closed_form(const ClassicalParams& params) {
  const std::vector<int> cols = columns(params);
  const int t = static_cast<int>(cols.size());
  const Int r = params.r;
  Vec ks;
  if (params.family == Family::A) {
    for (int i = 0; i + 1 < t; ++i) ks.push_back(cols[i] + cols[i + 1]);
    return ks;
  }
  for (int i = 0; i + 1 < t; ++i) ks.push_back(cols[i] + cols[i + 1]);
  const Int last = cols[t - 1];
  switch (params.family) {
    case Family::B:
      ks.push_back(r > 0 ? last + 2 * r : 2 * last);
      break;
    case Family::C:
      ks.push_back(last + 2 * r + 1);
      break;
    case Family::D:
      if (r > 0)
        ks.push_back(last + 2 * r - 1);
      else
        ks.push_back(last == 1 ? 2 : 2 * (last - 1));
      break;
    default:
      throw std::logic_error("unreachable");
  }
  return ks;
}

Vec koszul_string_count(const ClassicalParams& params) {
  const std::vector<int> cols = columns(params);
  const int t = static_cast<int>(cols.size());
  const Int r = params.r;
  Vec ks;
  if (params.family == Family::A) {
    for (int i = 0; i + 1 < t; ++i) ks.push_back(2 + (cols[i] - 1) + (cols[i + 1] - 1));
    return ks;
  }
  for (int i = 0; i < t; ++i) {
    const Int left = cols[i] - 1;
    if (i + 1 < t) {
      ks.push_back(2 + left + (cols[i + 1] - 1));
      continue;
    }
    switch (params.family) {
      case Family::B:
        // r = 0 paints the short end root black: its whites count twice.
        ks.push_back(r > 0 ? 2 + left + 2 * (r - 1) + 1 : 2 + 2 * left);
        break;
      case Family::C:
        ks.push_back(2 + left + 2 * r);
        break;
      case Family::D:
        if (r > 0)
          ks.push_back(2 + left + 2 * (r - 1));
        else
          ks.push_back(cols[i] == 1 ? 2 : 2 * (cols[i] - 1));  // painted fork tip
        break;
      default:
        throw std::logic_error("unreachable");
    }
  }
  return ks;
}

bool spin_closed_form(const ClassicalParams& params) {
  auto all_odd = [&] {
    for (int b : params.blocks)
      if (b % 2 == 0) return false;
    return true;
  };
  auto all_even = [&] {
    for (int b : params.blocks)
      if (b % 2 != 0) return false;
    return true;
  };
  auto same_parity = [&] { return all_odd() || all_even(); };

  switch (params.family) {
    case Family::A:
      return params.n0 > 0 ? all_odd() : same_parity();
    case Family::B:
      if (params.n0 > 0 && params.r > 0) return false;
      if (params.n0 > 0) return all_odd();
      return params.r > 0 ? all_even() : same_parity();
    case Family::C:
      return all_odd();
    case Family::D:
      if (params.n0 > 0 || params.r > 0) return all_odd();
      return same_parity();
    default:
      throw std::logic_error("unreachable");
  }
}

namespace {

void compositions_rec(int remaining, std::vector<int>& acc,
                      std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int part = 2; part <= remaining; ++part) {
    acc.push_back(part);
    compositions_rec(remaining - part, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  if (m >= 0) compositions_rec(m, acc, out);
  return out;
}

}  // namespace

std::vector<ClassicalParams> enumerate_params(Family family, int n) {
  std::vector<ClassicalParams> out;
  const int total = family == Family::A ? n + 1 : n;
  for (int n0 = 0; n0 <= total; ++n0) {
    const int max_r = family == Family::A ? 0 : total - n0;
    for (int r = 0; r <= max_r; ++r) {
      if (family == Family::D && r == 1) continue;
      for (const auto& blocks : compositions(total - n0 - r)) {
        try {
          out.push_back(make_classical_params(family, n0, blocks, r));
        } catch (const std::invalid_argument&) {
          // degenerate corner (no black node, rank too small): skip
        }
      }
    }
  }
  return out;
}

}  // namespace koszul
