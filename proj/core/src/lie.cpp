#include "koszul/lie.hpp"

#include <cctype>
#include <stdexcept>

namespace koszul {

bool is_classical(Family f) {
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

bool is_exceptional(Family f) { return !is_classical(f); }

namespace {

int fixed_rank(Family f) {
  switch (f) {
    case Family::G2: return 2;
    case Family::F4: return 4;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    default: return 0;
  }
}

}  // namespace

LieType make_lie_type(Family family, int rank) {
  if (is_exceptional(family)) {
    if (rank != fixed_rank(family))
      throw std::invalid_argument("rank " + std::to_string(rank) + " invalid for " +
                                  family_letter(family));
    return {family, rank};
  }
  int min_rank = 1;
  if (family == Family::B || family == Family::C) min_rank = 2;
  if (family == Family::D) min_rank = 3;
  if (rank < min_rank || rank > kMaxClassicalRank)
    throw std::invalid_argument("rank " + std::to_string(rank) + " out of range for family " +
                                family_letter(family));
  return {family, rank};
}

std::string family_letter(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  throw std::logic_error("unreachable");
}

Family parse_family_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    default: throw std::invalid_argument(std::string("unknown family letter: ") + c);
  }
}

LieType parse_group_token(const std::string& token) {
  if (token == "G2") return make_lie_type(Family::G2, 2);
  if (token == "F4") return make_lie_type(Family::F4, 4);
  if (token == "E6") return make_lie_type(Family::E6, 6);
  if (token == "E7") return make_lie_type(Family::E7, 7);
  if (token == "E8") return make_lie_type(Family::E8, 8);
  if (token.size() < 2) throw std::invalid_argument("bad group token: " + token);
  Family f = parse_family_letter(token[0]);
  int rank = 0;
  for (std::size_t i = 1; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      throw std::invalid_argument("bad group token: " + token);
    rank = rank * 10 + (token[i] - '0');
    if (rank > 1000) throw std::invalid_argument("bad group token: " + token);
  }
  return make_lie_type(f, rank);
}

std::string group_token(const LieType& t) {
  if (is_exceptional(t.family)) return family_letter(t.family);
  return family_letter(t.family) + std::to_string(t.rank);
}

Mat cartan_matrix(const LieType& t) {
  make_lie_type(t.family, t.rank);  // re-validate
  const int n = t.rank;
  Mat c(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) link(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      chain(n);
      c[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case Family::C:
      chain(n);
      c[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case Family::D:
      chain(n - 1);
      link(n - 3, n - 1);
      break;
    case Family::G2:
      c[0][1] = -3;  // alpha_1 long
      c[1][0] = -1;
      break;
    case Family::F4:
      chain(n);
      c[1][2] = -2;  // nodes 3,4 short
      break;
    case Family::E6:
      chain(5);
      link(2, 5);
      break;
    case Family::E7:
      chain(6);
      link(3, 6);
      break;
    case Family::E8:
      chain(7);
      link(4, 7);
      break;
  }
  return c;
}

std::size_t positive_root_count(const LieType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::G2: return 6;
    case Family::F4: return 24;
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
  }
  throw std::logic_error("unreachable");
}

}  // namespace koszul
