#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace koszul {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };

// CLI guard; every sweep in the test suites stays well below this.
inline constexpr int kMaxClassicalRank = 32;

struct LieType {
  Family family;
  int rank;

  friend bool operator==(const LieType&, const LieType&) = default;
};

bool is_classical(Family f);
bool is_exceptional(Family f);

// Throws std::invalid_argument when the rank is out of range for the family
// (A: >=1, B/C: >=2, D: >=3, classical <= kMaxClassicalRank, exceptional fixed).
LieType make_lie_type(Family family, int rank);

// "E7" -> {E7,7}, "B4" -> {B,4}. Throws std::invalid_argument on bad tokens.
LieType parse_group_token(const std::string& token);
std::string group_token(const LieType& t);

std::string family_letter(Family f);
Family parse_family_letter(char c);

// Node enumeration: classical chains run 1..n with the short/long end last
// (B: alpha_n short, C: alpha_n long, D: fork tips n-1 and n on node n-2).
// G2: alpha_1 long, alpha_2 short. F4: alpha_1, alpha_2 long; double edge
// between nodes 2 and 3. E6/E7/E8: chain 1..(rank-1) with the last node
// attached to node 3/4/5 respectively. Rows satisfy
// alpha_i = sum_j c_ij Lambda_j.
Mat cartan_matrix(const LieType& t);

// Closed-form |R+| per family, used as a generation cross-check.
std::size_t positive_root_count(const LieType& t);

}  // namespace koszul
