#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszul/classical.hpp"
#include "koszul/lie.hpp"

namespace koszul {

// One transcribed row of the exceptional classification tables.
struct FixtureRow {
  std::string spec;            // e.g. "E7(1,2,3,5)"
  int b2 = 0;                  // expected number of black nodes
  Int d = 0;                   // expected number of positive T-roots
  std::map<int, Int> koszul;   // black node -> published Koszul coefficient
  bool spin = false;
};

// A published value known to disagree with exact recomputation. `corrected`
// is the value confirmed by an independent route and is what the regression
// accepts for the named field.
struct Discrepancy {
  std::string spec;
  std::string field;  // "koszul" | "d" | "spin"
  std::map<int, Int> published_koszul, corrected_koszul;
  Int published_d = 0, corrected_d = 0;
  bool published_spin = false, corrected_spin = false;
  std::string note;
};

struct CensusFibration {
  std::string base;
  int fiber_dim = 0;
};

struct CensusGroup {
  std::string group;
  int expected_count = 0;
  std::vector<CensusFibration> fibrations;
};

struct Census {
  int expected_total = 0;
  std::vector<CensusGroup> groups;
};

// One sampled parameter point of a classical family row.
struct ClassicalSample {
  Family family = Family::A;
  int n0 = 0;
  std::vector<int> blocks;
  int r = 0;
  Vec koszul;                    // published vector evaluated at the sample
  std::optional<Vec> corrected;  // set when the published formula is off
  std::optional<Int> d;
  bool spin = false;
};

struct ClassicalRow {
  std::string name;
  std::vector<ClassicalSample> samples;
  std::string note;
};

struct Fixture {
  std::vector<FixtureRow> rows;
  std::vector<Discrepancy> discrepancies;
  std::optional<Census> census;
  std::vector<ClassicalRow> classical_rows;
};

// Loads a UTF-8 JSON fixture ("rows" / "discrepancies" / "census" /
// "classical" keys, each optional). Throws std::runtime_error on I/O or
// parse failure.
Fixture load_fixture(const std::string& path);

ClassicalParams sample_params(const ClassicalSample& s);

}  // namespace koszul
