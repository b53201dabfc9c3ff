#include "koszul/regression.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "koszul/cspace.hpp"
#include "koszul/flag_spec.hpp"

namespace koszul {

namespace {

std::string show_vec(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string show_map(const std::map<int, Int>& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [node, k] : m) {
    os << (first ? "" : ",") << node << ":" << k;
    first = false;
  }
  os << "}";
  return os.str();
}

void check_rows(const Fixture& fixture, RegressionReport& report) {
  for (const FixtureRow& row : fixture.rows) {
    ++report.rows_checked;
    bool ok = true;
    std::ostringstream why;
    try {
      const Painting p = to_painting(parse_flag_spec(row.spec));
      const KoszulForm form = koszul_form(p);
      const TRootTable table = t_root_table(p);

      std::map<int, Int> expected_koszul = row.koszul;
      Int expected_d = row.d;
      bool expected_spin = row.spin;
      for (const Discrepancy& d : fixture.discrepancies) {
        if (d.spec != row.spec) continue;
        // the entry must quote the published value it overrides
        if (d.field == "koszul") {
          if (d.published_koszul != row.koszul) {
            ok = false;
            why << " stale koszul discrepancy entry";
          }
          expected_koszul = d.corrected_koszul;
        } else if (d.field == "d") {
          if (d.published_d != row.d) {
            ok = false;
            why << " stale d discrepancy entry";
          }
          expected_d = d.corrected_d;
        } else if (d.field == "spin") {
          if (d.published_spin != row.spin) {
            ok = false;
            why << " stale spin discrepancy entry";
          }
          expected_spin = d.corrected_spin;
        }
      }

      std::map<int, Int> computed_koszul;
      for (std::size_t i = 0; i < p.black.size(); ++i)
        computed_koszul[p.black[i]] = form.koszul_vector[i];

      if (second_betti(p) != row.b2) {
        ok = false;
        why << " b2 computed=" << second_betti(p) << " expected=" << row.b2;
      }
      if (table.d() != expected_d) {
        ok = false;
        why << " d computed=" << table.d() << " expected=" << expected_d;
      }
      if (computed_koszul != expected_koszul) {
        ok = false;
        why << " koszul computed=" << show_map(computed_koszul)
            << " expected=" << show_map(expected_koszul);
      }
      if (is_spin(p) != expected_spin) {
        ok = false;
        why << " spin computed=" << (is_spin(p) ? "true" : "false")
            << " expected=" << (expected_spin ? "true" : "false");
      }
    } catch (const std::exception& e) {
      ok = false;
      why << " error: " << e.what();
    }
    if (!ok) {
      ++report.rows_failed;
      report.mismatches.push_back(row.spec + ":" + why.str());
    }
  }
}

void check_census(const Fixture& fixture, RegressionReport& report) {
  const Census& census = *fixture.census;

  // spin representatives per group, recomputed from the table rows
  std::map<std::string, std::vector<Painting>> spin_reps;
  for (const FixtureRow& row : fixture.rows) {
    const Painting p = to_painting(parse_flag_spec(row.spec));
    if (is_spin(p)) spin_reps[group_token(p.rs->type)].push_back(p);
  }

  int total = 0;
  for (const CensusGroup& g : census.groups) {
    const LieType group = parse_group_token(g.group);
    const auto fibrations = enumerate_spin_fibrations(group, spin_reps[g.group]);
    report.census_breakdown.push_back(static_cast<int>(fibrations.size()));
    total += static_cast<int>(fibrations.size());

    std::set<std::pair<std::string, int>> computed, expected;
    for (const SpinFibration& f : fibrations)
      computed.insert({format_flag_spec(f.base), f.fiber_dim});
    for (const CensusFibration& f : g.fibrations)
      expected.insert({format_flag_spec(parse_flag_spec(f.base)), f.fiber_dim});

    ++report.census_checked;
    if (static_cast<int>(fibrations.size()) != g.expected_count || computed != expected) {
      ++report.census_failed;
      std::ostringstream why;
      why << g.group << ": census computed " << fibrations.size() << " fibrations, expected "
          << g.expected_count;
      for (const auto& [base, dim] : computed)
        if (!expected.count({base, dim})) why << "; unexpected T^" << dim << " over " << base;
      for (const auto& [base, dim] : expected)
        if (!computed.count({base, dim})) why << "; missing T^" << dim << " over " << base;
      report.mismatches.push_back(why.str());
    }
  }
  report.census_total = total;
  ++report.census_checked;
  if (total != census.expected_total) {
    ++report.census_failed;
    report.mismatches.push_back("census total computed=" + std::to_string(total) +
                                " expected=" + std::to_string(census.expected_total));
  }
}

void check_classical(const Fixture& fixture, RegressionReport& report) {
  for (const ClassicalRow& row : fixture.classical_rows) {
    for (const ClassicalSample& sample : row.samples) {
      ++report.classical_checked;
      bool ok = true;
      std::ostringstream why;
      try {
        const ClassicalParams params = sample_params(sample);
        const Vec expected = sample.corrected.value_or(sample.koszul);
        const Vec closed = koszul_closed_form(params);
        const Vec strings = koszul_string_count(params);
        const Painting p = standard_painting(params);
        const Vec general = koszul_form(p).koszul_vector;

        if (closed != strings || closed != general) {
          ok = false;
          why << " route disagreement closed=" << show_vec(closed)
              << " strings=" << show_vec(strings) << " general=" << show_vec(general);
        }
        if (general != expected) {
          ok = false;
          why << " koszul computed=" << show_vec(general) << " expected=" << show_vec(expected);
        }
        const bool spin_formula = spin_closed_form(params);
        const bool spin_parity = is_spin(p);
        if (spin_formula != spin_parity || spin_parity != sample.spin) {
          ok = false;
          why << " spin formula=" << spin_formula << " parity=" << spin_parity
              << " expected=" << sample.spin;
        }
        if (sample.d && t_root_table(p).d() != *sample.d) {
          ok = false;
          why << " d computed=" << t_root_table(p).d() << " expected=" << *sample.d;
        }
      } catch (const std::exception& e) {
        ok = false;
        why << " error: " << e.what();
      }
      if (!ok) {
        ++report.classical_failed;
        std::ostringstream head;
        head << row.name << " [" << family_letter(sample.family) << " n0=" << sample.n0
             << " blocks=";
        for (std::size_t i = 0; i < sample.blocks.size(); ++i)
          head << (i ? "," : "") << sample.blocks[i];
        head << " r=" << sample.r << "]:";
        report.mismatches.push_back(head.str() + why.str());
      }
    }
  }
}

}  // namespace

RegressionReport run_regression(const Fixture& fixture) {
  RegressionReport report;
  check_rows(fixture, report);
  if (fixture.census) check_census(fixture, report);
  check_classical(fixture, report);
  return report;
}

}  // namespace koszul
