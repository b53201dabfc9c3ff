#include "koszul/fixtures.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace koszul {

namespace {

using nlohmann::json;

std::map<int, Int> parse_node_map(const json& j) {
  std::map<int, Int> out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out[std::stoi(it.key())] = it.value().get<Int>();
  return out;
}

FixtureRow parse_row(const json& j) {
  FixtureRow row;
  row.spec = j.at("spec").get<std::string>();
  row.b2 = j.at("b2").get<int>();
  row.d = j.at("d").get<Int>();
  row.koszul = parse_node_map(j.at("koszul"));
  row.spin = j.at("spin").get<bool>();
  return row;
}

Discrepancy parse_discrepancy(const json& j) {
  Discrepancy d;
  d.spec = j.at("spec").get<std::string>();
  d.field = j.at("field").get<std::string>();
  if (d.field == "koszul") {
    d.published_koszul = parse_node_map(j.at("published"));
    d.corrected_koszul = parse_node_map(j.at("corrected"));
  } else if (d.field == "d") {
    d.published_d = j.at("published").get<Int>();
    d.corrected_d = j.at("corrected").get<Int>();
  } else if (d.field == "spin") {
    d.published_spin = j.at("published").get<bool>();
    d.corrected_spin = j.at("corrected").get<bool>();
  } else {
    throw std::runtime_error("unknown discrepancy field: " + d.field);
  }
  d.note = j.value("note", "");
  return d;
}

Census parse_census(const json& j) {
  Census c;
  c.expected_total = j.at("expected_total").get<int>();
  for (const json& g : j.at("groups")) {
    CensusGroup group;
    group.group = g.at("group").get<std::string>();
    group.expected_count = g.at("expected_count").get<int>();
    for (const json& f : g.at("fibrations"))
      group.fibrations.push_back(
          {f.at("base").get<std::string>(), f.at("fiber_dim").get<int>()});
    c.groups.push_back(std::move(group));
  }
  return c;
}

ClassicalSample parse_sample(const json& j) {
  ClassicalSample s;
  s.family = parse_family_letter(j.at("family").get<std::string>().at(0));
  s.n0 = j.at("n0").get<int>();
  s.blocks = j.at("blocks").get<std::vector<int>>();
  s.r = j.value("r", 0);
  s.koszul = j.at("koszul").get<Vec>();
  if (j.contains("corrected")) s.corrected = j.at("corrected").get<Vec>();
  if (j.contains("d")) s.d = j.at("d").get<Int>();
  s.spin = j.at("spin").get<bool>();
  return s;
}

ClassicalRow parse_classical_row(const json& j) {
  ClassicalRow row;
  row.name = j.at("name").get<std::string>();
  row.note = j.value("note", "");
  for (const json& s : j.at("samples")) row.samples.push_back(parse_sample(s));
  return row;
}

}  // namespace

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::runtime_error("fixture parse failure in " + path + ": " + e.what());
  }
  try {
    Fixture f;
    if (doc.contains("rows"))
      for (const json& j : doc.at("rows")) f.rows.push_back(parse_row(j));
    if (doc.contains("discrepancies"))
      for (const json& j : doc.at("discrepancies"))
        f.discrepancies.push_back(parse_discrepancy(j));
    if (doc.contains("census")) f.census = parse_census(doc.at("census"));
    if (doc.contains("classical"))
      for (const json& j : doc.at("classical")) f.classical_rows.push_back(parse_classical_row(j));
    return f;
  } catch (const json::exception& e) {
    throw std::runtime_error("fixture schema failure in " + path + ": " + e.what());
  }
}

ClassicalParams sample_params(const ClassicalSample& s) {
  return make_classical_params(s.family, s.n0, s.blocks, s.r);
}

}  // namespace koszul
