// Command-line frontend: inspect painted diagrams, classical families and
// torus bundles, and replay the table regressions from a JSON fixture.
//
// Exit codes: 0 success, 1 usage/validation/I-O error, 2 regression mismatch.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "koszul/cspace.hpp"
#include "koszul/flag_spec.hpp"
#include "koszul/regression.hpp"

namespace {

using koszul::Int;
using koszul::Mat;
using koszul::Vec;
using ordered_json = nlohmann::ordered_json;

struct Style {
  bool ascii = false;

  std::string weight(int node) const {
    return (ascii ? "L_" : "Λ") + std::to_string(node);
  }
  std::string root(int node) const {
    return (ascii ? "a_" : "α") + std::to_string(node);
  }
};

std::string render_combination(const Vec& coords, const Style& style, bool weights) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (!first) os << " + ";
    if (coords[i] != 1) os << coords[i];
    os << (weights ? style.weight(static_cast<int>(i) + 1)
                   : style.root(static_cast<int>(i) + 1));
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string render_tuple(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list: " + text);
    out.push_back(std::stoi(item));
  }
  return out;
}

Mat parse_t0(const std::string& text) {
  Mat rows;
  if (text.empty()) return rows;
  std::string row_text;
  std::istringstream in(text);
  while (std::getline(in, row_text, ';')) {
    Vec row;
    for (int x : parse_int_list(row_text)) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

koszul::Painting painting_from_args(const std::string& spec_text, bool black_mode) {
  koszul::FlagSpec spec = koszul::parse_flag_spec(spec_text);
  if (black_mode) {
    std::set<int> white;
    for (int i = 1; i <= spec.type.rank; ++i)
      if (!spec.white.count(i)) white.insert(i);
    spec.white = std::move(white);
  }
  return to_painting(spec);
}

int cmd_flag(const std::string& spec_text, bool black_mode, bool as_json, const Style& style) {
  const koszul::Painting p = painting_from_args(spec_text, black_mode);
  const koszul::KoszulForm form = koszul_form(p);
  const koszul::TRootTable table = t_root_table(p);
  const bool spin = koszul::is_spin(p);

  if (as_json) {
    ordered_json out;
    out["group"] = group_token(p.rs->type);
    out["white"] = p.white;
    out["b2"] = second_betti(p);
    out["dim"] = real_dimension(p);
    out["koszul_root"] = form.root_coords;
    out["koszul_weight"] = form.weight_coords;
    out["koszul_vector"] = form.koszul_vector;
    out["d"] = table.d();
    ordered_json troots = ordered_json::array();
    for (const auto& [xi, mult] : table.entries) troots.push_back({{"xi", xi}, {"d", mult}});
    out["t_roots"] = std::move(troots);
    out["spin"] = spin;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "flag manifold " << format_flag_spec(p) << "\n";
  std::cout << "  white nodes:   " << render_tuple(Vec(p.white.begin(), p.white.end())) << "\n";
  std::cout << "  black nodes:   " << render_tuple(Vec(p.black.begin(), p.black.end())) << "\n";
  std::cout << "  b2:            " << second_betti(p) << "\n";
  std::cout << "  real dim:      " << real_dimension(p) << "\n";
  std::cout << "  koszul (roots):   " << render_combination(form.root_coords, style, false)
            << "\n";
  std::cout << "  koszul (weights): " << render_combination(form.weight_coords, style, true)
            << "\n";
  std::cout << "  koszul vector: " << render_tuple(form.koszul_vector) << "\n";
  std::cout << "  d:             " << table.d() << "\n";
  for (const auto& [xi, mult] : table.entries)
    std::cout << "    t-root " << render_tuple(xi) << "  d_xi = " << mult << "\n";
  std::cout << "  spin/metaplectic: " << (spin ? "yes" : "no") << "\n";
  return 0;
}

int cmd_classical(const std::string& family_text, int n0, const std::string& blocks_text, int r,
                  bool as_json, const Style& style) {
  if (family_text.size() != 1) throw std::invalid_argument("family must be one of A,B,C,D");
  const koszul::Family family = koszul::parse_family_letter(family_text[0]);
  std::vector<int> blocks = blocks_text.empty() ? std::vector<int>{} : parse_int_list(blocks_text);
  const koszul::ClassicalParams params = make_classical_params(family, n0, blocks, r);

  const Vec closed = koszul_closed_form(params);
  const Vec strings = koszul_string_count(params);
  const koszul::Painting p = standard_painting(params);
  const Vec general = koszul_form(p).koszul_vector;
  const bool routes_agree = closed == strings && closed == general;
  const bool spin_formula = spin_closed_form(params);
  const bool spin_parity = is_spin(p);

  if (as_json) {
    ordered_json out;
    out["family"] = koszul::family_letter(family);
    out["n0"] = params.n0;
    out["blocks"] = params.blocks;
    out["r"] = params.r;
    out["rank"] = params.rank();
    out["painting"] = format_flag_spec(p);
    out["koszul_closed"] = closed;
    out["koszul_strings"] = strings;
    out["koszul_general"] = general;
    out["koszul_agree"] = routes_agree;
    out["spin_formula"] = spin_formula;
    out["spin_parity"] = spin_parity;
    out["spin_agree"] = spin_formula == spin_parity;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "classical family " << koszul::family_letter(family) << " rank " << params.rank()
            << "  (n0=" << params.n0 << " blocks=";
  for (std::size_t i = 0; i < params.blocks.size(); ++i)
    std::cout << (i ? "," : "") << params.blocks[i];
  if (params.family != koszul::Family::A) std::cout << " r=" << params.r;
  std::cout << ")\n";
  std::cout << "  standard painting: " << format_flag_spec(p) << "\n";
  std::cout << "  koszul closed form:  " << render_tuple(closed) << "\n";
  std::cout << "  koszul string count: " << render_tuple(strings) << "\n";
  std::cout << "  koszul general:      " << render_tuple(general) << "  ["
            << (routes_agree ? "AGREE" : "DISAGREE") << "]\n";
  std::cout << "  koszul (weights): " << render_combination(koszul_form(p).weight_coords, style,
                                                            true)
            << "\n";
  std::cout << "  spin (parity criterion): " << (spin_formula ? "yes" : "no") << "  ["
            << (spin_formula == spin_parity ? "AGREE" : "DISAGREE") << " with general test]\n";
  return 0;
}

int cmd_cspace(const std::string& spec_text, bool black_mode, const std::string& t0_text,
               bool construct, bool as_json, const Style& style) {
  (void)style;
  const koszul::Painting base = painting_from_args(spec_text, black_mode);

  if (construct) {
    const auto reports = construct_spin_cspaces(base);
    if (as_json) {
      ordered_json out;
      out["base"] = format_flag_spec(base);
      out["constructions"] = ordered_json::array();
      for (const auto& rep : reports) {
        ordered_json j;
        j["pi0"] = rep.pi0;
        j["pi1"] = rep.pi1;
        j["fiber_dim"] = rep.fiber_dim;
        j["b2"] = cspace_second_betti(rep.space);
        j["spin"] = is_spin_cspace(rep.space);
        out["constructions"].push_back(std::move(j));
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    std::cout << reports.size() << " spin bundle construction(s) over " << format_flag_spec(base)
              << "\n";
    for (const auto& rep : reports) {
      std::cout << "  pi0 = " << render_tuple(Vec(rep.pi0.begin(), rep.pi0.end()))
                << "  fiber T^" << rep.fiber_dim << "  b2 = " << cspace_second_betti(rep.space)
                << "\n";
    }
    return 0;
  }

  const koszul::CSpace cs = make_cspace(base, parse_t0(t0_text));
  const bool spin = is_spin_cspace(cs);
  const bool c1_zero = has_trivial_c1(cs);

  if (as_json) {
    ordered_json out;
    out["base"] = format_flag_spec(base);
    out["t0_rows"] = cs.t0_rows;
    out["fiber_dim"] = cs.fiber_dim();
    out["b2"] = cspace_second_betti(cs);
    out["p1"] = cs.p1;
    out["spin"] = spin;
    out["trivial_c1"] = c1_zero;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "torus bundle over " << format_flag_spec(base) << "\n";
  std::cout << "  fiber:      T^" << cs.fiber_dim() << (cs.is_m_space() ? "  (M-space)" : "")
            << "\n";
  std::cout << "  b2(M):      " << cspace_second_betti(cs) << "\n";
  std::cout << "  P1 basis:";
  if (cs.p1.empty()) std::cout << "   (trivial)";
  std::cout << "\n";
  for (const Vec& b : cs.p1) std::cout << "    " << render_tuple(b) << "\n";
  std::cout << "  spin:       " << (spin ? "yes" : "no") << "\n";
  std::cout << "  c1 = 0:     " << (c1_zero ? "yes" : "no") << "\n";
  return 0;
}

int cmd_regress(const std::string& path, bool as_json) {
  const koszul::Fixture fixture = koszul::load_fixture(path);
  const koszul::RegressionReport report = run_regression(fixture);

  if (as_json) {
    ordered_json out;
    out["rows_checked"] = report.rows_checked;
    out["rows_failed"] = report.rows_failed;
    out["classical_checked"] = report.classical_checked;
    out["classical_failed"] = report.classical_failed;
    out["census_checked"] = report.census_checked;
    out["census_failed"] = report.census_failed;
    out["census_total"] = report.census_total;
    out["census_breakdown"] = report.census_breakdown;
    out["mismatches"] = report.mismatches;
    out["ok"] = report.ok();
    std::cout << out.dump(2) << "\n";
    return report.ok() ? 0 : 2;
  }

  std::cout << "rows:      " << report.rows_checked - report.rows_failed << "/"
            << report.rows_checked << " ok\n";
  if (report.classical_checked)
    std::cout << "classical: " << report.classical_checked - report.classical_failed << "/"
              << report.classical_checked << " ok\n";
  if (report.census_checked) {
    std::cout << "census:    " << report.census_total << " fibrations, breakdown (";
    for (std::size_t i = 0; i < report.census_breakdown.size(); ++i)
      std::cout << (i ? ", " : "") << report.census_breakdown[i];
    std::cout << ")\n";
  }
  for (const std::string& m : report.mismatches) std::cout << "MISMATCH " << m << "\n";
  std::cout << (report.ok() ? "OK" : "FAILED") << "\n";
  return report.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin structures on flag manifolds and torus bundles, in exact arithmetic"};
  app.require_subcommand(1);

  bool json_flag = false, ascii_flag = false, black_flag = false, construct_flag = false;
  std::string spec_text, family_text, blocks_text, t0_text, fixture_path;
  int n0 = 0, r = 0;

  auto* flag_cmd = app.add_subcommand("flag", "report on one painted diagram");
  flag_cmd->add_option("spec", spec_text, "diagram name, e.g. \"E7(1,2,3,5)\"")->required();
  flag_cmd->add_flag("--black", black_flag, "listed nodes are black instead of white");
  flag_cmd->add_flag("--json", json_flag, "emit one JSON object");
  flag_cmd->add_flag("--ascii", ascii_flag, "ASCII weight symbols");

  auto* classical_cmd = app.add_subcommand("classical", "classical family with three Koszul routes");
  classical_cmd->add_option("family", family_text, "A, B, C or D")->required();
  classical_cmd->add_option("--n0", n0, "number of U(1) factors");
  classical_cmd->add_option("--blocks", blocks_text, "comma-separated block sizes, each >= 2");
  classical_cmd->add_option("--r", r, "tail parameter (B/C/D)");
  classical_cmd->add_flag("--json", json_flag, "emit one JSON object");
  classical_cmd->add_flag("--ascii", ascii_flag, "ASCII weight symbols");

  auto* cspace_cmd = app.add_subcommand("cspace", "torus bundle over a flag manifold");
  cspace_cmd->add_option("spec", spec_text, "base diagram name")->required();
  cspace_cmd->add_flag("--black", black_flag, "listed nodes are black instead of white");
  cspace_cmd->add_option("--t0", t0_text, "generator rows, e.g. \"1,0,0;0,1,1\"");
  cspace_cmd->add_flag("--construct", construct_flag, "enumerate all spin bundle constructions");
  cspace_cmd->add_flag("--json", json_flag, "emit one JSON object");
  cspace_cmd->add_flag("--ascii", ascii_flag, "ASCII weight symbols");

  auto* regress_cmd = app.add_subcommand("regress", "recompute a JSON table fixture");
  regress_cmd->add_option("fixture", fixture_path, "fixture file path")->required();
  regress_cmd->add_flag("--json", json_flag, "emit one JSON object");
  regress_cmd->add_flag("--ascii", ascii_flag, "ASCII weight symbols");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const Style style{ascii_flag};
  try {
    if (flag_cmd->parsed()) return cmd_flag(spec_text, black_flag, json_flag, style);
    if (classical_cmd->parsed())
      return cmd_classical(family_text, n0, blocks_text, r, json_flag, style);
    if (cspace_cmd->parsed())
      return cmd_cspace(spec_text, black_flag, t0_text, construct_flag, json_flag, style);
    if (regress_cmd->parsed()) return cmd_regress(fixture_path, json_flag);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
