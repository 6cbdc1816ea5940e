// jrc: exact computations around jumping rational curves.
//
// Subcommands:
//   counts   curve counts N_d / N_d(a.)
//   jump     degree of the jumping divisor for a plane bundle
//   h        reducible-boundary correction, with optional term audit
//   table    intersection table of the universal family with provenance
//   syzygy   syzygy dimensions / jumping test / splitting type from a file
//   glue     generic nodal gluing of two splitting types
//
// All results are printed as JSON with counts and degrees as decimal
// strings.  Exit codes: 0 success, 2 invalid input, 3 unavailable data.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jrc/jrc.hpp"

namespace {

using jrc::Int;
using nlohmann::json;

json entry_json(const jrc::Entry& e) {
  return {{"value", e.value.str()}, {"provenance", jrc::provenance_label(e.prov)}};
}

json report_input_json(const jrc::ReportInput& in) {
  json out = entry_json(in.used);
  if (in.literal) out["literal"] = in.literal->str();
  if (in.published) out["published"] = in.published->str();
  return out;
}

std::vector<int> parse_codims(const std::string& raw) {
  std::vector<int> codims;
  std::string piece;
  std::istringstream is(raw);
  while (std::getline(is, piece, ','))
    codims.push_back(static_cast<int>(jrc::parse_decimal(piece)));
  if (codims.empty()) throw jrc::invalid_input("empty codimension list");
  return codims;
}

// Twist entries "value@index" (1-based); unspecified indices are zero.
jrc::TwistVector parse_twist(const std::vector<std::string>& specs, int slots) {
  std::vector<Int> t(static_cast<std::size_t>(slots), Int(0));
  for (const std::string& chunk : specs) {
    std::istringstream is(chunk);
    std::string piece;
    while (std::getline(is, piece, ',')) {
      auto at = piece.find('@');
      if (at == std::string::npos)
        throw jrc::invalid_input("twist entry must look like value@index: " + piece);
      Int value = jrc::parse_decimal(piece.substr(0, at));
      int index = static_cast<int>(jrc::parse_decimal(piece.substr(at + 1)));
      if (index < 1 || index > slots)
        throw jrc::invalid_input("twist index out of range: " + piece);
      t[static_cast<std::size_t>(index - 1)] = value;
    }
  }
  return jrc::TwistVector(std::move(t));
}

jrc::SplittingType parse_splitting(const std::string& raw) {
  std::vector<Int> parts;
  std::string piece;
  std::istringstream is(raw);
  while (std::getline(is, piece, ',')) parts.push_back(jrc::parse_decimal(piece));
  if (parts.empty()) throw jrc::invalid_input("empty splitting type");
  return jrc::SplittingType(std::move(parts));
}

json splitting_json(const jrc::SplittingType& st) {
  json arr = json::array();
  for (const Int& part : st.parts) arr.push_back(part.convert_to<long long>());
  return arr;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct CommonOpts {
  std::string overrides_path;
  bool json_output = true;
  bool audit = false;

  jrc::Overrides load() const {
    if (overrides_path.empty()) return {};
    return jrc::load_overrides(overrides_path);
  }
};

int cmd_counts(const CommonOpts& common, int d, int n, const std::string& codims_raw) {
  jrc::Overrides overrides = common.load();
  jrc::CountProvider provider = overrides.make_provider();

  json doc;
  doc["command"] = {{"name", "counts"}, {"d", d}, {"n", n}};
  Int value;
  if (n == 2 && codims_raw.empty()) {
    value = jrc::plane_count(d);
    doc["provenance"] = "computed";
  } else {
    jrc::ConditionVector conds(n, parse_codims(codims_raw));
    value = provider.count(d, conds);
    doc["provenance"] = (n == 2) ? "computed" : "override";
    doc["command"]["codims"] = codims_raw;
  }
  doc["N"] = value.str();
  emit(doc);
  return 0;
}

int cmd_jump(const CommonOpts& common, int d, int r, const std::string& a_raw,
             const std::string& b_raw) {
  Int a = jrc::parse_decimal(a_raw);
  Int b = jrc::parse_decimal(b_raw);
  jrc::Overrides overrides = common.load();

  jrc::JumpReport report = jrc::jump_degree_plane(d, r, a, b, overrides);

  json doc;
  doc["command"] = {{"name", "jump"}, {"d", d}, {"r", r}, {"a", a.str()}, {"b", b.str()}};
  json tw = json::array();
  for (int i = 0; i < 3 * d - 2; ++i)
    tw.push_back(i == 0 ? Int((a * d) / r + 1).str() : std::string("0"));
  doc["command"]["t"] = tw;
  doc["J"] = report.degree.str();
  doc["terms"] = {{"euler", report.term_euler.str()},
                  {"chern", report.term_chern.str()},
                  {"bracket", report.term_bracket.str()},
                  {"h", report.term_h.str()}};
  json inputs;
  for (const auto& [name, input] : report.inputs) inputs[name] = report_input_json(input);
  doc["inputs"] = inputs;
  doc["warnings"] = report.warnings;
  emit(doc);
  return 0;
}

int cmd_h(const CommonOpts& common, int d, int r, const std::string& a_raw,
          const std::vector<std::string>& twist_specs) {
  Int a = jrc::parse_decimal(a_raw);
  if ((a * d) % r != 0) throw jrc::invalid_input("r does not divide ad");
  jrc::Overrides overrides = common.load();
  jrc::CountProvider provider = overrides.make_provider();

  int k = 3 * d - 2;
  jrc::ConditionVector conds = jrc::ConditionVector::plane_points(k);
  jrc::TwistVector t = twist_specs.empty()
                           ? jrc::TwistVector::concentrated(k, (a * d) / r + 1)
                           : parse_twist(twist_specs, k);
  if (t.sum() != (a * d) / r + 1)
    throw jrc::invalid_input("twist sum: sum t_i != ad/r + 1");

  jrc::BoundaryResult result = jrc::h_correction_terms(2, d, r, a, conds, t, provider);
  Int used = overrides.h ? *overrides.h : result.h;

  json doc;
  doc["command"] = {{"name", "h"}, {"d", d}, {"r", r}, {"a", a.str()}};
  json tw = json::array();
  for (const Int& ti : t.t) tw.push_back(ti.str());
  doc["command"]["t"] = tw;
  doc["h"] = used.str();
  doc["provenance"] = overrides.h ? "override" : "computed";
  doc["literal"] = result.h.str();

  json warnings = json::array();
  if (auto pub = jrc::published_boundary_h(2, d, r, a, t)) {
    doc["published"] = pub->str();
    if (result.h != *pub)
      warnings.push_back("literal boundary sum " + result.h.str() +
                         " differs from the published example value " + pub->str());
  }
  doc["warnings"] = warnings;

  if (common.audit) {
    json terms = json::array();
    for (const jrc::BoundaryTerm& term : result.terms) {
      json item;
      item["d1"] = term.d1;
      item["I"] = term.indices;
      item["multiplicity"] = term.multiplicity.str();
      item["factor"] = term.factor.str();
      item["contribution"] = term.contribution.str();
      terms.push_back(item);
    }
    doc["terms"] = terms;
  }
  emit(doc);
  return 0;
}

int cmd_table(const CommonOpts& common, int d, int n, const std::string& codims_raw) {
  jrc::Overrides overrides = common.load();
  jrc::CountProvider provider = overrides.make_provider();

  jrc::ConditionVector conds = codims_raw.empty()
                                   ? jrc::ConditionVector::plane_points(3 * d - 2)
                                   : jrc::ConditionVector(n, parse_codims(codims_raw));
  jrc::IntersectionTable table = jrc::build_table(d, conds, provider, overrides);

  json doc;
  doc["command"] = {{"name", "table"}, {"d", d}, {"n", conds.n}};
  doc["genus"] = entry_json(table.genus);
  json m1 = entry_json(table.m_at(1));
  jrc::PublishedValues published = jrc::published_table_values(conds.n, d);
  if (published.m1) m1["published"] = published.m1->str();
  doc["m1"] = m1;
  doc["L2"] = entry_json(table.l_sq);
  json lr1 = entry_json(table.l_dot_r1);
  if (published.l_dot_r1) lr1["published"] = published.l_dot_r1->str();
  doc["L_dot_R1"] = lr1;

  json spairs;
  for (const auto& [key, entry] : table.s_pairs)
    spairs[std::to_string(key.first) + "," + std::to_string(key.second)] = entry_json(entry);
  doc["s_pair"] = spairs;

  json r1s = json::array();
  for (int j = 1; j <= table.condition_count(); ++j) r1s.push_back(table.r1_dot_s_at(j).str());
  doc["R1_dot_s"] = r1s;
  doc["L_dot_s"] = "0";
  doc["warnings"] = table.warnings;
  emit(doc);
  return 0;
}

int cmd_syzygy(const std::string& path, int k, bool want_splitting, bool want_jumping) {
  jrc::Parametrization F = jrc::load_parametrization(path);

  json doc;
  doc["command"] = {{"name", "syzygy"}, {"file", path}, {"n", F.n}, {"d", F.d}};
  json warnings = json::array();

  bool defaulted = (k < 0 && !want_splitting && !want_jumping);
  if (k >= 0) {
    doc["syzygy_dim"] = jrc::syzygy_dim(F, k).str();
    doc["surjective"] = jrc::surjective_at(F, k);
    doc["k"] = k;
  }
  if (want_splitting || defaulted)
    doc["splitting"] = splitting_json(jrc::splitting_from_syzygies(F));
  if (want_jumping || want_splitting || defaulted) {
    if (F.d % F.n == 0) {
      doc["jumping"] = jrc::is_jumping_tangent(F);
    } else if (want_jumping) {
      throw jrc::invalid_input(
          "jumping criterion undefined: ambient dimension does not divide the degree");
    } else {
      warnings.push_back("jumping test skipped: ambient dimension does not divide the degree");
    }
  }
  doc["warnings"] = warnings;
  emit(doc);
  return 0;
}

int cmd_glue(const std::string& st1_raw, const std::string& st2_raw) {
  jrc::SplittingType st1 = parse_splitting(st1_raw);
  jrc::SplittingType st2 = parse_splitting(st2_raw);
  jrc::SplittingType glued = jrc::glue_nodal(st1.rank(), st1, st2);

  json doc;
  doc["command"] = {{"name", "glue"}, {"st1", st1_raw}, {"st2", st2_raw}};
  doc["glued"] = splitting_json(glued);
  doc["degree"] = glued.degree().str();
  emit(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact jumping-rational-curve computations"};
  app.require_subcommand(1);
  // Let --overrides / --audit appear after the subcommand name too.
  app.fallthrough();

  CommonOpts common;
  app.add_option("--overrides", common.overrides_path, "override file (strict JSON)")
      ->expected(1);
  app.add_flag("--json", common.json_output, "JSON output (default, only format)");
  app.add_flag("--audit", common.audit, "include per-term audit data where supported");

  int d = 0, r = 2, n = 2, k = -1;
  std::string a_raw = "0", b_raw = "0", codims_raw, file_path, st1_raw, st2_raw;
  std::vector<std::string> twist_specs;
  bool want_splitting = false, want_jumping = false;

  CLI::App* counts = app.add_subcommand("counts", "curve counts N_d / N_d(a.)");
  counts->add_option("--d", d, "curve degree")->required();
  counts->add_option("--n", n, "ambient dimension (default 2)");
  counts->add_option("--codims", codims_raw, "comma-separated condition codimensions");

  CLI::App* jump = app.add_subcommand("jump", "jumping-divisor degree, plane pipeline");
  jump->add_option("--d", d, "curve degree")->required();
  jump->add_option("--r", r, "bundle rank")->required();
  jump->add_option("--a", a_raw, "first Chern class")->required();
  jump->add_option("--b", b_raw, "second Chern class")->required();

  CLI::App* hcmd = app.add_subcommand("h", "reducible-boundary correction");
  hcmd->add_option("--d", d, "curve degree")->required();
  hcmd->add_option("--r", r, "bundle rank")->required();
  hcmd->add_option("--a", a_raw, "first Chern class")->required();
  hcmd->add_option("--t", twist_specs, "twist entries value@index (default: all on index 1)");

  CLI::App* table = app.add_subcommand("table", "intersection table with provenance");
  table->add_option("--d", d, "curve degree")->required();
  table->add_option("--n", n, "ambient dimension (default 2)");
  table->add_option("--codims", codims_raw, "comma-separated condition codimensions");

  CLI::App* syzygy = app.add_subcommand("syzygy", "syzygy analysis of a parametrization file");
  syzygy->add_option("file", file_path, "parametrization file")->required();
  syzygy->add_option("--k", k, "report the syzygy dimension in this degree");
  syzygy->add_flag("--splitting", want_splitting, "report the splitting type");
  syzygy->add_flag("--jumping", want_jumping, "report the jumping test");

  CLI::App* glue = app.add_subcommand("glue", "generic nodal gluing of splitting types");
  glue->add_option("--st1", st1_raw, "first splitting type, e.g. 2,1")->required();
  glue->add_option("--st2", st2_raw, "second splitting type")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints message or help text
    return code == 0 ? 0 : 2;
  }

  try {
    if (counts->parsed()) return cmd_counts(common, d, n, codims_raw);
    if (jump->parsed()) return cmd_jump(common, d, r, a_raw, b_raw);
    if (hcmd->parsed()) return cmd_h(common, d, r, a_raw, twist_specs);
    if (table->parsed()) return cmd_table(common, d, n, codims_raw);
    if (syzygy->parsed()) return cmd_syzygy(file_path, k, want_splitting, want_jumping);
    if (glue->parsed()) return cmd_glue(st1_raw, st2_raw);
  } catch (const jrc::unavailable& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const jrc::invalid_input& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << json{{"error", std::string("internal error: ") + e.what()}}.dump(2) << "\n";
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
