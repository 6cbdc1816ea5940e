#pragma once

// Assembly of the jumping-curve divisor degree J_{d,E}(a.) from the
// intersection table, the twist vector, and the boundary correction.  The
// degree is a sum of four exact integer terms; the two halved terms must
// come out integral, and a failure there points at inconsistent override
// data rather than at anything this module can repair.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jrc/boundary.hpp"
#include "jrc/exact.hpp"
#include "jrc/gw.hpp"
#include "jrc/intersection.hpp"
#include "jrc/overrides.hpp"

namespace jrc {

/// One jumping-degree problem: bundle data (r, a = c_1, b = c_2) on P^n,
/// curve degree d, incidence conditions, and the normalizing twist vector.
/// The balancedness and transversality hypotheses are user assertions,
/// auto-justified in the rank-2, r | a, and exterior-power cases.
struct ProblemSpec {
  int n = 2;
  int d = 1;
  int r = 2;
  Int a = 0;
  Int b = 0;
  ConditionVector conds;
  TwistVector t;
  bool assert_ab = false;
  bool assert_t = false;
  bool exterior_power = false;
};

struct ApplicabilityIssue {
  std::string code;
  std::string message;
};

struct Applicability {
  bool ok = false;
  std::vector<ApplicabilityIssue> issues;
  std::string ab_justification;
  std::string t_justification;

  std::string message() const {
    std::string out;
    for (const auto& issue : issues) {
      if (!out.empty()) out += "; ";
      out += issue.message;
    }
    return out;
  }
};

/// Validates the three structural invariants (divisibility, condition
/// count, twist sum) and reports how the balancedness/transversality
/// hypotheses are justified.  Never mutates the spec and never throws on
/// mere invariant violations.
inline Applicability check_applicability(const ProblemSpec& spec) {
  Applicability result;

  if (spec.r < 1) {
    result.issues.push_back({"rank", "rank must be positive"});
  } else if ((spec.a * spec.d) % spec.r != 0) {
    result.issues.push_back({"divisibility", "r does not divide ad"});
  }

  if (spec.conds.n != spec.n) {
    result.issues.push_back({"conditions", "condition vector ambient dimension mismatch"});
  } else if (spec.conds.expected_dim(spec.d) != 1) {
    result.issues.push_back({"conditions", "condition count: dim B != 1"});
  }

  if (spec.t.size() != static_cast<int>(spec.conds.codims.size())) {
    result.issues.push_back({"twist-length", "twist vector length must match condition count"});
  } else if (spec.r >= 1 && (spec.a * spec.d) % spec.r == 0 &&
             spec.t.sum() != (spec.a * spec.d) / spec.r + 1) {
    result.issues.push_back({"twist-sum", "twist sum: sum t_i != ad/r + 1"});
  }

  if (spec.r == 2) {
    result.ab_justification = "r = 2";
  } else if (spec.exterior_power) {
    result.ab_justification = "exterior power of the tangent bundle (asserted)";
  } else if (spec.assert_ab) {
    result.ab_justification = "user-asserted";
  } else {
    result.ab_justification = "unasserted";
  }

  if (spec.r >= 1 && spec.a % spec.r == 0) {
    result.t_justification = "r divides a";
  } else if (spec.r == 2) {
    result.t_justification = "r = 2";
  } else if (spec.exterior_power) {
    result.t_justification = "exterior power of the tangent bundle (asserted)";
  } else if (spec.assert_t) {
    result.t_justification = "user-asserted";
  } else {
    result.t_justification = "unasserted";
  }

  result.ok = result.issues.empty();
  return result;
}

/// A consumed input together with the competing values for the disputed
/// quantities: the literal formula evaluation and the published example
/// value, when either exists.
struct ReportInput {
  Entry used;
  std::optional<Int> literal;
  std::optional<Int> published;
};

struct JumpReport {
  Int degree;        // J
  Int term_euler;    // r (g - 1)
  Int term_chern;    // -((a^2 - 2b) L^2 + r D^2) / 2
  Int term_bracket;  // (-r (2g - 2 - m_1) + a R_1.L + 2r s_1.D - sum t_i R_1.s_i) / 2
  Int term_h;        // boundary correction, subtracted
  std::map<std::string, ReportInput> inputs;
  std::vector<std::string> warnings;
};

namespace detail {

inline Int halved(const Int& numerator, const char* where) {
  if (numerator % 2 != 0)
    throw invalid_input(std::string("parity violation in the ") + where +
                        " term: inconsistent input data");
  return numerator / 2;
}

}  // namespace detail

/// Evaluates the degree formula over a complete table.  The twist self-
/// intersection D^2 and the pairing s_1.D are expanded internally from the
/// stored m_i and s_i.s_j entries.
inline JumpReport assemble_J(const ProblemSpec& spec, const IntersectionTable& table,
                             const Entry& h) {
  Applicability app = check_applicability(spec);
  if (!app.ok) throw invalid_input(app.message());
  if (table.condition_count() != spec.t.size())
    throw invalid_input("table and twist vector disagree in condition count");

  const Int& g = table.genus.value;
  const Int& m1 = table.m_at(1).value;
  const Int& l_sq = table.l_sq.value;
  const Int& l_dot_r1 = table.l_dot_r1.value;

  std::vector<int> supp = spec.t.support();

  // D^2 = sum t_i t_j s_i.s_j, with s_i^2 = -m_i on the diagonal.
  Int d_squared = 0;
  for (std::size_t x = 0; x < supp.size(); ++x) {
    int i = supp[x];
    const Int& ti = spec.t.t[static_cast<std::size_t>(i - 1)];
    d_squared -= ti * ti * table.m_at(i).value;
    for (std::size_t y = x + 1; y < supp.size(); ++y) {
      int j = supp[y];
      d_squared += 2 * ti * spec.t.t[static_cast<std::size_t>(j - 1)] * table.s_pair(i, j);
    }
  }

  // s_1.D = -t_1 m_1 + sum_{i >= 2} t_i s_1.s_i.
  Int s1_dot_d = -spec.t.t[0] * m1;
  for (int i : supp)
    if (i != 1) s1_dot_d += spec.t.t[static_cast<std::size_t>(i - 1)] * table.s_pair(1, i);

  // sum_{i >= 2} t_i R_1.s_i.
  Int r1_twist_sum = 0;
  for (int i : supp)
    if (i != 1) r1_twist_sum += spec.t.t[static_cast<std::size_t>(i - 1)] * table.r1_dot_s_at(i);

  JumpReport report;
  report.term_euler = Int(spec.r) * (g - 1);
  report.term_chern =
      -detail::halved((spec.a * spec.a - 2 * spec.b) * l_sq + Int(spec.r) * d_squared, "chern");
  report.term_bracket = detail::halved(Int(-spec.r) * (2 * g - 2 - m1) + spec.a * l_dot_r1 +
                                           2 * Int(spec.r) * s1_dot_d - r1_twist_sum,
                                       "bracket");
  report.term_h = h.value;
  report.degree = report.term_euler + report.term_chern + report.term_bracket - report.term_h;

  report.inputs["genus"] = {table.genus, std::nullopt, std::nullopt};
  report.inputs["m1"] = {table.m_at(1), std::nullopt, std::nullopt};
  report.inputs["L2"] = {table.l_sq, std::nullopt, std::nullopt};
  report.inputs["L_dot_R1"] = {table.l_dot_r1, std::nullopt, std::nullopt};
  report.inputs["h"] = {h, std::nullopt, std::nullopt};
  report.warnings = table.warnings;
  return report;
}

/// Overload taking a bare correction value, recorded as computed.
inline JumpReport assemble_J(const ProblemSpec& spec, const IntersectionTable& table,
                             const Int& h) {
  return assemble_J(spec, table, Entry{h, Provenance::computed});
}

/// Boundary correction driven by a full problem spec.
inline Int h_correction(const ProblemSpec& spec, const TwistVector& t,
                        const CountProvider& provider) {
  return h_correction(spec.n, spec.d, spec.r, spec.a, spec.conds, t, provider);
}

/// Degree of the jumping divisor for a plane bundle with c_1 = 0 and the
/// minimal twist: b * N_d, the closed form the full assembly collapses to.
inline Int closed_form_c1_zero(const Int& b, int d) {
  if (d < 1) throw invalid_input("closed_form_c1_zero: degree must be positive");
  return b * plane_count(d);
}

/// End-to-end plane pipeline: 3d-2 point conditions, the full twist on the
/// first section, table construction, boundary correction, and assembly.
/// Every consumed input lands in the report with provenance; the disputed
/// quantities carry their literal and published counterparts.
inline JumpReport jump_degree_plane(int d, int r, const Int& a, const Int& b,
                                    const Overrides& overrides) {
  if (d < 1) throw invalid_input("degree must be positive");
  if (r < 1) throw invalid_input("rank must be positive");
  if ((a * d) % r != 0) throw invalid_input("r does not divide ad");

  ProblemSpec spec;
  spec.n = 2;
  spec.d = d;
  spec.r = r;
  spec.a = a;
  spec.b = b;
  spec.conds = ConditionVector::plane_points(3 * d - 2);
  spec.t = TwistVector::concentrated(3 * d - 2, (a * d) / r + 1);

  Applicability app = check_applicability(spec);
  if (!app.ok) throw invalid_input(app.message());

  CountProvider provider = overrides.make_provider();

  TableOptions opts;
  opts.allow_genus_placeholder = (a == 0);  // the assembly provably cancels g
  IntersectionTable table = build_table(d, spec.conds, provider, overrides, opts);

  BoundaryResult boundary = h_correction_terms(2, d, r, a, spec.conds, spec.t, provider);
  Entry h_entry = overrides.h ? Entry{*overrides.h, Provenance::override_value}
                              : Entry{boundary.h, Provenance::computed};

  std::vector<std::string> warnings;
  if (auto pub_h = published_boundary_h(2, d, r, a, spec.t);
      pub_h && !overrides.h && boundary.h != *pub_h)
    warnings.push_back("h: literal boundary sum " + boundary.h.str() +
                       " differs from the published example value " + pub_h->str() +
                       "; override h selects the published one");

  JumpReport report = assemble_J(spec, table, h_entry);
  for (auto& w : warnings) report.warnings.push_back(std::move(w));

  std::string literal_used;
  if (table.m_at(1).prov == Provenance::computed) literal_used = "m1";
  if (table.l_dot_r1.prov == Provenance::computed)
    literal_used += std::string(literal_used.empty() ? "" : ", ") + "L_dot_R1";
  if (h_entry.prov == Provenance::computed)
    literal_used += std::string(literal_used.empty() ? "" : ", ") + "h";
  if (!literal_used.empty())
    report.warnings.push_back(
        "literal formulas in use for: " + literal_used +
        "; these sums are known to disagree with the published worked d=4 example "
        "(428/15576/6660 vs 284/5220/9180); overrides select the published values");

  // Attach the literal and published values for the disputed quantities.
  PublishedValues published = published_table_values(2, d);
  if (d >= 2) {
    report.inputs["m1"].literal = m_one_plane(d, provider);
    report.inputs["L_dot_R1"].literal = l_dot_r_plane(d, provider);
  }
  report.inputs["h"].literal = boundary.h;
  report.inputs["m1"].published = published.m1;
  report.inputs["L_dot_R1"].published = published.l_dot_r1;
  report.inputs["h"].published = published_boundary_h(2, d, r, a, spec.t);

  return report;
}

}  // namespace jrc
