#include "k3sesh/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "k3sesh/serialize.hpp"

namespace k3sesh::cli {

namespace {

struct Options {
  Int degree = 0;
  std::string gram;
  std::string eps_max;
  Int box = 0;  // 0: per-subcommand default
  Int max_degree = 0;
  bool json = false;
  bool skip_m1 = false;

  bool very_ample = false;
  bool globally_generated = false;
  std::string quadrics_only = "unknown";
  bool no_lines = false;

  bool has_line = false;
  std::vector<Int> pencil_degrees;
  bool has_conic = false;
  bool picard_rank_one = false;
  bool twice_b2 = false;

  Int l2_max = 100;
  Int n_max = 10;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void add_degree(CLI::App* sub, Options& o, bool required = true) {
  auto* opt = sub->add_option("--degree", o.degree, "degree L^2 of the polarization (even)");
  if (required) opt->required();
}

void add_json(CLI::App* sub, Options& o) { sub->add_flag("--json", o.json, "emit deterministic JSON"); }

void add_context(CLI::App* sub, Options& o) {
  sub->add_flag("--very-ample", o.very_ample, "L is very ample (implies --globally-generated)");
  sub->add_flag("--globally-generated", o.globally_generated, "L is globally generated");
  sub->add_option("--quadrics-only", o.quadrics_only, "homogeneous ideal generated by quadrics only")
      ->check(CLI::IsMember({"true", "false", "unknown"}));
  sub->add_flag("--no-lines", o.no_lines, "X contains no lines");
}

void add_geometry(CLI::App* sub, Options& o) {
  sub->add_option("--gram", o.gram, "Gram matrix \"l2 d; d c\" of Pic X in the basis {L, C}");
  sub->add_flag("--has-line", o.has_line, "X contains a line");
  sub->add_option("--pencil-degree", o.pencil_degrees, "X has an elliptic pencil of this degree (repeatable)")
      ->take_all()
      ->allow_extra_args(false);
  sub->add_flag("--has-conic", o.has_conic, "X contains a conic");
  sub->add_flag("--picard-rank-one", o.picard_rank_one, "Pic X = Z[L]");
  sub->add_flag("--l-is-2b", o.twice_b2, "L ~ 2B with B^2 = 2");
}

Int checked_degree(const Options& o) {
  if (o.degree % 2 != 0)
    throw UsageError("--degree " + std::to_string(o.degree) +
                     " is odd; K3 polarizations have even degree L^2 = 2g - 2 (the Picard lattice is even)");
  if (o.degree < 2) throw UsageError("--degree must be at least 2");
  return o.degree;
}

Context context_of(const Options& o) {
  Context ctx;
  ctx.very_ample = o.very_ample;
  ctx.globally_generated = o.globally_generated || o.very_ample;
  ctx.quadrics_only = parse_tristate(o.quadrics_only);
  ctx.no_lines = o.no_lines;
  if (auto why = inconsistency(ctx)) throw InconsistentInput("inconsistent flags: " + *why);
  return ctx;
}

Rational eps_of(const Options& o, Int l2) {
  if (!o.eps_max.empty()) return Rational::parse(o.eps_max);
  if (auto u = known_upper_bound(l2)) return *u;
  if (l2 > 4) return Rational(2);
  throw UsageError("--eps-max is required for degree " + std::to_string(l2));
}

std::string triple_text(const CandidateTriple& t) {
  return "(" + std::to_string(t.m) + "," + std::to_string(t.d) + "," + std::to_string(t.c) + ")";
}

std::string value_text(const SeshadriOutcome& o) {
  if (const auto* v = std::get_if<ExactReal>(&o.value)) return v->str();
  if (const auto* i = std::get_if<Interval>(&o.value)) return i->str();
  std::string s;
  for (const auto& p : std::get<std::vector<Possibility>>(o.value)) {
    if (!s.empty()) s += " | ";
    s += std::holds_alternative<ExactReal>(p.value) ? std::get<ExactReal>(p.value).str()
                                                    : std::get<Interval>(p.value).str();
    s += " " + p.condition;
  }
  return s;
}

void print_certificates(std::ostream& out, const std::vector<CertifiedTriple>& cs) {
  for (const auto& ct : cs) {
    out << "  " << std::left << std::setw(12) << triple_text(ct.triple) << std::setw(19)
        << to_string(ct.certificate.kind) << rule_text(ct.certificate, ct.triple) << "\n";
  }
}

void print_survivors(std::ostream& out, const std::vector<CandidateTriple>& ts) {
  out << std::left << std::setw(14) << "survivors";
  if (ts.empty()) out << "none";
  for (std::size_t i = 0; i < ts.size(); ++i) out << (i ? " " : "") << triple_text(ts[i]);
  out << "\n";
}

int cmd_analyze(const Options& o, std::ostream& out) {
  SurfaceSpec spec;
  spec.l2 = checked_degree(o);
  spec.ctx = context_of(o);
  if (!o.gram.empty()) spec.gram = GramMatrix2::parse(o.gram);
  spec.flags.pencil_degrees.insert(o.pencil_degrees.begin(), o.pencil_degrees.end());
  spec.flags.has_line = o.has_line;
  spec.flags.has_conic = o.has_conic;
  spec.flags.picard_rank_one = o.picard_rank_one;
  spec.flags.l2_is_square = o.picard_rank_one && is_perfect_square(spec.l2);
  spec.flags.twice_b2 = o.twice_b2;
  if (o.box > 0) spec.certificate_box = o.box;

  const auto outcome = analyze(spec);
  if (o.json) {
    out << Json(outcome).dump() << "\n";
    return kExitOk;
  }
  out << std::left << std::setw(14) << "degree" << spec.l2 << "\n";
  out << std::setw(14) << "value" << value_text(outcome) << "\n";
  out << std::setw(14) << "case" << outcome.case_label << "\n";
  for (const auto& w : outcome.witnesses) out << std::setw(14) << "witness" << w << "\n";
  print_survivors(out, outcome.survivors);
  if (outcome.conclusion) out << std::setw(14) << "conclusion" << *outcome.conclusion << "\n";
  out << "certificates\n";
  print_certificates(out, outcome.certificates);
  return kExitOk;
}

int cmd_candidates(const Options& o, std::ostream& out) {
  const Int l2 = checked_degree(o);
  const auto ts = enumerate({l2, eps_of(o, l2), !o.skip_m1});
  if (o.json) {
    out << Json(ts).dump() << "\n";
    return kExitOk;
  }
  out << std::right << std::setw(4) << "m" << std::setw(6) << "L.C" << std::setw(6) << "C^2" << std::setw(8)
      << "ratio" << "\n";
  for (const auto& t : ts)
    out << std::setw(4) << t.m << std::setw(6) << t.d << std::setw(6) << t.c << std::setw(8) << t.ratio().str()
        << "\n";
  return kExitOk;
}

int cmd_exclude(const Options& o, std::ostream& out) {
  const Int l2 = checked_degree(o);
  const Context ctx = context_of(o);
  const Int box = o.box > 0 ? o.box : kDefaultCertificateBox;
  const auto result = filter(l2, enumerate({l2, eps_of(o, l2), !o.skip_m1}), ctx, box);
  if (o.json) {
    out << Json{{"survivors", result.survivors}, {"certificates", result.excluded}, {"notes", result.notes}}.dump()
        << "\n";
    return kExitOk;
  }
  out << "certificates\n";
  print_certificates(out, result.excluded);
  if (!result.notes.empty()) {
    out << "notes\n";
    print_certificates(out, result.notes);
  }
  print_survivors(out, result.survivors);
  return kExitOk;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  if (o.gram.empty()) throw UsageError("lattice needs --gram \"l2 d; d c\"");
  const auto g = GramMatrix2::parse(o.gram);
  const auto violations = validate(g);
  if (!violations.empty()) {
    if (violations.front() == GramViolation::OutOfRange) throw OverflowError(std::string(describe(violations.front())));
    std::string msg = "invalid Gram matrix:";
    for (auto v : violations) msg += " " + std::string(describe(v)) + ";";
    throw UsageError(msg);
  }
  const auto s = scan(g, o.box > 0 ? o.box : kDefaultScanBox, o.max_degree);
  if (o.json) {
    out << Json(s).dump() << "\n";
    return kExitOk;
  }
  out << "box radius " << s.box_radius << "\n";
  auto list = [&](const char* title, const std::vector<ScannedClass>& cs) {
    out << title << "\n";
    for (const auto& e : cs)
      out << "  " << std::left << std::setw(10) << e.cls.str() << "degree " << e.degree << "\n";
  };
  list("isotropic (square 0)", s.isotropic);
  list("(-2)-classes", s.minus_two);
  return kExitOk;
}

int cmd_expected(const Options& o, std::ostream& out) {
  const auto ts = classify_subsqrt(o.l2_max, o.n_max);
  if (o.json) {
    out << Json(ts).dump() << "\n";
    return kExitOk;
  }
  out << std::right << std::setw(6) << "L^2" << std::setw(5) << "n" << std::setw(5) << "m" << "\n";
  for (const auto& t : ts) out << std::setw(6) << t.l2 << std::setw(5) << t.n << std::setw(5) << t.m << "\n";
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto rows = theorem_table(checked_degree(o));
  if (o.json) {
    out << Json(rows).dump() << "\n";
    return kExitOk;
  }
  for (const auto& r : rows) {
    std::string ws;
    for (const auto& w : r.witnesses) ws += (ws.empty() ? "" : "; ") + w;
    std::string ss;
    for (const auto& t : r.survivors) ss += (ss.empty() ? "" : " ") + triple_text(t);
    out << std::left << std::setw(7) << r.label << std::setw(7) << r.value.str() << ws;
    if (!ss.empty()) out << "  " << ss;
    out << "\n";
  }
  return kExitOk;
}

int cmd_dichotomy(const Options& o, std::ostream& out) {
  const auto report = general_dichotomy(checked_degree(o), o.box > 0 ? o.box : kDefaultCertificateBox);
  if (o.json) {
    out << Json(report).dump() << "\n";
    return kExitOk;
  }
  out << std::left << std::setw(14) << "degree" << report.l2 << "\n";
  print_survivors(out, report.survivors);
  out << std::setw(14) << "conclusion" << report.conclusion << "\n";
  out << "certificates\n";
  print_certificates(out, report.excluded);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seshadri constants of polarized K3 surfaces by exact enumeration", "k3sesh"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "compute epsilon(L) for a described surface");
  add_degree(analyze_cmd, o);
  add_context(analyze_cmd, o);
  add_geometry(analyze_cmd, o);
  analyze_cmd->add_option("--box", o.box, "certificate search radius (default 3)");
  add_json(analyze_cmd, o);

  auto* candidates_cmd = app.add_subcommand("candidates", "list numerically possible Seshadri curve triples");
  add_degree(candidates_cmd, o);
  candidates_cmd->add_option("--eps-max", o.eps_max, "strict upper bound p/q on L.C/mult");
  candidates_cmd->add_flag("--skip-m1", o.skip_m1, "omit multiplicity-1 candidates");
  add_json(candidates_cmd, o);

  auto* exclude_cmd = app.add_subcommand("exclude", "eliminate candidates with certificates");
  add_degree(exclude_cmd, o);
  exclude_cmd->add_option("--eps-max", o.eps_max, "strict upper bound p/q on L.C/mult");
  exclude_cmd->add_flag("--skip-m1", o.skip_m1, "omit multiplicity-1 candidates");
  add_context(exclude_cmd, o);
  exclude_cmd->add_option("--box", o.box, "auxiliary divisor search radius (default 3)");
  add_json(exclude_cmd, o);

  auto* lattice_cmd = app.add_subcommand("lattice", "scan a rank-2 lattice for isotropic and (-2)-classes");
  lattice_cmd->add_option("--gram", o.gram, "Gram matrix \"l2 d; d c\"")->required();
  lattice_cmd->add_option("--box", o.box, "coefficient box radius (default 5)");
  lattice_cmd->add_option("--max-degree", o.max_degree, "largest degree listed (default l2)");
  add_json(lattice_cmd, o);

  auto* expected_cmd = app.add_subcommand("expected", "(L^2, n, m) with maximal expected multiplicity below sqrt(L^2)");
  expected_cmd->add_option("--l2-max", o.l2_max, "largest L^2 scanned (default 100)");
  expected_cmd->add_option("--n-max", o.n_max, "largest n scanned (default 10)");
  add_json(expected_cmd, o);

  auto* table_cmd = app.add_subcommand("table", "case table for degrees 6 and 8");
  add_degree(table_cmd, o);
  add_json(table_cmd, o);

  auto* dichotomy_cmd = app.add_subcommand("dichotomy", "sub-2 analysis for degree >= 8 without lines");
  add_degree(dichotomy_cmd, o);
  dichotomy_cmd->add_option("--box", o.box, "auxiliary divisor search radius (default 3)");
  add_json(dichotomy_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (candidates_cmd->parsed()) return cmd_candidates(o, out);
    if (exclude_cmd->parsed()) return cmd_exclude(o, out);
    if (lattice_cmd->parsed()) return cmd_lattice(o, out);
    if (expected_cmd->parsed()) return cmd_expected(o, out);
    if (table_cmd->parsed()) return cmd_table(o, out);
    if (dichotomy_cmd->parsed()) return cmd_dichotomy(o, out);
  } catch (const InconsistentInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace k3sesh::cli
