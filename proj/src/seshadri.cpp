#include "k3sesh/seshadri.hpp"

#include <algorithm>
#include <map>

namespace k3sesh {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

void inconsistent(const std::string& why) { throw InconsistentInput("inconsistent input: " + why); }

// Caller flags together with what the Gram matrix (if any) shows.
struct EffectiveFlags {
  std::set<Int> pencil_degrees;
  bool has_conic = false;
  bool has_line = false;
};

EffectiveFlags effective_flags(const SurfaceSpec& spec) {
  EffectiveFlags f{spec.flags.pencil_degrees, spec.flags.has_conic, spec.flags.has_line};
  if (spec.gram) {
    const auto s = scan(*spec.gram, spec.scan_box, std::max<Int>(spec.l2, 3));
    for (const auto& e : s.isotropic) f.pencil_degrees.insert(e.degree);
    f.has_line = f.has_line || s.has_minus_two_of_degree(1);
    f.has_conic = f.has_conic || s.has_minus_two_of_degree(2);
  }
  return f;
}

SeshadriOutcome exact(ExactReal v, std::string label, std::vector<std::string> witnesses) {
  SeshadriOutcome o;
  o.value = std::move(v);
  o.case_label = std::move(label);
  o.witnesses = std::move(witnesses);
  return o;
}

std::string theorem_label(Int l2, const Rational& v) {
  if (l2 == 6) {
    if (v == Rational(2)) return "a-i";
    if (v == Rational(3, 2)) return "a-ii";
  }
  if (l2 == 8) {
    if (v == Rational(8, 3)) return "b-i";
    if (v == Rational(5, 2)) return "b-ii";
    if (v == Rational(2)) return "b-iii";
    if (v == Rational(3, 2)) return "non-quadric";
  }
  if (v == Rational(3, 2)) return "pencil-3";
  return "exact";
}

const ExactReal& lo_of(const Estimate& e) {
  return std::holds_alternative<ExactReal>(e) ? std::get<ExactReal>(e) : std::get<Interval>(e).lo;
}

const ExactReal& hi_of(const Estimate& e) {
  return std::holds_alternative<ExactReal>(e) ? std::get<ExactReal>(e) : std::get<Interval>(e).hi;
}

}  // namespace

bool GeometricFlags::empty() const {
  return pencil_degrees.empty() && !has_conic && !has_line && !picard_rank_one && !l2_is_square && !twice_b2;
}

void require_consistent(const SurfaceSpec& spec) {
  if (spec.l2 < 2 || spec.l2 % 2 != 0)
    throw std::invalid_argument("degree L^2 must be an even integer >= 2 (K3 polarizations have even degree)");
  require_input_range(spec.l2, "degree");
  if (spec.certificate_box < 1 || spec.scan_box < 1) throw std::invalid_argument("box radius must be at least 1");
  if (auto why = inconsistency(spec.ctx)) inconsistent(*why);

  const auto& fl = spec.flags;
  const auto& ctx = spec.ctx;
  for (Int k : fl.pencil_degrees) {
    if (k < 1) throw std::invalid_argument("pencil degree must be positive");
  }
  if (fl.has_line && ctx.no_lines) inconsistent("a line is asserted but lines are excluded");
  if (fl.twice_b2 && spec.l2 != 8) inconsistent("L ~ 2B with B^2 = 2 forces L^2 = 8");
  if (fl.l2_is_square && !is_perfect_square(spec.l2)) inconsistent("L^2 is not a square");
  if (ctx.quadrics_only == Tristate::True && spec.l2 < 8)
    inconsistent("the ideal of a K3 surface of degree < 8 is never generated by quadrics alone");
  if (fl.picard_rank_one) {
    if (!fl.pencil_degrees.empty() || fl.has_conic || fl.has_line || fl.twice_b2)
      inconsistent("Pic X = Z[L] leaves no room for pencils, conics, lines or L ~ 2B");
    if (spec.gram && spec.gram->determinant() != 0) inconsistent("Pic X = Z[L] contradicts a rank-2 Gram matrix");
  }

  if (spec.gram) {
    const auto& g = *spec.gram;
    if (!validate(g).empty()) {
      try {
        require_valid(g);
      } catch (const OverflowError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        inconsistent(e.what());
      }
    }
    if (g.l2 != spec.l2) inconsistent("Gram matrix L^2 = " + std::to_string(g.l2) + " differs from the degree");
    const auto s = scan(g, spec.scan_box, std::max<Int>(spec.l2, 3));
    for (Int k : fl.pencil_degrees) {
      if (!s.has_isotropic_of_degree(k))
        inconsistent("no isotropic class of degree " + std::to_string(k) + " in the Gram lattice");
    }
    if (fl.has_conic && !s.has_minus_two_of_degree(2)) inconsistent("no conic class in the Gram lattice");
    if (fl.has_line && !s.has_minus_two_of_degree(1)) inconsistent("no line class in the Gram lattice");
  }

  const auto eff = effective_flags(spec);
  if (ctx.globally_generated && eff.pencil_degrees.contains(1))
    inconsistent("an elliptic pencil of degree 1 contradicts global generation");
  if (ctx.very_ample && (eff.pencil_degrees.contains(2) || spec.l2 == 2 || fl.twice_b2))
    inconsistent("very ampleness is incompatible with L^2 = 2, a degree-2 pencil or L ~ 2B");
  if (ctx.quadrics_only == Tristate::True && eff.pencil_degrees.contains(3))
    inconsistent("an elliptic pencil of degree 3 contradicts a quadrics-only ideal");
  if (ctx.no_lines && eff.has_line) inconsistent("the lattice contains a line class but lines are excluded");
}

ExactReal SeshadriOutcome::upper_end() const {
  if (auto* v = std::get_if<ExactReal>(&value)) return *v;
  if (auto* i = std::get_if<Interval>(&value)) return i->hi;
  const auto& ps = std::get<std::vector<Possibility>>(value);
  ExactReal best = hi_of(ps.front().value);
  for (const auto& p : ps) best = std::max(best, hi_of(p.value));
  return best;
}

ExactReal SeshadriOutcome::lower_end() const {
  if (auto* v = std::get_if<ExactReal>(&value)) return *v;
  if (auto* i = std::get_if<Interval>(&value)) return i->lo;
  const auto& ps = std::get<std::vector<Possibility>>(value);
  ExactReal best = lo_of(ps.front().value);
  for (const auto& p : ps) best = std::min(best, lo_of(p.value));
  return best;
}

std::string Interval::str() const {
  return std::string(lo_open ? "(" : "[") + lo.str() + ", " + hi.str() + (hi_open ? ")" : "]");
}

Interval Interval::parse(std::string_view text) {
  text = trim(text);
  if (text.size() < 5) throw std::invalid_argument("malformed interval");
  const char open = text.front();
  const char close = text.back();
  if ((open != '(' && open != '[') || (close != ')' && close != ']')) throw std::invalid_argument("malformed interval");
  const auto body = text.substr(1, text.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("malformed interval");
  return Interval{ExactReal::parse(body.substr(0, comma)), open == '(', ExactReal::parse(body.substr(comma + 1)),
                  close == ')'};
}

std::string witness_text(const CandidateTriple& t) {
  if (t.m == 1 && t.c == -2 && t.d == 1) return "line";
  if (t.m == 1 && t.c == -2 && t.d == 2) return "conic";
  if (t.m == 2 && t.c == 0) return "double point member of elliptic pencil of degree " + std::to_string(t.d);
  return "irreducible curve with (mult,L.C,C²)=(" + std::to_string(t.m) + "," + std::to_string(t.d) + "," +
         std::to_string(t.c) + ")";
}

std::optional<SeshadriOutcome> classify_special(const SurfaceSpec& spec) {
  require_consistent(spec);
  const auto eff = effective_flags(spec);
  const auto& ctx = spec.ctx;

  if (eff.pencil_degrees.contains(1))
    return exact(Rational(1, 2), "not-globally-generated", {"double point member of elliptic pencil of degree 1"});
  if (spec.l2 == 2)
    return exact(Rational(1), "double-plane", {"pullback of a line tangent to the branch sextic"});
  if (eff.pencil_degrees.contains(2))
    return exact(Rational(1), "pencil-2", {"double point member of elliptic pencil of degree 2"});
  if (spec.flags.twice_b2) return exact(Rational(2), "twice-b", {"L ~ 2B with B² = 2; twice a Seshadri curve of B"});
  if (ctx.globally_generated && eff.has_line) return exact(Rational(1), "line", {"line"});
  if (spec.flags.picard_rank_one && is_perfect_square(spec.l2))
    return exact(ExactReal::sqrt_of(spec.l2), "rank-one-square", {"Pic X = Z[L] with L² a square"});
  if (spec.l2 == 4) {
    SeshadriOutcome o;
    std::vector<Possibility> ps;
    if (!ctx.no_lines) ps.push_back({ExactReal(Rational(1)), "X contains a line"});
    ps.push_back({ExactReal(Rational(4, 3)),
                  "X contains no line and a rational curve in |L| with a triple point (the Hesse form vanishes somewhere)"});
    ps.push_back({ExactReal(Rational(2)), "all other cases"});
    o.value = std::move(ps);
    o.case_label = "quartic";
    o.witnesses = {"line", "rational hyperplane section with a triple point", kTriplePointWitness};
    return o;
  }
  return std::nullopt;
}

std::optional<Rational> known_upper_bound(Int l2) {
  if (l2 == 6) return Rational(2);
  if (l2 == 8) return Rational(8, 3);
  return std::nullopt;
}

Realizability realizability(const SurfaceSpec& spec, const CandidateTriple& t) {
  if (spec.flags.picard_rank_one) return Realizability::No;
  if (spec.gram) {
    return find_classes(*spec.gram, spec.scan_box, t.d, t.c).empty() ? Realizability::No : Realizability::Yes;
  }
  const auto& fl = spec.flags;
  if (t.m == 2 && t.c == 0) {
    if (fl.pencil_degrees.contains(t.d)) return Realizability::Yes;
    if (t.d == 3 && spec.ctx.quadrics_only == Tristate::True) return Realizability::No;
  }
  if (t.m == 1 && t.c == -2 && t.d == 2 && fl.has_conic) return Realizability::Yes;
  if (t.m == 1 && t.c == -2 && t.d == 1) {
    if (fl.has_line) return Realizability::Yes;
    if (spec.ctx.no_lines) return Realizability::No;
  }
  return Realizability::Unknown;
}

SeshadriOutcome analyze(const SurfaceSpec& spec) {
  if (auto special = classify_special(spec)) return *special;

  const auto bound = known_upper_bound(spec.l2);
  const Rational eps_sup = bound.value_or(Rational(2));
  const auto candidates = enumerate({spec.l2, eps_sup, true});
  auto filtered = filter(spec.l2, candidates, spec.ctx, spec.certificate_box);

  SeshadriOutcome out;
  out.survivors = filtered.survivors;
  out.certificates = std::move(filtered.excluded);

  // Fallback when no surviving class is realized.
  const ExactReal kleiman = ExactReal::sqrt_of(spec.l2);
  Estimate fallback = bound ? Estimate(ExactReal(*bound)) : Estimate(Interval{ExactReal(Rational(2)), false, kleiman, false});
  const std::string fallback_witness = bound ? kTriplePointWitness : "no irreducible Seshadri curve with ratio below 2";

  std::vector<Possibility> open;  // survivors whose existence is undecided
  std::vector<std::string> open_witnesses;
  std::optional<Rational> found;
  std::vector<std::string> found_witnesses;
  bool any_known = false;
  for (const auto& t : filtered.survivors) {
    const Rational r = t.ratio();
    if (found && r > *found) break;
    switch (realizability(spec, t)) {
      case Realizability::Yes:
        any_known = true;
        found = r;
        found_witnesses.push_back(witness_text(t));
        break;
      case Realizability::No:
        any_known = true;
        break;
      case Realizability::Unknown:
        if (!found || r < *found) {
          open.push_back({ExactReal(r), "if X has a " + witness_text(t)});
          open_witnesses.push_back(witness_text(t));
        }
        break;
    }
  }

  if (!bound && !spec.gram && spec.flags.empty() && !any_known && !open.empty()) {
    // Lattice-free generic degree: report the honest interval and the dichotomy.
    const bool gg = spec.ctx.globally_generated;
    out.value = Interval{ExactReal(gg ? Rational(1) : Rational(1, 2)), gg && spec.ctx.no_lines, kleiman, false};
    out.case_label = "generic";
    out.witnesses = {};
    out.conclusion =
        "1 < ε < 2 iff X has an elliptic pencil of degree 3 iff the ideal of X is not generated by quadrics alone; "
        "then ε = 3/2, otherwise 2 <= ε <= sqrt(" + std::to_string(spec.l2) + ")";
    return out;
  }

  if (open.empty()) {
    if (found) {
      out.value = ExactReal(*found);
      out.case_label = theorem_label(spec.l2, *found);
      out.witnesses = found_witnesses;
    } else if (bound) {
      out.value = ExactReal(*bound);
      out.case_label = theorem_label(spec.l2, *bound);
      out.witnesses = {fallback_witness};
    } else {
      out.value = std::get<Interval>(fallback);
      out.case_label = "no-sub-2-curve";
      out.witnesses = {fallback_witness};
    }
    return out;
  }

  std::vector<Possibility> ps = std::move(open);
  std::vector<std::string> witnesses = std::move(open_witnesses);
  if (found) {
    ps.push_back({ExactReal(*found), "otherwise; realized by " + found_witnesses.front()});
    for (const auto& w : found_witnesses) witnesses.push_back(w);
  } else {
    ps.push_back({fallback, "otherwise"});
    witnesses.push_back(fallback_witness);
  }
  out.value = std::move(ps);
  out.case_label = "undetermined";
  out.witnesses = std::move(witnesses);
  return out;
}

std::vector<TheoremCase> theorem_table(Int l2) {
  if (l2 != 6 && l2 != 8)
    throw UnsupportedDegree("the case table exists for degrees 6 and 8 only (degree 4 is a possibility set)");
  const Context ctx = Context::very_ample_surface(l2 == 8 ? Tristate::True : Tristate::False, true);
  const Rational bound = *known_upper_bound(l2);
  const auto result = filter(l2, enumerate({l2, bound, true}), ctx);

  std::map<Rational, std::vector<CandidateTriple>, std::greater<>> by_ratio;
  for (const auto& t : result.survivors) by_ratio[t.ratio()].push_back(t);

  const std::string prefix = l2 == 6 ? "a-" : "b-";
  static const char* const kRoman[] = {"i", "ii", "iii", "iv", "v", "vi"};
  std::vector<TheoremCase> rows;
  rows.push_back({prefix + kRoman[0], bound, {kTriplePointWitness}, {}});
  for (auto& [ratio, ts] : by_ratio) {
    std::sort(ts.begin(), ts.end());
    TheoremCase row{prefix + kRoman[std::min<std::size_t>(rows.size(), 5)], ratio, {}, ts};
    for (const auto& t : ts) row.witnesses.push_back(witness_text(t));
    rows.push_back(std::move(row));
  }
  return rows;
}

DichotomyReport general_dichotomy(Int l2, Int box_radius) {
  if (l2 < 8 || l2 % 2 != 0) throw std::invalid_argument("the dichotomy needs an even degree L^2 >= 8");
  const Context ctx = Context::very_ample_surface(Tristate::Unknown, true);
  auto result = filter(l2, enumerate({l2, Rational(2), false}), ctx, box_radius);

  DichotomyReport report;
  report.l2 = l2;
  report.survivors = std::move(result.survivors);
  report.excluded = std::move(result.excluded);
  report.matches_expected = report.survivors == std::vector<CandidateTriple>{{2, 3, 0}};
  if (report.matches_expected) {
    report.conclusion =
        "1 < ε < 2 iff X has an elliptic pencil of degree 3 iff the ideal of X is not generated by quadrics alone; "
        "then ε = 3/2, realized by double point members of the pencil";
  } else {
    report.conclusion = "unexpected surviving classes below ratio 2";
  }
  return report;
}

}  // namespace k3sesh
