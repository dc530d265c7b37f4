#include "oracle/oracle.hpp"

#include <algorithm>

#include "k3sesh/seshadri.hpp"

namespace k3sesh::oracle {

void OracleReport::add(std::string input, std::string expected, std::string got) {
  matched = false;
  mismatches.push_back({std::move(input), std::move(expected), std::move(got)});
}

std::string OracleReport::summary() const {
  if (matched) return "matched";
  std::string s = std::to_string(mismatches.size()) + " mismatch(es):";
  for (const auto& m : mismatches) s += "\n  " + m.input + ": expected " + m.expected + ", got " + m.got;
  return s;
}

std::string to_text(const CandidateTriple& t) {
  return "(" + std::to_string(t.m) + "," + std::to_string(t.d) + "," + std::to_string(t.c) + ")";
}

std::string to_text(const std::vector<CandidateTriple>& ts) {
  std::string s = "{";
  for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? "," : "") + to_text(ts[i]);
  return s + "}";
}

std::vector<CandidateTriple> brute_candidates(Int l2, const Rational& eps_sup, Int m_hi, Int d_hi, Int c_hi,
                                              bool include_m1) {
  const long long p = eps_sup.num();
  const long long q = eps_sup.den();
  std::vector<CandidateTriple> out;
  for (long long m = 1; m <= m_hi; ++m) {
    if (m == 1 && !include_m1) continue;
    for (long long d = 1; d <= d_hi; ++d) {
      for (long long c = -2; c <= c_hi; ++c) {
        const bool even = c % 2 == 0;
        const bool adjunction = c >= m * m - m - 2;
        const bool hodge = l2 * c <= d * d;
        const bool ratio = d * q < p * m;
        // The multiplicity cap is implied by the other constraints; it is not re-imposed here.
        if (even && adjunction && hodge && ratio) out.push_back({m, d, c});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool recheck_certificate(Int l2, const CandidateTriple& t, const Context& ctx, const Certificate& cert) {
  const long long a = cert.divisor.a;
  const long long b = cert.divisor.b;
  const long long sq = a * a * l2 + 2 * a * b * t.d + b * b * t.c;
  const long long deg = a * l2 + b * t.d;
  if (sq != cert.d_square || deg != cert.d_degree) return false;
  const bool effective = deg > 0 && sq >= -2;
  switch (cert.kind) {
    case RuleKind::LineViolation:
      return ctx.no_lines && a == 0 && b == 1 && t.c == -2 && t.d == 1;
    case RuleKind::GGViolation:
      return ctx.globally_generated && sq == 0 && deg == 1;
    case RuleKind::VAViolation:
      if (!ctx.very_ample) return false;
      if (sq == 0 && deg == 2) return true;
      // L ~ 2C: Hodge equality with L^2 = 2 L.C and C^2 = 2.
      return a == 0 && b == 1 && l2 * t.c == t.d * t.d && l2 == 2 * t.d && t.c == 2;
    case RuleKind::QuadricsViolation:
      return ctx.quadrics_only == Tristate::True && sq == 0 && deg == 3;
    case RuleKind::BetterSeshadri: {
      if (!effective || !cert.better_ratio) return false;
      const Rational r = sq >= 0 ? Rational(deg, 2) : Rational(deg);
      return *cert.better_ratio == r && r < Rational(t.d, t.m);
    }
    case RuleKind::Proportionality:
      return l2 * t.c == t.d * t.d;
  }
  return false;
}

Context degree6_context() { return Context{true, true, Tristate::False, true}; }
Context degree8_context() { return Context{true, true, Tristate::True, true}; }

const std::vector<NamedExclusion>& named_exclusions() {
  static const std::vector<NamedExclusion> table = {
      // "If m_x >= 3, this can only be satisfied if (m_x,L.C,C^2)=(3,5,4). But then D:=L-C satisfies D^2=0 and L.D=1"
      {6, {3, 5, 4}, 1, -1, 0, 1, "D:=L-C satisfies D^2=0 and L.D=1"},
      // "Set D:=3L-C. Then (D^2,L.D)=(0,3)"
      {8, {8, 21, 54}, 3, -1, 0, 3, "Set D:=3L-C. Then (D^2,L.D)=(0,3)"},
      // "Set D:=C-2L. Then (D^2,L.D)=(0,2)"
      {8, {7, 18, 40}, -2, 1, 0, 2, "Set D:=C-2L. Then (D^2,L.D)=(0,2)"},
      // "Set D:=2L-C. Then (D^2,L.D)=(0,1)"
      {8, {6, 15, 28}, 2, -1, 0, 1, "Set D:=2L-C. Then (D^2,L.D)=(0,1)"},
      // "Set D:=C-L. Then (D^2,L.D)=(2,4), (0,5) and (2,5), respectively."
      {8, {5, 12, 18}, -1, 1, 2, 4, "Set D:=C-L. Then (D^2,L.D)=(2,4)"},
      {8, {5, 13, 18}, -1, 1, 0, 5, "(0,5)"},
      {8, {5, 13, 20}, -1, 1, 2, 5, "(2,5)"},
      // "As above, set D:=C-L. Then (D^2,L.D)=(0,1), (-2,2) and (0,2), respectively."
      {8, {4, 9, 10}, -1, 1, 0, 1, "(0,1)"},
      {8, {4, 10, 10}, -1, 1, -2, 2, "(-2,2)"},
      {8, {4, 10, 12}, -1, 1, 0, 2, "(0,2)"},
      // "Then D:=L-C satisfies (D^2,L.D)=(0,2), (-2,1) and (0,1), respectively"
      {8, {3, 6, 4}, 1, -1, 0, 2, "(0,2)"},
      {8, {3, 7, 4}, 1, -1, -2, 1, "(-2,1)"},
      {8, {3, 7, 6}, 1, -1, 0, 1, "(0,1)"},
      // "In the first case the Hodge index theorem yields L ~ 2C": recorded on C itself.
      {8, {2, 4, 2}, 0, 1, 2, 4, "the Hodge index theorem yields L ~ 2C"},
      // "In the second case D:=L-C satisfies (D^2,L.D)=(0,3)"
      {8, {2, 5, 2}, 1, -1, 0, 3, "D:=L-C satisfies (D^2,L.D)=(0,3)"},
  };
  return table;
}

const std::vector<RawList>& degree8_raw_lists() {
  static const std::vector<RawList> table = {
      {8, {{8, 21, 54}}, "the only solution to (3) is (L.C,C^2)=(21,54)"},
      {7, {{7, 18, 40}}, "the only solution to (3) is (L.C,C^2)=(18,40)"},
      {6, {{6, 15, 28}}, "the only solution to (3) is (L.C,C^2)=(15,28)"},
      {5, {{5, 12, 18}, {5, 13, 18}, {5, 13, 20}}, "(12,18), (13,18) and (13,20)"},
      {4, {{4, 9, 10}, {4, 10, 10}, {4, 10, 12}}, "(9,10), (10,10) and (10,12)"},
      {3, {{3, 6, 4}, {3, 7, 4}, {3, 7, 6}}, "(6,4), (7,4) and (7,6)"},
  };
  return table;
}

OracleReport replay_theorem12() {
  OracleReport report;

  // Raw lists, degree 8.
  const auto raw8 = enumerate({8, Rational(8, 3), true});
  for (const auto& row : degree8_raw_lists()) {
    std::vector<CandidateTriple> got;
    std::copy_if(raw8.begin(), raw8.end(), std::back_inserter(got), [&](const auto& t) { return t.m == row.m; });
    if (got != row.triples) report.add(std::string("degree 8 raw list m=") + std::to_string(row.m), to_text(row.triples), to_text(got));
  }
  const bool nothing_above_8 = std::none_of(raw8.begin(), raw8.end(), [](const auto& t) { return t.m >= 9; });
  if (!nothing_above_8) report.add("degree 8 raw list m>=9", "{}", "non-empty");

  // Named auxiliary divisors.
  for (const auto& ex : named_exclusions()) {
    const auto ctx = ex.l2 == 6 ? degree6_context() : degree8_context();
    const std::string input = "l2=" + std::to_string(ex.l2) + " " + to_text(ex.triple);
    const auto [sq, deg] = aux_intersections(ex.l2, ex.triple, ex.a, ex.b);
    if (sq != ex.d_square || deg != ex.d_degree)
      report.add(input + " aux", "(" + std::to_string(ex.d_square) + "," + std::to_string(ex.d_degree) + ")",
                 "(" + std::to_string(sq) + "," + std::to_string(deg) + ")");
    const auto cert = certificate_for(ex.l2, ex.triple, ctx, 3);
    if (!cert) {
      report.add(input + " certificate", ex.quote, "none");
      continue;
    }
    const bool same = cert->divisor == DivisorClass{ex.a, ex.b} && cert->d_square == ex.d_square &&
                      cert->d_degree == ex.d_degree && cert->excludes();
    if (!same)
      report.add(input + " certificate", ex.quote,
                 std::string(to_string(cert->kind)) + " D=(" + cert->divisor.str() + ") (" +
                     std::to_string(cert->d_square) + "," + std::to_string(cert->d_degree) + ")");
  }

  // Final survivor sets.
  const auto s6 = filter(6, enumerate({6, Rational(2), true}), degree6_context()).survivors;
  if (s6 != std::vector<CandidateTriple>{{2, 3, 0}}) report.add("degree 6 survivors", "{(2,3,0)}", to_text(s6));
  auto s8 = filter(8, raw8, degree8_context()).survivors;
  std::sort(s8.begin(), s8.end());
  const std::vector<CandidateTriple> want8{{1, 2, -2}, {2, 4, 0}, {2, 5, 0}};
  if (s8 != want8) report.add("degree 8 survivors", to_text(want8), to_text(s8));
  return report;
}

OracleReport sweep_prop11(Int l2_lo, Int l2_hi) {
  OracleReport report;
  const Context ctx{true, true, Tristate::Unknown, true};
  const std::vector<CandidateTriple> want{{2, 3, 0}};
  for (Int l2 = l2_lo; l2 <= l2_hi; l2 += 2) {
    // Hard bounds well above anything with d/m < 2 and l2 >= 8 (there m <= 3, d <= 5).
    const auto raw = brute_candidates(l2, Rational(2), 12, 24, 150, false);
    const auto engine = enumerate({l2, Rational(2), false});
    if (raw != engine) report.add("l2=" + std::to_string(l2) + " raw", to_text(raw), to_text(engine));
    const auto survivors = filter(l2, engine, ctx).survivors;
    if (survivors != want) report.add("l2=" + std::to_string(l2), to_text(want), to_text(survivors));
  }
  return report;
}

}  // namespace k3sesh::oracle
