#include "k3sesh/exclusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3sesh {

std::string_view to_string(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
  }
  return "unknown";
}

Tristate parse_tristate(std::string_view text) {
  if (text == "true") return Tristate::True;
  if (text == "false") return Tristate::False;
  if (text == "unknown") return Tristate::Unknown;
  throw std::invalid_argument("expected true, false or unknown, got '" + std::string(text) + "'");
}

Context Context::very_ample_surface(Tristate quadrics_only, bool no_lines) {
  return {true, true, quadrics_only, no_lines};
}

std::optional<std::string> inconsistency(const Context& ctx) {
  if (ctx.very_ample && !ctx.globally_generated) return "very ample implies globally generated";
  if (ctx.quadrics_only == Tristate::True && !ctx.very_ample)
    return "a quadrics-only ideal presumes an embedding (very ample L)";
  return std::nullopt;
}

std::string_view to_string(RuleKind k) {
  switch (k) {
    case RuleKind::LineViolation: return "LineViolation";
    case RuleKind::GGViolation: return "GGViolation";
    case RuleKind::VAViolation: return "VAViolation";
    case RuleKind::QuadricsViolation: return "QuadricsViolation";
    case RuleKind::BetterSeshadri: return "BetterSeshadri";
    case RuleKind::Proportionality: return "Proportionality";
  }
  return "Proportionality";
}

RuleKind parse_rule_kind(std::string_view text) {
  for (auto k : {RuleKind::LineViolation, RuleKind::GGViolation, RuleKind::VAViolation,
                 RuleKind::QuadricsViolation, RuleKind::BetterSeshadri, RuleKind::Proportionality}) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("unknown rule kind '" + std::string(text) + "'");
}

namespace {

std::string term(Int coeff, std::string_view symbol, bool leading) {
  std::string s;
  if (coeff < 0)
    s = "−";
  else if (!leading)
    s = "+";
  const Int mag = coeff < 0 ? -coeff : coeff;
  if (mag != 1) s += std::to_string(mag);
  s += symbol;
  return s;
}

std::string pair_text(Int x, Int y) {
  auto num = [](Int v) { return v < 0 ? "−" + std::to_string(-v) : std::to_string(v); };
  return "(" + num(x) + "," + num(y) + ")";
}

GramMatrix2 gram_of(Int l2, const CandidateTriple& t) { return {l2, t.d, t.c}; }

// Row-major over [-box, box]^2 without the zero class.
template <class Pred>
std::optional<DivisorClass> first_class(Int box, Pred&& pred) {
  for (Int a = -box; a <= box; ++a) {
    for (Int b = -box; b <= box; ++b) {
      if (a == 0 && b == 0) continue;
      if (pred(DivisorClass{a, b})) return DivisorClass{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string divisor_name(const DivisorClass& D) {
  if (D.a == 0 && D.b == 0) return "0";
  if (D.a == 0) return term(D.b, "C", true);
  if (D.b == 0) return term(D.a, "L", true);
  if (D.a < 0 && D.b > 0) return term(D.b, "C", true) + term(D.a, "L", false);
  return term(D.a, "L", true) + term(D.b, "C", false);
}

std::string rule_text(const Certificate& cert, const CandidateTriple& t) {
  const std::string set = "Set D:=" + divisor_name(cert.divisor) + "; (D²,L.D)=" + pair_text(cert.d_square, cert.d_degree);
  switch (cert.kind) {
    case RuleKind::LineViolation:
      return "C itself has (C²,L.C)=" + pair_text(cert.d_square, cert.d_degree) + ": C is a line, but X contains no lines";
    case RuleKind::GGViolation:
      return set + ": an elliptic pencil of degree 1 contradicts global generation of L";
    case RuleKind::VAViolation:
      if (cert.d_degree != 2)
        return "Hodge index equality L²C²=(L.C)² with L²=2L.C yields L∼2C, C²=2: contradicts very ampleness of L";
      return set + ": an elliptic pencil of degree 2 contradicts very ampleness of L";
    case RuleKind::QuadricsViolation:
      return set + ": an elliptic pencil of degree 3 contradicts quadrics-only ideal";
    case RuleKind::BetterSeshadri:
      return set + ": a member of |D| gives a Seshadri ratio " + cert.better_ratio.value_or(Rational(0)).str() +
             " < " + t.ratio().str() + ", so C does not compute ε(L)";
    case RuleKind::Proportionality:
      return "L²C²=(L.C)²: L and C are numerically proportional (no contradiction by itself)";
  }
  return set;
}

std::pair<Int, Int> aux_intersections(Int l2, const CandidateTriple& t, Int a, Int b) {
  const GramMatrix2 g = gram_of(l2, t);
  const DivisorClass D{a, b};
  return {square(g, D), degree(g, D)};
}

std::optional<Rational> effective_ratio(Int d_square, Int d_degree) {
  if (d_degree <= 0 || d_square < -2) return std::nullopt;
  if (d_square >= 0) return Rational(d_degree, 2);
  if (d_square == -2) return Rational(d_degree);
  return std::nullopt;
}

std::optional<Certificate> certificate_for(Int l2, const CandidateTriple& t, const Context& ctx, Int box_radius) {
  if (box_radius < 1) throw std::invalid_argument("box radius must be at least 1");
  if (t.m < 1 || t.d < 1) throw std::invalid_argument("candidate triple needs m >= 1 and d >= 1");
  const GramMatrix2 g = gram_of(l2, t);
  require_valid(g);
  require_input_range(box_radius, "box radius");

  auto make = [&](RuleKind kind, const DivisorClass& D) {
    return Certificate{kind, D, square(g, D), degree(g, D), std::nullopt};
  };
  auto pencil_of_degree = [&](Int k) {
    return first_class(box_radius, [&](const DivisorClass& D) { return degree(g, D) == k && square(g, D) == 0; });
  };

  if (ctx.no_lines && t.c == -2 && t.d == 1) return make(RuleKind::LineViolation, kSecondClass);

  if (ctx.globally_generated) {
    if (auto D = pencil_of_degree(1)) return make(RuleKind::GGViolation, *D);
  }
  if (ctx.very_ample) {
    if (auto D = pencil_of_degree(2)) return make(RuleKind::VAViolation, *D);
    // L ~ 2C with C^2 = 2, read off from Hodge equality in rank 2.
    if (Wide{t.d} * t.d == Wide{l2} * t.c && l2 == 2 * t.d && t.c == 2) return make(RuleKind::VAViolation, kSecondClass);
  }
  if (ctx.quadrics_only == Tristate::True) {
    if (auto D = pencil_of_degree(3)) return make(RuleKind::QuadricsViolation, *D);
  }

  const Rational target = t.ratio();
  std::optional<Rational> better;
  auto D = first_class(box_radius, [&](const DivisorClass& cand) {
    const auto r = effective_ratio(square(g, cand), degree(g, cand));
    if (r && *r < target) {
      better = r;
      return true;
    }
    return false;
  });
  if (D) {
    Certificate cert = make(RuleKind::BetterSeshadri, *D);
    cert.better_ratio = better;
    return cert;
  }

  if (Wide{t.d} * t.d == Wide{l2} * t.c) return make(RuleKind::Proportionality, kSecondClass);
  return std::nullopt;
}

FilterResult filter(Int l2, const std::vector<CandidateTriple>& ts, const Context& ctx, Int box_radius) {
  FilterResult out;
  for (const auto& t : ts) {
    auto cert = certificate_for(l2, t, ctx, box_radius);
    if (cert && cert->excludes()) {
      out.excluded.push_back({t, *cert});
      continue;
    }
    if (cert) out.notes.push_back({t, *cert});
    out.survivors.push_back(t);
  }
  std::stable_sort(out.survivors.begin(), out.survivors.end(), [](const CandidateTriple& x, const CandidateTriple& y) {
    const auto rx = x.ratio();
    const auto ry = y.ratio();
    if (rx != ry) return rx < ry;
    return x < y;
  });
  return out;
}

}  // namespace k3sesh
