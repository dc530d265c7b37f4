#pragma once

// Certificate-producing elimination of candidate Seshadri curves.
//
// Each rule looks at an auxiliary divisor D = aL + bC of the rank-2 lattice
// spanned by L and the candidate C and derives a contradiction from
// (D^2, L.D): a pencil of degree 1, 2 or 3 obstructs global generation, very
// ampleness and quadric generation of the ideal respectively; an effective D
// with a smaller Seshadri ratio contradicts C computing epsilon.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3sesh/candidates.hpp"
#include "k3sesh/lattice.hpp"

namespace k3sesh {

enum class Tristate { False, True, Unknown };

std::string_view to_string(Tristate t);
Tristate parse_tristate(std::string_view text);

/// Standing hypotheses on (X, L).
struct Context {
  bool globally_generated = false;
  bool very_ample = false;
  Tristate quadrics_only = Tristate::Unknown;
  bool no_lines = false;

  friend bool operator==(const Context&, const Context&) = default;

  /// Very ample and quadrics-only contexts with the implied flags filled in.
  static Context very_ample_surface(Tristate quadrics_only = Tristate::Unknown, bool no_lines = true);
};

/// Empty when consistent; otherwise a description of the first problem.
std::optional<std::string> inconsistency(const Context& ctx);

enum class RuleKind {
  LineViolation,
  GGViolation,
  VAViolation,
  QuadricsViolation,
  BetterSeshadri,
  Proportionality,
};

std::string_view to_string(RuleKind k);
RuleKind parse_rule_kind(std::string_view text);

struct Certificate {
  RuleKind kind = RuleKind::Proportionality;
  DivisorClass divisor;  // (0, 1) is C itself
  Int d_square = 0;
  Int d_degree = 0;
  std::optional<Rational> better_ratio;  // BetterSeshadri only

  friend bool operator==(const Certificate&, const Certificate&) = default;

  /// Proportionality only records Hodge equality; every other kind rules the triple out.
  bool excludes() const { return kind != RuleKind::Proportionality; }
};

/// "3L−C", "C−2L", "L", ...
std::string divisor_name(const DivisorClass& D);

/// Human-readable sentence, e.g. "Set D:=3L−C; (D²,L.D)=(0,3): contradicts quadrics-only ideal".
std::string rule_text(const Certificate& cert, const CandidateTriple& t);

inline constexpr Int kDefaultCertificateBox = 3;

/// (D^2, L.D) for D = aL + bC under [[l2, d], [d, c]].
std::pair<Int, Int> aux_intersections(Int l2, const CandidateTriple& t, Int a, Int b);

/// Seshadri ratio bound from an effective class: L.D/2 when D^2 >= 0 (a singular
/// member exists), L.D when D^2 = -2, none when D is not known to be effective.
std::optional<Rational> effective_ratio(Int d_square, Int d_degree);

/// First certificate under the fixed rule priority
///   Line, GG, VA, Quadrics, BetterSeshadri, Proportionality,
/// scanning (a, b) row-major over [-box, box]^2 within each rule.
std::optional<Certificate> certificate_for(Int l2, const CandidateTriple& t, const Context& ctx,
                                           Int box_radius = kDefaultCertificateBox);

struct CertifiedTriple {
  CandidateTriple triple;
  Certificate certificate;

  friend bool operator==(const CertifiedTriple&, const CertifiedTriple&) = default;
};

struct FilterResult {
  std::vector<CandidateTriple> survivors;  // sorted by ratio, then (m, d, c)
  std::vector<CertifiedTriple> excluded;   // input order
  std::vector<CertifiedTriple> notes;      // Proportionality remarks on survivors
};

FilterResult filter(Int l2, const std::vector<CandidateTriple>& ts, const Context& ctx,
                    Int box_radius = kDefaultCertificateBox);

}  // namespace k3sesh
