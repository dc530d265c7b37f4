#pragma once

// Seshadri constant of (X, L) for a polarized K3 surface: special cases,
// upper bounds from triple-point hyperplane sections, candidate enumeration,
// exclusion and lattice realizability of the surviving classes.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "k3sesh/arith.hpp"
#include "k3sesh/candidates.hpp"
#include "k3sesh/exclusion.hpp"
#include "k3sesh/lattice.hpp"

namespace k3sesh {

/// Contradictory surface description (exit code 3 in the CLI).
class InconsistentInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedDegree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Facts about X asserted by the caller rather than derived from a Gram matrix.
struct GeometricFlags {
  std::set<Int> pencil_degrees;  // elliptic pencils |E| with E.L = k
  bool has_conic = false;
  bool has_line = false;
  bool picard_rank_one = false;  // Pic X = Z[L]
  bool l2_is_square = false;
  bool twice_b2 = false;  // L ~ 2B with B^2 = 2

  bool empty() const;
  friend bool operator==(const GeometricFlags&, const GeometricFlags&) = default;
};

struct SurfaceSpec {
  Int l2 = 0;
  Context ctx;
  std::optional<GramMatrix2> gram;  // Picard lattice in the basis {L, second class}
  GeometricFlags flags;
  Int certificate_box = kDefaultCertificateBox;
  Int scan_box = kDefaultScanBox;
};

/// Throws InconsistentInput (contradictory data) or std::invalid_argument (malformed data).
void require_consistent(const SurfaceSpec& spec);

struct Interval {
  ExactReal lo;
  bool lo_open = false;
  ExactReal hi;
  bool hi_open = false;

  friend bool operator==(const Interval&, const Interval&) = default;
  std::string str() const;  // "(1, sqrt(12)]"
  static Interval parse(std::string_view text);
};

using Estimate = std::variant<ExactReal, Interval>;

struct Possibility {
  Estimate value;
  std::string condition;

  friend bool operator==(const Possibility&, const Possibility&) = default;
};

struct SeshadriOutcome {
  std::variant<ExactReal, Interval, std::vector<Possibility>> value;
  std::string case_label;
  std::vector<std::string> witnesses;
  std::vector<CertifiedTriple> certificates;
  std::vector<CandidateTriple> survivors;
  std::optional<std::string> conclusion;

  friend bool operator==(const SeshadriOutcome&, const SeshadriOutcome&) = default;

  bool is_exact() const { return std::holds_alternative<ExactReal>(value); }
  /// Largest value the outcome allows (for Kleiman checks).
  ExactReal upper_end() const;
  /// Smallest value the outcome allows.
  ExactReal lower_end() const;
};

/// Known special situations decided without enumeration; nullopt when none applies.
std::optional<SeshadriOutcome> classify_special(const SurfaceSpec& spec);

/// epsilon <= L^2/3 from an irreducible hyperplane section with a triple point,
/// known to exist for degrees 6 and 8.
std::optional<Rational> known_upper_bound(Int l2);

SeshadriOutcome analyze(const SurfaceSpec& spec);

enum class Realizability { Yes, No, Unknown };

/// Whether a class with (L.C, C^2) = (t.d, t.c) is known to exist on X.
Realizability realizability(const SurfaceSpec& spec, const CandidateTriple& t);

/// "conic", "double point member of elliptic pencil of degree 3", ...
std::string witness_text(const CandidateTriple& t);

inline constexpr const char* kTriplePointWitness = "hyperplane section with a triple point";

struct TheoremCase {
  std::string label;
  Rational value;
  std::vector<std::string> witnesses;
  std::vector<CandidateTriple> survivors;

  friend bool operator==(const TheoremCase&, const TheoremCase&) = default;
};

/// Full case table for degree 6 or 8 under the standing hypotheses
/// (very ample, no lines; for degree 8 the ideal is generated by quadrics).
std::vector<TheoremCase> theorem_table(Int l2);

struct DichotomyReport {
  Int l2 = 0;
  std::vector<CandidateTriple> survivors;
  std::vector<CertifiedTriple> excluded;
  bool matches_expected = false;  // survivors == {(2,3,0)}
  std::string conclusion;

  friend bool operator==(const DichotomyReport&, const DichotomyReport&) = default;
};

/// Sub-2 analysis for embedded K3 surfaces of degree l2 >= 8 without lines.
DichotomyReport general_dichotomy(Int l2, Int box_radius = kDefaultCertificateBox);

}  // namespace k3sesh
