#pragma once

// JSON encodings. Objects use sorted keys and rationals are "p/q" strings, so
// dump() output is byte-deterministic.

#include <json.hpp>

#include "k3sesh/candidates.hpp"
#include "k3sesh/exclusion.hpp"
#include "k3sesh/expected.hpp"
#include "k3sesh/lattice.hpp"
#include "k3sesh/seshadri.hpp"

namespace k3sesh {

using Json = nlohmann::json;

void to_json(Json& j, const Rational& r);
void from_json(const Json& j, Rational& r);
void to_json(Json& j, const ExactReal& r);
void from_json(const Json& j, ExactReal& r);

void to_json(Json& j, const CandidateTriple& t);
void from_json(const Json& j, CandidateTriple& t);

void to_json(Json& j, const DivisorClass& u);
void from_json(const Json& j, DivisorClass& u);

/// Certificate fields plus its triple and rule_text.
void to_json(Json& j, const CertifiedTriple& ct);
void from_json(const Json& j, CertifiedTriple& ct);

void to_json(Json& j, const Possibility& p);
void from_json(const Json& j, Possibility& p);

void to_json(Json& j, const SeshadriOutcome& o);
void from_json(const Json& j, SeshadriOutcome& o);

void to_json(Json& j, const TheoremCase& row);
void from_json(const Json& j, TheoremCase& row);

void to_json(Json& j, const DichotomyReport& r);
void from_json(const Json& j, DichotomyReport& r);

void to_json(Json& j, const ScannedClass& s);
void from_json(const Json& j, ScannedClass& s);
void to_json(Json& j, const LatticeScanResult& s);
void from_json(const Json& j, LatticeScanResult& s);

void to_json(Json& j, const ExpectedTuple& t);
void from_json(const Json& j, ExpectedTuple& t);

}  // namespace k3sesh
