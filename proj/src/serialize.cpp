#include "k3sesh/serialize.hpp"

namespace k3sesh {

void to_json(Json& j, const Rational& r) { j = r.str(); }
void from_json(const Json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

void to_json(Json& j, const ExactReal& r) { j = r.str(); }
void from_json(const Json& j, ExactReal& r) { r = ExactReal::parse(j.get<std::string>()); }

void to_json(Json& j, const CandidateTriple& t) { j = Json{{"m", t.m}, {"d", t.d}, {"c", t.c}}; }
void from_json(const Json& j, CandidateTriple& t) {
  j.at("m").get_to(t.m);
  j.at("d").get_to(t.d);
  j.at("c").get_to(t.c);
}

void to_json(Json& j, const DivisorClass& u) { j = Json{{"a", u.a}, {"b", u.b}}; }
void from_json(const Json& j, DivisorClass& u) {
  j.at("a").get_to(u.a);
  j.at("b").get_to(u.b);
}

void to_json(Json& j, const CertifiedTriple& ct) {
  const auto& cert = ct.certificate;
  j = Json{{"triple", ct.triple},
           {"kind", std::string(to_string(cert.kind))},
           {"a", cert.divisor.a},
           {"b", cert.divisor.b},
           {"d_square", cert.d_square},
           {"d_degree", cert.d_degree},
           {"rule_text", rule_text(cert, ct.triple)}};
  if (cert.better_ratio) j["better_ratio"] = *cert.better_ratio;
}

void from_json(const Json& j, CertifiedTriple& ct) {
  j.at("triple").get_to(ct.triple);
  auto& cert = ct.certificate;
  cert.kind = parse_rule_kind(j.at("kind").get<std::string>());
  j.at("a").get_to(cert.divisor.a);
  j.at("b").get_to(cert.divisor.b);
  j.at("d_square").get_to(cert.d_square);
  j.at("d_degree").get_to(cert.d_degree);
  cert.better_ratio.reset();
  if (j.contains("better_ratio")) cert.better_ratio = j.at("better_ratio").get<Rational>();
}

namespace {

void put_estimate(Json& j, const Estimate& e) {
  if (const auto* v = std::get_if<ExactReal>(&e))
    j["value"] = *v;
  else
    j["interval"] = std::get<Interval>(e).str();
}

Estimate get_estimate(const Json& j) {
  if (j.contains("value")) return j.at("value").get<ExactReal>();
  return Interval::parse(j.at("interval").get<std::string>());
}

}  // namespace

void to_json(Json& j, const Possibility& p) {
  j = Json::object();
  put_estimate(j, p.value);
  j["condition"] = p.condition;
}

void from_json(const Json& j, Possibility& p) {
  p.value = get_estimate(j);
  j.at("condition").get_to(p.condition);
}

void to_json(Json& j, const SeshadriOutcome& o) {
  j = Json{{"case_label", o.case_label},
           {"witnesses", o.witnesses},
           {"certificates", o.certificates},
           {"survivors", o.survivors}};
  if (const auto* v = std::get_if<ExactReal>(&o.value))
    j["value"] = *v;
  else if (const auto* i = std::get_if<Interval>(&o.value))
    j["interval"] = i->str();
  else
    j["possibilities"] = std::get<std::vector<Possibility>>(o.value);
  if (o.conclusion) j["conclusion"] = *o.conclusion;
}

void from_json(const Json& j, SeshadriOutcome& o) {
  if (j.contains("value"))
    o.value = j.at("value").get<ExactReal>();
  else if (j.contains("interval"))
    o.value = Interval::parse(j.at("interval").get<std::string>());
  else
    o.value = j.at("possibilities").get<std::vector<Possibility>>();
  j.at("case_label").get_to(o.case_label);
  j.at("witnesses").get_to(o.witnesses);
  j.at("certificates").get_to(o.certificates);
  j.at("survivors").get_to(o.survivors);
  o.conclusion.reset();
  if (j.contains("conclusion")) o.conclusion = j.at("conclusion").get<std::string>();
}

void to_json(Json& j, const TheoremCase& row) {
  j = Json{{"case_label", row.label}, {"value", row.value}, {"witnesses", row.witnesses}, {"survivors", row.survivors}};
}

void from_json(const Json& j, TheoremCase& row) {
  j.at("case_label").get_to(row.label);
  j.at("value").get_to(row.value);
  j.at("witnesses").get_to(row.witnesses);
  j.at("survivors").get_to(row.survivors);
}

void to_json(Json& j, const DichotomyReport& r) {
  j = Json{{"l2", r.l2},
           {"survivors", r.survivors},
           {"excluded", r.excluded},
           {"matches_expected", r.matches_expected},
           {"conclusion", r.conclusion}};
}

void from_json(const Json& j, DichotomyReport& r) {
  j.at("l2").get_to(r.l2);
  j.at("survivors").get_to(r.survivors);
  j.at("excluded").get_to(r.excluded);
  j.at("matches_expected").get_to(r.matches_expected);
  j.at("conclusion").get_to(r.conclusion);
}

void to_json(Json& j, const ScannedClass& s) { j = Json{{"a", s.cls.a}, {"b", s.cls.b}, {"degree", s.degree}}; }
void from_json(const Json& j, ScannedClass& s) {
  j.at("a").get_to(s.cls.a);
  j.at("b").get_to(s.cls.b);
  j.at("degree").get_to(s.degree);
}

void to_json(Json& j, const LatticeScanResult& s) {
  j = Json{{"isotropic", s.isotropic}, {"minus_two", s.minus_two}, {"box_radius", s.box_radius}};
}

void from_json(const Json& j, LatticeScanResult& s) {
  j.at("isotropic").get_to(s.isotropic);
  j.at("minus_two").get_to(s.minus_two);
  j.at("box_radius").get_to(s.box_radius);
}

void to_json(Json& j, const ExpectedTuple& t) { j = Json{{"l2", t.l2}, {"n", t.n}, {"m", t.m}}; }
void from_json(const Json& j, ExpectedTuple& t) {
  j.at("l2").get_to(t.l2);
  j.at("n").get_to(t.n);
  j.at("m").get_to(t.m);
}

}  // namespace k3sesh
