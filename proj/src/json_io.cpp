#include "extlevel/json_io.hpp"

#include <fstream>

namespace extlevel {

Ring parse_ring_name(std::string_view text) {
  std::string s(text);
  for (auto& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
  if (s == "int" || s == "z") return Ring::integers();
  if (s.rfind("z/", 0) == 0 || s.rfind("f", 0) == 0) {
    auto digits = s.substr(s[0] == 'z' ? 2 : 1);
    std::size_t used = 0;
    unsigned long long q = 0;
    try {
      q = std::stoull(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != digits.size()) throw JsonError("bad modulus in ring '" + std::string(text) + "'");
    if (s[0] == 'f' && !is_prime(q)) throw JsonError("F" + digits + " is not a prime field");
    return Ring::modular(q);
  }
  if (s.rfind("poly:", 0) == 0) {
    std::vector<std::string> vars;
    std::string cur;
    for (char c : std::string(text.substr(5))) {
      if (c == ',') {
        vars.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    if (!cur.empty()) vars.push_back(cur);
    return Ring::poly(vars);
  }
  throw JsonError("unknown ring '" + std::string(text) + "'");
}

Json ring_to_json(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Integers: return {{"kind", "int"}};
    case RingKind::Modular: return {{"kind", "modular"}, {"q", ring.modulus()}};
    case RingKind::Poly: return {{"kind", "poly"}, {"vars", ring.vars()}};
  }
  return {};
}

Ring ring_from_json(const Json& j) {
  if (j.is_string()) return parse_ring_name(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) throw JsonError("ring must be an object with a kind");
  auto kind = j.at("kind").get<std::string>();
  if (kind == "int") return Ring::integers();
  if (kind == "modular") return Ring::modular(j.at("q").get<std::uint64_t>());
  if (kind == "poly") return Ring::poly(j.at("vars").get<std::vector<std::string>>());
  throw JsonError("unknown ring kind '" + kind + "'");
}

Json element_to_json(const RingElement& x) {
  switch (x.ring().kind()) {
    case RingKind::Modular: return x.residue();
    case RingKind::Integers:
      if (x.integer().fits_slong_p()) return x.integer().get_si();
      return x.integer().get_str();
    case RingKind::Poly: {
      Json terms = Json::array();
      for (auto& t : x.terms()) {
        std::vector<unsigned> exp(t.exp.begin(), t.exp.begin() + x.ring().arity());
        Json coef = t.coef.fits_slong_p() ? Json(t.coef.get_si()) : Json(t.coef.get_str());
        terms.push_back({{"exp", exp}, {"coef", coef}});
      }
      return {{"monomials", terms}};
    }
  }
  return {};
}

static mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw JsonError("expected an integer, got " + j.dump());
}

RingElement element_from_json(const Ring& ring, const Json& j) {
  if (j.is_number_integer()) return ring.from_mpz(integer_from_json(j));
  if (j.is_string()) return parse_element(ring, j.get<std::string>());
  if (j.is_object() && j.contains("monomials")) {
    if (ring.kind() != RingKind::Poly) throw JsonError("monomials given for " + ring.name());
    std::vector<Term> terms;
    for (auto& t : j.at("monomials")) {
      Term term;
      auto exp = t.at("exp").get<std::vector<unsigned>>();
      if (exp.size() != ring.arity()) throw JsonError("exponent vector has wrong length");
      for (std::size_t i = 0; i < exp.size(); ++i) term.exp[i] = std::uint16_t(exp[i]);
      term.coef = integer_from_json(t.at("coef"));
      terms.push_back(std::move(term));
    }
    return ring.from_terms(std::move(terms));
  }
  throw JsonError("cannot read ring element from " + j.dump());
}

Json matrix_to_json(const ExactMatrix& g) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < g.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < g.dim(); ++c) row.push_back(element_to_json(g.at(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"ring", ring_to_json(g.ring())}, {"dim", g.dim()}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const Json& j, const std::optional<Ring>& fallback) {
  std::optional<Ring> ring = fallback;
  if (j.contains("ring")) ring = ring_from_json(j.at("ring"));
  if (!ring) throw JsonError("matrix has no ring");
  const auto& rows = j.at("entries");
  std::size_t n = j.contains("dim") ? j.at("dim").get<std::size_t>() : rows.size();
  if (rows.size() != n) throw JsonError("entries do not match dim");
  ExactMatrix g(*ring, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw JsonError("row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < n; ++c) g.at(r, c) = element_from_json(*ring, rows[r][c]);
  }
  return g;
}

Json ideal_to_json(const FiniteIdeal& A) { return A.elements(); }

Json report_to_json(const CheckReport& r) {
  Json j{{"id", r.id}, {"anchor", r.anchor}, {"pass", r.pass}, {"ms", r.ms}, {"identities", r.identities}};
  if (r.diff) j["diff"] = *r.diff;
  return j;
}

Json suite_to_json(const SuiteReport& s) {
  Json checks = Json::array();
  for (auto& r : s.reports) checks.push_back(report_to_json(r));
  return {{"passed", s.passed()}, {"total", s.reports.size()}, {"all_pass", s.all_pass()}, {"checks", checks}};
}

Json trace_to_json(const std::vector<TraceEntry>& trace) {
  Json out = Json::array();
  for (auto& t : trace)
    out.push_back({{"rule", rule_name(t.rule)},
                   {"source", t.source},
                   {"target", t.target.I.label() + (t.target.I.n() > 9 ? ";" : ",") + t.target.J.label()},
                   {"contributed", t.contributed},
                   {"before", t.before},
                   {"after", t.after}});
  return out;
}

Json verdict_to_json(const LevelVerdict& v) {
  Json j{{"mode", mode_name(v.mode)}};
  if (v.level) j["ideal"] = ideal_to_json(*v.level);
  Json chain = Json::array();
  for (auto& A : v.chain) chain.push_back(ideal_to_json(A));
  j["ideals"] = chain;
  Json audit = Json::array();
  for (auto& a : v.audit) audit.push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
  j["audit"] = audit;
  return j;
}

Json membership_to_json(const MembershipVerdict& v) {
  Json j{{"tag", membership_name(v.tag)}};
  if (v.witness) j["witness"] = matrix_to_json(*v.witness);
  if (v.lambda) j["lambda"] = element_to_json(*v.lambda);
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonError(path + ": " + e.what());
  }
}

}  // namespace extlevel
