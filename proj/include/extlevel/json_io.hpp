#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "extlevel/congruence.hpp"
#include "extlevel/level.hpp"
#include "extlevel/suite.hpp"

namespace extlevel {

using Json = nlohmann::ordered_json;

class JsonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "z/9", "int", "poly:xi,zeta".
Ring parse_ring_name(std::string_view text);

/// {"kind":"modular","q":9} | {"kind":"int"} | {"kind":"poly","vars":[...]}
Json ring_to_json(const Ring& ring);
Ring ring_from_json(const Json& j);

/// Integers and residues as numbers (big integers as strings); polynomials
/// as {"monomials":[{"exp":[...],"coef":c}, ...]}. Strings are parsed as
/// expressions on input.
Json element_to_json(const RingElement& x);
RingElement element_from_json(const Ring& ring, const Json& j);

/// {"ring":..., "dim":n, "entries":[[...], ...]}; "ring" may be omitted on
/// input when a fallback is given.
Json matrix_to_json(const ExactMatrix& g);
ExactMatrix matrix_from_json(const Json& j, const std::optional<Ring>& fallback = std::nullopt);

/// Sorted residue list.
Json ideal_to_json(const FiniteIdeal& A);

Json report_to_json(const CheckReport& r);
Json suite_to_json(const SuiteReport& s);
Json trace_to_json(const std::vector<TraceEntry>& trace);
Json verdict_to_json(const LevelVerdict& v);
Json membership_to_json(const MembershipVerdict& v);

Json load_json_file(const std::string& path);

}  // namespace extlevel
