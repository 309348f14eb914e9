#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extlevel/ring.hpp"
#include "extlevel/wedge.hpp"

namespace extlevel {

class LevelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Rule : unsigned {
  Type2Shift = 1u << 0,
  Type3DoubleHalve = 1u << 1,
  HeightRaiseLiteral = 1u << 2,
  HeightRaiseClaimed = 1u << 3,
  ResidueRule = 1u << 4,
  DNetClosure = 1u << 5,
};

inline constexpr Rule kRuleOrder[] = {Rule::Type2Shift,         Rule::Type3DoubleHalve,
                                      Rule::HeightRaiseLiteral, Rule::HeightRaiseClaimed,
                                      Rule::ResidueRule,        Rule::DNetClosure};

const char* rule_name(Rule r);
Rule parse_rule(std::string_view name);

class RuleSet {
 public:
  RuleSet() = default;
  RuleSet(std::initializer_list<Rule> rules);
  static RuleSet all();
  /// Everything except HeightRaiseClaimed.
  static RuleSet literal();

  bool has(Rule r) const { return bits_ & unsigned(r); }
  RuleSet with(Rule r) const;
  RuleSet without(Rule r) const;
  std::vector<Rule> rules() const;
  std::string to_string() const;
  bool operator==(const RuleSet&) const = default;

 private:
  unsigned bits_ = 0;
};

struct TraceEntry {
  Rule rule;
  std::string source;  // "I,J" cell or "A_k" height class
  WeightPair target;
  std::uint64_t contributed;  // divisor of the propagated ideal
  std::uint64_t before;
  std::uint64_t after;
};

/// Cells A_{I,J} of a net over Z/q (q odd). Each cell is a principal ideal
/// stored by its divisor of q; diagonal cells are the whole ring.
class IdealNet {
 public:
  IdealNet(WedgeSpec spec, Ring ring);

  const WedgeSpec& spec() const { return spec_; }
  const Ring& ring() const { return ring_; }

  std::uint64_t divisor(std::size_t I, std::size_t J) const { return d_[I * spec_.N() + J]; }
  FiniteIdeal cell(std::size_t I, std::size_t J) const;
  FiniteIdeal cell(const WeightIndex& I, const WeightIndex& J) const;
  /// Joins ideal (d) into the cell; returns true when the cell grew.
  bool join(std::size_t I, std::size_t J, std::uint64_t d);

  /// Intersection of all off-diagonal cells of height k.
  FiniteIdeal height_class(int k) const;
  bool height_uniform(int k) const;

  const std::vector<std::string>& warnings() const { return warnings_; }
  void warn(std::string w) { warnings_.push_back(std::move(w)); }
  std::vector<TraceEntry>& trace() { return trace_; }
  const std::vector<TraceEntry>& trace() const { return trace_; }

  /// Same cells (trace and warnings ignored).
  bool same_cells(const IdealNet& o) const { return spec_ == o.spec_ && ring_ == o.ring_ && d_ == o.d_; }

 private:
  WedgeSpec spec_;
  Ring ring_;
  std::vector<std::uint64_t> d_;
  std::vector<std::string> warnings_;
  std::vector<TraceEntry> trace_;
};

struct Generator {
  WeightPair pair;
  RingElement value;
};

/// Rejects even moduli and diagonal pairs; warns when n < 3m.
IdealNet net_init(const WedgeSpec& spec, const Ring& ring, const std::vector<Generator>& gens);

/// Least fixpoint of the enabled rules, applied round-robin in kRuleOrder.
IdealNet saturate(IdealNet net, const RuleSet& rules);

enum class VerdictMode { SingleLevel, GradedChain, Inconsistent };
const char* mode_name(VerdictMode m);

struct AuditEntry {
  std::string name;
  bool pass;
  std::string detail;
};

struct LevelVerdict {
  VerdictMode mode;
  std::optional<FiniteIdeal> level;  // SingleLevel
  std::vector<FiniteIdeal> chain;    // A_0 .. A_{m-1}
  std::vector<AuditEntry> audit;
};

/// Throws LevelError if one more pass of the rules would change the net.
LevelVerdict level_of(const IdealNet& net, const RuleSet& rules);

/// res * A_{m-2} within A_{m-1} (true when m < 2).
bool residue_audit(const IdealNet& net);

}  // namespace extlevel
