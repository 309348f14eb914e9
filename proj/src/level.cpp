#include "extlevel/level.hpp"

#include <functional>
#include <numeric>

#include "extlevel/transvection.hpp"

namespace extlevel {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Type2Shift:
      return "Type2Shift";
    case Rule::Type3DoubleHalve:
      return "Type3DoubleHalve";
    case Rule::HeightRaiseLiteral:
      return "HeightRaiseLiteral";
    case Rule::HeightRaiseClaimed:
      return "HeightRaiseClaimed";
    case Rule::ResidueRule:
      return "ResidueRule";
    case Rule::DNetClosure:
      return "DNetClosure";
  }
  return "?";
}

Rule parse_rule(std::string_view name) {
  for (Rule r : kRuleOrder)
    if (name == rule_name(r)) return r;
  throw LevelError("unknown rule '" + std::string(name) + "'");
}

RuleSet::RuleSet(std::initializer_list<Rule> rules) {
  for (Rule r : rules) bits_ |= unsigned(r);
}

RuleSet RuleSet::all() {
  RuleSet s;
  for (Rule r : kRuleOrder) s.bits_ |= unsigned(r);
  return s;
}

RuleSet RuleSet::literal() { return all().without(Rule::HeightRaiseClaimed); }

RuleSet RuleSet::with(Rule r) const {
  RuleSet s = *this;
  s.bits_ |= unsigned(r);
  return s;
}

RuleSet RuleSet::without(Rule r) const {
  RuleSet s = *this;
  s.bits_ &= ~unsigned(r);
  return s;
}

std::vector<Rule> RuleSet::rules() const {
  std::vector<Rule> out;
  for (Rule r : kRuleOrder)
    if (has(r)) out.push_back(r);
  return out;
}

std::string RuleSet::to_string() const {
  std::string s;
  for (Rule r : rules()) s += (s.empty() ? "" : ",") + std::string(rule_name(r));
  return s;
}

IdealNet::IdealNet(WedgeSpec spec, Ring ring) : spec_(std::move(spec)), ring_(ring) {
  if (ring_.kind() != RingKind::Modular) throw LevelError("ideal nets need a finite ring Z/q");
  const std::size_t N = spec_.N();
  d_.assign(N * N, ring_.modulus());
  for (std::size_t k = 0; k < N; ++k) d_[k * N + k] = 1;
}

FiniteIdeal IdealNet::cell(std::size_t I, std::size_t J) const { return FiniteIdeal(ring_, divisor(I, J)); }

FiniteIdeal IdealNet::cell(const WeightIndex& I, const WeightIndex& J) const {
  return cell(spec_.rank(I), spec_.rank(J));
}

bool IdealNet::join(std::size_t I, std::size_t J, std::uint64_t d) {
  auto& slot = d_[I * spec_.N() + J];
  std::uint64_t g = std::gcd(slot, d);
  if (g == slot) return false;
  slot = g;
  return true;
}

FiniteIdeal IdealNet::height_class(int k) const {
  const std::size_t N = spec_.N();
  std::uint64_t d = 1;
  for (std::size_t I = 0; I < N; ++I)
    for (std::size_t J = 0; J < N; ++J)
      if (I != J && height(spec_.index(I), spec_.index(J)) == k) d = std::lcm(d, divisor(I, J));
  return FiniteIdeal(ring_, d);
}

bool IdealNet::height_uniform(int k) const {
  const std::size_t N = spec_.N();
  std::optional<std::uint64_t> seen;
  for (std::size_t I = 0; I < N; ++I)
    for (std::size_t J = 0; J < N; ++J) {
      if (I == J || height(spec_.index(I), spec_.index(J)) != k) continue;
      if (!seen) seen = divisor(I, J);
      if (*seen != divisor(I, J)) return false;
    }
  return true;
}

IdealNet net_init(const WedgeSpec& spec, const Ring& ring, const std::vector<Generator>& gens) {
  if (ring.kind() != RingKind::Modular) throw LevelError("level computation needs a finite ring Z/q");
  if (!ring.two_invertible())
    throw LevelError("2 must be invertible: modulus " + std::to_string(ring.modulus()) + " is even");
  IdealNet net(spec, ring);
  if (!spec.level_range())
    net.warn("n < 3m: the height classes need not coincide; expect a graded chain");
  for (const auto& g : gens) {
    if (g.pair.diagonal()) throw LevelError("diagonal generator pair " + g.pair.I.label());
    if (!(g.value.ring() == ring)) throw LevelError("generator value in the wrong ring");
    std::uint64_t d = std::gcd(ring.modulus(), std::uint64_t(g.value.residue()));
    net.join(spec.rank(g.pair.I), spec.rank(g.pair.J), d);
  }
  return net;
}

namespace {

struct Move {
  std::size_t from;
  std::size_t to;
};

struct Moves {
  std::vector<Move> shift;   // single-shift commutators
  std::vector<Move> corner;  // corner of paired triple-product commutators
};

Moves compute_moves(const WedgeSpec& spec) {
  Moves mv;
  const std::size_t N = spec.N();
  const int n = spec.n();
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      if (a == b) continue;
      const auto& I = spec.index(a);
      const auto& J = spec.index(b);
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) {
          if (i == j) continue;
          auto cls = classify_commutator(I, J, j, i);
          if (cls.tag == CommutatorTag::SingleShift) {
            const auto& t = cls.terms[0];
            mv.shift.push_back({a * N + b, spec.rank(t.I) * N + spec.rank(t.J)});
          } else if (cls.tag == CommutatorTag::TripleProduct) {
            const auto& t = cls.terms[1];  // the zeta^2 corner
            mv.corner.push_back({a * N + b, spec.rank(t.I) * N + spec.rank(t.J)});
          }
        }
    }
  return mv;
}

std::string cell_label(const WedgeSpec& spec, std::size_t flat) {
  const std::size_t N = spec.N();
  return spec.index(flat / N).label() + (spec.n() > 9 ? ";" : ",") + spec.index(flat % N).label();
}

class Saturator {
 public:
  Saturator(IdealNet& net) : net_(net), spec_(net.spec()), N_(spec_.N()), q_(net.ring().modulus()) {}

  bool apply(Rule r) {
    switch (r) {
      case Rule::Type2Shift:
        return moves(r, moves_().shift, 1);
      case Rule::Type3DoubleHalve:
        return moves(r, moves_().corner, 2);
      case Rule::HeightRaiseLiteral:
      case Rule::HeightRaiseClaimed:
        return height_raise(r);
      case Rule::ResidueRule:
        return residue();
      case Rule::DNetClosure:
        return dnet();
    }
    return false;
  }

 private:
  const Moves& moves_() {
    if (!cache_) cache_ = compute_moves(spec_);
    return *cache_;
  }

  bool push(Rule r, std::string source, std::size_t flat, std::uint64_t d) {
    const std::size_t I = flat / N_, J = flat % N_;
    std::uint64_t before = net_.divisor(I, J);
    if (!net_.join(I, J, d)) return false;
    net_.trace().push_back(
        TraceEntry{r, std::move(source), WeightPair{spec_.index(I), spec_.index(J)}, d, before, net_.divisor(I, J)});
    return true;
  }

  std::uint64_t scaled(std::uint64_t d, std::uint64_t k) const { return std::gcd(q_, (d * (k % q_)) % q_); }
  std::uint64_t product(std::uint64_t a, std::uint64_t b) const {
    return std::gcd(q_, std::uint64_t((unsigned __int128)a * b % q_));
  }

  // Type 2: the commutator is t(+-zeta xi) for every zeta, so the whole cell
  // moves. Paired type 3 commutators leave t(+-2 zeta^2 xi); with zeta = 1.
  bool moves(Rule r, const std::vector<Move>& mv, std::uint64_t factor) {
    bool changed = false;
    for (const auto& m : mv) {
      std::uint64_t d = net_.divisor(m.from / N_, m.from % N_);
      if (d == q_) continue;
      changed |= push(r, cell_label(spec_, m.from), m.to, scaled(d, factor));
    }
    return changed;
  }

  void for_height(int k, const std::function<void(std::size_t)>& f) {
    for (std::size_t I = 0; I < N_; ++I)
      for (std::size_t J = 0; J < N_; ++J)
        if (I != J && height(spec_.index(I), spec_.index(J)) == k) f(I * N_ + J);
  }

  bool height_raise(Rule r) {
    bool changed = false;
    const int n = spec_.n(), m = spec_.m();
    for (int k = 0; k + 1 <= m - 1; ++k) {
      if (n < 3 * m - 2 * k) continue;
      std::uint64_t a = net_.height_class(k).divisor();
      if (a == q_) continue;
      std::uint64_t d = r == Rule::HeightRaiseLiteral ? product(a, a) : a;
      if (d == q_) continue;
      const std::string src = "A_" + std::to_string(k);
      for_height(k + 1, [&](std::size_t flat) { changed |= push(r, src, flat, d); });
    }
    return changed;
  }

  bool residue() {
    const int m = spec_.m();
    if (m < 2) return false;
    std::uint64_t a = net_.height_class(m - 2).divisor();
    if (a == q_) return false;
    std::uint64_t d = scaled(a, spec_.residue());
    if (d == q_) return false;
    bool changed = false;
    const std::string src = "A_" + std::to_string(m - 2);
    for_height(m - 1, [&](std::size_t flat) { changed |= push(Rule::ResidueRule, src, flat, d); });
    return changed;
  }

  bool dnet() {
    bool changed = false;
    for (std::size_t I = 0; I < N_; ++I)
      for (std::size_t J = 0; J < N_; ++J) {
        if (I == J) continue;
        std::uint64_t a = net_.divisor(I, J);
        if (a == q_) continue;
        for (std::size_t K = 0; K < N_; ++K) {
          if (K == I || K == J) continue;
          std::uint64_t b = net_.divisor(J, K);
          if (b == q_) continue;
          std::uint64_t d = product(a, b);
          if (d == q_ || net_.divisor(I, K) == std::gcd(net_.divisor(I, K), d)) continue;
          changed |= push(Rule::DNetClosure, cell_label(spec_, I * N_ + J) + " * " + cell_label(spec_, J * N_ + K),
                          I * N_ + K, d);
        }
      }
    return changed;
  }

  IdealNet& net_;
  const WedgeSpec& spec_;
  std::size_t N_;
  std::uint64_t q_;
  std::optional<Moves> cache_;
};

}  // namespace

IdealNet saturate(IdealNet net, const RuleSet& rules) {
  Saturator s(net);
  for (bool changed = true; changed;) {
    changed = false;
    for (Rule r : rules.rules()) changed |= s.apply(r);
  }
  return net;
}

const char* mode_name(VerdictMode m) {
  switch (m) {
    case VerdictMode::SingleLevel:
      return "SingleLevel";
    case VerdictMode::GradedChain:
      return "GradedChain";
    case VerdictMode::Inconsistent:
      return "Inconsistent";
  }
  return "?";
}

bool residue_audit(const IdealNet& net) {
  const int m = net.spec().m();
  if (m < 2) return true;
  FiniteIdeal lower = net.height_class(m - 2).scaled(net.spec().residue());
  return lower.subset_of(net.height_class(m - 1));
}

LevelVerdict level_of(const IdealNet& net, const RuleSet& rules) {
  if (!saturate(net, rules).same_cells(net)) throw LevelError("net is not saturated under " + rules.to_string());
  const WedgeSpec& spec = net.spec();
  const int m = spec.m(), n = spec.n();
  LevelVerdict v{VerdictMode::GradedChain, std::nullopt, {}, {}};
  for (int k = 0; k < m; ++k) v.chain.push_back(net.height_class(k));

  bool monotone = true;
  for (int k = 0; k + 1 < m; ++k) {
    bool ok = v.chain[k + 1].subset_of(v.chain[k]);
    monotone &= ok;
    v.audit.push_back({"chain A_" + std::to_string(k + 1) + " <= A_" + std::to_string(k), ok,
                       v.chain[k + 1].to_string() + " in " + v.chain[k].to_string()});
  }
  for (int k = 0; k + 1 < m; ++k) {
    if (n < 3 * m - 2 * k) continue;
    bool ok = v.chain[k].subset_of(v.chain[k + 1]);
    v.audit.push_back({"raise A_" + std::to_string(k) + " <= A_" + std::to_string(k + 1), ok,
                       v.chain[k].to_string() + " in " + v.chain[k + 1].to_string()});
  }
  if (m >= 2)
    v.audit.push_back({"residue " + std::to_string(spec.residue()) + " * A_" + std::to_string(m - 2) +
                           " <= A_" + std::to_string(m - 1),
                       residue_audit(net),
                       v.chain[m - 2].scaled(spec.residue()).to_string() + " in " + v.chain[m - 1].to_string()});
  for (int k = 0; k < m; ++k)
    v.audit.push_back({"height " + std::to_string(k) + " uniform", net.height_uniform(k), ""});

  if (!monotone) {
    v.mode = VerdictMode::Inconsistent;
    return v;
  }
  bool single = true;
  for (int k = 0; k < m; ++k) single &= net.height_uniform(k) && v.chain[k] == v.chain[0];
  if (single) {
    v.mode = VerdictMode::SingleLevel;
    v.level = v.chain[0];
  }
  return v;
}

}  // namespace extlevel
