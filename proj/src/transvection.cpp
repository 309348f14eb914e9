#include "extlevel/transvection.hpp"

namespace extlevel {

std::string WedgeTerm::to_string() const {
  return "W t_{" + std::to_string(i) + "," + std::to_string(j) + "}(" + arg.to_string() + ")";
}

TransvectionProduct TransvectionProduct::from_terms(const std::vector<TransvectionTerm>& terms) {
  std::vector<Factor> fs(terms.begin(), terms.end());
  return TransvectionProduct(std::move(fs));
}

TransvectionProduct& TransvectionProduct::operator*=(const TransvectionProduct& o) {
  factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
  return *this;
}

namespace {

struct Inverter {
  Factor operator()(const TransvectionTerm& t) const { return t.inverse(); }
  Factor operator()(const WedgeTerm& w) const { return WedgeTerm{w.i, w.j, -w.arg}; }
  Factor operator()(const ConjugatedBlock& b) const {
    return ConjugatedBlock{b.conj, std::make_shared<const TransvectionProduct>(b.inner->inverse())};
  }
};

void flatten_into(const WedgeSpec& spec, const TransvectionProduct& p, std::vector<TransvectionTerm>& out);

struct Flattener {
  const WedgeSpec& spec;
  std::vector<TransvectionTerm>& out;
  void operator()(const TransvectionTerm& t) const { out.push_back(t); }
  void operator()(const WedgeTerm& w) const {
    auto fs = wedge_transvection_formula(spec, w.i, w.j, w.arg);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  void operator()(const ConjugatedBlock& b) const {
    flatten_into(spec, *b.conj, out);
    flatten_into(spec, *b.inner, out);
    flatten_into(spec, b.conj->inverse(), out);
  }
};

void flatten_into(const WedgeSpec& spec, const TransvectionProduct& p, std::vector<TransvectionTerm>& out) {
  for (const auto& f : p.factors()) std::visit(Flattener{spec, out}, f);
}

struct Printer {
  std::string operator()(const TransvectionTerm& t) const { return t.to_string(); }
  std::string operator()(const WedgeTerm& w) const { return w.to_string(); }
  std::string operator()(const ConjugatedBlock& b) const {
    return "^[" + b.conj->to_string() + "](" + b.inner->to_string() + ")";
  }
};

}  // namespace

TransvectionProduct TransvectionProduct::inverse() const {
  std::vector<Factor> fs;
  fs.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) fs.push_back(std::visit(Inverter{}, *it));
  return TransvectionProduct(std::move(fs));
}

std::vector<TransvectionTerm> TransvectionProduct::flatten(const WedgeSpec& spec) const {
  std::vector<TransvectionTerm> out;
  flatten_into(spec, *this, out);
  return out;
}

std::string TransvectionProduct::to_string() const {
  if (factors_.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) s += " ";
    s += std::visit(Printer{}, factors_[k]);
  }
  return s;
}

TransvectionProduct commutator(const TransvectionProduct& x, const TransvectionProduct& y) {
  return x * y * x.inverse() * y.inverse();
}

TransvectionProduct commutator(std::initializer_list<TransvectionProduct> xs) {
  if (xs.size() == 0) return {};
  auto it = xs.begin();
  TransvectionProduct acc = *it++;
  for (; it != xs.end(); ++it) acc = commutator(acc, *it);
  return acc;
}

TransvectionProduct conjugate(const TransvectionProduct& by, const TransvectionProduct& x) {
  return TransvectionProduct{ConjugatedBlock{std::make_shared<const TransvectionProduct>(by),
                                             std::make_shared<const TransvectionProduct>(x)}};
}

ExactMatrix realize(const WedgeSpec& spec, const Ring& ring, const TransvectionProduct& p) {
  return realize_terms(spec, ring, p.flatten(spec));
}

ExactMatrix realize(const WedgeSpec& spec, const TransvectionTerm& t) {
  return realize_terms(spec, t.arg.ring(), {t});
}

const char* tag_name(CommutatorTag tag) {
  switch (tag) {
    case CommutatorTag::Vanishes:
      return "Vanishes";
    case CommutatorTag::SingleShift:
      return "SingleShift";
    case CommutatorTag::TripleProduct:
      return "TripleProduct";
    case CommutatorTag::Degenerate:
      return "Degenerate";
  }
  return "?";
}

CommutatorClass classify_commutator(const WeightIndex& I, const WeightIndex& J, int j, int i) {
  if (I == J) throw IndexError("classify_commutator: diagonal pair");
  if (I.n() != J.n() || I.size() != J.size()) throw IndexError("classify_commutator: shape mismatch");
  if (i == j) throw IndexError("classify_commutator: needs i != j");
  if (i < 1 || j < 1 || i > I.n() || j > I.n()) throw IndexError("classify_commutator: value out of range");

  const bool A = I.contains(i) && !I.contains(j);
  const bool B = J.contains(j) && !J.contains(i);
  if (!A && !B) return {CommutatorTag::Vanishes, {}};

  auto sigma = [&](const WeightIndex& L) { return insert_sign(L, i) * insert_sign(L, j); };
  std::vector<TemplateTerm> terms;
  if (A && B) {
    const WeightIndex It = I.without(i).with(j);
    if (It == J) return {CommutatorTag::Degenerate, {}};
    const WeightIndex Jt = J.without(j).with(i);
    const int s1 = sigma(I.without(i));
    const int s2 = sigma(J.without(j));
    terms.push_back({It, J, -s1, 1});
    terms.push_back({It, Jt, s1 * s2, 2});
    terms.push_back({I, Jt, s2, 1});
    return {CommutatorTag::TripleProduct, std::move(terms)};
  }
  if (A) {
    terms.push_back({I.without(i).with(j), J, -sigma(I.without(i)), 1});
  } else {
    terms.push_back({I, J.without(j).with(i), sigma(J.without(j)), 1});
  }
  return {CommutatorTag::SingleShift, std::move(terms)};
}

TransvectionProduct instantiate(const CommutatorClass& cls, const RingElement& xi,
                                const RingElement& zeta) {
  if (cls.tag == CommutatorTag::Degenerate)
    throw DegenerateCommutator("degenerate commutator has no template");
  TransvectionProduct out;
  for (const auto& t : cls.terms) {
    RingElement a = xi * zeta.pow(unsigned(t.zeta_power));
    out *= TransvectionProduct{TransvectionTerm{t.I, t.J, t.sign < 0 ? -a : a}};
  }
  return out;
}

TransvectionProduct commutator_eval(const WedgeSpec& spec, const TransvectionTerm& t,
                                    const WedgeTerm& w, bool checked) {
  // W t_{w.i, w.j}: in template terms j = w.i and i = w.j.
  auto cls = classify_commutator(t.I, t.J, w.i, w.j);
  if (cls.tag == CommutatorTag::Degenerate)
    throw DegenerateCommutator("commutator of " + t.to_string() + " with " + w.to_string() +
                               " is degenerate");
  TransvectionProduct result = instantiate(cls, t.arg, w.arg);
  if (checked) {
    const Ring& R = t.arg.ring();
    const std::size_t n = std::size_t(spec.n());
    ExactMatrix y = wedge_matrix(spec, ExactMatrix::transvection(n, w.i, w.j, w.arg));
    ExactMatrix yi = wedge_matrix(spec, ExactMatrix::transvection(n, w.i, w.j, -w.arg));
    ExactMatrix lhs = mat_mul(mat_mul(realize(spec, t), y), mat_mul(realize(spec, t.inverse()), yi));
    ExactMatrix rhs = realize(spec, R, result);
    if (auto d = first_difference(lhs, rhs))
      throw IdentityMismatch("commutator template disagrees with matrix oracle at " + d->to_string());
  }
  return result;
}

TransvectionProduct z_generator(const WeightIndex& I, const WeightIndex& J, const RingElement& xi,
                                const RingElement& zeta) {
  if (I == J) throw IndexError("z_generator: diagonal pair");
  return TransvectionProduct{TransvectionTerm{J, I, zeta}, TransvectionTerm{I, J, xi},
                             TransvectionTerm{J, I, -zeta}};
}

std::array<ExactMatrix, 4> abcd_decompose(const ExactMatrix& a, const ExactMatrix& b,
                                          const ExactMatrix& c, const ExactMatrix& d) {
  ExactMatrix ac = mat_mul(a, c);
  return {conj_left(a, group_commutator(b, c)), conj_left(ac, group_commutator(b, d)),
          group_commutator(a, c), conj_left(c, group_commutator(a, d))};
}

std::array<TransvectionProduct, 4> abcd_decompose(const TransvectionProduct& a,
                                                  const TransvectionProduct& b,
                                                  const TransvectionProduct& c,
                                                  const TransvectionProduct& d) {
  return {conjugate(a, commutator(b, c)), conjugate(a * c, commutator(b, d)), commutator(a, c),
          conjugate(c, commutator(a, d))};
}

}  // namespace extlevel
