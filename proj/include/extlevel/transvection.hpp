#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "extlevel/wedge.hpp"

namespace extlevel {

/// Exterior transvection: the image of t_{i,j}(arg) in GL_N.
struct WedgeTerm {
  int i;
  int j;
  RingElement arg;
  std::string to_string() const;
};

class TransvectionProduct;

/// ^conj inner = conj * inner * conj^{-1}.
struct ConjugatedBlock {
  std::shared_ptr<const TransvectionProduct> conj;
  std::shared_ptr<const TransvectionProduct> inner;
};

using Factor = std::variant<TransvectionTerm, WedgeTerm, ConjugatedBlock>;

/// Ordered word of factors, evaluated left to right.
class TransvectionProduct {
 public:
  TransvectionProduct() = default;
  TransvectionProduct(std::initializer_list<Factor> fs) : factors_(fs) {}
  explicit TransvectionProduct(std::vector<Factor> fs) : factors_(std::move(fs)) {}
  static TransvectionProduct from_terms(const std::vector<TransvectionTerm>& terms);

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  TransvectionProduct& operator*=(const TransvectionProduct& o);
  friend TransvectionProduct operator*(TransvectionProduct a, const TransvectionProduct& b) {
    return a *= b;
  }

  TransvectionProduct inverse() const;
  /// Plain transvection terms in GL_N, exterior factors expanded by the closed form.
  std::vector<TransvectionTerm> flatten(const WedgeSpec& spec) const;
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

TransvectionProduct commutator(const TransvectionProduct& x, const TransvectionProduct& y);
/// Left-normed [x1, x2, ..., xk].
TransvectionProduct commutator(std::initializer_list<TransvectionProduct> xs);
TransvectionProduct conjugate(const TransvectionProduct& by, const TransvectionProduct& x);

/// Left-to-right product of the realized factors in GL_N.
ExactMatrix realize(const WedgeSpec& spec, const Ring& ring, const TransvectionProduct& p);
ExactMatrix realize(const WedgeSpec& spec, const TransvectionTerm& t);

/// One factor of a commutator template: t_{I,J}(sign * zeta^zeta_power * xi).
struct TemplateTerm {
  WeightIndex I;
  WeightIndex J;
  int sign;
  int zeta_power;
};

enum class CommutatorTag { Vanishes, SingleShift, TripleProduct, Degenerate };
const char* tag_name(CommutatorTag tag);

struct CommutatorClass {
  CommutatorTag tag;
  std::vector<TemplateTerm> terms;  // empty for Vanishes and Degenerate
};

/// Shape of [t_{I,J}(xi), W t_{j,i}(zeta)]. With A = (i in I, j not in I)
/// and B = (j in J, i not in J), I~ = I - i + j and J~ = J - j + i:
///   neither: Vanishes
///   A only:  t_{I~,J}(-s1 zeta xi)
///   B only:  t_{I,J~}(s2 xi zeta)
///   both:    t_{I~,J}(-s1 zeta xi) t_{I~,J~}(s1 s2 zeta^2 xi) t_{I,J~}(s2 xi zeta)
///            unless I~ = J (Degenerate).
/// s1, s2 are the signs of the factors of W t_{j,i} moving I and J~.
CommutatorClass classify_commutator(const WeightIndex& I, const WeightIndex& J, int j, int i);

class DegenerateCommutator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IdentityMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TransvectionProduct instantiate(const CommutatorClass& cls, const RingElement& xi,
                                const RingElement& zeta);

/// [t, W t_{w.i,w.j}(w.arg)] as a transvection word. In checked mode the
/// result is compared against the matrix commutator and IdentityMismatch is
/// thrown on disagreement. Throws DegenerateCommutator for the degenerate class.
TransvectionProduct commutator_eval(const WedgeSpec& spec, const TransvectionTerm& t,
                                    const WedgeTerm& w, bool checked = false);

/// z_{I,J}(xi, zeta) = t_{J,I}(zeta) t_{I,J}(xi) t_{J,I}(-zeta).
TransvectionProduct z_generator(const WeightIndex& I, const WeightIndex& J, const RingElement& xi,
                                const RingElement& zeta);

/// [ab, cd] = ^a[b,c] * ^{ac}[b,d] * [a,c] * ^c[a,d]; returns the four factors.
std::array<ExactMatrix, 4> abcd_decompose(const ExactMatrix& a, const ExactMatrix& b,
                                          const ExactMatrix& c, const ExactMatrix& d);
std::array<TransvectionProduct, 4> abcd_decompose(const TransvectionProduct& a,
                                                  const TransvectionProduct& b,
                                                  const TransvectionProduct& c,
                                                  const TransvectionProduct& d);

}  // namespace extlevel
