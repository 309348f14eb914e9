#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extlevel/wedge.hpp"

namespace extlevel {

class CongruenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// rho_A : Z/q -> Z/d for A = (d), d a proper divisor of q.
class ReductionMap {
 public:
  explicit ReductionMap(const FiniteIdeal& A);
  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  RingElement operator()(const RingElement& x) const;

 private:
  Ring source_;
  Ring target_;
};

ExactMatrix reduce_matrix(const ExactMatrix& g, const FiniteIdeal& A);

struct CongruenceFlags {
  bool principal;  // reduces to e
  bool full;       // reduces to a scalar matrix
};

CongruenceFlags congruence_predicates(const ExactMatrix& g, const FiniteIdeal& A);

bool is_prime(std::uint64_t p);

struct Decomposition {
  bool decomposable;
  std::vector<std::vector<RingElement>> factors;  // m vectors of length n
  std::string witness;                            // violated coordinate when not decomposable
};

/// Factors a coordinate vector of the m-th exterior power (lex basis) as
/// v_1 ^ ... ^ v_m over a prime field Z/p, p odd. Throws on the zero vector.
Decomposition factor_decomposable(const std::vector<RingElement>& w, const WedgeSpec& spec);

/// Coordinates of v_1 ^ ... ^ v_m in the lex basis.
std::vector<RingElement> wedge_vectors(const std::vector<std::vector<RingElement>>& vs, const WedgeSpec& spec);

enum class MembershipTag { InSetImage, ScalarTwist, NotFound };
const char* membership_name(MembershipTag t);

struct MembershipVerdict {
  MembershipTag tag;
  std::optional<ExactMatrix> witness;  // g with wedge(g) = h, or = lambda h
  std::optional<RingElement> lambda;
  std::string notes;
};

/// Recognizes h in the set image of GL_n(K) or in its K*-scalar twists.
/// NotFound means "not recognized", not a proof of non-membership in the
/// scheme-theoretic image.
MembershipVerdict in_wedge_image(const ExactMatrix& h, const WedgeSpec& spec);

/// Reduces h modulo A (quotient must be a field) and runs the recognizer.
bool congruence_wedge_membership(const ExactMatrix& h, const FiniteIdeal& A, const WedgeSpec& spec);

}  // namespace extlevel
