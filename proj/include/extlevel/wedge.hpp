#pragma once

#include <vector>

#include "extlevel/index.hpp"
#include "extlevel/matrix.hpp"

namespace extlevel {

/// Shape of the exterior power: n >= 3, 1 <= m <= n-1, N = C(n,m).
class WedgeSpec {
 public:
  WedgeSpec(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t N() const { return indices_.size(); }
  bool stable() const { return n_ >= 2 * m_; }
  bool level_range() const { return n_ >= 3 * m_; }
  /// C(n-2, m-1): factors in an exterior transvection.
  std::uint64_t residue() const { return binomial(n_ - 2, m_ - 1); }

  const std::vector<WeightIndex>& indices() const { return indices_; }
  const WeightIndex& index(std::size_t rank) const { return indices_.at(rank); }
  std::size_t rank(const WeightIndex& I) const;
  WeightIndex parse_index(std::string_view text) const;

  bool operator==(const WedgeSpec& o) const { return n_ == o.n_ && m_ == o.m_; }

 private:
  int n_, m_;
  std::vector<WeightIndex> indices_;
};

/// t_{I,J}(arg) in GL_N.
struct TransvectionTerm {
  WeightIndex I;
  WeightIndex J;
  RingElement arg;

  TransvectionTerm inverse() const { return {I, J, -arg}; }
  std::string to_string() const;
};

/// Image under the exterior power: entry (I,J) is minor(g, I, J). OpenMP
/// kernel over row sets, Laplace recursion shared between all minors.
ExactMatrix wedge_matrix(const WedgeSpec& spec, const ExactMatrix& g);
/// Serial reference: every entry by the Leibniz formula, independently.
ExactMatrix wedge_matrix_serial(const WedgeSpec& spec, const ExactMatrix& g);

/// Closed form of the image of t_{i,j}(xi): one factor
/// t_{L+i, L+j}(insert_sign(L,i) insert_sign(L,j) xi) per (m-1)-subset L of
/// [n] \ {i,j}, in ascending lex order of L. The factors commute.
std::vector<TransvectionTerm> wedge_transvection_formula(const WedgeSpec& spec, int i, int j,
                                                         const RingElement& xi);

/// Image of d_i(xi): diagonal, xi at (I,I) when i is in I.
ExactMatrix wedge_diag(const WedgeSpec& spec, int i, const RingElement& xi);

/// C(n-1, m-1), the power relating det of the image to det g.
std::uint64_t det_exponent(const WedgeSpec& spec);
bool det_check(const WedgeSpec& spec, const ExactMatrix& g);

/// Left-to-right product of the given terms, starting from e in GL_N.
ExactMatrix realize_terms(const WedgeSpec& spec, const Ring& ring,
                          const std::vector<TransvectionTerm>& terms);

}  // namespace extlevel
