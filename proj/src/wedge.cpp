#include "extlevel/wedge.hpp"

#include <algorithm>
#include <numeric>

namespace extlevel {

WedgeSpec::WedgeSpec(int n, int m) : n_(n), m_(m) {
  if (n < 3 || n > 32) throw IndexError("wedge spec needs 3 <= n <= 32");
  if (m < 1 || m > n - 1) throw IndexError("wedge spec needs 1 <= m <= n-1");
  indices_ = enumerate_indices(n, m);
}

std::size_t WedgeSpec::rank(const WeightIndex& I) const {
  if (I.n() != n_ || I.size() != m_) throw IndexError("index " + I.label() + " has the wrong shape");
  return std::size_t(lex_rank(I));
}

WeightIndex WedgeSpec::parse_index(std::string_view text) const {
  WeightIndex I = WeightIndex::parse(n_, text);
  if (I.size() != m_)
    throw IndexError("index '" + std::string(text) + "' must have " + std::to_string(m_) + " entries");
  return I;
}

std::string TransvectionTerm::to_string() const {
  const char* sep = I.n() > 9 ? ";" : ",";
  return "t_{" + I.label() + sep + J.label() + "}(" + arg.to_string() + ")";
}

namespace {

void check_shape(const WedgeSpec& spec, const ExactMatrix& g) {
  if (g.dim() != std::size_t(spec.n()))
    throw MatrixError("wedge_matrix: expected a " + std::to_string(spec.n()) + "x" +
                      std::to_string(spec.n()) + " matrix");
}

}  // namespace

ExactMatrix wedge_matrix(const WedgeSpec& spec, const ExactMatrix& g) {
  check_shape(spec, g);
  const int n = spec.n();
  const Ring& R = g.ring();

  // Level k holds every k x k minor, indexed [rank(rows)][rank(cols)] among
  // the k-subsets of [n]. A k-minor expands along its first row into
  // (k-1)-minors of the remaining rows.
  std::vector<RingElement> prev;
  std::vector<WeightIndex> prev_sets;
  for (int k = 1; k <= spec.m(); ++k) {
    auto sets = enumerate_indices(n, k);
    const std::size_t S = sets.size();
    std::vector<RingElement> cur(S * S, R.zero());
    // Drop table: for column set C and its t-th element, the rank of C minus it.
    std::vector<std::uint32_t> drop(S * k);
    std::vector<int> first_row(S);
    std::vector<std::vector<int>> elems(S);
    for (std::size_t s = 0; s < S; ++s) {
      elems[s] = sets[s].elems();
      first_row[s] = elems[s][0];
      if (k > 1)
        for (int t = 0; t < k; ++t) drop[s * k + t] = std::uint32_t(lex_rank(sets[s].without(elems[s][t])));
    }
    const std::size_t P = prev_sets.size();
#pragma omp parallel for schedule(dynamic)
    for (long ri = 0; ri < long(S); ++ri) {
      const std::size_t r = std::size_t(ri);
      const int r1 = first_row[r] - 1;
      for (std::size_t c = 0; c < S; ++c) {
        if (k == 1) {
          cur[r * S + c] = g.at(r1, elems[c][0] - 1);
          continue;
        }
        const std::size_t rsub = drop[r * k + 0];
        RingElement acc = R.zero();
        for (int t = 0; t < k; ++t) {
          const RingElement& x = g.at(r1, elems[c][t] - 1);
          if (x.is_zero()) continue;
          const RingElement& sub = prev[rsub * P + drop[c * k + t]];
          if (sub.is_zero()) continue;
          if (t % 2)
            acc -= x * sub;
          else
            acc.add_product(x, sub);
        }
        cur[r * S + c] = std::move(acc);
      }
    }
    prev = std::move(cur);
    prev_sets = std::move(sets);
  }

  const std::size_t N = spec.N();
  ExactMatrix out(R, N);
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out.at(r, c) = std::move(prev[r * N + c]);
  return out;
}

ExactMatrix wedge_matrix_serial(const WedgeSpec& spec, const ExactMatrix& g) {
  check_shape(spec, g);
  const std::size_t N = spec.N();
  const int m = spec.m();
  ExactMatrix out(g.ring(), N);
  std::vector<int> perm(m);
  for (std::size_t r = 0; r < N; ++r) {
    const auto rows = spec.index(r).elems();
    for (std::size_t c = 0; c < N; ++c) {
      const auto cols = spec.index(c).elems();
      std::iota(perm.begin(), perm.end(), 0);
      RingElement acc = g.ring().zero();
      do {
        RingElement term = g.ring().one();
        for (int t = 0; t < m && !term.is_zero(); ++t) term *= g.at(rows[t] - 1, cols[perm[t]] - 1);
        if (term.is_zero()) continue;
        if (perm_sign(perm) < 0)
          acc -= term;
        else
          acc += term;
      } while (std::next_permutation(perm.begin(), perm.end()));
      out.at(r, c) = acc;
    }
  }
  return out;
}

std::vector<TransvectionTerm> wedge_transvection_formula(const WedgeSpec& spec, int i, int j,
                                                         const RingElement& xi) {
  const int n = spec.n();
  if (i == j) throw IndexError("wedge transvection needs i != j");
  if (i < 1 || i > n || j < 1 || j > n) throw IndexError("wedge transvection index out of range");
  std::vector<int> ground;
  for (int v = 1; v <= n; ++v)
    if (v != i && v != j) ground.push_back(v);
  std::vector<TransvectionTerm> out;
  for (const auto& L : enumerate_subsets(n, ground, spec.m() - 1)) {
    int s = insert_sign(L, i) * insert_sign(L, j);
    out.push_back(TransvectionTerm{L.with(i), L.with(j), s < 0 ? -xi : xi});
  }
  return out;
}

ExactMatrix wedge_diag(const WedgeSpec& spec, int i, const RingElement& xi) {
  if (i < 1 || i > spec.n()) throw IndexError("wedge_diag index out of range");
  ExactMatrix out = ExactMatrix::identity(xi.ring(), spec.N());
  for (std::size_t r = 0; r < spec.N(); ++r)
    if (spec.index(r).contains(i)) out.at(r, r) = xi;
  return out;
}

std::uint64_t det_exponent(const WedgeSpec& spec) { return binomial(spec.n() - 1, spec.m() - 1); }

bool det_check(const WedgeSpec& spec, const ExactMatrix& g) {
  RingElement lhs = determinant(wedge_matrix(spec, g));
  RingElement rhs = determinant(g).pow(unsigned(det_exponent(spec)));
  return lhs == rhs;
}

ExactMatrix realize_terms(const WedgeSpec& spec, const Ring& ring,
                          const std::vector<TransvectionTerm>& terms) {
  ExactMatrix out = ExactMatrix::identity(ring, spec.N());
  for (const auto& t : terms) {
    if (!(t.arg.ring() == ring)) throw RingError("realize: term argument in the wrong ring");
    if (t.I == t.J) throw IndexError("realize: diagonal transvection " + t.to_string());
    out.apply_col_op(spec.rank(t.I), spec.rank(t.J), t.arg);
  }
  return out;
}

}  // namespace extlevel
