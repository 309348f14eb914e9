#include "extlevel/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace extlevel {

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t md(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = md(a, p);
  while (nr) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw CongruenceError("not invertible mod " + std::to_string(p));
  return md(t, p);
}

std::int64_t det_mod(std::vector<Vec> a, std::int64_t p) {
  std::size_t n = a.size();
  std::int64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = md(-det, p);
    }
    det = det * a[c][c] % p;
    std::int64_t iv = inv_mod(a[c][c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (!a[r][c]) continue;
      std::int64_t f = a[r][c] * iv % p;
      for (std::size_t k = c; k < n; ++k) a[r][k] = md(a[r][k] - f * a[c][k], p);
    }
  }
  return det;
}

// Basis of {x : row . x = 0 for every row}.
std::vector<Vec> nullspace(std::vector<Vec> rows, std::size_t ncols, std::int64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::int64_t iv = inv_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = x * iv % p;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || !rows[k][c]) continue;
      std::int64_t f = rows[k][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[k][j] = md(rows[k][j] - f * rows[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<Vec> out;
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(ncols, 0);
    x[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = md(-rows[k][f], p);
    out.push_back(std::move(x));
  }
  return out;
}

std::int64_t field_prime(const Ring& ring) {
  if (ring.kind() != RingKind::Modular || !is_prime(ring.modulus()))
    throw CongruenceError("expected a prime field, got " + ring.name());
  return std::int64_t(ring.modulus());
}

Vec residues(const std::vector<RingElement>& v) {
  Vec out;
  out.reserve(v.size());
  for (auto& x : v) out.push_back(x.residue());
  return out;
}

Vec wedge_coords(const std::vector<Vec>& vs, const WedgeSpec& spec, std::int64_t p) {
  Vec out;
  out.reserve(spec.N());
  for (auto& J : spec.indices()) {
    auto cols = J.elems();
    std::vector<Vec> sub(vs.size(), Vec(cols.size()));
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b) sub[a][b] = vs[a][cols[b] - 1];
    out.push_back(det_mod(std::move(sub), p));
  }
  return out;
}

struct Factored {
  std::vector<Vec> factors;
  std::string witness;
};

Factored factor_mod(const Vec& w, const WedgeSpec& spec, std::int64_t p) {
  std::size_t first = 0;
  while (first < w.size() && w[first] == 0) ++first;
  if (first == w.size()) throw CongruenceError("zero vector has no factorization");
  const auto& I = spec.index(first);
  auto iv = I.elems();
  std::int64_t winv = inv_mod(w[first], p);
  int n = spec.n();
  std::vector<Vec> rows(iv.size(), Vec(n, 0));
  for (std::size_t a = 0; a < iv.size(); ++a) {
    rows[a][iv[a] - 1] = 1;
    for (int j = 1; j <= n; ++j) {
      if (I.contains(j)) continue;
      auto K = I.without(iv[a]).with(j);
      auto kv = K.elems();
      std::size_t pos = std::find(kv.begin(), kv.end(), j) - kv.begin();
      std::int64_t s = ((pos + a) % 2) ? -1 : 1;
      rows[a][j - 1] = md(s * w[spec.rank(K)] % p * winv, p);
    }
  }
  for (auto& x : rows[0]) x = x * w[first] % p;
  Factored out;
  auto got = wedge_coords(rows, spec, p);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (got[k] != w[k]) {
      out.witness = "coordinate " + spec.index(k).label() + ": expected " + std::to_string(w[k]) +
                    ", factors give " + std::to_string(got[k]);
      return out;
    }
  }
  out.factors = std::move(rows);
  return out;
}

ExactMatrix to_matrix(const Ring& ring, const std::vector<Vec>& cols) {
  std::size_t n = cols.size();
  ExactMatrix g(ring, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) g.at(r, c) = ring.from_int(long(cols[c][r]));
  return g;
}

std::optional<ExactMatrix> recover(const ExactMatrix& h, const WedgeSpec& spec, std::int64_t p,
                                   std::string& note) {
  const int n = spec.n(), m = spec.m();
  const std::size_t N = spec.N();
  std::vector<Vec> hcols(N, Vec(N));
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) hcols[c][r] = h.at(r, c).residue();

  std::vector<std::vector<Vec>> annihilators(N);
  for (std::size_t J = 0; J < N; ++J) {
    if (std::all_of(hcols[J].begin(), hcols[J].end(), [](auto x) { return x == 0; })) {
      note = "zero column " + spec.index(J).label();
      return std::nullopt;
    }
    auto f = factor_mod(hcols[J], spec, p);
    if (f.factors.empty()) {
      note = "column " + spec.index(J).label() + " not decomposable (" + f.witness + ")";
      return std::nullopt;
    }
    annihilators[J] = nullspace(f.factors, n, p);
  }

  std::vector<Vec> lines(n);
  for (int k = 1; k <= n; ++k) {
    std::vector<Vec> stack;
    for (std::size_t J = 0; J < N; ++J)
      if (spec.index(J).contains(k))
        stack.insert(stack.end(), annihilators[J].begin(), annihilators[J].end());
    auto L = nullspace(stack, n, p);
    if (L.size() != 1) {
      note = "column spaces through " + std::to_string(k) + " meet in dimension " + std::to_string(L.size());
      return std::nullopt;
    }
    lines[k - 1] = L[0];
  }

  // h e_J = r_J (u_{j1} ^ ... ^ u_{jm})
  Vec ratio(N);
  for (std::size_t J = 0; J < N; ++J) {
    std::vector<Vec> us;
    for (int j : spec.index(J).elems()) us.push_back(lines[j - 1]);
    auto x = wedge_coords(us, spec, p);
    std::size_t c = 0;
    while (c < N && x[c] == 0) ++c;
    if (c == N) {
      note = "lines through " + spec.index(J).label() + " are dependent";
      return std::nullopt;
    }
    std::int64_t r = hcols[J][c] * inv_mod(x[c], p) % p;
    for (std::size_t k = 0; k < N; ++k) {
      if (md(r * x[k], p) != hcols[J][k]) {
        note = "column " + spec.index(J).label() + " is not a multiple of its lines";
        return std::nullopt;
      }
    }
    ratio[J] = r;
  }

  // g e_k = c_k u_k with prod_{k in J} c_k = r_J; c_k = t rho_k.
  Vec rho(n, 1);
  for (int k = 2; k <= n; ++k) {
    std::vector<int> ground;
    for (int v = 1; v <= n; ++v)
      if (v != 1 && v != k) ground.push_back(v);
    auto L = enumerate_subsets(n, ground, m - 1).front();
    rho[k - 1] = ratio[spec.rank(L.with(k))] * inv_mod(ratio[spec.rank(L.with(1))], p) % p;
  }
  std::vector<int> base(m);
  std::iota(base.begin(), base.end(), 1);
  WeightIndex J0(n, base);
  std::int64_t prod = 1;
  for (int k : base) prod = prod * rho[k - 1] % p;
  std::int64_t mu = ratio[spec.rank(J0)] * inv_mod(prod, p) % p;
  std::optional<std::int64_t> t;
  for (std::int64_t c = 1; c < p && !t; ++c) {
    std::int64_t pw = 1;
    for (int e = 0; e < m; ++e) pw = pw * c % p;
    if (pw == mu) t = c;
  }
  if (!t) {
    note = "no m-th root of " + std::to_string(mu);
    return std::nullopt;
  }
  std::vector<Vec> cols(n);
  for (int k = 0; k < n; ++k) {
    std::int64_t ck = *t * rho[k] % p;
    cols[k] = lines[k];
    for (auto& x : cols[k]) x = x * ck % p;
  }
  auto g = to_matrix(h.ring(), cols);
  if (!(wedge_matrix(spec, g) == h)) {
    note = "reconstructed g does not reproduce h";
    return std::nullopt;
  }
  return g;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

ReductionMap::ReductionMap(const FiniteIdeal& A)
    : source_(A.ring()), target_(A.ring()) {
  if (A.ring().kind() != RingKind::Modular) throw CongruenceError("reduction needs a ring Z/q");
  if (A.is_whole()) throw CongruenceError("quotient by the whole ring is the zero ring");
  target_ = Ring::modular(A.divisor());
}

RingElement ReductionMap::operator()(const RingElement& x) const {
  if (!(x.ring() == source_)) throw CongruenceError("element not in " + source_.name());
  return target_.from_int(long(x.residue() % std::int64_t(target_.modulus())));
}

ExactMatrix reduce_matrix(const ExactMatrix& g, const FiniteIdeal& A) {
  ReductionMap rho(A);
  ExactMatrix out(rho.target(), g.dim());
  for (std::size_t r = 0; r < g.dim(); ++r)
    for (std::size_t c = 0; c < g.dim(); ++c) out.at(r, c) = rho(g.at(r, c));
  return out;
}

CongruenceFlags congruence_predicates(const ExactMatrix& g, const FiniteIdeal& A) {
  auto red = reduce_matrix(g, A);
  return {red.is_identity(), red.is_scalar()};
}

std::vector<RingElement> wedge_vectors(const std::vector<std::vector<RingElement>>& vs,
                                       const WedgeSpec& spec) {
  if (vs.empty() || int(vs.size()) != spec.m()) throw CongruenceError("expected m vectors");
  const Ring& ring = vs[0][0].ring();
  std::int64_t p = field_prime(ring);
  std::vector<Vec> rows;
  for (auto& v : vs) rows.push_back(residues(v));
  std::vector<RingElement> out;
  for (auto x : wedge_coords(rows, spec, p)) out.push_back(ring.from_int(long(x)));
  return out;
}

Decomposition factor_decomposable(const std::vector<RingElement>& w, const WedgeSpec& spec) {
  if (w.size() != spec.N()) throw CongruenceError("coordinate vector has wrong length");
  const Ring& ring = w[0].ring();
  std::int64_t p = field_prime(ring);
  auto f = factor_mod(residues(w), spec, p);
  Decomposition out{!f.factors.empty(), {}, f.witness};
  for (auto& row : f.factors) {
    std::vector<RingElement> v;
    for (auto x : row) v.push_back(ring.from_int(long(x)));
    out.factors.push_back(std::move(v));
  }
  return out;
}

const char* membership_name(MembershipTag t) {
  switch (t) {
    case MembershipTag::InSetImage: return "InSetImage";
    case MembershipTag::ScalarTwist: return "ScalarTwist";
    case MembershipTag::NotFound: return "NotFound";
  }
  return "?";
}

MembershipVerdict in_wedge_image(const ExactMatrix& h, const WedgeSpec& spec) {
  if (h.dim() != spec.N()) throw CongruenceError("matrix size is not C(n,m)");
  std::int64_t p = field_prime(h.ring());
  std::string note;
  if (auto g = recover(h, spec, p, note)) return {MembershipTag::InSetImage, std::move(g), std::nullopt, ""};
  std::string first_note = note;
  for (std::int64_t l = 2; l < p; ++l) {
    auto lam = h.ring().from_int(long(l));
    auto twisted = mat_mul(ExactMatrix::scalar(lam, h.dim()), h);
    if (auto g = recover(twisted, spec, p, note))
      return {MembershipTag::ScalarTwist, std::move(g), lam, ""};
  }
  return {MembershipTag::NotFound, std::nullopt, std::nullopt, first_note};
}

bool congruence_wedge_membership(const ExactMatrix& h, const FiniteIdeal& A, const WedgeSpec& spec) {
  if (!is_prime(A.divisor())) throw CongruenceError("quotient by " + A.to_string() + " is not a field");
  return in_wedge_image(reduce_matrix(h, A), spec).tag != MembershipTag::NotFound;
}

}  // namespace extlevel
