#include "extlevel/matrix.hpp"

#include <bit>
#include <sstream>
#include <unordered_map>

namespace extlevel {

ExactMatrix::ExactMatrix(Ring ring, std::size_t dim)
    : ring_(ring), dim_(dim), a_(dim * dim, ring.zero()) {
  if (dim == 0) throw MatrixError("matrix dimension must be positive");
}

ExactMatrix ExactMatrix::identity(Ring ring, std::size_t dim) {
  ExactMatrix m(ring, dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = ring.one();
  return m;
}

ExactMatrix ExactMatrix::scalar(const RingElement& c, std::size_t dim) {
  ExactMatrix m(c.ring(), dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = c;
  return m;
}

ExactMatrix ExactMatrix::transvection(std::size_t dim, int i, int j, const RingElement& xi) {
  if (i == j) throw MatrixError("transvection needs i != j");
  if (i < 1 || j < 1 || std::size_t(i) > dim || std::size_t(j) > dim)
    throw MatrixError("transvection index out of range");
  ExactMatrix m = identity(xi.ring(), dim);
  m.at(i - 1, j - 1) = xi;
  return m;
}

ExactMatrix ExactMatrix::diagonal_unit(std::size_t dim, int i, const RingElement& xi) {
  if (i < 1 || std::size_t(i) > dim) throw MatrixError("diagonal index out of range");
  ExactMatrix m = identity(xi.ring(), dim);
  m.at(i - 1, i - 1) = xi;
  return m;
}

bool ExactMatrix::is_identity() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_scalar() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if (r == c ? !(at(r, c) == at(0, 0)) : !at(r, c).is_zero()) return false;
  return true;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return ring_ == o.ring_ && dim_ == o.dim_ && a_ == o.a_;
}

void ExactMatrix::apply_col_op(std::size_t r, std::size_t c, const RingElement& xi) {
  if (r >= dim_ || c >= dim_ || r == c) throw MatrixError("bad column operation");
  if (xi.is_zero()) return;
  for (std::size_t row = 0; row < dim_; ++row) {
    const RingElement& src = at(row, r);
    if (!src.is_zero()) at(row, c).add_product(src, xi);
  }
}

void ExactMatrix::apply_row_op(std::size_t r, std::size_t c, const RingElement& xi) {
  if (r >= dim_ || c >= dim_ || r == c) throw MatrixError("bad row operation");
  if (xi.is_zero()) return;
  for (std::size_t col = 0; col < dim_; ++col) {
    const RingElement& src = at(c, col);
    if (!src.is_zero()) at(r, col).add_product(xi, src);
  }
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < dim_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < dim_; ++c) os << (c ? ", " : "") << at(r, c);
    os << "]\n";
  }
  return os.str();
}

namespace {

void check_compatible(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (!(a.ring() == b.ring())) throw MatrixError(std::string(op) + ": ring mismatch");
  if (a.dim() != b.dim()) throw MatrixError(std::string(op) + ": dimension mismatch");
}

void mul_row(const ExactMatrix& a, const ExactMatrix& b, ExactMatrix& c, std::size_t i) {
  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const RingElement& aik = a.at(i, k);
    if (aik.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const RingElement& bkj = b.at(k, j);
      if (!bkj.is_zero()) c.at(i, j).add_product(aik, bkj);
    }
  }
}

}  // namespace

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  check_compatible(a, b, "mat_mul");
  ExactMatrix c(a.ring(), a.dim());
  const long n = long(a.dim());
#pragma omp parallel for schedule(dynamic, 4) if (n >= 16)
  for (long i = 0; i < n; ++i) mul_row(a, b, c, std::size_t(i));
  return c;
}

ExactMatrix mat_mul_serial(const ExactMatrix& a, const ExactMatrix& b) {
  check_compatible(a, b, "mat_mul");
  const std::size_t n = a.dim();
  ExactMatrix c(a.ring(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RingElement s = a.ring().zero();
      for (std::size_t k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
      c.at(i, j) = s;
    }
  return c;
}

std::vector<RingElement> char_poly(const ExactMatrix& a) {
  const Ring& R = a.ring();
  const std::size_t n = a.dim();
  std::vector<RingElement> p{R.one()};
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t s = r - 1;  // size of the leading block already processed
    std::vector<RingElement> T;
    T.reserve(r + 1);
    T.push_back(R.one());
    T.push_back(-a.at(s, s));
    // T[k+2] = -R * A_s^k * S, with S the column above the new diagonal entry
    // and R the row to its left.
    std::vector<RingElement> v;
    v.reserve(s);
    for (std::size_t i = 0; i < s; ++i) v.push_back(a.at(i, s));
    for (std::size_t k = 0; k + 2 <= r; ++k) {
      RingElement dot = R.zero();
      for (std::size_t i = 0; i < s; ++i) dot.add_product(a.at(s, i), v[i]);
      T.push_back(-dot);
      if (k + 3 <= r) {
        std::vector<RingElement> w(s, R.zero());
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j) w[i].add_product(a.at(i, j), v[j]);
        v = std::move(w);
      }
    }
    std::vector<RingElement> q(r + 1, R.zero());
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t k = 0; k <= std::min(i, r - 1); ++k) q[i].add_product(T[i - k], p[k]);
    p = std::move(q);
  }
  return p;
}

RingElement determinant(const ExactMatrix& a) {
  auto p = char_poly(a);
  return a.dim() % 2 ? -p.back() : p.back();
}

ExactMatrix mat_inverse(const ExactMatrix& a) {
  const std::size_t n = a.dim();
  auto c = char_poly(a);
  RingElement det = n % 2 ? -c.back() : c.back();
  auto det_inv = is_unit(det);
  if (!det_inv) throw MatrixError("mat_inverse: determinant " + det.to_string() + " is not a unit");
  ExactMatrix B = ExactMatrix::identity(a.ring(), n);
  for (std::size_t k = 1; k < n; ++k) {
    B = mat_mul(a, B);
    for (std::size_t i = 0; i < n; ++i) B.at(i, i) += c[k];
  }
  // A^{-1} = -c_n^{-1} B and c_n = (-1)^n det.
  RingElement scale = n % 2 ? *det_inv : -*det_inv;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!B.at(i, j).is_zero()) B.at(i, j) = B.at(i, j) * scale;
  return B;
}

namespace {

struct MinorMemo {
  const ExactMatrix& g;
  std::vector<int> rows;  // 0-based
  std::vector<std::unordered_map<std::uint32_t, RingElement>> memo;

  // Determinant of the last k selected rows against the columns in mask.
  RingElement eval(std::uint32_t mask) {
    const int k = std::popcount(mask);
    if (k == 0) return g.ring().one();
    auto& level = memo[k];
    if (auto it = level.find(mask); it != level.end()) return it->second;
    const int r = rows[rows.size() - k];
    RingElement acc = g.ring().zero();
    int t = 0;
    for (std::uint32_t m = mask; m; m &= m - 1, ++t) {
      int c = std::countr_zero(m);
      const RingElement& x = g.at(r, c);
      if (x.is_zero()) continue;
      RingElement sub = eval(mask & ~(1u << c));
      if (sub.is_zero()) continue;
      if (t % 2)
        acc -= x * sub;
      else
        acc.add_product(x, sub);
    }
    level.emplace(mask, acc);
    return acc;
  }
};

}  // namespace

RingElement minor(const ExactMatrix& g, const WeightIndex& I, const WeightIndex& J) {
  if (I.size() != J.size()) throw MatrixError("minor: row and column sets differ in size");
  if (std::size_t(I.n()) > g.dim() || std::size_t(J.n()) > g.dim() ||
      (I.mask() >> g.dim()) != 0 || (J.mask() >> g.dim()) != 0)
    throw MatrixError("minor: index out of range");
  MinorMemo mm{g, {}, std::vector<std::unordered_map<std::uint32_t, RingElement>>(I.size() + 1)};
  for (int v : I.elems()) mm.rows.push_back(v - 1);
  return mm.eval(J.mask());
}

ExactMatrix group_commutator(const ExactMatrix& x, const ExactMatrix& y) {
  return mat_mul(mat_mul(x, y), mat_mul(mat_inverse(x), mat_inverse(y)));
}

ExactMatrix conj_left(const ExactMatrix& x, const ExactMatrix& y) {
  return mat_mul(mat_mul(x, y), mat_inverse(x));
}

ExactMatrix conj_right(const ExactMatrix& y, const ExactMatrix& x) {
  return mat_mul(mat_mul(mat_inverse(x), y), x);
}

std::string EntryDiff::to_string() const {
  return "entry (" + std::to_string(row) + "," + std::to_string(col) + "): " + lhs + " != " + rhs;
}

std::optional<EntryDiff> first_difference(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.ring() == b.ring())) throw MatrixError("first_difference: ring mismatch");
  if (a.dim() != b.dim()) throw MatrixError("first_difference: dimension mismatch");
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (!(a.at(r, c) == b.at(r, c)))
        return EntryDiff{r, c, a.at(r, c).to_string(), b.at(r, c).to_string()};
  return std::nullopt;
}

HallWittReport hall_witt_check(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z) {
  const ExactMatrix xi = mat_inverse(x), yi = mat_inverse(y), zi = mat_inverse(z);
  auto comm3 = [](const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c) {
    return group_commutator(group_commutator(a, b), c);
  };
  ExactMatrix p = mat_mul(mat_mul(conj_right(comm3(x, yi, zi), x), conj_right(comm3(z, xi, yi), z)),
                          conj_right(comm3(y, zi, xi), y));
  auto d = first_difference(p, ExactMatrix::identity(x.ring(), x.dim()));
  return HallWittReport{!d.has_value(), d};
}

}  // namespace extlevel
