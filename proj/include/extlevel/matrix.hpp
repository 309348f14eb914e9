#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extlevel/index.hpp"
#include "extlevel/ring.hpp"

namespace extlevel {

class MatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense square matrix over a Ring, row-major, 0-based access.
class ExactMatrix {
 public:
  ExactMatrix(Ring ring, std::size_t dim);  // zero matrix
  static ExactMatrix identity(Ring ring, std::size_t dim);
  static ExactMatrix scalar(const RingElement& c, std::size_t dim);
  /// e + xi * e_{i,j} with 1-based i != j.
  static ExactMatrix transvection(std::size_t dim, int i, int j, const RingElement& xi);
  /// Diagonal d_i(xi): xi at the 1-based slot i, 1 elsewhere.
  static ExactMatrix diagonal_unit(std::size_t dim, int i, const RingElement& xi);

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }

  RingElement& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const RingElement& at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  bool is_identity() const;
  bool is_scalar() const;
  bool operator==(const ExactMatrix& o) const;

  /// Right multiplication by e + xi*e_{r,c} (0-based): column c += xi * column r.
  void apply_col_op(std::size_t r, std::size_t c, const RingElement& xi);
  /// Left multiplication by e + xi*e_{r,c} (0-based): row r += xi * row c.
  void apply_row_op(std::size_t r, std::size_t c, const RingElement& xi);

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t dim_;
  std::vector<RingElement> a_;
};

/// OpenMP product (rows distributed); skips zero left entries.
ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
/// Serial reference product.
ExactMatrix mat_mul_serial(const ExactMatrix& a, const ExactMatrix& b);

/// Division-free determinant (Berkowitz).
RingElement determinant(const ExactMatrix& a);
/// Characteristic coefficients c_0..c_n of det(tI - A) = sum c_k t^{n-k}.
std::vector<RingElement> char_poly(const ExactMatrix& a);
/// Inverse via Cayley-Hamilton; throws MatrixError if det is not a unit.
ExactMatrix mat_inverse(const ExactMatrix& a);

/// Minor with rows I and columns J (value sets, 1-based), by Laplace
/// expansion with a memo over column subsets.
RingElement minor(const ExactMatrix& g, const WeightIndex& I, const WeightIndex& J);

ExactMatrix group_commutator(const ExactMatrix& x, const ExactMatrix& y);
/// x y x^{-1}
ExactMatrix conj_left(const ExactMatrix& x, const ExactMatrix& y);
/// x^{-1} y x, written y^x.
ExactMatrix conj_right(const ExactMatrix& y, const ExactMatrix& x);

struct EntryDiff {
  std::size_t row;
  std::size_t col;
  std::string lhs;
  std::string rhs;
  std::string to_string() const;
};

std::optional<EntryDiff> first_difference(const ExactMatrix& a, const ExactMatrix& b);

struct HallWittReport {
  bool ok;
  std::optional<EntryDiff> diff;
};

/// [x,y^{-1},z^{-1}]^x [z,x^{-1},y^{-1}]^z [y,z^{-1},x^{-1}]^y == e, with
/// left-normed commutators and right-conjugate exponents.
HallWittReport hall_witt_check(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z);

}  // namespace extlevel
