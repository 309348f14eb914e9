#pragma once

#include <random>
#include <vector>

#include "extlevel/matrix.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline extlevel::RingElement residue(const extlevel::Ring& ring, Rng& rng) {
  return ring.from_int(uniform(rng, 0, long(ring.modulus()) - 1));
}

// Small polynomial: up to three terms, degree <= 2 per variable, coefficients in [-3, 3].
inline extlevel::RingElement poly(const extlevel::Ring& ring, Rng& rng) {
  std::vector<extlevel::Term> terms;
  int k = int(uniform(rng, 1, 3));
  for (int t = 0; t < k; ++t) {
    extlevel::Term term;
    for (std::size_t v = 0; v < ring.arity(); ++v) term.exp[v] = std::uint16_t(uniform(rng, 0, 2));
    term.coef = uniform(rng, -3, 3);
    terms.push_back(term);
  }
  return ring.from_terms(std::move(terms));
}

inline extlevel::RingElement element(const extlevel::Ring& ring, Rng& rng) {
  switch (ring.kind()) {
    case extlevel::RingKind::Modular: return residue(ring, rng);
    case extlevel::RingKind::Poly: return poly(ring, rng);
    case extlevel::RingKind::Integers: return ring.from_int(uniform(rng, -20, 20));
  }
  return ring.zero();
}

inline extlevel::ExactMatrix matrix(const extlevel::Ring& ring, std::size_t n, Rng& rng) {
  extlevel::ExactMatrix g(ring, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) g.at(r, c) = element(ring, rng);
  return g;
}

// Uniform over GL_n(Z/q) by rejection on the determinant.
inline extlevel::ExactMatrix invertible(const extlevel::Ring& ring, std::size_t n, Rng& rng) {
  for (;;) {
    auto g = matrix(ring, n, rng);
    if (extlevel::is_unit(extlevel::determinant(g))) return g;
  }
}

// Product of random elementary transvections (any ring); always invertible.
inline extlevel::ExactMatrix elementary(const extlevel::Ring& ring, std::size_t n, int length, Rng& rng) {
  auto g = extlevel::ExactMatrix::identity(ring, n);
  for (int s = 0; s < length; ++s) {
    std::size_t i = std::size_t(uniform(rng, 0, long(n) - 1)), j;
    do j = std::size_t(uniform(rng, 0, long(n) - 1));
    while (j == i);
    g.apply_col_op(i, j, element(ring, rng));
  }
  return g;
}

inline std::pair<int, int> distinct_pair(int n, Rng& rng) {
  int i = int(uniform(rng, 1, n)), j;
  do j = int(uniform(rng, 1, n));
  while (j == i);
  return {i, j};
}

}  // namespace gen
