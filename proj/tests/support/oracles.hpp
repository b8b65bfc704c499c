// Test-side oracles, independent of the elimination path used by the library.

#pragma once

#include "longknot/generate.hpp"
#include "longknot/laurent.hpp"
#include "longknot/matrix.hpp"

namespace longknot::testing {

// Determinant by cofactor expansion along the first row: addition and
// multiplication only, no division.
inline laurent_poly cofactor_determinant(const laurent_matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return laurent_poly(1);
  if (n == 1) return m(0, 0);
  laurent_poly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    laurent_matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t out = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, out++) = m(r, c);
      }
    }
    const laurent_poly term = m(0, j) * cofactor_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

inline laurent_poly cofactor_determinant(const int_matrix& m) {
  return cofactor_determinant(to_laurent(m));
}

inline laurent_poly random_laurent(splitmix64& rng, int max_terms = 3, int max_exp = 3, int max_coeff = 4) {
  laurent_poly p;
  const int terms = rng.range(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    const int coeff = rng.range(-max_coeff, max_coeff);
    p += laurent_poly::monomial(coeff, rng.range(-max_exp, max_exp));
  }
  return p;
}

inline laurent_matrix random_laurent_matrix(splitmix64& rng, int max_dim = 5) {
  const int n = rng.range(0, max_dim);
  laurent_matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = random_laurent(rng);
  return m;
}

}  // namespace longknot::testing
