/*! \file invariants.hpp
 *  \brief Assembly of the invariant matrices and the executable identity checks.
 */

#pragma once

#include "longknot/diagram.hpp"
#include "longknot/laurent.hpp"
#include "longknot/matrix.hpp"
#include "longknot/planar.hpp"

#include <string>
#include <vector>

namespace longknot {

/*! \brief Everything computed from one long-knot diagram.
 *
 * All vectors are indexed by crossing number - 1.  l counts the crossings
 * with s = +1.
 */
struct invariant_bundle {
  int n = 0;
  int_matrix T;
  std::vector<int> sigma, d, s;
  laurent_matrix x_neg_s;       // diag(x^-s_i)
  laurent_matrix x_neg_half;    // diag(x^-(1+s_i)/2)
  laurent_matrix A;             // modified-scheme incidence matrix
  int_matrix W;
  laurent_poly beta;
  laurent_poly delta;
  int l = 0;
};

/*! \brief det(I + T(I - X^-S)). */
inline laurent_poly beta(const int_matrix& T, const std::vector<int>& svec) {
  const std::size_t n = T.rows();
  laurent_matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      laurent_poly entry;
      if (T(i, j) != 0) entry = laurent_poly(1) - laurent_poly::x(-svec[j]);
      if (i == j) entry += laurent_poly(1);
      m(i, j) = entry;
    }
  return determinant(m);
}

inline invariant_bundle compute_bundle(const long_knot_diagram& lk) {
  invariant_bundle b;
  b.n = lk.crossing_count();
  b.T = traversal_matrix(lk);
  const sign_data_t sd = sign_data(lk);
  b.sigma = sd.sigma;
  b.d = sd.dvec;
  b.s = sd.svec;
  std::vector<int> ones(b.n, 1), neg_s(b.n), neg_half(b.n);
  for (int i = 0; i < b.n; ++i) {
    neg_s[i] = -b.s[i];
    neg_half[i] = -(1 + b.s[i]) / 2;
    if (b.s[i] > 0) ++b.l;
  }
  b.x_neg_s = diagonal_monomials(ones, neg_s);
  b.x_neg_half = diagonal_monomials(ones, neg_half);
  b.A = alexander_matrix(lk);
  b.W = winding_matrix(lk);
  b.beta = beta(b.T, b.s);
  b.delta = b.n == 0 ? laurent_poly(1) : determinant(b.A);
  return b;
}

inline laurent_poly beta(const long_knot_diagram& lk) {
  const sign_data_t sd = sign_data(lk);
  return beta(traversal_matrix(lk), sd.svec);
}

/*! \brief det(A); the zero-crossing diagram has no matrix and yields 1. */
inline laurent_poly delta(const long_knot_diagram& lk) {
  if (lk.crossing_count() == 0) return laurent_poly(1);
  return determinant(alexander_matrix(lk));
}

struct check_failure {
  std::string location;
  std::string expected;
  std::string actual;

  bool operator==(const check_failure&) const = default;
};

struct verification_report {
  bool theorem_holds = false;
  int sign = 0;  // the unit found in beta = sign * x^-l * delta, 0 on failure
  int l = 0;
  bool proposition_holds = false;
  bool lemma1_holds = false;
  bool lemma2_holds = false;
  long long det_w = 0;
  std::vector<check_failure> failures;

  bool all_ok() const {
    return theorem_holds && proposition_holds && lemma1_holds && lemma2_holds &&
           (det_w == 1 || det_w == -1);
  }
};

/*! \brief Run every identity check on an assembled bundle.
 *
 * Checks, with an entrywise witness recorded for each mismatch:
 *   - beta = +-x^-l * delta exactly;
 *   - Sigma * A * W * S * X^-(1+S)/2 = I + T^t (I - X^-S) entrywise;
 *   - (A W)_jj = d_j x^((1+s_j)/2) and (A W)_ij = sigma_i (x - 1) T_ji;
 *   - det W in {+1, -1}.
 */
inline verification_report verify(const invariant_bundle& b) {
  verification_report report;
  report.l = b.l;

  const laurent_poly shifted = b.delta.shifted(-b.l);
  if (b.beta == shifted) {
    report.theorem_holds = true;
    report.sign = 1;
  } else if (b.beta == -shifted) {
    report.theorem_holds = true;
    report.sign = -1;
  } else {
    report.failures.push_back({"theorem", "+-x^-" + std::to_string(b.l) + " * (" + b.delta.str() + ")", b.beta.str()});
  }

  const laurent_matrix aw = b.A * to_laurent(b.W);

  report.lemma1_holds = true;
  report.lemma2_holds = true;
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j) {
      laurent_poly expected;
      if (i == j)
        expected = laurent_poly::monomial(b.d[j], (1 + b.s[j]) / 2);
      else if (b.T(j, i) != 0)
        expected = bigint(b.sigma[i]) * (laurent_poly::x() - laurent_poly(1));
      if (aw(i, j) != expected) {
        (i == j ? report.lemma1_holds : report.lemma2_holds) = false;
        report.failures.push_back({"A*W[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                                   expected.str(), aw(i, j).str()});
      }
    }

  std::vector<int> ones(b.n, 1), zeros(b.n, 0);
  const laurent_matrix sigma_diag = diagonal_monomials(b.sigma, zeros);
  const laurent_matrix s_diag = diagonal_monomials(b.s, zeros);
  const laurent_matrix lhs = sigma_diag * aw * s_diag * b.x_neg_half;
  report.proposition_holds = true;
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j) {
      laurent_poly rhs;
      if (b.T(j, i) != 0) rhs = laurent_poly(1) - laurent_poly::x(-b.s[j]);
      if (i == j) rhs += laurent_poly(1);
      if (lhs(i, j) != rhs) {
        report.proposition_holds = false;
        report.failures.push_back({"proposition[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                                   rhs.str(), lhs(i, j).str()});
      }
    }

  const bigint det_w = determinant(b.W);
  report.det_w = det_w.convert_to<long long>();
  if (det_w != 1 && det_w != -1)
    report.failures.push_back({"det W", "+1 or -1", det_w.str()});

  return report;
}

inline verification_report verify(const long_knot_diagram& lk) { return verify(compute_bundle(lk)); }

struct theorem_result {
  bool holds = false;
  int sign = 0;
  int l = 0;
};

/*! \brief Find the unit sign with beta = sign * x^-l * delta, if any. */
inline theorem_result verify_theorem(const long_knot_diagram& lk) {
  const verification_report report = verify(compute_bundle(lk));
  return {report.theorem_holds, report.sign, report.l};
}

/*! \brief Entrywise check of Sigma A W S X^-(1+S)/2 = I + T^t (I - X^-S); empty iff it holds. */
inline std::vector<check_failure> verify_proposition(const long_knot_diagram& lk) {
  const verification_report report = verify(compute_bundle(lk));
  std::vector<check_failure> mismatches;
  for (const auto& f : report.failures)
    if (f.location.starts_with("proposition")) mismatches.push_back(f);
  return mismatches;
}

struct lemma_results {
  bool lemma1 = false;
  bool lemma2 = false;
  std::vector<check_failure> failures;
};

/*! \brief Entrywise checks of A W against the diagonal and off-diagonal identities. */
inline lemma_results verify_lemmas(const long_knot_diagram& lk) {
  const verification_report report = verify(compute_bundle(lk));
  lemma_results r{report.lemma1_holds, report.lemma2_holds, {}};
  for (const auto& f : report.failures)
    if (f.location.starts_with("A*W")) r.failures.push_back(f);
  return r;
}

/*! \brief det W; throws unless it is a unit. */
inline bigint det_w_unit(const long_knot_diagram& lk) {
  const bigint det = determinant(winding_matrix(lk));
  if (det != 1 && det != -1)
    throw internal_error("det W = " + det.str() + ", expected a unit");
  return det;
}

}  // namespace longknot
