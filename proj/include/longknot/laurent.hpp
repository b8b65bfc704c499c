/*! \file laurent.hpp
 *  \brief Exact integer-coefficient Laurent polynomials in one variable.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace longknot {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/*! \brief Sparse Laurent polynomial with exact big-integer coefficients.
 *
 * Terms map exponents (possibly negative) to nonzero coefficients; the zero
 * polynomial is the empty map.  All arithmetic is exact.
 */
class laurent_poly {
 public:
  laurent_poly() = default;

  explicit laurent_poly(bigint constant) {
    if (constant != 0) terms_.emplace(0, std::move(constant));
  }

  laurent_poly(int64_t constant) : laurent_poly(bigint(constant)) {}

  /*! \brief The monomial c * x^k. */
  static laurent_poly monomial(bigint c, int k) {
    laurent_poly p;
    if (c != 0) p.terms_.emplace(k, std::move(c));
    return p;
  }

  /*! \brief The variable x raised to the k-th power. */
  static laurent_poly x(int k = 1) { return monomial(1, k); }

  bool is_zero() const { return terms_.empty(); }

  const std::map<int, bigint>& terms() const { return terms_; }

  bigint coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? bigint(0) : it->second;
  }

  int min_exponent() const {
    if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
  }

  int max_exponent() const {
    if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
  }

  laurent_poly& operator+=(const laurent_poly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  laurent_poly& operator-=(const laurent_poly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  laurent_poly operator-() const {
    laurent_poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  laurent_poly& operator*=(const laurent_poly& other) {
    *this = *this * other;
    return *this;
  }

  friend laurent_poly operator+(laurent_poly a, const laurent_poly& b) { return a += b; }
  friend laurent_poly operator-(laurent_poly a, const laurent_poly& b) { return a -= b; }

  friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
    laurent_poly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  friend laurent_poly operator*(const bigint& s, laurent_poly p) {
    if (s == 0) return laurent_poly{};
    for (auto& [e, c] : p.terms_) c *= s;
    return p;
  }

  /*! \brief Multiply by x^k (shift all exponents). */
  laurent_poly shifted(int k) const {
    laurent_poly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  bool operator==(const laurent_poly& other) const = default;

  /*! \brief Exact evaluation at a nonzero rational point. */
  rational evaluate(const rational& point) const {
    if (point == 0) throw std::domain_error("laurent_poly: evaluation at x = 0");
    rational sum = 0;
    for (const auto& [e, c] : terms_) {
      rational power = 1;
      for (int i = 0; i < (e < 0 ? -e : e); ++i) power *= point;
      if (e < 0) power = 1 / power;
      sum += rational(c) * power;
    }
    return sum;
  }

  /*! \brief Terms sorted by ascending exponent, e.g. `-x^-2 + 3x^-1 - 3 + 3x - x^2`. */
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bigint a = c;
      if (first) {
        if (a < 0) {
          out << "-";
          a = -a;
        }
        first = false;
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      if (e == 0) {
        out << a;
      } else {
        if (a != 1) out << a;
        out << "x";
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }

 private:
  void add_term(int e, const bigint& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<int, bigint> terms_;
};

/*! \brief Substitute x -> 1/x by negating every exponent. */
inline laurent_poly invert_variable(const laurent_poly& p) {
  laurent_poly r;
  for (const auto& [e, c] : p.terms()) r += laurent_poly::monomial(c, -e);
  return r;
}

/*! \brief Canonical representative of the +-x^k orbit of a nonzero polynomial.
 *
 * Divides by x^(lowest exponent) and flips the sign so the constant term is
 * positive.  Two polynomials differ by a unit +-x^k iff they normalize
 * identically.
 */
inline laurent_poly normalize(const laurent_poly& p) {
  if (p.is_zero()) throw std::domain_error("normalize: zero polynomial");
  laurent_poly r = p.shifted(-p.min_exponent());
  if (r.coeff(0) < 0) r = -r;
  return r;
}

/*! \brief Exact quotient p / d; throws std::logic_error if the division is not exact. */
inline laurent_poly exact_quotient(const laurent_poly& p, const laurent_poly& d) {
  if (d.is_zero()) throw std::logic_error("exact_quotient: division by zero");
  if (p.is_zero()) return {};
  const int shift = p.min_exponent() - d.min_exponent();
  laurent_poly rem = p.shifted(-p.min_exponent());
  const laurent_poly den = d.shifted(-d.min_exponent());
  const int ddeg = den.max_exponent();
  const bigint dlead = den.coeff(ddeg);
  laurent_poly quot;
  while (!rem.is_zero()) {
    const int rdeg = rem.max_exponent();
    if (rdeg < ddeg) throw std::logic_error("exact_quotient: remainder not zero");
    const bigint rlead = rem.coeff(rdeg);
    if (rlead % dlead != 0) throw std::logic_error("exact_quotient: leading coefficient not divisible");
    const laurent_poly t = laurent_poly::monomial(rlead / dlead, rdeg - ddeg);
    quot += t;
    rem -= t * den;
  }
  return quot.shifted(shift);
}

}  // namespace longknot
