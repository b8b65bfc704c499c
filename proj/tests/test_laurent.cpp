#include <catch2/catch_amalgamated.hpp>

#include "longknot/laurent.hpp"
#include "longknot/matrix.hpp"

#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace longknot;
namespace golden = longknot::testing::golden;

namespace {

laurent_poly from_pairs(std::initializer_list<std::pair<int, int>> coeff_exp) {
  laurent_poly p;
  for (const auto& [c, e] : coeff_exp) p += laurent_poly::monomial(c, e);
  return p;
}

}  // namespace

TEST_CASE("ring operations on simple products", "[laurent]")
{
  const laurent_poly x = laurent_poly::x();
  const laurent_poly one(1);

  CHECK((x - one) * (x + one) == from_pairs({{1, 2}, {-1, 0}}));
  CHECK((one - laurent_poly::x(-1)) * -x == from_pairs({{-1, 1}, {1, 0}}));
  CHECK(laurent_poly{} == laurent_poly(0));
  CHECK((x * x).coeff(2) == 1);
}

TEST_CASE("additive inverses and ring axioms on random polynomials", "[laurent]")
{
  splitmix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const laurent_poly p = testing::random_laurent(rng);
    const laurent_poly q = testing::random_laurent(rng);
    const laurent_poly r = testing::random_laurent(rng);
    CHECK((p + (-p)).is_zero());
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("text rendering", "[laurent]")
{
  CHECK(laurent_poly{}.str() == "0");
  CHECK(laurent_poly(-7).str() == "-7");
  CHECK(laurent_poly::x().str() == "x");
  CHECK(laurent_poly::monomial(-1, 7).str() == "-x^7");
  CHECK(golden::beta_poly().str() == "-x^-2 + 3x^-1 - 3 + 3x - x^2");
  CHECK(golden::delta_poly().str() == "x - 3x^2 + 3x^3 - 3x^4 + x^5");
}

TEST_CASE("normalize picks one representative per unit orbit", "[laurent]")
{
  CHECK(normalize(golden::delta_poly()) == golden::normalized_poly());
  CHECK(normalize(golden::beta_poly()) == golden::normalized_poly());
  CHECK(normalize(laurent_poly::monomial(-1, 7)) == laurent_poly(1));
  CHECK_THROWS_AS(normalize(laurent_poly{}), std::domain_error);

  splitmix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    laurent_poly p = testing::random_laurent(rng);
    if (p.is_zero()) continue;
    const laurent_poly canon = normalize(p);
    CHECK(normalize(canon) == canon);
    const int shift = rng.range(-5, 5);
    laurent_poly q = p.shifted(shift);
    if (rng.range(0, 1)) q = -q;
    CHECK(normalize(q) == canon);
  }
}

TEST_CASE("exact evaluation", "[laurent]")
{
  CHECK(golden::beta_poly().evaluate(1) == 1);
  CHECK(golden::delta_poly().evaluate(1) == -1);
  CHECK(golden::beta_poly().evaluate(rational(1, 2)) == golden::beta_poly().evaluate(2));
  CHECK_THROWS_AS(laurent_poly::x(-1).evaluate(0), std::domain_error);

  splitmix64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const laurent_poly p = testing::random_laurent(rng);
    rational coefficient_sum = 0;
    for (const auto& [e, c] : p.terms()) coefficient_sum += rational(c);
    CHECK(p.evaluate(1) == coefficient_sum);
  }
}

TEST_CASE("variable inversion negates exponents", "[laurent]")
{
  CHECK(invert_variable(golden::beta_poly()) ==
        from_pairs({{-1, 2}, {3, 1}, {-3, 0}, {3, -1}, {-1, -2}}));
  splitmix64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const laurent_poly p = testing::random_laurent(rng);
    CHECK(invert_variable(invert_variable(p)) == p);
  }
}

TEST_CASE("determinant base cases", "[matrix]")
{
  CHECK(determinant(laurent_matrix(0, 0)) == laurent_poly(1));
  laurent_matrix one_by_one(1, 1);
  one_by_one(0, 0) = golden::beta_poly();
  CHECK(determinant(one_by_one) == golden::beta_poly());
  CHECK(determinant(laurent_matrix(3, 3)).is_zero());
  CHECK_THROWS_AS(determinant(laurent_matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinants of the displayed 6x6 matrices", "[matrix]")
{
  CHECK(determinant(golden::direct_product_matrix()) == golden::beta_poly());
  CHECK(determinant(golden::transposed_product_matrix()) == golden::beta_poly());
  CHECK(determinant(golden::a_matrix()) == golden::delta_poly());
}

TEST_CASE("elimination agrees with cofactor expansion", "[matrix]")
{
  splitmix64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const laurent_matrix m = testing::random_laurent_matrix(rng);
    CHECK(determinant(m) == testing::cofactor_determinant(m));
  }
}

TEST_CASE("determinant is alternating in the rows", "[matrix]")
{
  splitmix64 rng(29);
  int flipped = 0;
  for (int trial = 0; trial < 100; ++trial) {
    laurent_matrix m = testing::random_laurent_matrix(rng);
    if (m.rows() < 2) continue;
    const laurent_poly det = determinant(m);
    const int a = rng.range(0, static_cast<int>(m.rows()) - 1);
    int b = rng.range(0, static_cast<int>(m.rows()) - 1);
    if (a == b) b = (b + 1) % static_cast<int>(m.rows());
    m.swap_rows(a, b);
    CHECK(determinant(m) == -det);
    ++flipped;
  }
  CHECK(flipped > 50);
}

TEST_CASE("exact quotient recovers factors", "[laurent]")
{
  splitmix64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const laurent_poly p = testing::random_laurent(rng);
    const laurent_poly q = testing::random_laurent(rng);
    if (q.is_zero()) continue;
    CHECK(exact_quotient(p * q, q) == p);
  }
  CHECK_THROWS_AS(exact_quotient(laurent_poly::x() + laurent_poly(1), laurent_poly::monomial(2, 0)),
                  std::logic_error);
}
