#include <catch2/catch_amalgamated.hpp>

#include "longknot/braid.hpp"
#include "longknot/fixtures.hpp"
#include "longknot/generate.hpp"
#include "longknot/pd.hpp"
#include "longknot/planar.hpp"

#include "support/golden.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace longknot;
namespace golden = longknot::testing::golden;

namespace {

long_knot_diagram long_kink(const char* text) { return make_long(parse_pd(text), 0); }

long_knot_diagram long_trefoil() { return make_long(from_braid({2, {1, 1, 1}}), 0); }

std::multiset<std::pair<int, int>> corner_set(const std::vector<face_corner>& corners) {
  std::multiset<std::pair<int, int>> s;
  for (const auto& c : corners) s.insert({c.crossing, c.quadrant});
  return s;
}

}  // namespace

TEST_CASE("visit sequence walks each crossing once over and once under", "[planar]")
{
  CHECK(visit_sequence(make_long(closed_diagram{}, 0)).empty());

  const auto negative_kink = visit_sequence(long_kink("X(0,1,1,0)"));
  REQUIRE(negative_kink.size() == 2);
  CHECK(negative_kink[0] == visit{1, false});
  CHECK(negative_kink[1] == visit{1, true});

  const auto positive_kink = visit_sequence(long_kink("X(1,1,0,0)"));
  REQUIRE(positive_kink.size() == 2);
  CHECK(positive_kink[0] == visit{1, true});
  CHECK(positive_kink[1] == visit{1, false});

  splitmix64 rng(301);
  for (int trial = 0; trial < 30; ++trial) {
    const long_knot_diagram lk = random_long_knot(rng, {});
    std::map<int, std::pair<int, int>> counts;  // crossing -> (over, under)
    for (const visit& v : visit_sequence(lk)) (v.over ? counts[v.crossing].first : counts[v.crossing].second)++;
    CHECK(counts.size() == static_cast<std::size_t>(lk.crossing_count()));
    for (const auto& [crossing, count] : counts) {
      CHECK(count.first == 1);
      CHECK(count.second == 1);
    }
  }
}

TEST_CASE("sign data on the built-in example", "[planar]")
{
  const sign_data_t sd = sign_data(builtin_example("paper"));
  CHECK(sd.sigma == golden::sigma);
  CHECK(sd.dvec == golden::dvec);
  CHECK(sd.svec == golden::svec);
}

TEST_CASE("sign data on kinks", "[planar]")
{
  const sign_data_t positive = sign_data(long_kink("X(1,1,0,0)"));
  CHECK(positive.sigma == std::vector<int>{1});
  CHECK(positive.dvec == std::vector<int>{1});

  const sign_data_t negative = sign_data(long_kink("X(0,1,1,0)"));
  CHECK(negative.sigma == std::vector<int>{-1});
  CHECK(negative.dvec == std::vector<int>{-1});
}

TEST_CASE("mirroring flips sigma and keeps d", "[planar]")
{
  splitmix64 rng(303);
  for (int trial = 0; trial < 30; ++trial) {
    const closed_diagram d = random_closed_diagram(rng, {});
    const int basepoint = rng.range(0, d.edge_count - 1);
    const sign_data_t original = sign_data(make_long(d, basepoint));
    const sign_data_t reflected = sign_data(make_long(mirror(d), basepoint));
    REQUIRE(original.sigma.size() == reflected.sigma.size());
    for (std::size_t i = 0; i < original.sigma.size(); ++i) {
      CHECK(reflected.sigma[i] == -original.sigma[i]);
      CHECK(reflected.dvec[i] == original.dvec[i]);
    }
  }
}

TEST_CASE("span edges", "[planar]")
{
  CHECK(span_edges(long_kink("X(0,1,1,0)"), 1) == std::vector<int>{1});

  const long_knot_diagram sample = builtin_example("paper");
  const std::vector<int> span2 = span_edges(sample, 2);
  CHECK(span2 == std::vector<int>{3, 4, 5, 6, 7});

  // Interior under-passes of that span sit at crossings 3 and 5.
  const auto visits = visit_sequence(sample);
  std::set<int> interior_unders;
  for (std::size_t k = 0; k + 1 < span2.size(); ++k) {
    const visit& v = visits[span2[k]];  // pass at the head of walk edge k; basepoint is edge 0
    if (!v.over) interior_unders.insert(v.crossing);
  }
  CHECK(interior_unders == std::set<int>{3, 5});

  // The basepoint edge never lies strictly inside a span.
  splitmix64 rng(307);
  for (int trial = 0; trial < 30; ++trial) {
    const long_knot_diagram lk = random_long_knot(rng, {});
    for (int j = 1; j <= lk.crossing_count(); ++j) {
      const std::vector<int> span = span_edges(lk, j);
      CHECK(std::find(span.begin(), span.end(), lk.basepoint_edge) == span.end());
    }
  }
  CHECK_THROWS_AS(span_edges(long_trefoil(), 0), std::out_of_range);
  CHECK_THROWS_AS(span_edges(long_trefoil(), 4), std::out_of_range);
}

TEST_CASE("traversal matrix", "[planar]")
{
  CHECK(traversal_matrix(make_long(closed_diagram{}, 0)) == int_matrix(0, 0));
  CHECK(traversal_matrix(long_kink("X(0,1,1,0)")) == int_matrix(1, 1));
  CHECK(traversal_matrix(builtin_example("paper")) == golden::t_matrix());

  splitmix64 rng(311);
  for (int trial = 0; trial < 30; ++trial) {
    const long_knot_diagram lk = random_long_knot(rng, {});
    const int_matrix t = traversal_matrix(lk);
    for (int i = 0; i < lk.crossing_count(); ++i) {
      CHECK(t(i, i) == 0);
      for (int j = 0; j < lk.crossing_count(); ++j) CHECK((t(i, j) == 0 || t(i, j) == 1));
    }
  }
}

TEST_CASE("face decomposition counts and corners", "[planar]")
{
  const face_set unknot = faces(make_long(closed_diagram{}, 0));
  CHECK(unknot.faces.size() == 2);
  CHECK(unknot.region_number == std::vector<int>{0, 0});

  const face_set kink = faces(long_kink("X(0,1,1,0)"));
  CHECK(kink.faces.size() == 3);
  CHECK(std::count(kink.region_number.begin(), kink.region_number.end(), 0) == 2);

  splitmix64 rng(313);
  for (int trial = 0; trial < 30; ++trial) {
    const long_knot_diagram lk = random_long_knot(rng, {});
    const int n = lk.crossing_count();
    const face_set fs = faces(lk);
    CHECK(fs.faces.size() == static_cast<std::size_t>(n + 2));
    std::size_t total_corners = 0;
    std::set<std::pair<int, int>> seen;
    for (const auto& face : fs.faces)
      for (const auto& corner : face) {
        ++total_corners;
        CHECK(seen.insert({corner.crossing, corner.quadrant}).second);
      }
    CHECK(total_corners == static_cast<std::size_t>(4 * n));
    CHECK(fs.region_number[fs.unbounded[0]] == 0);
    CHECK(fs.region_number[fs.unbounded[1]] == 0);
  }
}

TEST_CASE("face decomposition of the built-in example", "[planar]")
{
  const face_set fs = faces(builtin_example("paper"));
  REQUIRE(fs.faces.size() == 8);

  std::vector<std::multiset<std::pair<int, int>>> bounded(7);
  std::vector<std::multiset<std::pair<int, int>>> unbounded;
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    if (fs.region_number[f] == 0)
      unbounded.push_back(corner_set(fs.faces[f]));
    else
      bounded[fs.region_number[f]] = corner_set(fs.faces[f]);
  }
  REQUIRE(unbounded.size() == 2);

  for (const auto& expectation : golden::face_expectations()) {
    const auto expected = corner_set(expectation.corners);
    if (expectation.region == 0)
      CHECK((unbounded[0] == expected || unbounded[1] == expected));
    else
      CHECK(bounded[expectation.region] == expected);
  }
}

TEST_CASE("alexander matrix of the built-in example", "[planar]")
{
  const long_knot_diagram sample = builtin_example("paper");
  const laurent_matrix a = alexander_matrix(sample);
  CHECK(a == golden::a_matrix());

  // Row 6 reads x, 0, 0, 0, 0, -1.
  CHECK(a(5, 0) == laurent_poly::x());
  CHECK(a(5, 5) == laurent_poly(-1));
  for (int j = 1; j < 5; ++j) CHECK(a(5, j).is_zero());
}

TEST_CASE("kink alexander matrix is a unit monomial", "[planar]")
{
  for (const char* text : {"X(0,1,1,0)", "X(1,1,0,0)"}) {
    const laurent_matrix a = alexander_matrix(long_kink(text));
    REQUIRE(a.rows() == 1);
    const laurent_poly entry = a(0, 0);
    REQUIRE_FALSE(entry.is_zero());
    CHECK(entry.min_exponent() == entry.max_exponent());
    const bigint c = entry.coeff(entry.min_exponent());
    CHECK((c == 1 || c == -1));
    CHECK(normalize(entry) == laurent_poly(1));
  }
}

TEST_CASE("full incidence matrix rows sum to zero", "[planar]")
{
  splitmix64 rng(317);
  std::vector<long_knot_diagram> diagrams{builtin_example("paper"), long_trefoil()};
  for (int trial = 0; trial < 20; ++trial) diagrams.push_back(random_long_knot(rng, {}));

  for (const auto& lk : diagrams) {
    for (const marking_scheme scheme : {marking_scheme::modified, marking_scheme::classical}) {
      const laurent_matrix full = full_alexander_matrix(lk, scheme);
      for (std::size_t i = 0; i < full.rows(); ++i) {
        laurent_poly sum;
        for (std::size_t j = 0; j < full.cols(); ++j) sum += full(i, j);
        CHECK(sum.is_zero());
      }
    }
  }
}

TEST_CASE("deleting the unbounded columns recovers the incidence matrix", "[planar]")
{
  const long_knot_diagram sample = builtin_example("paper");
  const laurent_matrix full = full_alexander_matrix(sample);
  const laurent_matrix trimmed = delete_region_columns(sample, full, 6, 7);
  CHECK(trimmed == alexander_matrix(sample));
}

TEST_CASE("deleting any adjacent column pair changes the determinant by a unit", "[planar]")
{
  const long_knot_diagram sample = builtin_example("paper");
  const laurent_matrix full = full_alexander_matrix(sample);
  const laurent_poly reference = normalize(determinant(alexander_matrix(sample)));
  const auto pairs = adjacent_region_column_pairs(sample);
  CHECK(pairs.size() < 8 * 7 / 2);  // some region pairs share no edge
  for (const auto& [a, b] : pairs) {
    const laurent_poly det = determinant(delete_region_columns(sample, full, a, b));
    CHECK(normalize(det) == reference);
  }

  // Regions 2 and 5 share no edge.
  CHECK(std::find(pairs.begin(), pairs.end(), std::make_pair(1, 4)) == pairs.end());
  CHECK_THROWS_AS(delete_region_columns(sample, full, 1, 4), validation_error);
}

TEST_CASE("classical marking scheme gives the same invariant", "[planar]")
{
  splitmix64 rng(331);
  std::vector<long_knot_diagram> diagrams{builtin_example("paper"), long_trefoil()};
  for (int trial = 0; trial < 10; ++trial) diagrams.push_back(random_long_knot(rng, {}));
  for (const auto& lk : diagrams) {
    if (lk.crossing_count() == 0) continue;
    const laurent_poly modified = determinant(alexander_matrix(lk, marking_scheme::modified));
    const laurent_poly classical = determinant(alexander_matrix(lk, marking_scheme::classical));
    CHECK(normalize(modified) == normalize(classical));
  }
}

TEST_CASE("winding matrix of the built-in example", "[planar]")
{
  const int_matrix w = winding_matrix(builtin_example("paper"));
  CHECK(w == golden::w_matrix());

  // Row 1 and column 2 spelled out.
  const int row1[6] = {0, 0, 0, 1, 1, 1};
  const int col2[6] = {0, -1, -1, -1, -1, 0};
  for (int j = 0; j < 6; ++j) CHECK(w(0, j) == row1[j]);
  for (int i = 0; i < 6; ++i) CHECK(w(i, 1) == col2[i]);
}

TEST_CASE("kink loop region winds once around its span", "[planar]")
{
  for (const char* text : {"X(0,1,1,0)", "X(1,1,0,0)"}) {
    const int_matrix w = winding_matrix(long_kink(text));
    REQUIRE(w.rows() == 1);
    CHECK((w(0, 0) == 1 || w(0, 0) == -1));
  }
}

TEST_CASE("winding matrices of random diagrams are unimodular", "[planar]")
{
  splitmix64 rng(337);
  for (int trial = 0; trial < 30; ++trial) {
    const long_knot_diagram lk = random_long_knot(rng, {});
    if (lk.crossing_count() == 0) continue;
    const bigint det = determinant(winding_matrix(lk));
    CHECK((det == 1 || det == -1));
  }
}
