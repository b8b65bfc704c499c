/*! \file planar.hpp
 *  \brief Combinatorial data read off a long-knot diagram: visit sequence,
 *         crossing signs, spans, the traversal matrix T, faces, the Alexander
 *         incidence matrix A and the winding matrix W.
 *
 * Geometry conventions, with ports 0..3 counterclockwise from the incoming
 * under-strand edge:
 *   - quadrant q is the sector between ports q and q+1 (mod 4);
 *   - a face-trace dart arriving at port p owns quadrant p-1 (mod 4) and
 *     leaves through port p-1, keeping its face on the left;
 *   - the face on the left of an edge is the face of the dart arriving at the
 *     edge's head slot; winding numbers increase by one from the left face to
 *     the right face of every span edge.
 */

#pragma once

#include "longknot/diagram.hpp"
#include "longknot/matrix.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

namespace longknot {

class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/*! \brief One pass of the walk from the basepoint. */
struct visit {
  int crossing = 0;  // crossing number, 1..n
  bool over = false;

  bool operator==(const visit&) const = default;
};

/*! \brief Per-crossing signs, indexed by crossing number - 1. */
struct sign_data_t {
  std::vector<int> sigma;  // crossing signs
  std::vector<int> dvec;   // +1 when the over pass comes first
  std::vector<int> svec;   // sigma * d
};

struct face_corner {
  int crossing = 0;  // crossing number, 1..n
  int quadrant = 0;  // 0..3

  bool operator==(const face_corner&) const = default;
};

struct face_set {
  std::vector<std::vector<face_corner>> faces;  // cyclic corner lists
  std::array<int, 2> unbounded{};               // indices of the two faces at the basepoint edge
  std::vector<int> region_number;               // per face: 1..n for bounded, 0 for unbounded
};

enum class marking_scheme { modified, classical };

namespace detail {

// Markings around a crossing by quadrant.  In the modified scheme the x's sit
// to the right of the over strand (-x behind, x ahead) and the 1's to its
// left; in the classical scheme the x's sit to the left of the under strand.
inline laurent_poly corner_marking(marking_scheme scheme, int sigma, int quadrant) {
  static const std::array<std::array<std::pair<int, int>, 4>, 3> tables = {{
      // modified, sigma = +1: quadrants 0..3 get x, -1, 1, -x
      {{{1, 1}, {-1, 0}, {1, 0}, {-1, 1}}},
      // modified, sigma = -1: 1, -x, x, -1
      {{{1, 0}, {-1, 1}, {1, 1}, {-1, 0}}},
      // classical, any sign: 1, -1, x, -x
      {{{1, 0}, {-1, 0}, {1, 1}, {-1, 1}}},
  }};
  const auto& row = tables[scheme == marking_scheme::classical ? 2 : (sigma > 0 ? 0 : 1)];
  return laurent_poly::monomial(row[quadrant].first, row[quadrant].second);
}

struct walk_data {
  std::vector<int> edges;                      // edges in walk order from the basepoint
  std::vector<std::pair<int, bool>> passes;    // pass k: (crossing index, over?) after edges[k]
  std::vector<std::array<int, 2>> pass_of;     // per crossing index: walk positions of its two passes
};

inline walk_data walk_from(const long_knot_diagram& lk, const orientation& orient) {
  const int n = lk.crossing_count();
  walk_data walk;
  walk.pass_of.assign(n, {-1, -1});
  int e = lk.basepoint_edge;
  for (int k = 0; k < 2 * n; ++k) {
    walk.edges.push_back(e);
    const int head = orient.head_slot[e];
    const int c = head / 4, p = head % 4;
    walk.passes.emplace_back(c, p != 0);
    walk.pass_of[c][walk.pass_of[c][0] < 0 ? 0 : 1] = k;
    e = orient.succ[e];
  }
  return walk;
}

struct face_data {
  std::vector<int> face_of_slot;            // slot 4c+p -> face index, discovery order
  std::vector<std::vector<int>> arrivals;   // face -> arrival slots in trace order
  std::array<int, 2> unbounded{};
  std::vector<int> bounded_index;           // face -> 0..n-1 discovery index among bounded, or -1

  int face_of_corner(int c, int q) const { return face_of_slot[4 * c + (q + 1) % 4]; }
  int left_face(const orientation& o, int edge) const { return face_of_slot[o.head_slot[edge]]; }
  int right_face(const orientation& o, int edge) const { return face_of_slot[o.tail_slot[edge]]; }
};

inline face_data trace_faces(const long_knot_diagram& lk, const orientation& orient) {
  const int n = lk.crossing_count();
  face_data fd;
  fd.face_of_slot.assign(4 * n, -1);

  // Which slot holds the other end of the edge at this slot.
  std::vector<int> mate(4 * n, -1);
  for (int e = 0; e < 2 * n; ++e) {
    mate[orient.head_slot[e]] = orient.tail_slot[e];
    mate[orient.tail_slot[e]] = orient.head_slot[e];
  }

  for (int start = 0; start < 4 * n; ++start) {
    if (fd.face_of_slot[start] >= 0) continue;
    const int face = static_cast<int>(fd.arrivals.size());
    fd.arrivals.emplace_back();
    int slot = start;
    do {
      fd.face_of_slot[slot] = face;
      fd.arrivals[face].push_back(slot);
      const int c = slot / 4, p = slot % 4;
      slot = mate[4 * c + (p + 3) % 4];
    } while (slot != start);
  }

  if (static_cast<int>(fd.arrivals.size()) != n + 2)
    throw internal_error("face traversal produced " + std::to_string(fd.arrivals.size()) + " faces, expected " +
                         std::to_string(n + 2));

  const int f0 = fd.left_face(orient, lk.basepoint_edge);
  const int f1 = fd.right_face(orient, lk.basepoint_edge);
  if (f0 == f1) throw internal_error("basepoint edge borders a single face");
  fd.unbounded = {f0, f1};

  fd.bounded_index.assign(n + 2, -1);
  int next = 0;
  for (int f = 0; f < n + 2; ++f)
    if (f != f0 && f != f1) fd.bounded_index[f] = next++;
  return fd;
}

// face -> region number 1..n (0 for unbounded) under the diagram's region order.
inline std::vector<int> region_numbers(const long_knot_diagram& lk, const face_data& fd) {
  std::vector<int> numbers(fd.arrivals.size(), 0);
  for (std::size_t f = 0; f < fd.arrivals.size(); ++f)
    if (fd.bounded_index[f] >= 0) numbers[f] = lk.region_number[fd.bounded_index[f]];
  return numbers;
}

}  // namespace detail

/*! \brief The 2n crossing passes in walking order from the basepoint. */
inline std::vector<visit> visit_sequence(const long_knot_diagram& lk) {
  const detail::orientation orient = detail::resolve(lk.diagram);
  const detail::walk_data walk = detail::walk_from(lk, orient);
  std::vector<visit> visits;
  visits.reserve(walk.passes.size());
  for (const auto& [c, over] : walk.passes) visits.push_back({lk.crossing_number[c], over});
  return visits;
}

/*! \brief Crossing signs, over-first flags and their products, by crossing number. */
inline sign_data_t sign_data(const long_knot_diagram& lk) {
  const int n = lk.crossing_count();
  const detail::orientation orient = detail::resolve(lk.diagram);
  const detail::walk_data walk = detail::walk_from(lk, orient);
  sign_data_t sd;
  sd.sigma.assign(n, 0);
  sd.dvec.assign(n, 0);
  sd.svec.assign(n, 0);
  for (int c = 0; c < n; ++c) {
    const int j = lk.crossing_number[c] - 1;
    sd.sigma[j] = orient.over_in[c] == 3 ? 1 : -1;
    const auto& first_pass = walk.passes[walk.pass_of[c][0]];
    sd.dvec[j] = first_pass.second ? 1 : -1;
    sd.svec[j] = sd.sigma[j] * sd.dvec[j];
  }
  return sd;
}

/*! \brief Edges walked strictly between the two passes through crossing number j. */
inline std::vector<int> span_edges(const long_knot_diagram& lk, int j) {
  const int n = lk.crossing_count();
  if (j < 1 || j > n) throw std::out_of_range("crossing number " + std::to_string(j) + " outside 1..n");
  const detail::orientation orient = detail::resolve(lk.diagram);
  const detail::walk_data walk = detail::walk_from(lk, orient);
  const auto [a, b] = walk.pass_of[lk.crossing_with_number(j)];
  std::vector<int> edges;
  for (int k = a + 1; k <= b; ++k) edges.push_back(walk.edges[k]);
  return edges;
}

/*! \brief T: T[i][j] = 1 when the walk along the span of crossing i passes under crossing j. */
inline int_matrix traversal_matrix(const long_knot_diagram& lk) {
  const int n = lk.crossing_count();
  const detail::orientation orient = detail::resolve(lk.diagram);
  const detail::walk_data walk = detail::walk_from(lk, orient);
  int_matrix t(n, n);
  for (int c = 0; c < n; ++c) {
    const int i = lk.crossing_number[c] - 1;
    const auto [a, b] = walk.pass_of[c];
    for (int k = a + 1; k < b; ++k) {
      const auto& [cj, over] = walk.passes[k];
      if (!over) t(i, lk.crossing_number[cj] - 1) = 1;
    }
  }
  return t;
}

/*! \brief Face decomposition; exactly n + 2 faces, the two at the basepoint edge unbounded. */
inline face_set faces(const long_knot_diagram& lk) {
  const int n = lk.crossing_count();
  if (n == 0) {
    face_set trivial;
    trivial.faces.resize(2);
    trivial.unbounded = {0, 1};
    trivial.region_number = {0, 0};
    return trivial;
  }
  const detail::orientation orient = detail::resolve(lk.diagram);
  const detail::face_data fd = detail::trace_faces(lk, orient);
  face_set fs;
  fs.faces.resize(n + 2);
  for (int f = 0; f < n + 2; ++f)
    for (int slot : fd.arrivals[f])
      fs.faces[f].push_back({lk.crossing_number[slot / 4], (slot % 4 + 3) % 4});
  fs.unbounded = fd.unbounded;
  fs.region_number = detail::region_numbers(lk, fd);
  return fs;
}

/*! \brief Incidence matrix over all n + 2 regions; bounded region j in column
 *         j-1, the two unbounded faces in the last two columns. */
inline laurent_matrix full_alexander_matrix(const long_knot_diagram& lk,
                                            marking_scheme scheme = marking_scheme::modified) {
  const int n = lk.crossing_count();
  laurent_matrix m(n, n + 2);
  if (n == 0) return m;
  const detail::orientation orient = detail::resolve(lk.diagram);
  const detail::face_data fd = detail::trace_faces(lk, orient);
  const std::vector<int> region = detail::region_numbers(lk, fd);

  std::vector<int> column(n + 2, -1);
  int unbounded_next = n;
  for (int f = 0; f < n + 2; ++f)
    column[f] = region[f] > 0 ? region[f] - 1 : unbounded_next++;

  for (int c = 0; c < n; ++c) {
    const int i = lk.crossing_number[c] - 1;
    const int sigma = orient.over_in[c] == 3 ? 1 : -1;
    for (int q = 0; q < 4; ++q)
      m(i, column[fd.face_of_corner(c, q)]) += detail::corner_marking(scheme, sigma, q);
  }
  return m;
}

/*! \brief A: markings summed by (crossing number, bounded region number). */
inline laurent_matrix alexander_matrix(const long_knot_diagram& lk,
                                       marking_scheme scheme = marking_scheme::modified) {
  const int n = lk.crossing_count();
  const laurent_matrix full = full_alexander_matrix(lk, scheme);
  laurent_matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = full(i, j);
  return m;
}

/*! \brief Column pairs of the full matrix whose regions share at least one edge. */
inline std::vector<std::pair<int, int>> adjacent_region_column_pairs(const long_knot_diagram& lk) {
  const int n = lk.crossing_count();
  if (n == 0) return {{0, 1}};
  const detail::orientation orient = detail::resolve(lk.diagram);
  const detail::face_data fd = detail::trace_faces(lk, orient);
  const std::vector<int> region = detail::region_numbers(lk, fd);
  std::vector<int> column(n + 2, -1);
  int unbounded_next = n;
  for (int f = 0; f < n + 2; ++f)
    column[f] = region[f] > 0 ? region[f] - 1 : unbounded_next++;

  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < 2 * n; ++e) {
    int a = column[fd.left_face(orient, e)];
    int b = column[fd.right_face(orient, e)];
    if (a > b) std::swap(a, b);
    if (std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) == pairs.end()) pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

/*! \brief Delete two columns of the full matrix; the regions must be adjacent. */
inline laurent_matrix delete_region_columns(const long_knot_diagram& lk, const laurent_matrix& full, int col_a,
                                            int col_b) {
  const int n = lk.crossing_count();
  if (static_cast<int>(full.cols()) != n + 2) throw std::invalid_argument("expected an n x (n+2) matrix");
  if (col_a > col_b) std::swap(col_a, col_b);
  if (col_a < 0 || col_b >= n + 2 || col_a == col_b) throw std::invalid_argument("invalid column pair");
  if (n > 0) {
    const auto pairs = adjacent_region_column_pairs(lk);
    if (std::find(pairs.begin(), pairs.end(), std::make_pair(col_a, col_b)) == pairs.end())
      throw validation_error("columns " + std::to_string(col_a) + " and " + std::to_string(col_b) +
                             " correspond to non-adjacent regions");
  }
  laurent_matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    int out = 0;
    for (int j = 0; j < n + 2; ++j) {
      if (j == col_a || j == col_b) continue;
      m(i, out++) = full(i, j);
    }
  }
  return m;
}

/*! \brief W: winding number of bounded region i with respect to the span of crossing j.
 *
 * Computed by propagation over the dual graph: both unbounded faces carry
 * winding 0, and crossing a span edge from its left face to its right face
 * raises the winding by one.  Every dual edge is re-checked after labeling;
 * an inconsistency indicates a corrupt map and throws.
 */
inline int_matrix winding_matrix(const long_knot_diagram& lk) {
  const int n = lk.crossing_count();
  int_matrix w(n, n);
  if (n == 0) return w;
  const detail::orientation orient = detail::resolve(lk.diagram);
  const detail::face_data fd = detail::trace_faces(lk, orient);
  const detail::walk_data walk = detail::walk_from(lk, orient);
  const std::vector<int> region = detail::region_numbers(lk, fd);

  for (int c = 0; c < n; ++c) {
    const int j = lk.crossing_number[c] - 1;
    std::vector<char> in_span(2 * n, 0);
    const auto [a, b] = walk.pass_of[c];
    for (int k = a + 1; k <= b; ++k) in_span[walk.edges[k]] = 1;

    std::vector<std::optional<int>> value(n + 2);
    std::deque<int> queue;
    for (int f : fd.unbounded)
      if (!value[f]) {
        value[f] = 0;
        queue.push_back(f);
      }
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      for (int e = 0; e < 2 * n; ++e) {
        const int left = fd.left_face(orient, e);
        const int right = fd.right_face(orient, e);
        if (left != f && right != f) continue;
        const int other = left == f ? right : left;
        const int delta = in_span[e] ? (left == f ? 1 : -1) : 0;
        const int candidate = *value[f] + delta;
        if (!value[other]) {
          value[other] = candidate;
          queue.push_back(other);
        }
      }
    }
    for (int e = 0; e < 2 * n; ++e) {
      const int left = fd.left_face(orient, e);
      const int right = fd.right_face(orient, e);
      if (!value[left] || !value[right] || *value[right] - *value[left] != (in_span[e] ? 1 : 0))
        throw internal_error("winding propagation inconsistent at edge " + std::to_string(e) +
                             " for span of crossing " + std::to_string(j + 1));
    }
    for (int f = 0; f < n + 2; ++f)
      if (region[f] > 0) w(region[f] - 1, j) = *value[f];
  }
  return w;
}

}  // namespace longknot
