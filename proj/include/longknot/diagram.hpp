/*! \file diagram.hpp
 *  \brief Combinatorial knot diagrams: crossings as oriented edge quadruples.
 *
 * A crossing is stored as the quadruple of its incident edges listed
 * counterclockwise starting at the incoming under-strand edge, so ports 0 and
 * 2 always carry the under-strand (in, out) and ports 1 and 3 carry the over
 * strand.  A crossing is positive exactly when the over strand enters at
 * port 3.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace longknot {

class validation_error : public std::runtime_error {
 public:
  explicit validation_error(std::string message, std::vector<std::string> diagnostics = {})
      : std::runtime_error(std::move(message)), diagnostics_(std::move(diagnostics)) {}

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/*! \brief Closed oriented knot diagram with canonical edge labels.
 *
 * Edge labels run 0..2n-1 along the orientation.  over_in caches, per
 * crossing, whether the over strand enters at port 1 or port 3.
 */
struct closed_diagram {
  std::vector<std::array<int, 4>> crossings;
  int edge_count = 0;
  std::vector<int> over_in;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  bool operator==(const closed_diagram& other) const = default;
};

/*! \brief Sign of a crossing: +1 iff the over strand enters at port 3. */
inline int crossing_sign(const closed_diagram& d, int crossing_index) {
  return d.over_in[crossing_index] == 3 ? 1 : -1;
}

namespace detail {

// Resolved orientation data: for every slot (crossing, port), whether the
// incident edge points into the crossing; per-edge tail/head slots; the
// successor edge along the knot.
struct orientation {
  std::vector<std::array<int8_t, 4>> incoming;  // -1 unknown, 0 out, 1 in
  std::vector<int> over_in;                     // port 1 or 3 per crossing
  std::vector<int> succ;                        // next edge along the orientation
  std::vector<int> head_slot;                   // slot 4*c+p where the edge arrives
  std::vector<int> tail_slot;                   // slot where the edge departs
};

struct analysis {
  std::vector<std::string> diagnostics;
  std::optional<orientation> orient;
  int component_count = 0;
};

// Shared validation/orientation pass over raw quadruples whose labels are
// already 0..2n-1.  Orientation roles are fixed for under-strand ports and
// propagated through edges and over-strand pairs; a diagram that cannot be
// consistently oriented, or that closes up into more than one component, is
// reported through diagnostics.
inline analysis analyze(const std::vector<std::array<int, 4>>& crossings, int edge_count) {
  analysis result;
  const int n = static_cast<int>(crossings.size());
  const int slots = 4 * n;

  if (edge_count != 2 * n)
    result.diagnostics.push_back("edge_count " + std::to_string(edge_count) + " does not equal 2n = " +
                                 std::to_string(2 * n));

  std::vector<int> multiplicity(2 * n, 0);
  bool labels_ok = true;
  for (const auto& quad : crossings)
    for (int e : quad) {
      if (e < 0 || e >= 2 * n) {
        result.diagnostics.push_back("edge " + std::to_string(e) + " outside 0.." + std::to_string(2 * n - 1));
        labels_ok = false;
      } else {
        ++multiplicity[e];
      }
    }
  for (int e = 0; e < 2 * n; ++e)
    if (multiplicity[e] != 2) {
      result.diagnostics.push_back("edge " + std::to_string(e) + " multiplicity " + std::to_string(multiplicity[e]));
      labels_ok = false;
    }
  if (!labels_ok) return result;

  std::vector<std::array<int, 2>> edge_slots(2 * n, {-1, -1});
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      const int e = crossings[c][p];
      edge_slots[e][edge_slots[e][0] < 0 ? 0 : 1] = 4 * c + p;
    }

  // role[s]: 1 = edge points into the crossing at slot s, 0 = out, -1 = unknown.
  std::vector<int8_t> role(slots, -1);
  std::vector<int> queue;
  auto assign = [&](int slot, int8_t value) -> bool {
    if (role[slot] == value) return true;
    if (role[slot] != -1) {
      const int c = slot / 4, p = slot % 4;
      result.diagnostics.push_back("orientation inconsistency at crossing " + std::to_string(c) + " port " +
                                   std::to_string(p) + " (edge " + std::to_string(crossings[c][p]) + ")");
      return false;
    }
    role[slot] = value;
    queue.push_back(slot);
    return true;
  };

  for (int c = 0; c < n; ++c) {
    if (!assign(4 * c + 0, 1) || !assign(4 * c + 2, 0)) return result;
  }
  std::size_t next = 0;
  auto propagate = [&]() -> bool {
    while (next < queue.size()) {
      const int slot = queue[next++];
      const int c = slot / 4, p = slot % 4;
      const int e = crossings[c][p];
      const int other = edge_slots[e][0] == slot ? edge_slots[e][1] : edge_slots[e][0];
      if (!assign(other, static_cast<int8_t>(1 - role[slot]))) return false;
      if (p == 1 || p == 3) {
        const int opposite = 4 * c + (p == 1 ? 3 : 1);
        if (!assign(opposite, static_cast<int8_t>(1 - role[slot]))) return false;
      }
    }
    return true;
  };
  if (!propagate()) return result;
  // Slots still unresolved belong to strands that never pass under anything:
  // such strands close up into separate components.  Resolve arbitrarily and
  // let the component count report it.
  for (int s = 0; s < slots; ++s)
    if (role[s] == -1) {
      if (!assign(s, 1) || !propagate()) return result;
    }

  orientation orient;
  orient.incoming.resize(n);
  orient.over_in.assign(n, 0);
  orient.succ.assign(2 * n, -1);
  orient.head_slot.assign(2 * n, -1);
  orient.tail_slot.assign(2 * n, -1);
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) orient.incoming[c][p] = role[4 * c + p];
    orient.over_in[c] = role[4 * c + 1] == 1 ? 1 : 3;
  }
  for (int e = 0; e < 2 * n; ++e) {
    const int a = edge_slots[e][0], b = edge_slots[e][1];
    if (role[a] == role[b]) {
      result.diagnostics.push_back("edge " + std::to_string(e) + " has two " +
                                   (role[a] == 1 ? std::string("incoming") : std::string("outgoing")) + " ends");
      return result;
    }
    orient.head_slot[e] = role[a] == 1 ? a : b;
    orient.tail_slot[e] = role[a] == 1 ? b : a;
  }
  for (int e = 0; e < 2 * n; ++e) {
    const int c = orient.head_slot[e] / 4, p = orient.head_slot[e] % 4;
    const int out_port = p == 0 ? 2 : (p == 1 ? 3 : 1);
    orient.succ[e] = crossings[c][out_port];
  }

  std::vector<char> visited(2 * n, 0);
  int components = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (visited[start]) continue;
    ++components;
    for (int e = start; !visited[e]; e = orient.succ[e]) visited[e] = 1;
  }
  result.component_count = components;
  if (n > 0 && components != 1)
    result.diagnostics.push_back(std::to_string(components) + " components");

  result.orient = std::move(orient);
  return result;
}

inline orientation resolve(const closed_diagram& d) {
  analysis a = analyze(d.crossings, d.edge_count);
  if (!a.diagnostics.empty() || !a.orient)
    throw validation_error("invalid diagram: " + (a.diagnostics.empty() ? "unresolvable orientation" : a.diagnostics.front()),
                           a.diagnostics);
  return *std::move(a.orient);
}

}  // namespace detail

/*! \brief Diagnostics for the closed-diagram invariants; empty iff the diagram is valid. */
inline std::vector<std::string> validate(const closed_diagram& d) {
  return detail::analyze(d.crossings, d.edge_count).diagnostics;
}

/*! \brief Build a validated diagram from quadruples with arbitrary nonnegative labels.
 *
 * Edge labels are renumbered to 0..2n-1 along the orientation, starting from
 * the edge with the smallest input label.  Throws validation_error when the
 * quadruples do not describe a single-component oriented knot diagram.
 * When label_map is given it receives the input-label -> canonical-label
 * correspondence.
 */
inline closed_diagram canonicalize(const std::vector<std::array<long long, 4>>& quads,
                                   std::unordered_map<long long, int>* label_map = nullptr) {
  const int n = static_cast<int>(quads.size());
  if (n == 0) return {};

  std::unordered_map<long long, int> label_to_edge;
  std::vector<long long> edge_label;
  std::vector<std::array<int, 4>> provisional(n);
  std::vector<std::string> diagnostics;
  std::unordered_map<long long, int> multiplicity;
  for (const auto& quad : quads)
    for (long long label : quad) {
      if (label < 0) diagnostics.push_back("edge label " + std::to_string(label) + " is negative");
      ++multiplicity[label];
    }
  for (const auto& [label, count] : multiplicity)
    if (count != 2)
      diagnostics.push_back("edge " + std::to_string(label) + " multiplicity " + std::to_string(count));
  if (!diagnostics.empty()) throw validation_error("invalid diagram: " + diagnostics.front(), diagnostics);

  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      const long long label = quads[c][p];
      auto [it, inserted] = label_to_edge.try_emplace(label, static_cast<int>(edge_label.size()));
      if (inserted) edge_label.push_back(label);
      provisional[c][p] = it->second;
    }

  detail::analysis a = detail::analyze(provisional, 2 * n);
  if (!a.diagnostics.empty() || !a.orient)
    throw validation_error("invalid diagram: " + a.diagnostics.front(), a.diagnostics);

  // Renumber along the orientation starting from the smallest input label.
  int start = 0;
  for (int e = 1; e < 2 * n; ++e)
    if (edge_label[e] < edge_label[start]) start = e;
  std::vector<int> new_label(2 * n, -1);
  int e = start;
  for (int k = 0; k < 2 * n; ++k) {
    new_label[e] = k;
    e = a.orient->succ[e];
  }

  closed_diagram d;
  d.edge_count = 2 * n;
  d.crossings.resize(n);
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) d.crossings[c][p] = new_label[provisional[c][p]];
  d.over_in.assign(n, 0);
  for (int c = 0; c < n; ++c) d.over_in[c] = a.orient->over_in[c];
  if (label_map) {
    label_map->clear();
    for (const auto& [label, idx] : label_to_edge) label_map->emplace(label, new_label[idx]);
  }
  return d;
}

/*! \brief Reflect the diagram across a line in the plane.
 *
 * Reverses the cyclic order at every crossing; all crossing signs flip while
 * over/under roles are preserved.
 */
inline closed_diagram mirror(const closed_diagram& d) {
  closed_diagram m = d;
  for (auto& quad : m.crossings) std::swap(quad[1], quad[3]);
  for (auto& port : m.over_in) port = port == 1 ? 3 : 1;
  return m;
}

/*! \brief Serialize as PD text, the inverse of parse_pd. */
inline std::string render_pd(const closed_diagram& d) {
  std::ostringstream out;
  for (const auto& quad : d.crossings)
    out << "X(" << quad[0] << "," << quad[1] << "," << quad[2] << "," << quad[3] << ")\n";
  return out.str();
}

/*! \brief Closed diagram cut open along a basepoint edge.
 *
 * The two faces adjacent to the basepoint edge play the role of the unbounded
 * regions.  crossing_number assigns crossing numbers 1..n (default: first
 * visit order walking from the basepoint); region_number assigns 1..n to the
 * bounded faces in face-discovery order and may be overridden to match
 * external fixtures.
 */
struct long_knot_diagram {
  closed_diagram diagram;
  int basepoint_edge = 0;
  std::vector<int> crossing_number;
  std::vector<int> region_number;

  int crossing_count() const { return diagram.crossing_count(); }

  /*! \brief Crossing index (position in the quadruple list) of crossing number j. */
  int crossing_with_number(int j) const {
    for (int c = 0; c < crossing_count(); ++c)
      if (crossing_number[c] == j) return c;
    throw std::out_of_range("no crossing numbered " + std::to_string(j));
  }
};

namespace detail {

inline void check_permutation(const std::vector<int>& numbers, int n, const char* what) {
  if (static_cast<int>(numbers.size()) != n)
    throw validation_error(std::string(what) + ": expected " + std::to_string(n) + " entries");
  std::vector<char> seen(n + 1, 0);
  for (int v : numbers) {
    if (v < 1 || v > n || seen[v])
      throw validation_error(std::string(what) + ": not a bijection onto 1.." + std::to_string(n));
    seen[v] = 1;
  }
}

}  // namespace detail

/*! \brief Cut a closed diagram open along the given edge.
 *
 * Default crossing numbers follow the first visit from the basepoint; default
 * region numbers follow face-discovery order.
 */
inline long_knot_diagram make_long(closed_diagram d, int basepoint) {
  const int n = d.crossing_count();
  if (n == 0) {
    return long_knot_diagram{std::move(d), 0, {}, {}};
  }
  if (basepoint < 0 || basepoint >= d.edge_count)
    throw validation_error("basepoint edge " + std::to_string(basepoint) + " is not an edge of the diagram");

  const detail::orientation orient = detail::resolve(d);
  std::vector<int> numbers(n, 0);
  int next_number = 1;
  int e = basepoint;
  for (int k = 0; k < 2 * n; ++k) {
    const int c = orient.head_slot[e] / 4;
    if (numbers[c] == 0) numbers[c] = next_number++;
    e = orient.succ[e];
  }

  std::vector<int> regions(n);
  for (int i = 0; i < n; ++i) regions[i] = i + 1;
  return long_knot_diagram{std::move(d), basepoint, std::move(numbers), std::move(regions)};
}

inline long_knot_diagram with_crossing_order(long_knot_diagram lk, std::vector<int> numbers) {
  detail::check_permutation(numbers, lk.crossing_count(), "crossing_order");
  lk.crossing_number = std::move(numbers);
  return lk;
}

inline long_knot_diagram with_region_order(long_knot_diagram lk, std::vector<int> numbers) {
  detail::check_permutation(numbers, lk.crossing_count(), "region_order");
  lk.region_number = std::move(numbers);
  return lk;
}

}  // namespace longknot
