/*! \file fixtures.hpp
 *  \brief Built-in example diagrams.
 */

#pragma once

#include "longknot/diagram.hpp"
#include "longknot/pd.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace longknot {

/*! \brief PD text of a built-in example, or empty if the name is unknown.
 *
 * "paper": a 6-crossing long knot with three positive and three negative
 * crossings, shipped with a fixed crossing and region numbering so its
 * matrices are reproducible cell for cell.
 */
inline std::string builtin_example_pd(std::string_view name) {
  if (name == "paper")
    return "# 6-crossing long knot, basepoint on the open strand\n"
           "X(1,7,2,6)\n"
           "X(7,3,8,2)\n"
           "X(3,9,4,8)\n"
           "X(11,4,0,5)\n"
           "X(5,10,6,11)\n"
           "X(9,1,10,0)\n"
           "basepoint 0\n";
  return {};
}

inline std::vector<std::string> builtin_example_names() { return {"paper"}; }

/*! \brief Built-in example as a long-knot diagram with its fixed numbering. */
inline long_knot_diagram builtin_example(std::string_view name) {
  const std::string text = builtin_example_pd(name);
  if (text.empty()) throw std::invalid_argument("unknown example '" + std::string(name) + "'");
  const pd_document doc = parse_pd_document(text);
  long_knot_diagram lk = make_long(doc.diagram, doc.basepoint.value_or(0));
  if (name == "paper") {
    lk = with_crossing_order(std::move(lk), {1, 2, 3, 4, 5, 6});
    lk = with_region_order(std::move(lk), {6, 1, 2, 4, 3, 5});
  }
  return lk;
}

}  // namespace longknot
