#ifndef AUTOSG_DOT_HPP_
#define AUTOSG_DOT_HPP_

#include <string>

#include "autosg/automaton.hpp"

namespace autosg {

  // Graphviz rendering: one node per state, one edge per transition labelled
  // "x|y".  Nodes in state order, edges in (state, symbol) order.
  std::string export_dot(Automaton const& aut);

}  // namespace autosg

#endif  // AUTOSG_DOT_HPP_
