#include "autosg/dot.hpp"

#include <sstream>

namespace autosg {

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }
  }  // namespace

  std::string export_dot(Automaton const& aut) {
    std::ostringstream os;
    os << "digraph automaton {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle];\n";
    for (state_index q = 0; q < aut.number_of_states(); ++q) {
      os << "  " << quoted(aut.state_name(q)) << ";\n";
    }
    for (state_index q = 0; q < aut.number_of_states(); ++q) {
      for (symbol_index x = 0; x < aut.alphabet_size(); ++x) {
        auto const& t = aut.transition(q, x);
        os << "  " << quoted(aut.state_name(q)) << " -> "
           << quoted(aut.state_name(t.target)) << " [label="
           << quoted(aut.symbol_name(x) + "|" + aut.symbol_name(t.output))
           << "];\n";
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace autosg
