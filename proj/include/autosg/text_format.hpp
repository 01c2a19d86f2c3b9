#ifndef AUTOSG_TEXT_FORMAT_HPP_
#define AUTOSG_TEXT_FORMAT_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "autosg/automaton.hpp"
#include "autosg/constructions.hpp"
#include "autosg/element.hpp"
#include "autosg/monoid.hpp"

// Automaton text format (".aut"):
//
//   states: s,t
//   alphabet: 0,1
//   s, 0 -> t, 1
//   ...                      one line per (state, symbol) pair
//
// optionally followed by an initial state and construction annotations:
//
//   initial: s
//   construction: free-product
//   generators: s,t
//   tag: 0° = marked-left(0)
//   note: left-identity = s
//   initial-symbols: ...
//   rest-symbols: ...
//
// Blank lines and lines starting with "//" are ignored.  Names follow the
// rules of names.hpp.
//
// Monoid text format (".mon"):
//
//   elements: 1,g
//   identity: 1
//   1 g
//   g 1                      row-major, row = left factor

namespace autosg {

  struct AutomatonDocument {
    ConstructionOutput         content;
    std::optional<std::string> initial;

    friend bool operator==(AutomatonDocument const&,
                           AutomatonDocument const&) = default;
  };

  // The automaton part of a document without any validation beyond syntax;
  // throws ParseError on malformed lines.
  AutomatonDraft parse_draft(std::string_view text);

  // Full parse.  Throws ParseError for syntax errors and for every failed
  // invariant (with the line of the first diagnostic).
  AutomatonDocument parse_automaton(std::string_view text);

  std::string serialize(Automaton const& aut);
  std::string serialize(ConstructionOutput const& out);
  std::string serialize(AutomatonDocument const& doc);

  // States are named by their canonical numbers; byte-identical output for
  // two elements over the same alphabet iff they are equal.
  std::string serialize(Element const& e);

  FiniteMonoid parse_monoid(std::string_view text);
  std::string  serialize(FiniteMonoid const& monoid);

  // Reads a whole file; throws IoError.
  std::string read_file(std::string const& path);

  // read_file + parse, with the path prefixed to any ParseError message.
  AutomatonDocument load_automaton(std::string const& path);
  FiniteMonoid      load_monoid(std::string const& path);

}  // namespace autosg

#endif  // AUTOSG_TEXT_FORMAT_HPP_
