#ifndef AUTOSG_ELEMENT_HPP_
#define AUTOSG_ELEMENT_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "autosg/automaton.hpp"

namespace autosg {

  // A transducer with a distinguished initial state, not necessarily
  // minimal or trimmed.  Borrows its table.
  struct InitialTransducer {
    std::shared_ptr<Alphabet const> alphabet;
    std::size_t                     number_of_states;
    std::span<Transition const>     table;
    state_index                     initial;

    static InitialTransducer from(Automaton const& aut, state_index q);
  };

  // One element of an automaton semigroup, stored as the canonical form of
  // its action: reachable from the initial state, minimal, and numbered in
  // breadth-first order from the initial state (which is state 0), visiting
  // successors in alphabet order.  Two elements over the same alphabet act
  // identically iff their tables are identical.
  class Element {
   public:
    // The identity transformation of B*: a single state fixing every symbol.
    static Element identity(std::shared_ptr<Alphabet const> alphabet);

    std::size_t number_of_states() const noexcept {
      return _table.size() / _alphabet->size();
    }

    std::size_t alphabet_size() const noexcept {
      return _alphabet->size();
    }

    std::shared_ptr<Alphabet const> const& alphabet() const noexcept {
      return _alphabet;
    }

    Transition const& transition(state_index q, symbol_index x) const noexcept {
      return _table[static_cast<std::size_t>(q) * _alphabet->size() + x];
    }

    std::span<Transition const> table() const noexcept {
      return _table;
    }

    bool is_identity() const noexcept;

    symbol_string act(std::span<symbol_index const> input) const;

    std::size_t hash() const noexcept;

    // Elements over alphabets with different names are never equal.
    friend bool operator==(Element const& lhs, Element const& rhs) noexcept;

   private:
    friend Element minimize(InitialTransducer const& t);

    Element(std::shared_ptr<Alphabet const> alphabet,
            std::vector<Transition>         table)
        : _alphabet(std::move(alphabet)), _table(std::move(table)) {}

    std::shared_ptr<Alphabet const> _alphabet;
    std::vector<Transition>         _table;
  };

  // Moore-style partition refinement on the part reachable from the initial
  // state, followed by breadth-first renumbering.
  Element minimize(InitialTransducer const& t);

  // The element acting as alpha -> (alpha . first) . second.  Throws
  // UsageError if the alphabets differ.
  Element compose(Element const& first, Element const& second);

  Element state_element(Automaton const& aut, state_index q);

  Element word_to_element(Automaton const& aut, Word const& w);

  // Number of states reachable in the unminimized product transducer of the
  // letters of w (tuples of states, one per letter).
  std::size_t product_state_count(Automaton const& aut, Word const& w);

  // Whether w and w2 represent the same element of the automaton semigroup.
  bool equal(Automaton const& aut, Word const& w, Word const& w2);

  bool is_left_identity(Automaton const& aut, state_index l);

  inline constexpr std::size_t default_element_cap = 1'000'000;

  struct EnumeratedElement {
    Element element;
    Word    representative;  // shortest, then lexicographically least
  };

  // The distinct elements represented by words of length at most max_len,
  // sorted by (representative length, representative).  Throws
  // CapacityError once more than max_elements have been found.
  std::vector<EnumeratedElement>
  enumerate(Automaton const& aut,
            std::size_t      max_len,
            std::size_t      max_elements = default_element_cap);

  // counts[i] is the number of elements represented by words of length at
  // most i + 1.
  std::vector<std::size_t> growth(Automaton const& aut,
                                  std::size_t      max_len,
                                  std::size_t max_elements = default_element_cap);

  // The canonical form of e with its domain cut down to C D*: the initial
  // state reads only symbols of C, every later state only symbols of D.
  // Transitions leaving the domain go to a sink emitting symbol 0, which
  // makes the result a function of the restricted action alone.
  Element restrict_element(Element const&                e,
                           std::span<symbol_index const> initial_symbols,
                           std::span<symbol_index const> rest_symbols);

  // Equality of the actions of w and w2 on every string in C D*.  C and D
  // must partition the alphabet and C must be nonempty; otherwise
  // UsageError.
  bool restricted_equal(Automaton const&              aut,
                        Word const&                   w,
                        Word const&                   w2,
                        std::span<symbol_index const> initial_symbols,
                        std::span<symbol_index const> rest_symbols);

}  // namespace autosg

template <>
struct std::hash<autosg::Element> {
  std::size_t operator()(autosg::Element const& e) const noexcept {
    return e.hash();
  }
};

#endif  // AUTOSG_ELEMENT_HPP_
