#ifndef AUTOSG_CONSTRUCTIONS_HPP_
#define AUTOSG_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autosg/automaton.hpp"
#include "autosg/monoid.hpp"

namespace autosg {

  // Where a symbol of a constructed automaton comes from.
  struct SymbolTag {
    enum class Kind {
      base_left,
      base_right,
      marked_left,
      marked_right,
      dollar,
      hash,
      dollar_marked,
      hash_marked,
      tuple,
      monoid_copy
    };

    Kind                     kind;
    std::vector<std::string> payload;  // names of the originating symbols

    friend bool operator==(SymbolTag const&, SymbolTag const&) = default;
  };

  std::string_view               to_string(SymbolTag::Kind kind) noexcept;
  std::optional<SymbolTag::Kind> parse_tag_kind(std::string_view text);

  // "kind" or "kind(p1,p2,...)".
  std::string to_string(SymbolTag const& tag);

  // An automaton together with the embedding data used to reason about it.
  // `tags` is empty or has one entry per symbol.  For the initial-symbol
  // construction, `initial_symbols` and `rest_symbols` hold the partition
  // (C, D) of the alphabet.
  struct ConstructionOutput {
    std::string                                      construction;
    Automaton                                        automaton;
    std::vector<SymbolTag>                           tags;
    std::vector<std::string>                         generators;
    std::vector<std::pair<std::string, std::string>> notes;
    std::vector<std::string>                         initial_symbols;
    std::vector<std::string>                         rest_symbols;

    std::optional<std::string> note(std::string_view key) const;

    // Index of the unique symbol with the given tag kind.
    symbol_index symbol_of_kind(SymbolTag::Kind kind) const;

    friend bool operator==(ConstructionOutput const&,
                           ConstructionOutput const&) = default;
  };

  // Wraps a plain automaton; every state is a designated generator.
  ConstructionOutput plain(Automaton aut);

  ////////////////////////////////////////////////////////////////////////
  // Free products
  ////////////////////////////////////////////////////////////////////////

  enum class Factor { left, right };

  // The automaton for S * T from automata for S and T with designated left
  // identities.  Alphabet order: A, B, A marked, B marked, $, #, $ marked,
  // # marked.  State names are kept unless the factors share a name, in
  // which case all left states get suffix "1" and all right states "2"
  // (symbols likewise).  Notes record "left-identity", "right-identity",
  // "left-states" and "right-states"; the latter list the constructed names
  // in factor order.  Throws PreconditionError naming the offending state
  // if a designated state is not a left identity.
  ConstructionOutput free_product(Automaton const& left,
                                  state_index      left_identity,
                                  Automaton const& right,
                                  state_index      right_identity);

  // The automaton for (S * T)^1: a single fresh identity state replaces the
  // targets l_T and l_S of the $ and # transitions.  The printed table of
  // the original construction has delta(t, $) = (t, #°); it is reproduced
  // only when `printed_table` is set, otherwise delta(t, $) = (t, $°).
  ConstructionOutput free_product_adjoin_identity(Automaton const& left,
                                                  Automaton const& right,
                                                  bool printed_table = false);

  // Recovers a factor automaton from a free product (either variety): its
  // states and base symbols with the transitions between them.
  Automaton factor_automaton(ConstructionOutput const& fp, Factor side);

  // The states of one factor in a free product, in factor order.
  std::vector<state_index> factor_states(ConstructionOutput const& fp,
                                         Factor                    side);

  ////////////////////////////////////////////////////////////////////////
  // Direct powers and wreath products
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t default_construction_cap = 10'000'000;

  // Componentwise automaton on Q^n and A^n; tuples ordered lexicographically
  // with the first component most significant.  Throws CapacityError if
  // |Q|^n * |A|^n exceeds `cap`.
  ConstructionOutput direct_power(Automaton const& aut,
                                  std::size_t      n,
                                  std::size_t      cap = default_construction_cap);

  struct TupleState {
    enum class Phase { pre, post };

    std::vector<state_index> entries;  // indexed by monoid element
    Phase                    phase = Phase::pre;

    friend bool operator==(TupleState const&, TupleState const&) = default;
  };

  // Entry at t_i of the result is the entry at t_i * t of s.
  TupleState reindex_tuple(TupleState const&   s,
                           monoid_index        t,
                           FiniteMonoid const& monoid);

  // State and symbol layout shared by the wreath constructions and their
  // oracles.  Tuple states come first (pre copy, then post copy for the
  // two-copy construction), then one state per monoid element.  Symbols are
  // the tuples A^n followed by one copy of each monoid element.
  class WreathLayout {
   public:
    WreathLayout(std::size_t base_states,
                 std::size_t base_symbols,
                 std::size_t monoid_size,
                 bool        two_copies);

    std::size_t tuple_count() const noexcept {
      return _tuples;
    }

    std::size_t symbol_tuple_count() const noexcept {
      return _symbol_tuples;
    }

    std::size_t number_of_states() const noexcept {
      return _tuples * (_two_copies ? 2 : 1) + _monoid_size;
    }

    std::size_t alphabet_size() const noexcept {
      return _symbol_tuples + _monoid_size;
    }

    state_index tuple_state(std::size_t     tuple,
                            TupleState::Phase phase
                            = TupleState::Phase::pre) const noexcept;

    state_index monoid_state(monoid_index t) const noexcept {
      return static_cast<state_index>(_tuples * (_two_copies ? 2 : 1) + t);
    }

    symbol_index monoid_symbol(monoid_index t) const noexcept {
      return static_cast<symbol_index>(_symbol_tuples + t);
    }

    // nullopt for monoid states.
    std::optional<TupleState> tuple_of_state(state_index q) const;

    // nullopt for tuple states.
    std::optional<monoid_index> monoid_of_state(state_index q) const;

    std::vector<std::uint32_t> decode(std::size_t index,
                                      std::size_t base) const;
    std::size_t encode(std::span<std::uint32_t const> components,
                       std::size_t                    base) const;

   private:
    std::size_t _base_states;
    std::size_t _base_symbols;
    std::size_t _monoid_size;
    bool        _two_copies;
    std::size_t _tuples;
    std::size_t _symbol_tuples;
  };

  // Automaton B whose states Q1^n u T generate a copy of S wr T.  Tuple
  // states are named "(q1,...,qn)·pre" and "(q1,...,qn)·post", monoid
  // states "t:m", tuple symbols "(a1,...,an)" and monoid symbols "b:m".
  // Throws PreconditionError if no state of `base` acts as the identity.
  ConstructionOutput wreath_subsemigroup(Automaton const&    base,
                                         FiniteMonoid const& monoid,
                                         std::size_t cap = default_construction_cap);

  // The one-copy variant acting on B (A^n)*: tuple states act like their
  // pre versions on monoid symbols and like their post versions on tuple
  // symbols.  initial_symbols = the monoid symbols, rest_symbols = A^n.
  ConstructionOutput wreath_initial_symbol(Automaton const&    base,
                                           FiniteMonoid const& monoid,
                                           std::size_t cap = default_construction_cap);

  // Adds a fresh state fixing every symbol.
  ConstructionOutput adjoin_identity_state(Automaton const& aut);

}  // namespace autosg

#endif  // AUTOSG_CONSTRUCTIONS_HPP_
