#ifndef AUTOSG_AUTOMATON_HPP_
#define AUTOSG_AUTOMATON_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autosg {

  using state_index  = std::uint32_t;
  using symbol_index = std::uint32_t;

  // A finite string over the alphabet of an automaton, by symbol index.
  using symbol_string = std::vector<symbol_index>;

  // Symbol names in declaration order; shared between an automaton and every
  // element derived from it.
  using Alphabet = std::vector<std::string>;

  struct Transition {
    state_index  target;
    symbol_index output;

    friend bool operator==(Transition const&, Transition const&) = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Drafts and diagnostics
  ////////////////////////////////////////////////////////////////////////

  // An automaton as written down, before any invariant is checked.  The text
  // parser produces drafts; validate() reports everything wrong with one.
  struct DraftTransition {
    std::string from;
    std::string input;
    std::string to;
    std::string output;
    std::size_t line = 0;
  };

  struct AutomatonDraft {
    std::vector<std::string>     states;
    std::vector<std::string>     alphabet;
    std::vector<DraftTransition> transitions;
    std::size_t                  states_line   = 0;
    std::size_t                  alphabet_line = 0;
  };

  struct Diagnostic {
    enum class Kind {
      empty_section,
      bad_name,
      name_collision,
      unknown_name,
      duplicate_transition,
      totality
    };
    Kind        kind;
    std::string message;
    std::size_t line = 0;  // 0 when the problem has no single source line
  };

  std::string_view to_string(Diagnostic::Kind kind) noexcept;
  std::string      to_string(Diagnostic const& d);

  std::vector<Diagnostic> validate(AutomatonDraft const& draft);

  ////////////////////////////////////////////////////////////////////////
  // Automaton
  ////////////////////////////////////////////////////////////////////////

  // The triple (Q, B, delta) of a deterministic synchronous transducer.  The
  // transition table is stored state-major: entry q * |B| + x is delta(q, x).
  // Immutable once constructed.
  class Automaton {
   public:
    // Throws UsageError if an invariant fails.
    Automaton(std::vector<std::string> states,
              std::vector<std::string> alphabet,
              std::vector<Transition>  table);

    // Throws UsageError listing every diagnostic if the draft is invalid.
    static Automaton from_draft(AutomatonDraft const& draft);

    AutomatonDraft to_draft() const;

    std::size_t number_of_states() const noexcept {
      return _states.size();
    }

    std::size_t alphabet_size() const noexcept {
      return _alphabet->size();
    }

    std::vector<std::string> const& state_names() const noexcept {
      return _states;
    }

    std::string const& state_name(state_index q) const;
    std::string const& symbol_name(symbol_index x) const;

    std::shared_ptr<Alphabet const> const& alphabet() const noexcept {
      return _alphabet;
    }

    std::optional<state_index>  find_state(std::string_view name) const;
    std::optional<symbol_index> find_symbol(std::string_view name) const;

    // As find_*, but throw UsageError for unknown names.
    state_index  state(std::string_view name) const;
    symbol_index symbol(std::string_view name) const;

    // delta(q, x); throws UsageError on out-of-range indices.
    Transition step(state_index q, symbol_index x) const;

    // delta(q, x) without range checks.
    Transition const& transition(state_index q, symbol_index x) const noexcept {
      return _table[static_cast<std::size_t>(q) * _alphabet->size() + x];
    }

    std::span<Transition const> table() const noexcept {
      return _table;
    }

    friend bool operator==(Automaton const& lhs, Automaton const& rhs);

   private:
    std::vector<std::string>        _states;
    std::shared_ptr<Alphabet const> _alphabet;
    std::vector<Transition>         _table;
  };

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  // A nonempty word over the states of an automaton (a member of Q+).
  class Word {
   public:
    Word(Automaton const& aut, std::vector<state_index> letters);

    // Comma separated state names, e.g. "s,t,s".
    static Word parse(Automaton const& aut, std::string_view text);

    std::span<state_index const> letters() const noexcept {
      return _letters;
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    state_index operator[](std::size_t i) const noexcept {
      return _letters[i];
    }

    Word concat(Word const& other) const;

    std::string to_string(Automaton const& aut) const;

    friend auto operator<=>(Word const&, Word const&) = default;
    friend bool operator==(Word const&, Word const&)  = default;

   private:
    explicit Word(std::vector<state_index> letters)
        : _letters(std::move(letters)) {}

    std::vector<state_index> _letters;
  };

  ////////////////////////////////////////////////////////////////////////
  // Strings over the alphabet
  ////////////////////////////////////////////////////////////////////////

  // Tokenizes `text` against the alphabet of `aut`.  Whitespace separates
  // tokens optionally; within a chunk the longest matching symbol name is
  // taken first.  Throws UsageError on a foreign symbol.
  symbol_string parse_symbols(Automaton const& aut, std::string_view text);

  // Concatenates the symbol names.
  std::string format_symbols(Alphabet const& alphabet,
                             std::span<symbol_index const> str);

  ////////////////////////////////////////////////////////////////////////
  // Actions
  ////////////////////////////////////////////////////////////////////////

  symbol_string act(Automaton const&              aut,
                    state_index                   q,
                    std::span<symbol_index const> input);

  // alpha . w_1 . w_2 ... w_n; throws UsageError on foreign symbols.
  symbol_string act(Automaton const&              aut,
                    Word const&                   w,
                    std::span<symbol_index const> input);

  inline constexpr std::size_t default_level_bound = 10'000'000;

  // The action of a word on B^n.  Strings of B^n are ordered
  // lexicographically by symbol index, the first symbol most significant;
  // image(i) is the image of the i-th string.
  class LevelTable {
   public:
    LevelTable(std::size_t depth, std::size_t alphabet_size)
        : _depth(depth), _alphabet_size(alphabet_size) {}

    std::size_t depth() const noexcept {
      return _depth;
    }

    std::size_t size() const noexcept {
      return _depth == 0 ? 1 : _images.size() / _depth;
    }

    // The i-th string of B^n.
    symbol_string source(std::size_t i) const;

    std::span<symbol_index const> image(std::size_t i) const noexcept {
      return {_images.data() + i * _depth, _depth};
    }

    friend bool operator==(LevelTable const&, LevelTable const&) = default;

   private:
    friend LevelTable act_on_level(Automaton const&,
                                   Word const&,
                                   std::size_t,
                                   std::size_t);
    std::size_t               _depth;
    std::size_t               _alphabet_size;
    std::vector<symbol_index> _images;
  };

  // Throws CapacityError if depth * |B|^depth exceeds `bound`.
  LevelTable act_on_level(Automaton const& aut,
                          Word const&      w,
                          std::size_t      depth,
                          std::size_t      bound = default_level_bound);

}  // namespace autosg

#endif  // AUTOSG_AUTOMATON_HPP_
