#include "autosg/automaton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "autosg/error.hpp"
#include "autosg/names.hpp"

namespace autosg {

  std::string_view to_string(Diagnostic::Kind kind) noexcept {
    switch (kind) {
      case Diagnostic::Kind::empty_section:
        return "empty";
      case Diagnostic::Kind::bad_name:
        return "bad name";
      case Diagnostic::Kind::name_collision:
        return "name collision";
      case Diagnostic::Kind::unknown_name:
        return "out of range";
      case Diagnostic::Kind::duplicate_transition:
        return "duplicate transition";
      case Diagnostic::Kind::totality:
        return "totality";
    }
    return "unknown";
  }

  std::string to_string(Diagnostic const& d) {
    std::string out;
    if (d.line != 0) {
      out += "line " + std::to_string(d.line) + ": ";
    }
    out += to_string(d.kind);
    out += ": ";
    out += d.message;
    return out;
  }

  namespace {
    void check_names(std::vector<std::string> const& names,
                     std::string_view                what,
                     std::size_t                     line,
                     std::vector<Diagnostic>&        out) {
      if (names.empty()) {
        out.push_back({Diagnostic::Kind::empty_section,
                       "no " + std::string(what) + "s declared",
                       line});
      }
      std::set<std::string> seen;
      for (auto const& name : names) {
        if (auto problem = name_problem(name)) {
          out.push_back({Diagnostic::Kind::bad_name,
                         std::string(what) + " \"" + name + "\": " + *problem,
                         line});
        }
        if (!seen.insert(name).second) {
          out.push_back({Diagnostic::Kind::name_collision,
                         std::string(what) + " \"" + name
                             + "\" declared more than once",
                         line});
        }
      }
    }

    template <typename T>
    std::map<std::string, T, std::less<>>
    index_names(std::vector<std::string> const& names) {
      std::map<std::string, T, std::less<>> result;
      for (std::size_t i = 0; i < names.size(); ++i) {
        result.emplace(names[i], static_cast<T>(i));
      }
      return result;
    }
  }  // namespace

  std::vector<Diagnostic> validate(AutomatonDraft const& draft) {
    std::vector<Diagnostic> out;
    check_names(draft.states, "state", draft.states_line, out);
    check_names(draft.alphabet, "symbol", draft.alphabet_line, out);

    auto states  = index_names<state_index>(draft.states);
    auto symbols = index_names<symbol_index>(draft.alphabet);

    std::size_t const m = draft.alphabet.size();
    std::vector<std::size_t> defined_at(draft.states.size() * m, 0);
    std::vector<bool>        defined(draft.states.size() * m, false);

    auto known = [&](auto const& map,
                     std::string const& name,
                     std::string_view   what,
                     std::size_t        line) {
      if (map.find(name) == map.end()) {
        out.push_back({Diagnostic::Kind::unknown_name,
                       "undeclared " + std::string(what) + " \"" + name + "\"",
                       line});
        return false;
      }
      return true;
    };

    for (auto const& t : draft.transitions) {
      bool ok = known(states, t.from, "state", t.line);
      ok      = known(symbols, t.input, "symbol", t.line) && ok;
      known(states, t.to, "state", t.line);
      known(symbols, t.output, "symbol", t.line);
      if (!ok) {
        continue;
      }
      std::size_t slot = states.find(t.from)->second * m
                         + symbols.find(t.input)->second;
      if (defined[slot]) {
        out.push_back({Diagnostic::Kind::duplicate_transition,
                       "transition for (" + t.from + ", " + t.input
                           + ") already given on line "
                           + std::to_string(defined_at[slot]),
                       t.line});
      } else {
        defined[slot]    = true;
        defined_at[slot] = t.line;
      }
    }

    // Repeated names are reported once, as collisions; only the first
    // declaration of a name takes part in the totality check.
    for (std::size_t q = 0; q < draft.states.size(); ++q) {
      if (states.find(draft.states[q])->second != q) {
        continue;
      }
      for (std::size_t x = 0; x < m; ++x) {
        if (symbols.find(draft.alphabet[x])->second != x) {
          continue;
        }
        if (!defined[q * m + x]) {
          out.push_back({Diagnostic::Kind::totality,
                         "no transition for (" + draft.states[q] + ", "
                             + draft.alphabet[x] + ")",
                         0});
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Automaton
  ////////////////////////////////////////////////////////////////////////

  Automaton::Automaton(std::vector<std::string> states,
                       std::vector<std::string> alphabet,
                       std::vector<Transition>  table)
      : _states(std::move(states)),
        _alphabet(std::make_shared<Alphabet const>(std::move(alphabet))),
        _table(std::move(table)) {
    std::vector<Diagnostic> diags;
    check_names(_states, "state", 0, diags);
    check_names(*_alphabet, "symbol", 0, diags);
    if (_table.size() != _states.size() * _alphabet->size()) {
      diags.push_back({Diagnostic::Kind::totality,
                       "transition table has " + std::to_string(_table.size())
                           + " entries, expected "
                           + std::to_string(_states.size() * _alphabet->size()),
                       0});
    }
    for (auto const& t : _table) {
      if (t.target >= _states.size() || t.output >= _alphabet->size()) {
        diags.push_back({Diagnostic::Kind::unknown_name,
                         "transition target or output index out of range",
                         0});
        break;
      }
    }
    if (!diags.empty()) {
      throw UsageError("invalid automaton: " + to_string(diags.front()));
    }
  }

  Automaton Automaton::from_draft(AutomatonDraft const& draft) {
    auto diags = validate(draft);
    if (!diags.empty()) {
      std::string msg = "invalid automaton:";
      for (auto const& d : diags) {
        msg += "\n  " + to_string(d);
      }
      throw UsageError(msg);
    }
    auto states  = index_names<state_index>(draft.states);
    auto symbols = index_names<symbol_index>(draft.alphabet);
    std::vector<Transition> table(draft.states.size() * draft.alphabet.size());
    for (auto const& t : draft.transitions) {
      table[states.at(t.from) * draft.alphabet.size() + symbols.at(t.input)]
          = {states.at(t.to), symbols.at(t.output)};
    }
    return Automaton(draft.states, draft.alphabet, std::move(table));
  }

  AutomatonDraft Automaton::to_draft() const {
    AutomatonDraft draft;
    draft.states   = _states;
    draft.alphabet = *_alphabet;
    for (state_index q = 0; q < _states.size(); ++q) {
      for (symbol_index x = 0; x < _alphabet->size(); ++x) {
        auto const& t = transition(q, x);
        draft.transitions.push_back({_states[q],
                                     (*_alphabet)[x],
                                     _states[t.target],
                                     (*_alphabet)[t.output],
                                     0});
      }
    }
    return draft;
  }

  std::string const& Automaton::state_name(state_index q) const {
    if (q >= _states.size()) {
      throw UsageError("state index " + std::to_string(q) + " out of range");
    }
    return _states[q];
  }

  std::string const& Automaton::symbol_name(symbol_index x) const {
    if (x >= _alphabet->size()) {
      throw UsageError("symbol index " + std::to_string(x) + " out of range");
    }
    return (*_alphabet)[x];
  }

  std::optional<state_index>
  Automaton::find_state(std::string_view name) const {
    auto it = std::find(_states.begin(), _states.end(), name);
    if (it == _states.end()) {
      return std::nullopt;
    }
    return static_cast<state_index>(it - _states.begin());
  }

  std::optional<symbol_index>
  Automaton::find_symbol(std::string_view name) const {
    auto it = std::find(_alphabet->begin(), _alphabet->end(), name);
    if (it == _alphabet->end()) {
      return std::nullopt;
    }
    return static_cast<symbol_index>(it - _alphabet->begin());
  }

  state_index Automaton::state(std::string_view name) const {
    if (auto q = find_state(name)) {
      return *q;
    }
    throw UsageError("unknown state \"" + std::string(name) + "\"");
  }

  symbol_index Automaton::symbol(std::string_view name) const {
    if (auto x = find_symbol(name)) {
      return *x;
    }
    throw UsageError("unknown symbol \"" + std::string(name) + "\"");
  }

  Transition Automaton::step(state_index q, symbol_index x) const {
    if (q >= _states.size()) {
      throw UsageError("state index " + std::to_string(q) + " out of range");
    }
    if (x >= _alphabet->size()) {
      throw UsageError("symbol index " + std::to_string(x) + " out of range");
    }
    return transition(q, x);
  }

  bool operator==(Automaton const& lhs, Automaton const& rhs) {
    return lhs._states == rhs._states && *lhs._alphabet == *rhs._alphabet
           && lhs._table == rhs._table;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(Automaton const& aut, std::vector<state_index> letters)
      : _letters(std::move(letters)) {
    if (_letters.empty()) {
      throw UsageError("a word must contain at least one state");
    }
    for (auto q : _letters) {
      if (q >= aut.number_of_states()) {
        throw UsageError("state index " + std::to_string(q)
                         + " out of range in word");
      }
    }
  }

  Word Word::parse(Automaton const& aut, std::string_view text) {
    std::vector<state_index> letters;
    for (auto const& name : split_top_level(text, ',')) {
      letters.push_back(aut.state(name));
    }
    return Word(aut, std::move(letters));
  }

  Word Word::concat(Word const& other) const {
    std::vector<state_index> letters = _letters;
    letters.insert(letters.end(), other._letters.begin(), other._letters.end());
    return Word(std::move(letters));
  }

  std::string Word::to_string(Automaton const& aut) const {
    std::vector<std::string> names;
    for (auto q : _letters) {
      names.push_back(aut.state_name(q));
    }
    return join(names, ",");
  }

  ////////////////////////////////////////////////////////////////////////
  // Symbol strings
  ////////////////////////////////////////////////////////////////////////

  symbol_string parse_symbols(Automaton const& aut, std::string_view text) {
    auto const&   alphabet = *aut.alphabet();
    symbol_string result;
    std::istringstream chunks{std::string(text)};
    std::string        chunk;
    while (chunks >> chunk) {
      std::string_view rest = chunk;
      while (!rest.empty()) {
        std::size_t best_len = 0;
        symbol_index best    = 0;
        for (symbol_index x = 0; x < alphabet.size(); ++x) {
          auto const& name = alphabet[x];
          if (name.size() > best_len && rest.starts_with(name)) {
            best_len = name.size();
            best     = x;
          }
        }
        if (best_len == 0) {
          throw UsageError("input contains a symbol outside the alphabet at \""
                           + std::string(rest) + "\"");
        }
        result.push_back(best);
        rest.remove_prefix(best_len);
      }
    }
    return result;
  }

  std::string format_symbols(Alphabet const&               alphabet,
                             std::span<symbol_index const> str) {
    std::string out;
    for (auto x : str) {
      out += alphabet.at(x);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Actions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_input(Automaton const& aut, std::span<symbol_index const> in) {
      for (auto x : in) {
        if (x >= aut.alphabet_size()) {
          throw UsageError("input symbol index " + std::to_string(x)
                           + " outside the alphabet");
        }
      }
    }

    void check_word(Automaton const& aut, Word const& w) {
      for (auto q : w.letters()) {
        if (q >= aut.number_of_states()) {
          throw UsageError("word is not over the states of this automaton");
        }
      }
    }
  }  // namespace

  symbol_string act(Automaton const&              aut,
                    state_index                   q,
                    std::span<symbol_index const> input) {
    check_input(aut, input);
    if (q >= aut.number_of_states()) {
      throw UsageError("state index " + std::to_string(q) + " out of range");
    }
    symbol_string out(input.begin(), input.end());
    for (auto& x : out) {
      auto const& t = aut.transition(q, x);
      x             = t.output;
      q             = t.target;
    }
    return out;
  }

  symbol_string act(Automaton const&              aut,
                    Word const&                   w,
                    std::span<symbol_index const> input) {
    check_input(aut, input);
    check_word(aut, w);
    symbol_string out(input.begin(), input.end());
    for (auto q : w.letters()) {
      for (auto& x : out) {
        auto const& t = aut.transition(q, x);
        x             = t.output;
        q             = t.target;
      }
    }
    return out;
  }

  symbol_string LevelTable::source(std::size_t i) const {
    symbol_string str(_depth);
    for (std::size_t pos = _depth; pos-- > 0;) {
      str[pos] = static_cast<symbol_index>(i % _alphabet_size);
      i /= _alphabet_size;
    }
    return str;
  }

  LevelTable act_on_level(Automaton const& aut,
                          Word const&      w,
                          std::size_t      depth,
                          std::size_t      bound) {
    check_word(aut, w);
    std::size_t const m = aut.alphabet_size();
    std::size_t       leaves = 1;
    for (std::size_t i = 0; i < depth; ++i) {
      if (leaves > bound / m) {
        throw CapacityError("level " + std::to_string(depth)
                            + " exceeds the table bound of "
                            + std::to_string(bound) + " entries");
      }
      leaves *= m;
    }
    if (depth != 0 && leaves > bound / depth) {
      throw CapacityError("level " + std::to_string(depth)
                          + " exceeds the table bound of "
                          + std::to_string(bound) + " entries");
    }

    LevelTable table(depth, m);
    if (depth == 0) {
      return table;
    }
    table._images.reserve(leaves * depth);

    // Depth-first walk of the tree in lexicographic order.  states holds,
    // per position, the state of every letter of w after the prefix so far.
    std::size_t const        k = w.size();
    std::vector<state_index> states((depth + 1) * k);
    std::copy(w.letters().begin(), w.letters().end(), states.begin());
    symbol_string out(depth);

    auto walk = [&](auto&& self, std::size_t pos) -> void {
      if (pos == depth) {
        table._images.insert(table._images.end(), out.begin(), out.end());
        return;
      }
      for (symbol_index a = 0; a < m; ++a) {
        symbol_index x = a;
        for (std::size_t i = 0; i < k; ++i) {
          auto const& t             = aut.transition(states[pos * k + i], x);
          states[(pos + 1) * k + i] = t.target;
          x                         = t.output;
        }
        out[pos] = x;
        self(self, pos + 1);
      }
    };
    walk(walk, 0);
    return table;
  }

}  // namespace autosg
