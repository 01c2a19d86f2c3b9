#include "autosg/text_format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "autosg/error.hpp"
#include "autosg/names.hpp"

namespace autosg {

  namespace {
    struct KeyedLine {
      std::string key;
      std::string value;
      std::size_t line;
    };

    struct RawDocument {
      AutomatonDraft         draft;
      std::vector<KeyedLine> annotations;
    };

    constexpr std::string_view ANNOTATION_KEYS[] = {"initial",
                                                    "construction",
                                                    "generators",
                                                    "tag",
                                                    "note",
                                                    "initial-symbols",
                                                    "rest-symbols"};

    bool is_annotation_key(std::string_view key) {
      return std::find(std::begin(ANNOTATION_KEYS),
                       std::end(ANNOTATION_KEYS),
                       key)
             != std::end(ANNOTATION_KEYS);
    }

    template <typename F>
    void for_each_line(std::string_view text, F&& f) {
      std::size_t line_no = 0;
      std::size_t start   = 0;
      while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++line_no;
        auto line = trim(text.substr(start, end - start));
        if (!line.empty() && !line.starts_with("//")) {
          f(line, line_no);
        }
        start = end + 1;
      }
    }

    // "key: value" -> {key, value}; nullopt if there is no colon.
    std::optional<std::pair<std::string, std::string>>
    split_keyed(std::string_view line) {
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        return std::nullopt;
      }
      return std::pair{std::string(trim(line.substr(0, colon))),
                       std::string(trim(line.substr(colon + 1)))};
    }

    // "lhs = rhs" where lhs has no whitespace.
    std::pair<std::string, std::string> split_assignment(std::string_view text,
                                                         std::size_t      line) {
      auto eq = text.find(" = ");
      if (eq == std::string_view::npos) {
        throw ParseError("expected \"name = value\"", line);
      }
      return {std::string(trim(text.substr(0, eq))),
              std::string(trim(text.substr(eq + 3)))};
    }

    RawDocument scan(std::string_view text) {
      RawDocument doc;
      bool        have_states = false, have_alphabet = false;
      for_each_line(text, [&](std::string_view line, std::size_t no) {
        auto arrow = line.find("->");
        if (arrow != std::string_view::npos) {
          auto lhs = split_top_level(line.substr(0, arrow), ',');
          auto rhs = split_top_level(line.substr(arrow + 2), ',');
          if (lhs.size() != 2 || rhs.size() != 2) {
            throw ParseError("expected \"state, symbol -> state, symbol\"",
                             no);
          }
          doc.draft.transitions.push_back({lhs[0], lhs[1], rhs[0], rhs[1], no});
          return;
        }
        auto keyed = split_keyed(line);
        if (!keyed) {
          throw ParseError("unrecognized line \"" + std::string(line) + "\"",
                           no);
        }
        auto& [key, value] = *keyed;
        if (key == "states") {
          if (have_states) {
            throw ParseError("second \"states:\" line", no);
          }
          have_states            = true;
          doc.draft.states       = split_top_level(value, ',');
          doc.draft.states_line  = no;
        } else if (key == "alphabet") {
          if (have_alphabet) {
            throw ParseError("second \"alphabet:\" line", no);
          }
          have_alphabet            = true;
          doc.draft.alphabet       = split_top_level(value, ',');
          doc.draft.alphabet_line  = no;
        } else if (is_annotation_key(key)) {
          doc.annotations.push_back({key, value, no});
        } else {
          throw ParseError("unknown section \"" + key + "\"", no);
        }
      });
      if (!have_states) {
        throw ParseError("missing \"states:\" line");
      }
      if (!have_alphabet) {
        throw ParseError("missing \"alphabet:\" line");
      }
      return doc;
    }

    void require_names(Automaton const&                aut,
                       std::vector<std::string> const& names,
                       bool                            states,
                       std::size_t                     line) {
      for (auto const& name : names) {
        bool known = states ? aut.find_state(name).has_value()
                            : aut.find_symbol(name).has_value();
        if (!known) {
          throw ParseError(std::string(states ? "unknown state" : "unknown symbol")
                               + " \"" + name + "\"",
                           line);
        }
      }
    }
  }  // namespace

  AutomatonDraft parse_draft(std::string_view text) {
    return scan(text).draft;
  }

  AutomatonDocument parse_automaton(std::string_view text) {
    auto raw   = scan(text);
    auto diags = validate(raw.draft);
    if (!diags.empty()) {
      std::string msg = "invalid automaton:";
      std::size_t line = 0;
      for (auto const& d : diags) {
        if (line == 0) {
          line = d.line;
        }
        msg += "\n  " + to_string(d);
      }
      throw ParseError(msg, line);
    }
    AutomatonDocument doc{plain(Automaton::from_draft(raw.draft)),
                          std::nullopt};
    auto& out = doc.content;
    std::vector<std::optional<SymbolTag>> tags(out.automaton.alphabet_size());
    bool have_tags = false;

    for (auto const& a : raw.annotations) {
      if (a.key == "initial") {
        require_names(out.automaton, {a.value}, true, a.line);
        doc.initial = a.value;
      } else if (a.key == "construction") {
        out.construction = a.value;
      } else if (a.key == "generators") {
        out.generators = split_top_level(a.value, ',');
        require_names(out.automaton, out.generators, true, a.line);
      } else if (a.key == "tag") {
        auto [symbol, rest] = split_assignment(a.value, a.line);
        require_names(out.automaton, {symbol}, false, a.line);
        auto open = rest.find('(');
        auto kind = parse_tag_kind(rest.substr(0, open));
        if (!kind) {
          throw ParseError("unknown tag kind in \"" + rest + "\"", a.line);
        }
        SymbolTag tag{*kind, {}};
        if (open != std::string::npos) {
          if (rest.back() != ')') {
            throw ParseError("unterminated tag payload", a.line);
          }
          tag.payload = split_top_level(
              std::string_view(rest).substr(open + 1, rest.size() - open - 2),
              ',');
        }
        auto x = *out.automaton.find_symbol(symbol);
        if (tags[x]) {
          throw ParseError("second tag for symbol \"" + symbol + "\"", a.line);
        }
        tags[x]   = std::move(tag);
        have_tags = true;
      } else if (a.key == "note") {
        out.notes.push_back(split_assignment(a.value, a.line));
      } else if (a.key == "initial-symbols") {
        out.initial_symbols = split_top_level(a.value, ',');
        require_names(out.automaton, out.initial_symbols, false, a.line);
      } else if (a.key == "rest-symbols") {
        out.rest_symbols = split_top_level(a.value, ',');
        require_names(out.automaton, out.rest_symbols, false, a.line);
      }
    }
    if (have_tags) {
      for (std::size_t x = 0; x < tags.size(); ++x) {
        if (!tags[x]) {
          throw ParseError("symbol \"" + out.automaton.symbol_name(x)
                           + "\" has no tag although others do");
        }
        out.tags.push_back(std::move(*tags[x]));
      }
    }
    return doc;
  }

  std::string serialize(Automaton const& aut) {
    std::ostringstream os;
    os << "states: " << join(aut.state_names(), ",") << '\n';
    os << "alphabet: " << join(*aut.alphabet(), ",") << '\n';
    for (state_index q = 0; q < aut.number_of_states(); ++q) {
      for (symbol_index x = 0; x < aut.alphabet_size(); ++x) {
        auto const& t = aut.transition(q, x);
        os << aut.state_name(q) << ", " << aut.symbol_name(x) << " -> "
           << aut.state_name(t.target) << ", " << aut.symbol_name(t.output)
           << '\n';
      }
    }
    return os.str();
  }

  std::string serialize(AutomatonDocument const& doc) {
    auto const&        out = doc.content;
    std::ostringstream os;
    os << serialize(out.automaton);
    if (doc.initial) {
      os << "initial: " << *doc.initial << '\n';
    }
    if (!out.construction.empty()) {
      os << "construction: " << out.construction << '\n';
    }
    if (!out.construction.empty()
        || out.generators != out.automaton.state_names()) {
      os << "generators: " << join(out.generators, ",") << '\n';
    }
    for (std::size_t x = 0; x < out.tags.size(); ++x) {
      os << "tag: " << out.automaton.symbol_name(x) << " = "
         << to_string(out.tags[x]) << '\n';
    }
    for (auto const& [key, value] : out.notes) {
      os << "note: " << key << " = " << value << '\n';
    }
    if (!out.initial_symbols.empty()) {
      os << "initial-symbols: " << join(out.initial_symbols, ",") << '\n';
    }
    if (!out.rest_symbols.empty()) {
      os << "rest-symbols: " << join(out.rest_symbols, ",") << '\n';
    }
    return os.str();
  }

  std::string serialize(ConstructionOutput const& out) {
    return serialize(AutomatonDocument{out, std::nullopt});
  }

  std::string serialize(Element const& e) {
    std::vector<std::string> states;
    for (std::size_t q = 0; q < e.number_of_states(); ++q) {
      states.push_back(std::to_string(q));
    }
    Automaton aut(std::move(states),
                  *e.alphabet(),
                  std::vector<Transition>(e.table().begin(), e.table().end()));
    return serialize(aut) + "initial: 0\n";
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoids
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid parse_monoid(std::string_view text) {
    std::optional<std::vector<std::string>> elements;
    std::optional<std::string>              identity;
    std::vector<std::vector<std::string>>   rows;
    std::vector<std::size_t>                row_lines;
    for_each_line(text, [&](std::string_view line, std::size_t no) {
      auto keyed = split_keyed(line);
      if (keyed && keyed->first == "elements") {
        if (elements) {
          throw ParseError("second \"elements:\" line", no);
        }
        elements = split_top_level(keyed->second, ',');
        return;
      }
      if (keyed && keyed->first == "identity") {
        if (identity) {
          throw ParseError("second \"identity:\" line", no);
        }
        identity = keyed->second;
        return;
      }
      if (!elements) {
        throw ParseError("table row before \"elements:\" line", no);
      }
      std::vector<std::string> row;
      for (auto const& piece : split_top_level(line, ',')) {
        std::istringstream words(piece);
        std::string        w;
        while (words >> w) {
          row.push_back(w);
        }
      }
      rows.push_back(std::move(row));
      row_lines.push_back(no);
    });
    if (!elements) {
      throw ParseError("missing \"elements:\" line");
    }
    if (!identity) {
      throw ParseError("missing \"identity:\" line");
    }
    std::size_t const n = elements->size();
    if (rows.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " table rows, found "
                       + std::to_string(rows.size()));
    }
    auto index_of = [&](std::string const& name, std::size_t line) {
      auto it = std::find(elements->begin(), elements->end(), name);
      if (it == elements->end()) {
        throw ParseError("unknown monoid element \"" + name + "\"", line);
      }
      return static_cast<monoid_index>(it - elements->begin());
    };
    std::vector<monoid_index> table;
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw ParseError("expected " + std::to_string(n) + " entries in row",
                         row_lines[i]);
      }
      for (auto const& name : rows[i]) {
        table.push_back(index_of(name, row_lines[i]));
      }
    }
    monoid_index id = index_of(*identity, 0);
    try {
      return FiniteMonoid(*elements, std::move(table), id);
    } catch (UsageError const& e) {
      throw ParseError(e.what());
    }
  }

  std::string serialize(FiniteMonoid const& monoid) {
    std::ostringstream os;
    os << "elements: " << join(monoid.element_names(), ",") << '\n';
    os << "identity: " << monoid.name(monoid.identity()) << '\n';
    for (monoid_index a = 0; a < monoid.size(); ++a) {
      for (monoid_index b = 0; b < monoid.size(); ++b) {
        os << (b == 0 ? "" : " ") << monoid.name(monoid.multiply(a, b));
      }
      os << '\n';
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Files
  ////////////////////////////////////////////////////////////////////////

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw IoError("cannot read file \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  namespace {
    template <typename F>
    auto with_path(std::string const& path, F&& parse) {
      auto text = read_file(path);
      try {
        return parse(text);
      } catch (ParseError const& e) {
        throw ParseError(path + ": " + e.what());
      } catch (UsageError const& e) {
        throw ParseError(path + ": " + e.what());
      }
    }
  }  // namespace

  AutomatonDocument load_automaton(std::string const& path) {
    return with_path(path, [](std::string const& t) { return parse_automaton(t); });
  }

  FiniteMonoid load_monoid(std::string const& path) {
    return with_path(path, [](std::string const& t) { return parse_monoid(t); });
  }

}  // namespace autosg
