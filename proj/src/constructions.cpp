#include "autosg/constructions.hpp"

#include <algorithm>
#include <set>

#include "autosg/element.hpp"
#include "autosg/error.hpp"
#include "autosg/names.hpp"

namespace autosg {

  namespace {
    constexpr std::string_view MARK = "°";

    struct TagName {
      SymbolTag::Kind  kind;
      std::string_view name;
    };

    constexpr TagName TAG_NAMES[] = {
        {SymbolTag::Kind::base_left, "base-left"},
        {SymbolTag::Kind::base_right, "base-right"},
        {SymbolTag::Kind::marked_left, "marked-left"},
        {SymbolTag::Kind::marked_right, "marked-right"},
        {SymbolTag::Kind::dollar, "dollar"},
        {SymbolTag::Kind::hash, "hash"},
        {SymbolTag::Kind::dollar_marked, "dollar-marked"},
        {SymbolTag::Kind::hash_marked, "hash-marked"},
        {SymbolTag::Kind::tuple, "tuple"},
        {SymbolTag::Kind::monoid_copy, "monoid-copy"},
    };

    bool has_duplicates(std::vector<std::string> const& names) {
      std::set<std::string> seen(names.begin(), names.end());
      return seen.size() != names.size();
    }

    std::vector<std::string> suffixed(std::vector<std::string> names,
                                      std::string_view         suffix) {
      for (auto& n : names) {
        n += suffix;
      }
      return names;
    }

    std::string tuple_name(std::vector<std::string> const& parts) {
      return "(" + join(parts, ",") + ")";
    }

    // base^n, or nullopt once it exceeds `cap`.
    std::optional<std::size_t> bounded_power(std::size_t base,
                                             std::size_t n,
                                             std::size_t cap) {
      std::size_t result = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (base != 0 && result > cap / base) {
          return std::nullopt;
        }
        result *= base;
      }
      return result;
    }

    void check_table_size(std::size_t states,
                          std::size_t symbols,
                          std::size_t cap) {
      if (symbols != 0 && states > cap / symbols) {
        throw CapacityError("construction would have "
                            + std::to_string(states) + " states and "
                            + std::to_string(symbols)
                            + " symbols, exceeding the cap of "
                            + std::to_string(cap) + " table entries");
      }
    }

    // Shared by the two free product constructions.  With `adjoin`, a fresh
    // identity state replaces l_T and l_S as targets of $ and #.
    ConstructionOutput build_free_product(Automaton const& left,
                                          state_index      left_identity,
                                          Automaton const& right,
                                          state_index      right_identity,
                                          bool             adjoin,
                                          bool             printed_table) {
      std::size_t const q1 = left.number_of_states();
      std::size_t const q2 = right.number_of_states();
      std::size_t const na = left.alphabet_size();
      std::size_t const nb = right.alphabet_size();

      // States.
      auto lstates = left.state_names();
      auto rstates = right.state_names();
      {
        auto all = lstates;
        all.insert(all.end(), rstates.begin(), rstates.end());
        if (has_duplicates(all)) {
          lstates = suffixed(lstates, "1");
          rstates = suffixed(rstates, "2");
        }
      }
      std::vector<std::string> states = lstates;
      states.insert(states.end(), rstates.begin(), rstates.end());
      if (has_duplicates(states)) {
        throw UsageError("cannot make the factor state names disjoint");
      }
      state_index const one = static_cast<state_index>(q1 + q2);
      if (adjoin) {
        states.push_back(fresh_name("1", states));
      }

      // Symbols.
      auto make_alphabet = [&](std::vector<std::string> const& as,
                               std::vector<std::string> const& bs) {
        std::vector<std::string> c = as;
        c.insert(c.end(), bs.begin(), bs.end());
        for (auto const& a : as) {
          c.push_back(a + std::string(MARK));
        }
        for (auto const& b : bs) {
          c.push_back(b + std::string(MARK));
        }
        for (std::string s : {"$", "#"}) {
          c.push_back(s);
        }
        for (std::string s : {"$", "#"}) {
          c.push_back(s + std::string(MARK));
        }
        return c;
      };
      auto alphabet = make_alphabet(*left.alphabet(), *right.alphabet());
      if (has_duplicates(alphabet)) {
        alphabet = make_alphabet(suffixed(*left.alphabet(), "1"),
                                 suffixed(*right.alphabet(), "2"));
        if (has_duplicates(alphabet)) {
          throw UsageError("cannot make the factor alphabets disjoint");
        }
      }

      std::vector<SymbolTag> tags;
      for (auto const& a : *left.alphabet()) {
        tags.push_back({SymbolTag::Kind::base_left, {a}});
      }
      for (auto const& b : *right.alphabet()) {
        tags.push_back({SymbolTag::Kind::base_right, {b}});
      }
      for (auto const& a : *left.alphabet()) {
        tags.push_back({SymbolTag::Kind::marked_left, {a}});
      }
      for (auto const& b : *right.alphabet()) {
        tags.push_back({SymbolTag::Kind::marked_right, {b}});
      }
      tags.push_back({SymbolTag::Kind::dollar, {}});
      tags.push_back({SymbolTag::Kind::hash, {}});
      tags.push_back({SymbolTag::Kind::dollar_marked, {}});
      tags.push_back({SymbolTag::Kind::hash_marked, {}});

      auto const a_sym      = [](std::size_t a) { return static_cast<symbol_index>(a); };
      auto const b_sym      = [&](std::size_t b) { return static_cast<symbol_index>(na + b); };
      auto const a_marked   = [&](std::size_t a) { return static_cast<symbol_index>(na + nb + a); };
      auto const b_marked   = [&](std::size_t b) { return static_cast<symbol_index>(2 * na + nb + b); };
      symbol_index const dollar        = static_cast<symbol_index>(2 * (na + nb));
      symbol_index const hash          = dollar + 1;
      symbol_index const dollar_marked = dollar + 2;
      symbol_index const hash_marked   = dollar + 3;
      std::size_t const  m             = alphabet.size();

      state_index const l_s = left_identity;
      state_index const l_t = static_cast<state_index>(q1 + right_identity);

      std::vector<Transition> table(states.size() * m);
      auto set = [&](state_index q, symbol_index x, state_index r, symbol_index y) {
        table[q * m + x] = {r, y};
      };
      for (state_index q = 0; q < states.size(); ++q) {
        for (symbol_index x = a_marked(0); x < m; ++x) {
          if (x != dollar && x != hash) {
            set(q, x, q, x);
          }
        }
      }
      for (state_index s = 0; s < q1; ++s) {
        for (std::size_t a = 0; a < na; ++a) {
          auto const& t = left.transition(s, static_cast<symbol_index>(a));
          set(s, a_sym(a), t.target, a_sym(t.output));
        }
        for (std::size_t b = 0; b < nb; ++b) {
          set(s, b_sym(b), s, b_marked(b));
        }
        set(s, hash, s, hash_marked);
        set(s, dollar, adjoin ? one : l_t, dollar);
      }
      for (std::size_t i = 0; i < q2; ++i) {
        auto const t = static_cast<state_index>(q1 + i);
        for (std::size_t b = 0; b < nb; ++b) {
          auto const& tr
              = right.transition(static_cast<state_index>(i),
                                 static_cast<symbol_index>(b));
          set(t,
              b_sym(b),
              static_cast<state_index>(q1 + tr.target),
              b_sym(tr.output));
        }
        for (std::size_t a = 0; a < na; ++a) {
          set(t, a_sym(a), t, a_marked(a));
        }
        set(t, dollar, t, (adjoin && printed_table) ? hash_marked : dollar_marked);
        set(t, hash, adjoin ? one : l_s, hash);
      }
      if (adjoin) {
        for (symbol_index x = 0; x < m; ++x) {
          set(one, x, one, x);
        }
      }

      std::vector<std::string> generators = states;
      Automaton aut(states, std::move(alphabet), std::move(table));

      ConstructionOutput out{adjoin ? "free-product-identity" : "free-product",
                             std::move(aut),
                             std::move(tags),
                             std::move(generators),
                             {},
                             {},
                             {}};
      if (adjoin) {
        out.notes.emplace_back("identity", states.back());
        if (printed_table) {
          out.notes.emplace_back("table", "printed");
        }
      } else {
        out.notes.emplace_back("left-identity", lstates[left_identity]);
        out.notes.emplace_back("right-identity", rstates[right_identity]);
      }
      out.notes.emplace_back("left-states", join(lstates, ","));
      out.notes.emplace_back("right-states", join(rstates, ","));
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Tags and outputs
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(SymbolTag::Kind kind) noexcept {
    for (auto const& t : TAG_NAMES) {
      if (t.kind == kind) {
        return t.name;
      }
    }
    return "unknown";
  }

  std::optional<SymbolTag::Kind> parse_tag_kind(std::string_view text) {
    for (auto const& t : TAG_NAMES) {
      if (t.name == text) {
        return t.kind;
      }
    }
    return std::nullopt;
  }

  std::string to_string(SymbolTag const& tag) {
    std::string out(to_string(tag.kind));
    if (!tag.payload.empty()) {
      out += "(" + join(tag.payload, ",") + ")";
    }
    return out;
  }

  std::optional<std::string>
  ConstructionOutput::note(std::string_view key) const {
    for (auto const& [k, v] : notes) {
      if (k == key) {
        return v;
      }
    }
    return std::nullopt;
  }

  symbol_index ConstructionOutput::symbol_of_kind(SymbolTag::Kind kind) const {
    for (std::size_t x = 0; x < tags.size(); ++x) {
      if (tags[x].kind == kind) {
        return static_cast<symbol_index>(x);
      }
    }
    throw UsageError("automaton has no symbol tagged "
                     + std::string(to_string(kind)));
  }

  ConstructionOutput plain(Automaton aut) {
    std::vector<std::string> generators = aut.state_names();
    return {"", std::move(aut), {}, std::move(generators), {}, {}, {}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Free products
  ////////////////////////////////////////////////////////////////////////

  ConstructionOutput free_product(Automaton const& left,
                                  state_index      left_identity,
                                  Automaton const& right,
                                  state_index      right_identity) {
    if (left_identity >= left.number_of_states()
        || right_identity >= right.number_of_states()) {
      throw UsageError("designated identity state out of range");
    }
    if (!is_left_identity(left, left_identity)) {
      throw PreconditionError("state \"" + left.state_name(left_identity)
                              + "\" is not a left identity of the left factor");
    }
    if (!is_left_identity(right, right_identity)) {
      throw PreconditionError("state \"" + right.state_name(right_identity)
                              + "\" is not a left identity of the right factor");
    }
    return build_free_product(
        left, left_identity, right, right_identity, false, false);
  }

  ConstructionOutput free_product_adjoin_identity(Automaton const& left,
                                                  Automaton const& right,
                                                  bool printed_table) {
    return build_free_product(left, 0, right, 0, true, printed_table);
  }

  std::vector<state_index> factor_states(ConstructionOutput const& fp,
                                         Factor                    side) {
    auto names
        = fp.note(side == Factor::left ? "left-states" : "right-states");
    if (!names) {
      throw UsageError("automaton is not annotated as a free product");
    }
    std::vector<state_index> result;
    for (auto const& name : split_top_level(*names, ',')) {
      result.push_back(fp.automaton.state(name));
    }
    return result;
  }

  Automaton factor_automaton(ConstructionOutput const& fp, Factor side) {
    auto const states = factor_states(fp, side);
    auto const base   = side == Factor::left ? SymbolTag::Kind::base_left
                                             : SymbolTag::Kind::base_right;
    std::vector<symbol_index> symbols;
    std::vector<std::string>  symbol_names;
    for (std::size_t x = 0; x < fp.tags.size(); ++x) {
      if (fp.tags[x].kind == base) {
        symbols.push_back(static_cast<symbol_index>(x));
        symbol_names.push_back(fp.automaton.symbol_name(x));
      }
    }
    if (symbols.empty()) {
      throw UsageError("free product has no base symbols for this factor");
    }
    auto local = [](auto const& v, auto value) -> std::optional<std::size_t> {
      auto it = std::find(v.begin(), v.end(), value);
      if (it == v.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - v.begin());
    };
    std::vector<std::string> state_names;
    std::vector<Transition>  table;
    for (auto q : states) {
      state_names.push_back(fp.automaton.state_name(q));
      for (auto x : symbols) {
        auto const& t      = fp.automaton.transition(q, x);
        auto        target = local(states, t.target);
        auto        output = local(symbols, t.output);
        if (!target || !output) {
          throw UsageError("factor states do not act on the factor alphabet");
        }
        table.push_back({static_cast<state_index>(*target),
                         static_cast<symbol_index>(*output)});
      }
    }
    return Automaton(
        std::move(state_names), std::move(symbol_names), std::move(table));
  }

  ////////////////////////////////////////////////////////////////////////
  // Direct powers
  ////////////////////////////////////////////////////////////////////////

  ConstructionOutput direct_power(Automaton const& aut,
                                  std::size_t      n,
                                  std::size_t      cap) {
    if (n == 0) {
      throw UsageError("direct power exponent must be at least 1");
    }
    auto states  = bounded_power(aut.number_of_states(), n, cap);
    auto symbols = bounded_power(aut.alphabet_size(), n, cap);
    if (!states || !symbols) {
      throw CapacityError("direct power exceeds the cap of "
                          + std::to_string(cap) + " table entries");
    }
    check_table_size(*states, *symbols, cap);

    // A power layout without monoid states or a second copy.
    WreathLayout layout(aut.number_of_states(), aut.alphabet_size(), n, false);
    auto names = [&](std::size_t index,
                     std::size_t base,
                     auto const& name_of) {
      std::vector<std::string> parts;
      for (auto c : layout.decode(index, base)) {
        parts.push_back(name_of(c));
      }
      return parts;
    };

    std::vector<std::string> state_names;
    for (std::size_t i = 0; i < *states; ++i) {
      state_names.push_back(tuple_name(names(
          i, aut.number_of_states(), [&](auto c) { return aut.state_name(c); })));
    }
    std::vector<std::string> symbol_names;
    std::vector<SymbolTag>   tags;
    for (std::size_t i = 0; i < *symbols; ++i) {
      auto parts = names(
          i, aut.alphabet_size(), [&](auto c) { return aut.symbol_name(c); });
      symbol_names.push_back(tuple_name(parts));
      tags.push_back({SymbolTag::Kind::tuple, std::move(parts)});
    }

    std::vector<Transition> table;
    table.reserve(*states * *symbols);
    for (std::size_t i = 0; i < *states; ++i) {
      auto const qs = layout.decode(i, aut.number_of_states());
      for (std::size_t j = 0; j < *symbols; ++j) {
        auto xs = layout.decode(j, aut.alphabet_size());
        auto rs = qs;
        for (std::size_t k = 0; k < n; ++k) {
          auto const& t = aut.transition(qs[k], xs[k]);
          rs[k]         = t.target;
          xs[k]         = t.output;
        }
        table.push_back(
            {static_cast<state_index>(layout.encode(rs, aut.number_of_states())),
             static_cast<symbol_index>(layout.encode(xs, aut.alphabet_size()))});
      }
    }
    std::vector<std::string> generators = state_names;
    ConstructionOutput out{"direct-power",
                           Automaton(std::move(state_names),
                                     std::move(symbol_names),
                                     std::move(table)),
                           std::move(tags),
                           std::move(generators),
                           {{"power", std::to_string(n)}},
                           {},
                           {}};
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Wreath products
  ////////////////////////////////////////////////////////////////////////

  TupleState reindex_tuple(TupleState const&   s,
                           monoid_index        t,
                           FiniteMonoid const& monoid) {
    if (s.entries.size() != monoid.size() || t >= monoid.size()) {
      throw UsageError("tuple does not match the monoid");
    }
    TupleState result{s.entries, s.phase};
    for (monoid_index i = 0; i < monoid.size(); ++i) {
      result.entries[i] = s.entries[monoid.multiply(i, t)];
    }
    return result;
  }

  WreathLayout::WreathLayout(std::size_t base_states,
                             std::size_t base_symbols,
                             std::size_t monoid_size,
                             bool        two_copies)
      : _base_states(base_states),
        _base_symbols(base_symbols),
        _monoid_size(monoid_size),
        _two_copies(two_copies),
        _tuples(1),
        _symbol_tuples(1) {
    for (std::size_t i = 0; i < monoid_size; ++i) {
      _tuples *= base_states;
      _symbol_tuples *= base_symbols;
    }
  }

  state_index WreathLayout::tuple_state(std::size_t       tuple,
                                        TupleState::Phase phase) const noexcept {
    bool const second = _two_copies && phase == TupleState::Phase::post;
    return static_cast<state_index>(tuple + (second ? _tuples : 0));
  }

  std::optional<TupleState> WreathLayout::tuple_of_state(state_index q) const {
    std::size_t const copies = _two_copies ? 2 : 1;
    if (q >= _tuples * copies) {
      return std::nullopt;
    }
    TupleState s;
    for (auto c : decode(q % _tuples, _base_states)) {
      s.entries.push_back(c);
    }
    s.phase = (_two_copies && q >= _tuples) ? TupleState::Phase::post
                                            : TupleState::Phase::pre;
    return s;
  }

  std::optional<monoid_index>
  WreathLayout::monoid_of_state(state_index q) const {
    std::size_t const first = _tuples * (_two_copies ? 2 : 1);
    if (q < first || q >= first + _monoid_size) {
      return std::nullopt;
    }
    return static_cast<monoid_index>(q - first);
  }

  std::vector<std::uint32_t> WreathLayout::decode(std::size_t index,
                                                  std::size_t base) const {
    std::vector<std::uint32_t> parts(_monoid_size);
    for (std::size_t k = _monoid_size; k-- > 0;) {
      parts[k] = static_cast<std::uint32_t>(index % base);
      index /= base;
    }
    return parts;
  }

  std::size_t WreathLayout::encode(std::span<std::uint32_t const> components,
                                   std::size_t base) const {
    std::size_t index = 0;
    for (auto c : components) {
      index = index * base + c;
    }
    return index;
  }

  namespace {
    void require_identity_state(Automaton const& base) {
      for (state_index q = 0; q < base.number_of_states(); ++q) {
        if (state_element(base, q).is_identity()) {
          return;
        }
      }
      throw PreconditionError(
          "no state of the base automaton acts as the identity, so it does "
          "not define a monoid");
    }

    ConstructionOutput build_wreath(Automaton const&    base,
                                    FiniteMonoid const& monoid,
                                    std::size_t         cap,
                                    bool                two_copies) {
      require_identity_state(base);
      std::size_t const n      = monoid.size();
      auto              tuples = bounded_power(base.number_of_states(), n, cap);
      auto symbol_tuples       = bounded_power(base.alphabet_size(), n, cap);
      if (!tuples || !symbol_tuples) {
        throw CapacityError("wreath construction exceeds the cap of "
                            + std::to_string(cap) + " table entries");
      }
      check_table_size(*tuples * (two_copies ? 2 : 1) + n,
                       *symbol_tuples + n,
                       cap);

      WreathLayout const layout(
          base.number_of_states(), base.alphabet_size(), n, two_copies);
      std::size_t const qn = base.number_of_states();
      std::size_t const an = base.alphabet_size();
      std::size_t const m  = layout.alphabet_size();

      // Names.
      auto component_names = [&](std::size_t index, bool states) {
        std::vector<std::string> parts;
        for (auto c : layout.decode(index, states ? qn : an)) {
          parts.push_back(states ? base.state_name(c) : base.symbol_name(c));
        }
        return parts;
      };
      std::vector<std::string> state_names(layout.number_of_states());
      for (std::size_t i = 0; i < *tuples; ++i) {
        auto name = tuple_name(component_names(i, true));
        if (two_copies) {
          state_names[layout.tuple_state(i, TupleState::Phase::pre)]
              = name + "·pre";
          state_names[layout.tuple_state(i, TupleState::Phase::post)]
              = name + "·post";
        } else {
          state_names[layout.tuple_state(i)] = name;
        }
      }
      for (monoid_index t = 0; t < n; ++t) {
        state_names[layout.monoid_state(t)] = "t:" + monoid.name(t);
      }
      std::vector<std::string> symbol_names;
      std::vector<SymbolTag>   tags;
      for (std::size_t j = 0; j < *symbol_tuples; ++j) {
        auto parts = component_names(j, false);
        symbol_names.push_back(tuple_name(parts));
        tags.push_back({SymbolTag::Kind::tuple, std::move(parts)});
      }
      for (monoid_index t = 0; t < n; ++t) {
        symbol_names.push_back("b:" + monoid.name(t));
        tags.push_back({SymbolTag::Kind::monoid_copy, {monoid.name(t)}});
      }

      // Componentwise action of tuple i on symbol tuple j.
      auto componentwise = [&](std::size_t i, std::size_t j) {
        auto qs = layout.decode(i, qn);
        auto xs = layout.decode(j, an);
        for (std::size_t k = 0; k < n; ++k) {
          auto const& t = base.transition(qs[k], xs[k]);
          qs[k]         = t.target;
          xs[k]         = t.output;
        }
        return std::pair{layout.encode(qs, qn), layout.encode(xs, an)};
      };
      auto reindexed = [&](std::size_t i, monoid_index b) {
        TupleState s;
        for (auto c : layout.decode(i, qn)) {
          s.entries.push_back(c);
        }
        auto r = reindex_tuple(s, b, monoid).entries;
        return layout.encode(r, qn);
      };

      using Phase = TupleState::Phase;
      std::vector<Transition> table(layout.number_of_states() * m);
      auto set = [&](state_index q, symbol_index x, Transition t) {
        table[q * m + x] = t;
      };
      for (std::size_t i = 0; i < *tuples; ++i) {
        state_index const pre  = layout.tuple_state(i, Phase::pre);
        state_index const post = layout.tuple_state(i, Phase::post);
        for (std::size_t j = 0; j < *symbol_tuples; ++j) {
          auto [r, y] = componentwise(i, j);
          auto const x = static_cast<symbol_index>(j);
          set(post,
              x,
              {layout.tuple_state(r, Phase::post),
               static_cast<symbol_index>(y)});
          if (two_copies) {
            set(pre, x, {pre, x});
          }
        }
        for (monoid_index b = 0; b < n; ++b) {
          auto const x = layout.monoid_symbol(b);
          set(pre, x, {layout.tuple_state(reindexed(i, b), Phase::post), x});
          if (two_copies) {
            set(post, x, {post, x});
          }
        }
      }
      state_index const unit = layout.monoid_state(monoid.identity());
      for (monoid_index t = 0; t < n; ++t) {
        state_index const q = layout.monoid_state(t);
        for (std::size_t j = 0; j < *symbol_tuples; ++j) {
          auto const x = static_cast<symbol_index>(j);
          set(q, x, {q, x});
        }
        for (monoid_index b = 0; b < n; ++b) {
          set(q,
              layout.monoid_symbol(b),
              {unit, layout.monoid_symbol(monoid.multiply(b, t))});
        }
      }

      std::vector<std::string> generators;
      for (std::size_t i = 0; i < *tuples; ++i) {
        generators.push_back(state_names[layout.tuple_state(i, Phase::pre)]);
      }
      for (monoid_index t = 0; t < n; ++t) {
        generators.push_back(state_names[layout.monoid_state(t)]);
      }

      ConstructionOutput out{
          two_copies ? "wreath" : "wreath-initial",
          Automaton(state_names, symbol_names, std::move(table)),
          std::move(tags),
          std::move(generators),
          {{"power", std::to_string(n)},
           {"monoid-identity", state_names[unit]}},
          {},
          {}};
      if (!two_copies) {
        for (std::size_t j = 0; j < m; ++j) {
          (j < *symbol_tuples ? out.rest_symbols : out.initial_symbols)
              .push_back(symbol_names[j]);
        }
      }
      return out;
    }
  }  // namespace

  ConstructionOutput wreath_subsemigroup(Automaton const&    base,
                                         FiniteMonoid const& monoid,
                                         std::size_t         cap) {
    return build_wreath(base, monoid, cap, true);
  }

  ConstructionOutput wreath_initial_symbol(Automaton const&    base,
                                           FiniteMonoid const& monoid,
                                           std::size_t         cap) {
    return build_wreath(base, monoid, cap, false);
  }

  ConstructionOutput adjoin_identity_state(Automaton const& aut) {
    auto states = aut.state_names();
    states.push_back(fresh_name("1", aut.state_names()));
    std::vector<Transition> table(aut.table().begin(), aut.table().end());
    for (symbol_index x = 0; x < aut.alphabet_size(); ++x) {
      table.push_back({static_cast<state_index>(states.size() - 1), x});
    }
    std::vector<std::string> generators = states;
    std::string              identity   = states.back();
    return {"adjoin-identity",
            Automaton(std::move(states), *aut.alphabet(), std::move(table)),
            {},
            std::move(generators),
            {{"identity", std::move(identity)}},
            {},
            {}};
  }

}  // namespace autosg
