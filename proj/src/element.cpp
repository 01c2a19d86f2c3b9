#include "autosg/element.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "autosg/error.hpp"

namespace autosg {

  namespace {
    constexpr state_index UNDEFINED_STATE = static_cast<state_index>(-1);
  }

  InitialTransducer InitialTransducer::from(Automaton const& aut,
                                            state_index      q) {
    if (q >= aut.number_of_states()) {
      throw UsageError("state index " + std::to_string(q) + " out of range");
    }
    return {aut.alphabet(), aut.number_of_states(), aut.table(), q};
  }

  ////////////////////////////////////////////////////////////////////////
  // Element
  ////////////////////////////////////////////////////////////////////////

  Element Element::identity(std::shared_ptr<Alphabet const> alphabet) {
    std::vector<Transition> table;
    for (symbol_index x = 0; x < alphabet->size(); ++x) {
      table.push_back({0, x});
    }
    return Element(std::move(alphabet), std::move(table));
  }

  bool Element::is_identity() const noexcept {
    if (number_of_states() != 1) {
      return false;
    }
    for (symbol_index x = 0; x < _table.size(); ++x) {
      if (_table[x].output != x) {
        return false;
      }
    }
    return true;
  }

  symbol_string Element::act(std::span<symbol_index const> input) const {
    symbol_string out(input.begin(), input.end());
    state_index   q = 0;
    for (auto& x : out) {
      if (x >= alphabet_size()) {
        throw UsageError("input symbol index " + std::to_string(x)
                         + " outside the alphabet");
      }
      auto const& t = transition(q, x);
      x             = t.output;
      q             = t.target;
    }
    return out;
  }

  std::size_t Element::hash() const noexcept {
    std::size_t h = _table.size();
    for (auto const& t : _table) {
      h ^= (static_cast<std::size_t>(t.target) * 0x9e3779b97f4a7c15ULL
            + t.output + (h << 6) + (h >> 2));
    }
    return h;
  }

  bool operator==(Element const& lhs, Element const& rhs) noexcept {
    if (lhs._table != rhs._table) {
      return false;
    }
    return lhs._alphabet == rhs._alphabet || *lhs._alphabet == *rhs._alphabet;
  }

  ////////////////////////////////////////////////////////////////////////
  // Minimization
  ////////////////////////////////////////////////////////////////////////

  Element minimize(InitialTransducer const& t) {
    std::size_t const m = t.alphabet->size();
    if (t.table.size() != t.number_of_states * m) {
      throw UsageError("transducer table does not match its dimensions");
    }
    if (t.initial >= t.number_of_states) {
      throw UsageError("initial state out of range");
    }

    // Reachable states, in breadth-first order.
    std::vector<state_index> order{t.initial};
    std::vector<state_index> local(t.number_of_states, UNDEFINED_STATE);
    local[t.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (symbol_index x = 0; x < m; ++x) {
        state_index r = t.table[order[i] * m + x].target;
        if (local[r] == UNDEFINED_STATE) {
          local[r] = static_cast<state_index>(order.size());
          order.push_back(r);
        }
      }
    }
    std::size_t const n = order.size();

    // Initial partition: the one-step output function x -> y of each state.
    std::vector<state_index> block(n);
    std::size_t              blocks = 0;
    {
      std::map<std::vector<symbol_index>, state_index> ids;
      std::vector<symbol_index>                        sig(m);
      for (std::size_t i = 0; i < n; ++i) {
        for (symbol_index x = 0; x < m; ++x) {
          sig[x] = t.table[order[i] * m + x].output;
        }
        auto [it, inserted]
            = ids.emplace(sig, static_cast<state_index>(ids.size()));
        block[i] = it->second;
      }
      blocks = ids.size();
    }

    // Refine by successor blocks until the number of blocks is stable.
    std::vector<state_index> sig(m + 1);
    while (true) {
      std::map<std::vector<state_index>, state_index> ids;
      std::vector<state_index>                        next(n);
      for (std::size_t i = 0; i < n; ++i) {
        sig[0] = block[i];
        for (symbol_index x = 0; x < m; ++x) {
          sig[x + 1] = block[local[t.table[order[i] * m + x].target]];
        }
        auto [it, inserted]
            = ids.emplace(sig, static_cast<state_index>(ids.size()));
        next[i] = it->second;
      }
      block.swap(next);
      if (ids.size() == blocks) {
        break;
      }
      blocks = ids.size();
    }

    // Breadth-first renumbering of the quotient from the initial block.
    std::vector<state_index> representative(blocks, UNDEFINED_STATE);
    for (std::size_t i = n; i-- > 0;) {
      representative[block[i]] = static_cast<state_index>(i);
    }
    std::vector<state_index> number(blocks, UNDEFINED_STATE);
    std::vector<state_index> queue{block[0]};
    number[block[0]] = 0;
    std::vector<Transition> table;
    table.reserve(blocks * m);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      state_index rep = order[representative[queue[i]]];
      for (symbol_index x = 0; x < m; ++x) {
        auto const& tr = t.table[rep * m + x];
        state_index b  = block[local[tr.target]];
        if (number[b] == UNDEFINED_STATE) {
          number[b] = static_cast<state_index>(queue.size());
          queue.push_back(b);
        }
        table.push_back({number[b], tr.output});
      }
    }
    return Element(t.alphabet, std::move(table));
  }

  ////////////////////////////////////////////////////////////////////////
  // Composition and words
  ////////////////////////////////////////////////////////////////////////

  Element compose(Element const& first, Element const& second) {
    if (first.alphabet() != second.alphabet()
        && *first.alphabet() != *second.alphabet()) {
      throw UsageError("cannot compose elements over different alphabets");
    }
    std::size_t const m  = first.alphabet_size();
    std::size_t const n2 = second.number_of_states();

    // Reachable part of the pair product, built lazily from (0, 0).
    std::unordered_map<std::uint64_t, state_index> id;
    std::vector<std::pair<state_index, state_index>> pairs{{0, 0}};
    id.emplace(0, 0);
    std::vector<Transition> table;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [p, q] = pairs[i];
      for (symbol_index x = 0; x < m; ++x) {
        auto const& t1 = first.transition(p, x);
        auto const& t2 = second.transition(q, t1.output);
        std::uint64_t key
            = static_cast<std::uint64_t>(t1.target) * n2 + t2.target;
        auto [it, inserted]
            = id.emplace(key, static_cast<state_index>(pairs.size()));
        if (inserted) {
          pairs.emplace_back(t1.target, t2.target);
        }
        table.push_back({it->second, t2.output});
      }
    }
    return minimize({first.alphabet(), pairs.size(), table, 0});
  }

  Element state_element(Automaton const& aut, state_index q) {
    return minimize(InitialTransducer::from(aut, q));
  }

  Element word_to_element(Automaton const& aut, Word const& w) {
    Element result = state_element(aut, w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      result = compose(result, state_element(aut, w[i]));
    }
    return result;
  }

  std::size_t product_state_count(Automaton const& aut, Word const& w) {
    using tuple_type = std::vector<state_index>;
    std::map<tuple_type, std::size_t> seen;
    std::vector<tuple_type> queue{tuple_type(w.letters().begin(),
                                             w.letters().end())};
    for (auto q : queue.front()) {
      if (q >= aut.number_of_states()) {
        throw UsageError("word is not over the states of this automaton");
      }
    }
    seen.emplace(queue.front(), 0);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (symbol_index a = 0; a < aut.alphabet_size(); ++a) {
        tuple_type   next = queue[i];
        symbol_index x    = a;
        for (auto& q : next) {
          auto const& t = aut.transition(q, x);
          q             = t.target;
          x             = t.output;
        }
        if (seen.emplace(next, queue.size()).second) {
          queue.push_back(std::move(next));
        }
      }
    }
    return queue.size();
  }

  bool equal(Automaton const& aut, Word const& w, Word const& w2) {
    return word_to_element(aut, w) == word_to_element(aut, w2);
  }

  bool is_left_identity(Automaton const& aut, state_index l) {
    Element const el = state_element(aut, l);
    for (state_index q = 0; q < aut.number_of_states(); ++q) {
      Element const eq = state_element(aut, q);
      if (compose(el, eq) != eq) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  std::vector<EnumeratedElement> enumerate(Automaton const& aut,
                                           std::size_t      max_len,
                                           std::size_t      max_elements) {
    if (max_len == 0) {
      throw UsageError("max_len must be at least 1");
    }
    std::vector<Element> generators;
    for (state_index q = 0; q < aut.number_of_states(); ++q) {
      generators.push_back(state_element(aut, q));
    }

    std::vector<EnumeratedElement>       result;
    std::unordered_map<Element, std::size_t> seen;
    auto add = [&](Element&& e, Word&& rep) {
      if (seen.contains(e)) {
        return false;
      }
      if (result.size() == max_elements) {
        throw CapacityError("more than " + std::to_string(max_elements)
                            + " elements");
      }
      seen.emplace(e, result.size());
      result.push_back({std::move(e), std::move(rep)});
      return true;
    };

    // Elements first reached at the current length, in representative order;
    // extending them in generator order keeps the output sorted.
    std::vector<std::size_t> frontier;
    for (state_index q = 0; q < aut.number_of_states(); ++q) {
      if (add(Element(generators[q]), Word(aut, {q}))) {
        frontier.push_back(result.size() - 1);
      }
    }
    for (std::size_t len = 2; len <= max_len && !frontier.empty(); ++len) {
      std::vector<std::size_t> next;
      for (auto i : frontier) {
        for (state_index q = 0; q < aut.number_of_states(); ++q) {
          Element e   = compose(result[i].element, generators[q]);
          Word    rep = result[i].representative.concat(Word(aut, {q}));
          if (add(std::move(e), std::move(rep))) {
            next.push_back(result.size() - 1);
          }
        }
      }
      frontier.swap(next);
    }
    return result;
  }

  std::vector<std::size_t> growth(Automaton const& aut,
                                  std::size_t      max_len,
                                  std::size_t      max_elements) {
    auto                     elements = enumerate(aut, max_len, max_elements);
    std::vector<std::size_t> counts(max_len, 0);
    for (auto const& e : elements) {
      ++counts[e.representative.size() - 1];
    }
    for (std::size_t i = 1; i < max_len; ++i) {
      counts[i] += counts[i - 1];
    }
    return counts;
  }

  ////////////////////////////////////////////////////////////////////////
  // Restricted domains
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<bool> initial_mask(std::size_t                   m,
                                   std::span<symbol_index const> initial,
                                   std::span<symbol_index const> rest) {
      if (initial.empty()) {
        throw UsageError("the initial symbol set must be nonempty");
      }
      std::vector<int> count(m, 0);
      std::vector<bool> mask(m, false);
      for (auto x : initial) {
        if (x >= m) {
          throw UsageError("initial symbol outside the alphabet");
        }
        ++count[x];
        mask[x] = true;
      }
      for (auto x : rest) {
        if (x >= m) {
          throw UsageError("rest symbol outside the alphabet");
        }
        ++count[x];
      }
      for (std::size_t x = 0; x < m; ++x) {
        if (count[x] != 1) {
          throw UsageError("initial and rest symbols must partition the "
                           "alphabet");
        }
      }
      return mask;
    }
  }  // namespace

  Element restrict_element(Element const&                e,
                           std::span<symbol_index const> initial_symbols,
                           std::span<symbol_index const> rest_symbols) {
    std::size_t const m = e.alphabet_size();
    auto mask = initial_mask(m, initial_symbols, rest_symbols);

    // State 0 is a fresh copy of the initial state, e's states follow at
    // offset 1, and the sink comes last.
    std::size_t const n    = e.number_of_states();
    auto const        sink = static_cast<state_index>(n + 1);
    std::vector<Transition> table;
    table.reserve((n + 2) * m);
    for (std::size_t q = 0; q <= n + 1; ++q) {
      for (symbol_index x = 0; x < m; ++x) {
        bool const in_domain = q == 0 ? mask[x] : (q <= n && !mask[x]);
        if (!in_domain) {
          table.push_back({sink, 0});
          continue;
        }
        auto const& t = e.transition(q == 0 ? 0 : q - 1, x);
        table.push_back({t.target + 1, t.output});
      }
    }
    return minimize({e.alphabet(), n + 2, table, 0});
  }

  bool restricted_equal(Automaton const&              aut,
                        Word const&                   w,
                        Word const&                   w2,
                        std::span<symbol_index const> initial_symbols,
                        std::span<symbol_index const> rest_symbols) {
    initial_mask(aut.alphabet_size(), initial_symbols, rest_symbols);
    return restrict_element(word_to_element(aut, w),
                            initial_symbols,
                            rest_symbols)
           == restrict_element(word_to_element(aut, w2),
                               initial_symbols,
                               rest_symbols);
  }

}  // namespace autosg
