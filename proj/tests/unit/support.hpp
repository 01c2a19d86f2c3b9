#ifndef AUTOSG_TESTS_SUPPORT_HPP_
#define AUTOSG_TESTS_SUPPORT_HPP_

// Fixtures and reference computations shared by the tests.  Everything here
// works directly on transition tables so that it does not depend on the
// library code under test.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "autosg/automaton.hpp"
#include "autosg/text_format.hpp"

namespace support {

  using autosg::Automaton;
  using autosg::state_index;
  using autosg::symbol_index;
  using autosg::symbol_string;

  inline std::string data_path(std::string const& name) {
    return std::string(AUTOSG_TEST_DATA) + "/" + name;
  }

  inline autosg::AutomatonDocument load_document(std::string const& name) {
    return autosg::load_automaton(data_path(name));
  }

  inline Automaton load(std::string const& name) {
    return load_document(name).content.automaton;
  }

  inline autosg::FiniteMonoid load_monoid(std::string const& name) {
    return autosg::load_monoid(data_path(name));
  }

  // Reads the table one transition at a time.
  inline symbol_string naive_act(Automaton const&                aut,
                                 std::vector<state_index> const& word,
                                 symbol_string                   input) {
    for (auto q : word) {
      for (auto& x : input) {
        auto const t = aut.table()[q * aut.alphabet_size() + x];
        x            = t.output;
        q            = t.target;
      }
    }
    return input;
  }

  // Every string of length n, in lexicographic order.
  inline std::vector<symbol_string> all_strings(std::size_t alphabet_size,
                                                std::size_t n) {
    std::vector<symbol_string> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<symbol_string> next;
      for (auto const& s : out) {
        for (symbol_index x = 0; x < alphabet_size; ++x) {
          auto t = s;
          t.push_back(x);
          next.push_back(std::move(t));
        }
      }
      out.swap(next);
    }
    return out;
  }

  // Whether the two words act identically on all strings of length n.
  inline bool naive_equal_at(Automaton const&                aut,
                             std::vector<state_index> const& w,
                             std::vector<state_index> const& w2,
                             std::size_t                     n) {
    for (auto const& s : all_strings(aut.alphabet_size(), n)) {
      if (naive_act(aut, w, s) != naive_act(aut, w2, s)) {
        return false;
      }
    }
    return true;
  }

  // The words over `letters` of length 1..max_len in (length, lex) order.
  inline std::vector<std::vector<state_index>>
  all_words(std::vector<state_index> const& letters, std::size_t max_len) {
    std::vector<std::vector<state_index>> out, level{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<std::vector<state_index>> next;
      for (auto const& p : level) {
        for (auto q : letters) {
          auto w = p;
          w.push_back(q);
          out.push_back(w);
          next.push_back(std::move(w));
        }
      }
      level.swap(next);
    }
    return out;
  }

  inline std::vector<state_index> all_states(Automaton const& aut) {
    std::vector<state_index> out;
    for (state_index q = 0; q < aut.number_of_states(); ++q) {
      out.push_back(q);
    }
    return out;
  }

  inline Automaton random_automaton(std::mt19937_64& rng,
                                    std::size_t      max_states,
                                    std::size_t      max_symbols) {
    std::uniform_int_distribution<std::size_t> ns(1, max_states);
    std::uniform_int_distribution<std::size_t> nb(1, max_symbols);
    std::size_t const          n = ns(rng);
    std::size_t const          b = nb(rng);
    std::vector<std::string>   states, symbols;
    for (std::size_t i = 0; i < n; ++i) {
      states.push_back("q" + std::to_string(i));
    }
    for (std::size_t i = 0; i < b; ++i) {
      symbols.push_back(std::to_string(i));
    }
    std::uniform_int_distribution<state_index>  target(0, n - 1);
    std::uniform_int_distribution<symbol_index> output(0, b - 1);
    std::vector<autosg::Transition>             table;
    for (std::size_t i = 0; i < n * b; ++i) {
      table.push_back({target(rng), output(rng)});
    }
    return Automaton(std::move(states), std::move(symbols), std::move(table));
  }

  inline std::vector<state_index> random_word(std::mt19937_64&  rng,
                                              Automaton const& aut,
                                              std::size_t      max_len) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<state_index>  letter(
        0, aut.number_of_states() - 1);
    std::vector<state_index> w(len(rng));
    for (auto& q : w) {
      q = letter(rng);
    }
    return w;
  }

  // The synchronous product of the composed products of w and w2: a joint
  // state is the tuple of w's states followed by the tuple of w2's states.
  // targets[j * |B| + x] and outputs (one pair per transition) are indexed
  // by joint states numbered in discovery order from the start.
  struct JointProduct {
    std::vector<std::size_t>                                targets;
    std::vector<std::pair<symbol_index, symbol_index>> outputs;
    std::size_t                                             size = 0;
  };

  inline JointProduct joint_product(Automaton const&                aut,
                                    std::vector<state_index> const& w,
                                    std::vector<state_index> const& w2) {
    using key = std::vector<state_index>;
    std::map<key, std::size_t> index;
    std::vector<key>           order;
    key                        start = w;
    start.insert(start.end(), w2.begin(), w2.end());
    index.emplace(start, 0);
    order.push_back(start);
    JointProduct jp;
    for (std::size_t j = 0; j < order.size(); ++j) {
      for (symbol_index x = 0; x < aut.alphabet_size(); ++x) {
        key const    cur  = order[j];
        key          next = cur;
        symbol_index a    = x;
        for (std::size_t i = 0; i < w.size(); ++i) {
          auto const t = aut.table()[cur[i] * aut.alphabet_size() + a];
          next[i]      = t.target;
          a            = t.output;
        }
        symbol_index b = x;
        for (std::size_t i = w.size(); i < cur.size(); ++i) {
          auto const t = aut.table()[cur[i] * aut.alphabet_size() + b];
          next[i]      = t.target;
          b            = t.output;
        }
        auto [it, fresh] = index.emplace(next, order.size());
        if (fresh) {
          order.push_back(next);
        }
        jp.targets.push_back(it->second);
        jp.outputs.emplace_back(a, b);
      }
    }
    jp.size = order.size();
    return jp;
  }

  // Number of classes of joint states with the same future output pairs,
  // by naive iterated refinement.  A shortest string on which w and w2
  // differ visits pairwise inequivalent joint states, so its length is at
  // most this number.
  inline std::size_t joint_product_classes(Automaton const&                aut,
                                           std::vector<state_index> const& w,
                                           std::vector<state_index> const& w2) {
    auto const               jp = joint_product(aut, w, w2);
    std::size_t const        b  = aut.alphabet_size();
    std::vector<std::size_t> cls(jp.size, 0);
    std::size_t              count = 1;
    while (true) {
      using signature = std::vector<std::size_t>;
      std::map<signature, std::size_t> ids;
      std::vector<std::size_t>         next(jp.size);
      for (std::size_t j = 0; j < jp.size; ++j) {
        signature sig{cls[j]};
        for (std::size_t x = 0; x < b; ++x) {
          auto const [o1, o2] = jp.outputs[j * b + x];
          sig.push_back(o1);
          sig.push_back(o2);
          sig.push_back(cls[jp.targets[j * b + x]]);
        }
        next[j] = ids.emplace(sig, ids.size()).first->second;
      }
      cls.swap(next);
      if (ids.size() == count) {
        return count;
      }
      count = ids.size();
    }
  }

  // Number of distinct elements of the free product of two one-element
  // semigroups (with an identity adjoined when `with_identity`) given by
  // words of length <= n: words over the generators with identity letters
  // dropped and repeated factor letters merged.
  inline std::size_t trivial_free_product_count(std::size_t n,
                                                bool        with_identity) {
    std::vector<state_index> letters{0, 1};
    if (with_identity) {
      letters.push_back(2);
    }
    std::set<std::vector<state_index>> reduced;
    for (auto const& w : all_words(letters, n)) {
      std::vector<state_index> r;
      for (auto q : w) {
        if (q != 2 && (r.empty() || r.back() != q)) {
          r.push_back(q);
        }
      }
      reduced.insert(r);
    }
    return reduced.size();
  }

}  // namespace support

#endif  // AUTOSG_TESTS_SUPPORT_HPP_
