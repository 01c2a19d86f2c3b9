#include "autosg/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "autosg/error.hpp"
#include "autosg/names.hpp"
#include "autosg/oracles.hpp"

namespace autosg {

  namespace {
    // All words of length 1..max_len over `letters`, shortest first, then
    // lexicographically by position in `letters`.
    std::vector<Word> words_over(Automaton const&                aut,
                                 std::vector<state_index> const& letters,
                                 std::size_t                     max_len) {
      std::vector<Word> result;
      if (letters.empty()) {
        return result;
      }
      std::vector<std::vector<state_index>> level{{}};
      for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<state_index>> next;
        for (auto const& prefix : level) {
          for (auto q : letters) {
            auto w = prefix;
            w.push_back(q);
            result.emplace_back(aut, w);
            next.push_back(std::move(w));
          }
        }
        level.swap(next);
      }
      return result;
    }

    std::vector<state_index> generator_states(ConstructionOutput const& out) {
      std::vector<state_index> result;
      for (auto const& name : out.generators) {
        result.push_back(out.automaton.state(name));
      }
      return result;
    }

    template <typename T, typename Hash = std::hash<T>>
    class ClassIds {
     public:
      std::size_t operator()(T const& value) {
        return _ids.emplace(value, _ids.size()).first->second;
      }

      std::size_t size() const {
        return _ids.size();
      }

     private:
      std::unordered_map<T, std::size_t, Hash> _ids;
    };

    struct WreathHash {
      std::size_t operator()(WreathElement const& w) const noexcept {
        std::size_t h = w.top;
        for (auto const& e : w.tuple) {
          h = h * 1000003u ^ e.hash();
        }
        return h;
      }
    };

    // Whether two labellings of the same words induce the same partition.
    // Returns a check describing the first disagreeing pair, if any.
    Check same_partition(std::string                     description,
                         Automaton const&                aut,
                         std::vector<Word> const&        words,
                         std::vector<std::size_t> const& lhs,
                         std::vector<std::size_t> const& rhs,
                         std::string_view                lhs_name,
                         std::string_view                rhs_name) {
      std::unordered_map<std::size_t, std::size_t> forward, backward;
      for (std::size_t i = 0; i < words.size(); ++i) {
        auto [f, fnew] = forward.emplace(lhs[i], i);
        auto [b, bnew] = backward.emplace(rhs[i], i);
        std::size_t other = 0;
        if (!fnew && rhs[f->second] != rhs[i]) {
          other = f->second;
        } else if (!bnew && lhs[b->second] != lhs[i]) {
          other = b->second;
        } else {
          continue;
        }
        bool const lhs_equal = lhs[other] == lhs[i];
        return {std::move(description),
                false,
                words[other].to_string(aut) + " and " + words[i].to_string(aut)
                    + " are " + (lhs_equal ? "equal" : "different") + " in "
                    + std::string(lhs_name) + " but "
                    + (lhs_equal ? "different" : "equal") + " in "
                    + std::string(rhs_name)};
      }
      std::size_t classes = forward.size();
      return {std::move(description),
              true,
              std::to_string(words.size()) + " words, "
                  + std::to_string(classes) + " classes"};
    }

    std::string format(Automaton const& aut, symbol_string const& s) {
      return format_symbols(*aut.alphabet(), s);
    }

    // All strings over `symbols` of length exactly n.
    std::vector<symbol_string> strings_over(std::vector<symbol_index> const& symbols,
                                            std::size_t                      n) {
      std::vector<symbol_string> level{{}};
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<symbol_string> next;
        for (auto const& s : level) {
          for (auto x : symbols) {
            auto t = s;
            t.push_back(x);
            next.push_back(std::move(t));
          }
        }
        level.swap(next);
      }
      return level;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  bool VerifyReport::passed() const {
    for (auto const& c : checks) {
      if (!c.passed) {
        return false;
      }
    }
    return true;
  }

  std::string VerifyReport::to_text() const {
    std::ostringstream os;
    std::size_t        failures = 0;
    for (auto const& c : checks) {
      os << (c.passed ? "PASS  " : "FAIL  ") << c.description;
      if (!c.detail.empty()) {
        os << ": " << c.detail;
      }
      os << '\n';
      failures += c.passed ? 0 : 1;
    }
    os << suite << ": " << checks.size() - failures << "/" << checks.size()
       << " checks passed\n";
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Suites
  ////////////////////////////////////////////////////////////////////////

  VerifyReport verify_left_identity(ConstructionOutput const& out,
                                    state_index               l) {
    VerifyReport report{"left-identity", {}};
    auto const&  aut  = out.automaton;
    std::string const name = aut.state_name(l);
    Element const     el   = state_element(aut, l);

    // In a free product the designated state only has to be a left identity
    // for the states of its own factor.
    std::vector<state_index> scope(aut.number_of_states());
    std::iota(scope.begin(), scope.end(), state_index{0});
    if (out.note("left-states") && out.note("right-states")) {
      for (auto side : {Factor::left, Factor::right}) {
        auto const states = factor_states(out, side);
        if (std::find(states.begin(), states.end(), l) != states.end()) {
          scope = states;
        }
      }
    }
    for (state_index q : scope) {
      Element const eq = state_element(aut, q);
      bool const    ok = compose(el, eq) == eq;
      report.checks.push_back({name + "," + aut.state_name(q) + " = "
                                   + aut.state_name(q),
                               ok,
                               ""});
    }
    report.checks.push_back(
        {name + "," + name + " = " + name + " (idempotent)",
         compose(el, el) == el,
         ""});
    return report;
  }

  VerifyReport verify_left_identity(Automaton const& aut, state_index l) {
    return verify_left_identity(plain(aut), l);
  }

  VerifyReport verify_marked_absorption(ConstructionOutput const& fp) {
    VerifyReport report{"marked-absorption", {}};
    if (fp.tags.empty()) {
      throw UsageError("automaton carries no symbol tags");
    }
    using Kind = SymbolTag::Kind;
    auto const& aut = fp.automaton;
    for (symbol_index x = 0; x < aut.alphabet_size(); ++x) {
      auto kind = fp.tags[x].kind;
      if (kind != Kind::marked_left && kind != Kind::marked_right
          && kind != Kind::dollar_marked && kind != Kind::hash_marked) {
        continue;
      }
      std::string bad;
      for (state_index q = 0; q < aut.number_of_states(); ++q) {
        auto const& t = aut.transition(q, x);
        if (t.target != q || t.output != x) {
          bad += (bad.empty() ? "" : ",") + aut.state_name(q);
        }
      }
      report.checks.push_back({"every state fixes " + aut.symbol_name(x),
                               bad.empty(),
                               bad.empty() ? "" : "moved by " + bad});
    }
    if (report.checks.empty()) {
      throw UsageError("automaton has no marked symbols");
    }
    return report;
  }

  VerifyReport verify_factor_embedding(ConstructionOutput const& fp,
                                       Factor                    side,
                                       Automaton const&          factor,
                                       std::size_t               max_len) {
    VerifyReport report{"factor-embedding", {}};
    auto const states = factor_states(fp, side);
    if (states.size() != factor.number_of_states()) {
      throw UsageError("factor automaton does not match the free product");
    }
    std::vector<state_index> local(states.size());
    for (std::size_t i = 0; i < local.size(); ++i) {
      local[i] = static_cast<state_index>(i);
    }
    auto const        words = words_over(fp.automaton, states, max_len);
    ClassIds<Element> in_product, in_factor;
    std::vector<std::size_t> lhs, rhs;
    for (auto const& w : words) {
      lhs.push_back(in_product(word_to_element(fp.automaton, w)));
      std::vector<state_index> letters;
      for (auto q : w.letters()) {
        letters.push_back(static_cast<state_index>(
            std::find(states.begin(), states.end(), q) - states.begin()));
      }
      rhs.push_back(in_factor(word_to_element(factor, Word(factor, letters))));
    }
    std::string const which = side == Factor::left ? "left" : "right";
    report.checks.push_back(
        same_partition(which + " factor words of length <= "
                           + std::to_string(max_len),
                       fp.automaton,
                       words,
                       lhs,
                       rhs,
                       "the free product",
                       "the factor"));
    return report;
  }

  VerifyReport verify_factor_embedding(ConstructionOutput const& fp,
                                       std::size_t               max_len) {
    VerifyReport report{"factor-embedding", {}};
    for (auto side : {Factor::left, Factor::right}) {
      auto part = verify_factor_embedding(
          fp, side, factor_automaton(fp, side), max_len);
      report.checks.insert(
          report.checks.end(), part.checks.begin(), part.checks.end());
    }
    return report;
  }

  VerifyReport verify_xw_yw(ConstructionOutput const& fp, std::size_t max_k) {
    VerifyReport            report{"xw-yw", {}};
    FreeProductOracle const oracle(fp);
    auto const              words
        = words_over(fp.automaton, generator_states(fp), 2 * max_k + 1);
    std::vector<std::size_t> checked(2 * max_k + 2, 0);
    std::vector<std::string> failures(2 * max_k + 2);
    for (auto const& w : words) {
      auto r = check_xw_yw(fp, oracle, w, max_k);
      if (!r.checked) {
        continue;
      }
      ++checked[r.reduced_length];
      if (!r.passed() && failures[r.reduced_length].empty()) {
        auto const& aut = fp.automaton;
        failures[r.reduced_length]
            = "w=" + w.to_string(aut) + " x: expected "
              + format(aut, r.expected_x) + " got " + format(aut, r.actual_x)
              + "; y: expected " + format(aut, r.expected_y) + " got "
              + format(aut, r.actual_y);
      }
    }
    for (std::size_t len = 1; len < checked.size(); ++len) {
      report.checks.push_back(
          {"x_w and y_w for reduced length " + std::to_string(len),
           failures[len].empty(),
           failures[len].empty()
               ? std::to_string(checked[len]) + " words"
               : failures[len]});
    }
    return report;
  }

  namespace {
    VerifyReport wreath_suite(std::string              name,
                              Automaton const&         base,
                              FiniteMonoid const&      monoid,
                              std::size_t              max_len,
                              bool                     two_copies) {
      VerifyReport report{std::move(name), {}};
      auto const   out = two_copies ? wreath_subsemigroup(base, monoid)
                                    : wreath_initial_symbol(base, monoid);
      auto const&  aut = out.automaton;
      WreathOracle const oracle(base, monoid, two_copies);
      auto const words = words_over(aut, generator_states(out), max_len);

      std::vector<symbol_index> initial, rest;
      for (auto const& s : out.initial_symbols) {
        initial.push_back(aut.symbol(s));
      }
      for (auto const& s : out.rest_symbols) {
        rest.push_back(aut.symbol(s));
      }

      ClassIds<Element>                   full, restricted;
      ClassIds<WreathElement, WreathHash> arithmetic;
      std::vector<std::size_t>            by_full, by_restricted, by_oracle;
      for (auto const& w : words) {
        Element e = word_to_element(aut, w);
        by_oracle.push_back(arithmetic(oracle.value(w)));
        if (!two_copies) {
          by_restricted.push_back(
              restricted(restrict_element(e, initial, rest)));
        }
        by_full.push_back(full(std::move(e)));
      }
      std::string const scope
          = "generator words of length <= " + std::to_string(max_len);
      if (two_copies) {
        report.checks.push_back(same_partition("equality of " + scope,
                                               aut,
                                               words,
                                               by_full,
                                               by_oracle,
                                               "the automaton semigroup",
                                               "the wreath product"));
      } else {
        report.checks.push_back(
            same_partition("restricted equality of " + scope,
                           aut,
                           words,
                           by_restricted,
                           by_oracle,
                           "the restricted action",
                           "the wreath product"));
        auto info = same_partition("unrestricted equality of " + scope,
                                   aut,
                                   words,
                                   by_full,
                                   by_oracle,
                                   "the unrestricted action",
                                   "the wreath product");
        report.checks.push_back(
            {"unrestricted equality (informational)",
             true,
             std::to_string(full.size()) + " unrestricted classes vs "
                 + std::to_string(arithmetic.size()) + " wreath classes"
                 + (info.passed ? "" : "; " + info.detail)});
      }

      // Monoid states: b alpha . t = (bt) alpha.
      WreathLayout const layout(base.number_of_states(),
                                base.alphabet_size(),
                                monoid.size(),
                                two_copies);
      std::vector<symbol_index> tuple_symbols;
      for (std::size_t j = 0; j < layout.symbol_tuple_count(); ++j) {
        tuple_symbols.push_back(static_cast<symbol_index>(j));
      }
      std::string bad;
      std::size_t count = 0;
      for (std::size_t len = 0; len <= 3; ++len) {
        for (auto const& alpha : strings_over(tuple_symbols, len)) {
          for (monoid_index t = 0; t < monoid.size(); ++t) {
            for (monoid_index b = 0; b < monoid.size(); ++b) {
              symbol_string in{layout.monoid_symbol(b)};
              in.insert(in.end(), alpha.begin(), alpha.end());
              symbol_string expected = in;
              expected[0] = layout.monoid_symbol(monoid.multiply(b, t));
              ++count;
              if (act(aut, layout.monoid_state(t), in) != expected
                  && bad.empty()) {
                bad = "fails for t=" + monoid.name(t) + " on "
                      + format(aut, in);
              }
            }
          }
        }
      }
      report.checks.push_back({"b alpha . t = (bt) alpha for |alpha| <= 3",
                               bad.empty(),
                               bad.empty() ? std::to_string(count) + " cases"
                                           : bad});

      // Tuple states: b alpha . q = b (alpha . q^b), q^b acting
      // componentwise.
      bad.clear();
      count = 0;
      for (std::size_t i = 0; i < layout.tuple_count(); ++i) {
        state_index const q     = layout.tuple_state(i);
        auto const        tuple = *layout.tuple_of_state(q);
        for (monoid_index b = 0; b < monoid.size(); ++b) {
          auto const moved = reindex_tuple(tuple, b, monoid).entries;
          for (std::size_t len = 0; len <= 2; ++len) {
            for (auto const& alpha : strings_over(tuple_symbols, len)) {
              symbol_string in{layout.monoid_symbol(b)};
              in.insert(in.end(), alpha.begin(), alpha.end());
              // Expected: act componentwise with the base automaton.
              symbol_string expected{layout.monoid_symbol(b)};
              std::vector<std::vector<std::uint32_t>> columns;
              std::vector<state_index> states(moved.begin(), moved.end());
              for (auto x : alpha) {
                auto comps = layout.decode(x, base.alphabet_size());
                for (std::size_t k = 0; k < comps.size(); ++k) {
                  auto const& tr = base.transition(states[k], comps[k]);
                  states[k]      = tr.target;
                  comps[k]       = tr.output;
                }
                expected.push_back(static_cast<symbol_index>(
                    layout.encode(comps, base.alphabet_size())));
              }
              ++count;
              if (act(aut, q, in) != expected && bad.empty()) {
                bad = "fails for " + aut.state_name(q) + " on "
                      + format(aut, in);
              }
            }
          }
        }
      }
      report.checks.push_back(
          {"b alpha . q = b (alpha . q^b) for |alpha| <= 2",
           bad.empty(),
           bad.empty() ? std::to_string(count) + " cases" : bad});
      return report;
    }
  }  // namespace

  VerifyReport verify_wreath_oracle(Automaton const&    base,
                                    FiniteMonoid const& monoid,
                                    std::size_t         max_len) {
    return wreath_suite("wreath-oracle", base, monoid, max_len, true);
  }

  VerifyReport verify_initial_symbol_oracle(Automaton const&    base,
                                            FiniteMonoid const& monoid,
                                            std::size_t         max_len) {
    return wreath_suite("initial-symbol-oracle", base, monoid, max_len, false);
  }

  VerifyReport verify_tree_endomorphism(Automaton const& aut,
                                        std::size_t      depth) {
    VerifyReport report{"tree-endomorphism", {}};
    auto check_word = [&](Word const& w, std::size_t max_depth) {
      std::string bad;
      LevelTable  previous = act_on_level(aut, w, 0);
      for (std::size_t n = 1; n <= max_depth && bad.empty(); ++n) {
        LevelTable table = act_on_level(aut, w, n);
        for (std::size_t i = 0; i < table.size() && bad.empty(); ++i) {
          auto image = table.image(i);
          auto up    = previous.image(i / aut.alphabet_size());
          if (image.size() != n) {
            bad = "length changes on " + format(aut, table.source(i));
          } else if (!std::equal(up.begin(), up.end(), image.begin())) {
            bad = "prefix not preserved on " + format(aut, table.source(i));
          }
        }
        previous = std::move(table);
      }
      return bad;
    };
    std::string bad;
    for (state_index q = 0; q < aut.number_of_states() && bad.empty(); ++q) {
      bad = check_word(Word(aut, {q}), depth);
      if (!bad.empty()) {
        bad = aut.state_name(q) + ": " + bad;
      }
    }
    report.checks.push_back(
        {"states preserve length and prefixes up to depth "
             + std::to_string(depth),
         bad.empty(),
         bad});
    bad.clear();
    std::size_t const pair_depth = depth == 0 ? 0 : depth - 1;
    for (state_index p = 0; p < aut.number_of_states() && bad.empty(); ++p) {
      for (state_index q = 0; q < aut.number_of_states() && bad.empty(); ++q) {
        Word const w(aut, {p, q});
        bad = check_word(w, pair_depth);
        if (!bad.empty()) {
          bad = w.to_string(aut) + ": " + bad;
        }
      }
    }
    report.checks.push_back(
        {"two-letter words preserve length and prefixes up to depth "
             + std::to_string(pair_depth),
         bad.empty(),
         bad});
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dispatch
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string_view> suite_names() {
    return {"left-identity",
            "marked-absorption",
            "factor-embedding",
            "xw-yw",
            "wreath-oracle",
            "initial-symbol-oracle"};
  }

  VerifyReport run_suite(std::string_view name, SuiteInputs const& in) {
    auto need_automaton = [&]() -> ConstructionOutput const& {
      if (!in.automaton) {
        throw UsageError("suite \"" + std::string(name)
                         + "\" needs an automaton");
      }
      return *in.automaton;
    };
    auto need_base = [&]() -> std::pair<Automaton const&, FiniteMonoid const&> {
      if (!in.base || !in.monoid) {
        throw UsageError("suite \"" + std::string(name)
                         + "\" needs a base automaton and a monoid");
      }
      return {*in.base, *in.monoid};
    };
    if (name == "left-identity") {
      auto const& out = need_automaton();
      if (!in.state) {
        throw UsageError("suite \"left-identity\" needs a state");
      }
      return verify_left_identity(out, out.automaton.state(*in.state));
    }
    if (name == "marked-absorption") {
      return verify_marked_absorption(need_automaton());
    }
    if (name == "factor-embedding") {
      return verify_factor_embedding(need_automaton(), in.max_len);
    }
    if (name == "xw-yw") {
      return verify_xw_yw(need_automaton(), in.max_k);
    }
    if (name == "wreath-oracle") {
      auto [base, monoid] = need_base();
      return verify_wreath_oracle(base, monoid, in.max_len);
    }
    if (name == "initial-symbol-oracle") {
      auto [base, monoid] = need_base();
      return verify_initial_symbol_oracle(base, monoid, in.max_len);
    }
    throw UsageError("unknown suite \"" + std::string(name) + "\"; expected "
                     "one of left-identity, marked-absorption, "
                     "factor-embedding, xw-yw, wreath-oracle, "
                     "initial-symbol-oracle");
  }

}  // namespace autosg
