// Acceptance suite: one PASS/FAIL line per criterion.  Reference values are
// computed here, from transition tables and hand-written arithmetic, and
// compared with the library.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <tuple>
#include <vector>

#include "autosg/constructions.hpp"
#include "autosg/element.hpp"
#include "autosg/error.hpp"
#include "autosg/names.hpp"
#include "autosg/oracles.hpp"
#include "autosg/verify.hpp"
#include "support.hpp"

using namespace autosg;
using support::all_states;
using support::all_words;

namespace {

  struct Outcome {
    bool        passed;
    std::string detail;
  };

  int failures = 0;

  void report(int number, std::string const& title, std::function<Outcome()> run) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = run();
    } catch (std::exception const& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (!out.passed) {
      ++failures;
    }
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2fs", secs);
    std::cout << (out.passed ? "PASS" : "FAIL") << "  criterion " << number
              << ": " << title << " (" << out.detail << "; " << timing << ")"
              << std::endl;
  }

  std::string words_text(Automaton const& aut, std::vector<state_index> const& w) {
    return Word(aut, w).to_string(aut);
  }

  // Classes of `words` under `key`, as one id per word.
  template <typename Key, typename Hash = std::hash<Key>>
  std::vector<std::size_t> classes(std::size_t count,
                                   std::function<Key(std::size_t)> key) {
    std::unordered_map<Key, std::size_t, Hash> ids;
    std::vector<std::size_t>                   out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(ids.emplace(key(i), ids.size()).first->second);
    }
    return out;
  }

  // Index of the first word whose partner in `lhs` and `rhs` disagree, or
  // nullopt when the two labellings give the same partition.
  std::optional<std::pair<std::size_t, std::size_t>>
  partition_mismatch(std::vector<std::size_t> const& lhs,
                     std::vector<std::size_t> const& rhs) {
    std::map<std::size_t, std::size_t> first_l, first_r;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      auto [l, lnew] = first_l.emplace(lhs[i], i);
      auto [r, rnew] = first_r.emplace(rhs[i], i);
      if (!lnew && rhs[l->second] != rhs[i]) {
        return std::pair{l->second, i};
      }
      if (!rnew && lhs[r->second] != lhs[i]) {
        return std::pair{r->second, i};
      }
    }
    return std::nullopt;
  }

  std::size_t class_count(std::vector<std::size_t> const& ids) {
    return std::set<std::size_t>(ids.begin(), ids.end()).size();
  }

  ////////////////////////////////////////////////////////////////////////
  // Fixtures
  ////////////////////////////////////////////////////////////////////////

  Automaton const& adding() {
    static Automaton const a = support::load("adding.aut");
    return a;
  }

  Automaton const& c2swap() {
    static Automaton const a = support::load("c2swap.aut");
    return a;
  }

  Automaton const& triv() {
    static Automaton const a = support::load("triv.aut");
    return a;
  }

  FiniteMonoid const& c2() {
    static FiniteMonoid const m = support::load_monoid("c2.mon");
    return m;
  }

  ConstructionOutput const& fp_trivial() {
    static ConstructionOutput const out
        = free_product(triv(), 0, triv(), 0);
    return out;
  }

  ConstructionOutput const& fp_naturals_c2() {
    static ConstructionOutput const out = free_product(
        adding(), adding().state("e"), c2swap(), c2swap().state("1"));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reference values
  ////////////////////////////////////////////////////////////////////////

  // Factor of each state of a free product, read from the names the
  // construction gives to the factor states.
  std::vector<int> factor_labels(ConstructionOutput const& fp) {
    auto const left  = split_top_level(*fp.note("left-states"));
    auto const right = split_top_level(*fp.note("right-states"));
    std::vector<int> out(fp.automaton.number_of_states(), -1);
    for (auto const& n : left) {
      out[fp.automaton.state(n)] = 0;
    }
    for (auto const& n : right) {
      out[fp.automaton.state(n)] = 1;
    }
    return out;
  }

  // Number of maximal same-factor blocks of w.
  std::size_t reduced_length(std::vector<int> const&        labels,
                             std::vector<state_index> const& w) {
    std::size_t blocks = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
      blocks += labels[w[i]] != labels[w[i - 1]] ? 1 : 0;
    }
    return blocks;
  }

  std::string repeat(std::string const& s, std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
      out += s;
    }
    return out;
  }

  // Cuts a string of symbol names to `length` symbols; each symbol here is
  // one of "$", "#", "$°", "#°".
  std::vector<std::string> tokens(std::string const& text) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < text.size();) {
      std::size_t len = 1;
      if (text.compare(i + 1, std::string("°").size(), "°") == 0) {
        len += std::string("°").size();
      }
      out.push_back(text.substr(i, len));
      i += len;
    }
    return out;
  }

  std::string closed_form(std::string const& prefix,
                          std::string const& period,
                          std::size_t        length) {
    auto out = tokens(prefix);
    auto p   = tokens(period);
    while (out.size() < length) {
      out.insert(out.end(), p.begin(), p.end());
    }
    out.resize(length);
    std::string s;
    for (auto const& t : out) {
      s += t;
    }
    return s;
  }

  std::string swap_dollar_hash(std::string const& s) {
    std::string out;
    for (char c : s) {
      out += c == '$' ? '#' : c == '#' ? '$' : c;
    }
    return out;
  }

  // x_w and y_w for words starting in the first factor, as displayed.
  std::pair<std::string, std::string> left_forms(std::size_t ell,
                                                 std::size_t length) {
    std::size_t const k = ell / 2;
    if (ell % 2 == 0) {
      return {closed_form(repeat("$°#°", k - 1) + "$°", "#$", length),
              closed_form(repeat("#°$°", k), "#$", length)};
    }
    return {closed_form(repeat("$°#°", k), "$#", length),
            closed_form(repeat("#°$°", k) + "#°", "$#", length)};
  }

  // Elements of N0 wr T with N0 acting through the adding machine: entry
  // f(t) counts additions of one.
  struct NaturalsWreath {
    std::vector<unsigned> f;
    monoid_index          top;

    bool operator==(NaturalsWreath const&) const = default;
  };

  struct NaturalsWreathHash {
    std::size_t operator()(NaturalsWreath const& x) const {
      std::size_t h = x.top;
      for (auto v : x.f) {
        h = h * 131 + v;
      }
      return h;
    }
  };

  NaturalsWreath multiply(NaturalsWreath const& x,
                          NaturalsWreath const& y,
                          FiniteMonoid const&   m) {
    NaturalsWreath out{std::vector<unsigned>(m.size()),
                       m.multiply(x.top, y.top)};
    for (monoid_index i = 0; i < m.size(); ++i) {
      out.f[i] = x.f[i] + y.f[m.multiply(i, x.top)];
    }
    return out;
  }

  // Value of a generator of a wreath construction over the adding machine,
  // read from its state name: "(q1,...,qn)" with an optional phase suffix,
  // or "t:m".
  NaturalsWreath generator_value(std::string const& name, FiniteMonoid const& m) {
    if (name.rfind("t:", 0) == 0) {
      return {std::vector<unsigned>(m.size(), 0), *m.find(name.substr(2))};
    }
    std::string body = name.substr(1, name.find(')') - 1);
    NaturalsWreath out{{}, m.identity()};
    for (auto const& q : split_top_level(body)) {
      out.f.push_back(q == "σ" ? 1 : 0);
    }
    return out;
  }

  NaturalsWreath word_value(Automaton const&                aut,
                            std::vector<state_index> const& w,
                            FiniteMonoid const&             m) {
    NaturalsWreath v = generator_value(aut.state_name(w[0]), m);
    for (std::size_t i = 1; i < w.size(); ++i) {
      v = multiply(v, generator_value(aut.state_name(w[i]), m), m);
    }
    return v;
  }

  std::vector<state_index> generator_indices(ConstructionOutput const& out) {
    std::vector<state_index> g;
    for (auto const& n : out.generators) {
      g.push_back(out.automaton.state(n));
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Criteria
  ////////////////////////////////////////////////////////////////////////

  Outcome criterion_1() {
    std::mt19937_64 rng(20261019);
    std::size_t     mismatches = 0, equal_pairs = 0, max_depth = 0;
    std::string     first;
    for (int i = 0; i < 1000; ++i) {
      Automaton const aut = support::random_automaton(rng, 4, 3);
      auto const      w   = support::random_word(rng, aut, 4);
      auto const      w2  = support::random_word(rng, aut, 4);
      std::size_t const depth = support::joint_product_classes(aut, w, w2);
      max_depth               = std::max(max_depth, depth);
      bool const fast = equal(aut, Word(aut, w), Word(aut, w2));
      bool const slow = brute_equal(aut, Word(aut, w), Word(aut, w2), depth);
      equal_pairs += fast ? 1 : 0;
      if (fast != slow) {
        if (first.empty()) {
          first = "instance " + std::to_string(i) + ": "
                  + words_text(aut, w) + " vs " + words_text(aut, w2);
        }
        ++mismatches;
      }
    }
    std::string detail = "1000 instances, " + std::to_string(equal_pairs)
                         + " equal pairs, largest depth "
                         + std::to_string(max_depth) + ", "
                         + std::to_string(mismatches) + " mismatches";
    if (!first.empty()) {
      detail += "; first " + first;
    }
    return {mismatches == 0, detail};
  }

  Outcome criterion_2() {
    auto const&       fp     = fp_trivial();
    FreeProductOracle oracle(fp);
    std::string       counts;
    bool              ok = true;
    for (std::size_t n = 1; n <= 6; ++n) {
      std::size_t const found = enumerate(fp.automaton, n).size();
      std::size_t const reference
          = support::trivial_free_product_count(n, false);
      std::vector<FreeProductNormalForm> forms;
      for (auto const& w : all_words(all_states(fp.automaton), n)) {
        auto nf = oracle.normal_form(Word(fp.automaton, w));
        if (std::find(forms.begin(), forms.end(), nf) == forms.end()) {
          forms.push_back(std::move(nf));
        }
      }
      ok = ok && found == 2 * n && reference == 2 * n
           && forms.size() == 2 * n;
      counts += (counts.empty() ? "" : " ") + std::to_string(found);
    }
    return {ok, "counts for n=1..6: " + counts};
  }

  // Words over one factor's states are equal in the free product iff their
  // images are equal in the factor automaton.
  Outcome embedding(ConstructionOutput const& fp,
                    Automaton const&          factor,
                    Factor                    side,
                    std::size_t&              pairs) {
    auto const states = factor_states(fp, side);
    auto const words  = all_words(support::all_states(factor), 4);
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::vector<state_index> wi;
      for (auto q : words[i]) {
        wi.push_back(states[q]);
      }
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        std::vector<state_index> wj;
        for (auto q : words[j]) {
          wj.push_back(states[q]);
        }
        ++pairs;
        bool const in_product
            = equal(fp.automaton, Word(fp.automaton, wi), Word(fp.automaton, wj));
        bool const in_factor
            = support::naive_equal_at(factor, words[i], words[j], 8);
        if (in_product != in_factor) {
          return {false,
                  words_text(factor, words[i]) + " vs "
                      + words_text(factor, words[j]) + ": "
                      + (in_product ? "equal" : "different")
                      + " in the free product"};
        }
      }
    }
    return {true, ""};
  }

  Outcome criterion_3() {
    auto const& fp    = fp_naturals_c2();
    std::size_t pairs = 0;
    auto        left  = embedding(fp, adding(), Factor::left, pairs);
    if (!left.passed) {
      return left;
    }
    auto right = embedding(fp, c2swap(), Factor::right, pairs);
    if (!right.passed) {
      return right;
    }
    return {true, std::to_string(pairs) + " word pairs over Q1 and over Q2"};
  }

  Outcome xw_yw(ConstructionOutput const& fp, std::size_t& checked) {
    auto const&       aut    = fp.automaton;
    auto const        labels = factor_labels(fp);
    std::size_t const length = 18;
    std::string const x_in   = closed_form("", "$#", length);
    std::string const y_in   = closed_form("", "#$", length);
    auto const        xs     = parse_symbols(aut, x_in);
    auto const        ys     = parse_symbols(aut, y_in);
    for (auto const& w : all_words(all_states(aut), 7)) {
      std::size_t const ell = reduced_length(labels, w);
      if (ell > 7) {
        continue;
      }
      auto [x, y] = left_forms(ell, length);
      if (labels[w[0]] == 1) {
        std::tie(x, y) = std::pair{swap_dollar_hash(y), swap_dollar_hash(x)};
      }
      auto const ax = format_symbols(*aut.alphabet(), act(aut, Word(aut, w), xs));
      auto const ay = format_symbols(*aut.alphabet(), act(aut, Word(aut, w), ys));
      ++checked;
      if (ax != x || ay != y) {
        return {false,
                "w=" + words_text(aut, w) + " (reduced length "
                    + std::to_string(ell) + "): x_w " + ax + " expected " + x
                    + ", y_w " + ay + " expected " + y};
      }
    }
    return {true, ""};
  }

  Outcome criterion_4() {
    std::size_t checked = 0;
    for (auto const* fp : {&fp_trivial(), &fp_naturals_c2()}) {
      auto out = xw_yw(*fp, checked);
      if (!out.passed) {
        return out;
      }
    }
    return {true,
            std::to_string(checked)
                + " words of reduced length <= 7 over two free products"};
  }

  Outcome criterion_5() {
    std::size_t laws = 0;
    for (auto const& [l, r] : {std::pair{&triv(), &triv()},
                               std::pair{&adding(), &c2swap()}}) {
      auto const  out = free_product_adjoin_identity(*l, *r);
      auto const& aut = out.automaton;
      state_index one = aut.state(*out.note("identity"));
      for (state_index q = 0; q < aut.number_of_states(); ++q) {
        laws += 2;
        if (!equal(aut, Word(aut, {one, q}), Word(aut, {q}))
            || !equal(aut, Word(aut, {q, one}), Word(aut, {q}))) {
          return {false, "identity law fails for " + aut.state_name(q)};
        }
      }
    }
    auto const  trivial = free_product_adjoin_identity(triv(), triv());
    std::string counts;
    for (std::size_t n = 1; n <= 6; ++n) {
      std::size_t const found = enumerate(trivial.automaton, n).size();
      counts += (counts.empty() ? "" : " ") + std::to_string(found);
      if (found != 2 * n + 1
          || support::trivial_free_product_count(n, true) != 2 * n + 1) {
        return {false, "counts for n=1..6: " + counts};
      }
    }
    return {true,
            std::to_string(laws) + " identity laws; counts for n=1..6: "
                + counts};
  }

  Outcome criterion_6() {
    auto const  out   = wreath_subsemigroup(adding(), c2());
    auto const& aut   = out.automaton;
    auto const  words = all_words(generator_indices(out), 4);
    auto by_automaton = classes<Element>(words.size(), [&](std::size_t i) {
      return word_to_element(aut, Word(aut, words[i]));
    });
    auto by_arithmetic = classes<NaturalsWreath, NaturalsWreathHash>(
        words.size(),
        [&](std::size_t i) { return word_value(aut, words[i], c2()); });
    if (auto bad = partition_mismatch(by_automaton, by_arithmetic)) {
      return {false,
              "words " + words_text(aut, words[bad->first]) + " and "
                  + words_text(aut, words[bad->second])
                  + " disagree with the wreath product"};
    }
    // Spot checks of the pairwise decision procedure.
    std::mt19937_64                            rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int i = 0; i < 200; ++i) {
      std::size_t a = pick(rng), b = pick(rng);
      if (equal(aut, Word(aut, words[a]), Word(aut, words[b]))
          != (by_arithmetic[a] == by_arithmetic[b])) {
        return {false, "equal() disagrees on a sampled pair"};
      }
    }

    // b alpha . t = (bt) alpha: monoid symbols are "b:m", tuple symbols the
    // remaining ones.
    std::vector<symbol_index> tuple_symbols;
    for (symbol_index x = 0; x < aut.alphabet_size(); ++x) {
      if (aut.symbol_name(x).rfind("b:", 0) != 0) {
        tuple_symbols.push_back(x);
      }
    }
    std::size_t cases = 0;
    for (std::size_t len = 0; len <= 3; ++len) {
      for (auto const& alpha : support::all_strings(tuple_symbols.size(), len)) {
        for (monoid_index t = 0; t < c2().size(); ++t) {
          for (monoid_index b = 0; b < c2().size(); ++b) {
            symbol_string in{aut.symbol("b:" + c2().name(b))};
            for (auto x : alpha) {
              in.push_back(tuple_symbols[x]);
            }
            symbol_string expected = in;
            expected[0] = aut.symbol("b:" + c2().name(c2().multiply(b, t)));
            ++cases;
            if (act(aut, aut.state("t:" + c2().name(t)), in) != expected) {
              return {false,
                      "t:" + c2().name(t) + " on "
                          + format_symbols(*aut.alphabet(), in)};
            }
          }
        }
      }
    }
    return {true,
            std::to_string(words.size()) + " words, "
                + std::to_string(class_count(by_arithmetic)) + " classes; "
                + std::to_string(cases) + " monoid-state cases"};
  }

  Outcome criterion_7() {
    auto const  out   = wreath_initial_symbol(adding(), c2());
    auto const& aut   = out.automaton;
    auto const  words = all_words(generator_indices(out), 4);
    std::vector<symbol_index> c, d;
    for (symbol_index x = 0; x < aut.alphabet_size(); ++x) {
      (aut.symbol_name(x).rfind("b:", 0) == 0 ? c : d).push_back(x);
    }
    auto by_restricted = classes<Element>(words.size(), [&](std::size_t i) {
      return restrict_element(word_to_element(aut, Word(aut, words[i])), c, d);
    });
    auto by_full = classes<Element>(words.size(), [&](std::size_t i) {
      return word_to_element(aut, Word(aut, words[i]));
    });
    auto by_arithmetic = classes<NaturalsWreath, NaturalsWreathHash>(
        words.size(),
        [&](std::size_t i) { return word_value(aut, words[i], c2()); });
    if (auto bad = partition_mismatch(by_restricted, by_arithmetic)) {
      return {false,
              "words " + words_text(aut, words[bad->first]) + " and "
                  + words_text(aut, words[bad->second])
                  + " disagree with the wreath product"};
    }
    std::mt19937_64                            rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int i = 0; i < 200; ++i) {
      std::size_t a = pick(rng), b = pick(rng);
      if (restricted_equal(aut, Word(aut, words[a]), Word(aut, words[b]), c, d)
          != (by_arithmetic[a] == by_arithmetic[b])) {
        return {false, "restricted_equal() disagrees on a sampled pair"};
      }
    }
    bool const same = !partition_mismatch(by_full, by_arithmetic);
    return {true,
            std::to_string(words.size()) + " words, "
                + std::to_string(class_count(by_arithmetic))
                + " restricted classes; unrestricted equality gives "
                + std::to_string(class_count(by_full)) + " classes ("
                + (same ? "same partition" : "different partition")
                + ", reported only)"};
  }

  Outcome criterion_8() {
    std::vector<std::pair<std::string, ConstructionOutput>> fixtures{
        {"trivial free product", fp_trivial()},
        {"N0 * C2", fp_naturals_c2()},
        {"(trivial * trivial)^1", free_product_adjoin_identity(triv(), triv())},
        {"(N0 * C2)^1", free_product_adjoin_identity(adding(), c2swap())},
        {"wreath N0, C2", wreath_subsemigroup(adding(), c2())},
        {"initial-symbol wreath N0, C2", wreath_initial_symbol(adding(), c2())},
        {"adding machine squared", direct_power(adding(), 2)},
        {"adding machine plus identity", adjoin_identity_state(adding())}};
    std::size_t checks = 0;
    for (auto const& [name, out] : fixtures) {
      auto const& aut = out.automaton;
      // Marked symbols are fixed by every state.
      for (symbol_index x = 0; x < aut.alphabet_size(); ++x) {
        auto const& sym = aut.symbol_name(x);
        if (sym.size() < 2 || sym.substr(sym.size() - 2) != "°") {
          continue;
        }
        for (state_index q = 0; q < aut.number_of_states(); ++q) {
          ++checks;
          auto const t = aut.table()[q * aut.alphabet_size() + x];
          if (t.target != q || t.output != x) {
            return {false, name + ": " + aut.state_name(q) + " moves " + sym};
          }
        }
      }
      // A factor's left identity is idempotent and a left identity for the
      // states of its factor; an adjoined identity is both for every state.
      auto identity_laws = [&](std::string const&              l,
                               std::vector<std::string> const& scope,
                               bool two_sided) -> std::optional<Outcome> {
        state_index const li = aut.state(l);
        ++checks;
        if (!equal(aut, Word(aut, {li, li}), Word(aut, {li}))) {
          return Outcome{false, name + ": " + l + " is not idempotent"};
        }
        for (auto const& qn : scope) {
          state_index const q = aut.state(qn);
          checks += two_sided ? 2 : 1;
          if (!equal(aut, Word(aut, {li, q}), Word(aut, {q}))
              || (two_sided && !equal(aut, Word(aut, {q, li}), Word(aut, {q})))) {
            return Outcome{false, name + ": " + l + " fails for " + qn};
          }
        }
        return std::nullopt;
      };
      for (auto [key, states] : {std::pair{"left-identity", "left-states"},
                                 std::pair{"right-identity", "right-states"}}) {
        if (auto l = out.note(key)) {
          if (auto bad = identity_laws(*l, split_top_level(*out.note(states)),
                                       false)) {
            return *bad;
          }
        }
      }
      if (auto l = out.note("identity")) {
        if (auto bad = identity_laws(*l, aut.state_names(), true)) {
          return *bad;
        }
      }
      // Length preservation and prefix compatibility of the level actions.
      std::size_t depth = 1;
      while (depth < 6
             && std::pow(double(aut.alphabet_size()), double(depth + 1))
                    * aut.number_of_states()
                    < 2e5) {
        ++depth;
      }
      for (state_index q = 0; q < aut.number_of_states(); ++q) {
        LevelTable previous = act_on_level(aut, Word(aut, {q}), 0);
        for (std::size_t n = 1; n <= depth; ++n) {
          LevelTable table = act_on_level(aut, Word(aut, {q}), n);
          for (std::size_t i = 0; i < table.size(); ++i) {
            ++checks;
            auto const source = table.source(i);
            auto const image  = table.image(i);
            auto const up     = previous.image(i / aut.alphabet_size());
            if (image.size() != source.size()
                || !std::equal(up.begin(), up.end(), image.begin())
                || symbol_string(image.begin(), image.end())
                       != support::naive_act(aut, {q}, source)) {
              return {false,
                      name + ": " + aut.state_name(q) + " on "
                          + format_symbols(*aut.alphabet(), source)};
            }
          }
          previous = std::move(table);
        }
      }
    }
    return {true,
            std::to_string(checks) + " checks on "
                + std::to_string(fixtures.size()) + " constructed automata"};
  }

}  // namespace

int main() {
  report(1, "equal agrees with brute-force level comparison", criterion_1);
  report(2, "trivial free product has 2n elements of length <= n",
         criterion_2);
  report(3, "factor words are equal in the free product iff in the factor",
         criterion_3);
  report(4, "x_w and y_w match the closed forms", criterion_4);
  report(5, "adjoined identity laws and 2n+1 elements", criterion_5);
  report(6, "wreath automaton matches wreath arithmetic", criterion_6);
  report(7, "initial-symbol automaton matches wreath arithmetic under "
            "restricted equality",
         criterion_7);
  report(8, "structural invariants of constructed automata", criterion_8);
  return failures == 0 ? 0 : 1;
}
