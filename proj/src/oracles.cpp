#include "autosg/oracles.hpp"

#include "autosg/error.hpp"

namespace autosg {

  ////////////////////////////////////////////////////////////////////////
  // Free products
  ////////////////////////////////////////////////////////////////////////

  FreeProductNormalForm::FreeProductNormalForm(
      std::vector<FreeProductBlock> blocks)
      : _blocks(std::move(blocks)) {
    if (_blocks.empty()) {
      throw UsageError("a free product normal form needs at least one block");
    }
    for (std::size_t i = 1; i < _blocks.size(); ++i) {
      if (_blocks[i].factor == _blocks[i - 1].factor) {
        throw UsageError("adjacent blocks must come from different factors");
      }
    }
  }

  FreeProductNormalForm fp_multiply(FreeProductNormalForm const& x,
                                    FreeProductNormalForm const& y) {
    auto blocks = x.blocks();
    auto it     = y.blocks().begin();
    if (blocks.back().factor == it->factor) {
      blocks.back().element = compose(blocks.back().element, it->element);
      ++it;
    }
    blocks.insert(blocks.end(), it, y.blocks().end());
    return FreeProductNormalForm(std::move(blocks));
  }

  std::size_t fp_reduced_length(FreeProductNormalForm const& x) noexcept {
    return x.blocks().size();
  }

  FreeProductWithIdentity
  fp_adjoin_identity_multiply(FreeProductWithIdentity const& x,
                              FreeProductWithIdentity const& y) {
    if (!x) {
      return y;
    }
    if (!y) {
      return x;
    }
    return fp_multiply(*x, *y);
  }

  FreeProductOracle::FreeProductOracle(ConstructionOutput const& fp) {
    _generators.resize(fp.automaton.number_of_states());
    for (auto side : {Factor::left, Factor::right}) {
      Automaton const factor = factor_automaton(fp, side);
      auto const      states = factor_states(fp, side);
      for (std::size_t i = 0; i < states.size(); ++i) {
        _generators[states[i]] = FreeProductBlock{
            side, state_element(factor, static_cast<state_index>(i))};
      }
    }
    auto identity = fp.note("identity");
    for (state_index q = 0; q < _generators.size(); ++q) {
      if (!_generators[q]
          && (!identity || fp.automaton.state_name(q) != *identity)) {
        throw UsageError("state \"" + fp.automaton.state_name(q)
                         + "\" belongs to neither factor");
      }
    }
  }

  std::optional<Factor> FreeProductOracle::factor_of(state_index q) const {
    if (q >= _generators.size()) {
      throw UsageError("state index out of range");
    }
    if (!_generators[q]) {
      return std::nullopt;
    }
    return _generators[q]->factor;
  }

  FreeProductWithIdentity FreeProductOracle::value(state_index q) const {
    if (q >= _generators.size()) {
      throw UsageError("state index out of range");
    }
    if (!_generators[q]) {
      return std::nullopt;
    }
    return FreeProductNormalForm({*_generators[q]});
  }

  FreeProductWithIdentity FreeProductOracle::value(Word const& w) const {
    FreeProductWithIdentity result = value(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      result = fp_adjoin_identity_multiply(result, value(w[i]));
    }
    return result;
  }

  FreeProductNormalForm FreeProductOracle::normal_form(Word const& w) const {
    auto v = value(w);
    if (!v) {
      throw UsageError("word represents the adjoined identity");
    }
    return *v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Wreath products
  ////////////////////////////////////////////////////////////////////////

  WreathElement wreath_multiply(WreathElement const& x,
                                WreathElement const& y,
                                FiniteMonoid const&  monoid) {
    if (x.tuple.size() != monoid.size() || y.tuple.size() != monoid.size()
        || x.top >= monoid.size() || y.top >= monoid.size()) {
      throw UsageError("wreath elements do not match the monoid");
    }
    WreathElement result{{}, monoid.multiply(x.top, y.top)};
    result.tuple.reserve(monoid.size());
    for (monoid_index i = 0; i < monoid.size(); ++i) {
      result.tuple.push_back(
          compose(x.tuple[i], y.tuple[monoid.multiply(i, x.top)]));
    }
    return result;
  }

  WreathElement wreath_identity(std::shared_ptr<Alphabet const> alphabet,
                                FiniteMonoid const&             monoid) {
    return {std::vector<Element>(monoid.size(),
                                 Element::identity(std::move(alphabet))),
            monoid.identity()};
  }

  WreathOracle::WreathOracle(Automaton const&    base,
                             FiniteMonoid const& monoid,
                             bool                two_copies)
      : _monoid(monoid) {
    WreathLayout const layout(base.number_of_states(),
                              base.alphabet_size(),
                              monoid.size(),
                              two_copies);
    _generators.resize(layout.number_of_states());
    std::vector<Element> elements;
    for (state_index q = 0; q < base.number_of_states(); ++q) {
      elements.push_back(state_element(base, q));
    }
    for (std::size_t i = 0; i < layout.tuple_count(); ++i) {
      WreathElement value{{}, monoid.identity()};
      for (auto c : layout.decode(i, base.number_of_states())) {
        value.tuple.push_back(elements[c]);
      }
      _generators[layout.tuple_state(i, TupleState::Phase::pre)]
          = std::move(value);
    }
    for (monoid_index t = 0; t < monoid.size(); ++t) {
      WreathElement value = wreath_identity(base.alphabet(), monoid);
      value.top           = t;
      _generators[layout.monoid_state(t)] = std::move(value);
    }
  }

  WreathElement const& WreathOracle::value(state_index q) const {
    if (q >= _generators.size() || !_generators[q]) {
      throw UsageError("state " + std::to_string(q)
                       + " is not a designated generator");
    }
    return *_generators[q];
  }

  WreathElement WreathOracle::value(Word const& w) const {
    WreathElement result = value(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      result = wreath_multiply(result, value(w[i]), _monoid);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Brute force
  ////////////////////////////////////////////////////////////////////////

  bool brute_equal(Automaton const& aut,
                   Word const&      w,
                   Word const&      w2,
                   std::size_t      depth,
                   std::size_t      bound) {
    if (w == w2) {
      return true;
    }
    for (std::size_t n = 1; n <= depth; ++n) {
      if (act_on_level(aut, w, n, bound) != act_on_level(aut, w2, n, bound)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Distinguishing strings
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // prefix, then `period` repeated, cut to `length` symbols.
    symbol_string eventually_periodic(symbol_string prefix,
                                      symbol_string const& period,
                                      std::size_t          length) {
      while (prefix.size() < length) {
        prefix.insert(prefix.end(), period.begin(), period.end());
      }
      prefix.resize(length);
      return prefix;
    }

    symbol_string repeat(symbol_string const& block, std::size_t times) {
      symbol_string out;
      for (std::size_t i = 0; i < times; ++i) {
        out.insert(out.end(), block.begin(), block.end());
      }
      return out;
    }
  }  // namespace

  XwYwReport check_xw_yw(ConstructionOutput const& fp,
                         Word const&               w,
                         std::size_t               k_limit) {
    return check_xw_yw(fp, FreeProductOracle(fp), w, k_limit);
  }

  XwYwReport check_xw_yw(ConstructionOutput const& fp,
                         FreeProductOracle const&  oracle,
                         Word const&               w,
                         std::size_t               k_limit) {
    if (fp.construction != "free-product") {
      throw UsageError("distinguishing strings are defined for the free "
                       "product construction only");
    }
    auto const nf = oracle.normal_form(w);

    XwYwReport report;
    report.reduced_length = fp_reduced_length(nf);
    report.k              = report.reduced_length / 2;
    report.first_factor   = nf.first_factor();
    if (report.k > k_limit) {
      return report;
    }
    report.checked = true;

    using Kind = SymbolTag::Kind;
    symbol_index dollar        = fp.symbol_of_kind(Kind::dollar);
    symbol_index hash          = fp.symbol_of_kind(Kind::hash);
    symbol_index dollar_marked = fp.symbol_of_kind(Kind::dollar_marked);
    symbol_index hash_marked   = fp.symbol_of_kind(Kind::hash_marked);

    std::size_t const length = 2 * (k_limit + 2);
    std::size_t const k      = report.k;
    bool const        even   = report.reduced_length % 2 == 0;

    // Closed forms for words starting in the left factor.  Words starting in
    // the right factor follow by exchanging $ with # (and the factors), which
    // exchanges the roles of the two input strings.
    auto left_x = [&](symbol_index d, symbol_index h, symbol_index dm,
                      symbol_index hm) {
      if (even) {
        auto prefix = repeat({dm, hm}, k - 1);
        prefix.push_back(dm);
        return eventually_periodic(prefix, {h, d}, length);
      }
      return eventually_periodic(repeat({dm, hm}, k), {d, h}, length);
    };
    auto left_y = [&](symbol_index d, symbol_index h, symbol_index dm,
                      symbol_index hm) {
      if (even) {
        return eventually_periodic(repeat({hm, dm}, k), {h, d}, length);
      }
      auto prefix = repeat({hm, dm}, k);
      prefix.push_back(hm);
      return eventually_periodic(prefix, {d, h}, length);
    };

    if (report.first_factor == Factor::left) {
      report.expected_x = left_x(dollar, hash, dollar_marked, hash_marked);
      report.expected_y = left_y(dollar, hash, dollar_marked, hash_marked);
    } else {
      report.expected_x = left_y(hash, dollar, hash_marked, dollar_marked);
      report.expected_y = left_x(hash, dollar, hash_marked, dollar_marked);
    }

    auto const x_input = eventually_periodic({}, {dollar, hash}, length);
    auto const y_input = eventually_periodic({}, {hash, dollar}, length);
    report.actual_x    = act(fp.automaton, w, x_input);
    report.actual_y    = act(fp.automaton, w, y_input);
    return report;
  }

}  // namespace autosg
