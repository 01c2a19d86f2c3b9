#ifndef AUTOSG_ORACLES_HPP_
#define AUTOSG_ORACLES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "autosg/automaton.hpp"
#include "autosg/constructions.hpp"
#include "autosg/element.hpp"
#include "autosg/monoid.hpp"

// Ground truth computed without the constructed automata: normal forms in
// free products, arithmetic in wreath products and brute-force comparison of
// level actions.  Factor elements come from the factor automata.

namespace autosg {

  ////////////////////////////////////////////////////////////////////////
  // Free products
  ////////////////////////////////////////////////////////////////////////

  struct FreeProductBlock {
    Factor  factor;
    Element element;

    friend bool operator==(FreeProductBlock const&,
                           FreeProductBlock const&) = default;
  };

  // A reduced word of the semigroup free product: a nonempty sequence of
  // factor elements, adjacent blocks from different factors.
  class FreeProductNormalForm {
   public:
    // Throws UsageError if `blocks` is empty or not reduced.
    explicit FreeProductNormalForm(std::vector<FreeProductBlock> blocks);

    std::vector<FreeProductBlock> const& blocks() const noexcept {
      return _blocks;
    }

    Factor first_factor() const noexcept {
      return _blocks.front().factor;
    }

    friend bool operator==(FreeProductNormalForm const&,
                           FreeProductNormalForm const&) = default;

   private:
    std::vector<FreeProductBlock> _blocks;
  };

  // Concatenation, merging the boundary blocks when they come from the same
  // factor.
  FreeProductNormalForm fp_multiply(FreeProductNormalForm const& x,
                                    FreeProductNormalForm const& y);

  std::size_t fp_reduced_length(FreeProductNormalForm const& x) noexcept;

  // (S * T)^1: nullopt is the adjoined identity.
  using FreeProductWithIdentity = std::optional<FreeProductNormalForm>;

  FreeProductWithIdentity
  fp_adjoin_identity_multiply(FreeProductWithIdentity const& x,
                              FreeProductWithIdentity const& y);

  // Maps words over a free product construction (either variety) to normal
  // forms, using the factor automata recovered from the construction.
  class FreeProductOracle {
   public:
    explicit FreeProductOracle(ConstructionOutput const& fp);

    // Which factor a state belongs to; nullopt for the adjoined identity.
    std::optional<Factor> factor_of(state_index q) const;

    FreeProductWithIdentity value(state_index q) const;
    FreeProductWithIdentity value(Word const& w) const;

    // As value(), but throws UsageError if the word represents the identity.
    FreeProductNormalForm normal_form(Word const& w) const;

   private:
    std::vector<std::optional<FreeProductBlock>> _generators;
  };

  ////////////////////////////////////////////////////////////////////////
  // Wreath products
  ////////////////////////////////////////////////////////////////////////

  // An element (f, t) of S wr T with f : T -> S.
  struct WreathElement {
    std::vector<Element> tuple;  // indexed by monoid element
    monoid_index         top;

    friend bool operator==(WreathElement const&,
                           WreathElement const&) = default;
  };

  // (f, t)(g, u) = (f g^t, tu) where g^t(t_i) = g(t_i t).
  WreathElement wreath_multiply(WreathElement const& x,
                                WreathElement const& y,
                                FiniteMonoid const&  monoid);

  WreathElement wreath_identity(std::shared_ptr<Alphabet const> alphabet,
                                FiniteMonoid const&             monoid);

  // Values of the designated generators of a wreath construction built from
  // `base` and `monoid`: tuple states give (tuple, 1), monoid states give
  // (identity tuple, t).
  class WreathOracle {
   public:
    WreathOracle(Automaton const&    base,
                 FiniteMonoid const& monoid,
                 bool                two_copies);

    // Throws UsageError for states that are not designated generators.
    WreathElement const& value(state_index q) const;
    WreathElement        value(Word const& w) const;

   private:
    FiniteMonoid                               _monoid;
    std::vector<std::optional<WreathElement>> _generators;
  };

  ////////////////////////////////////////////////////////////////////////
  // Brute force
  ////////////////////////////////////////////////////////////////////////

  // Whether w and w2 have the same action on B^n for every n <= depth,
  // computed from level tables one level at a time and stopping at the first
  // level where they differ.  Identical words are equal without tabulating.
  // Throws CapacityError if a level that has to be tabulated exceeds `bound`
  // entries.
  bool brute_equal(Automaton const& aut,
                   Word const&      w,
                   Word const&      w2,
                   std::size_t      depth,
                   std::size_t      bound = default_level_bound);

  ////////////////////////////////////////////////////////////////////////
  // Distinguishing strings of the free product
  ////////////////////////////////////////////////////////////////////////

  struct XwYwReport {
    std::size_t   reduced_length = 0;
    std::size_t   k              = 0;
    Factor        first_factor   = Factor::left;
    bool          checked        = false;  // false when k exceeds the limit
    symbol_string expected_x, actual_x;
    symbol_string expected_y, actual_y;

    bool x_matches() const {
      return expected_x == actual_x;
    }

    bool y_matches() const {
      return expected_y == actual_y;
    }

    bool passed() const {
      return !checked || (x_matches() && y_matches());
    }
  };

  // The prefixes of length 2(k_limit + 2) of ($#)^w . w and (#$)^w . w
  // compared with the closed forms selected by the reduced length 2k or
  // 2k+1 of w.  Words whose k exceeds k_limit are reported unchecked.
  XwYwReport check_xw_yw(ConstructionOutput const& fp,
                         Word const&               w,
                         std::size_t               k_limit);

  // As above, reusing an oracle built from `fp`.
  XwYwReport check_xw_yw(ConstructionOutput const& fp,
                         FreeProductOracle const&  oracle,
                         Word const&               w,
                         std::size_t               k_limit);

}  // namespace autosg

#endif  // AUTOSG_ORACLES_HPP_
