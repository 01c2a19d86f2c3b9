#ifndef AUTOSG_VERIFY_HPP_
#define AUTOSG_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autosg/automaton.hpp"
#include "autosg/constructions.hpp"
#include "autosg/element.hpp"
#include "autosg/monoid.hpp"

// Property suites over constructed automata.  Each suite returns a report
// with one entry per check; the CLI's "verify" verb prints it.

namespace autosg {

  struct Check {
    std::string description;
    bool        passed;
    std::string detail;
  };

  struct VerifyReport {
    std::string        suite;
    std::vector<Check> checks;

    bool passed() const;

    // "PASS  description" / "FAIL  description: detail" lines followed by a
    // summary line.
    std::string to_text() const;
  };

  // l is a left identity of the semigroup and an idempotent.
  VerifyReport verify_left_identity(Automaton const& aut, state_index l);

  // As above; for a free product, l is only checked against the states of
  // the factor it belongs to.
  VerifyReport verify_left_identity(ConstructionOutput const& out,
                                    state_index               l);

  // Every state fixes every marked symbol of a free product.
  VerifyReport verify_marked_absorption(ConstructionOutput const& fp);

  // Words of length <= max_len over one factor's states are equal in the
  // free product iff they are equal in `factor` (whose states correspond to
  // the factor states in order).
  VerifyReport verify_factor_embedding(ConstructionOutput const& fp,
                                       Factor                    side,
                                       Automaton const&          factor,
                                       std::size_t               max_len);

  // Both factors, using the factor automata recovered from `fp`.
  VerifyReport verify_factor_embedding(ConstructionOutput const& fp,
                                       std::size_t               max_len);

  // x_w and y_w closed forms for every generator word whose reduced length
  // is at most 2 max_k + 1.
  VerifyReport verify_xw_yw(ConstructionOutput const& fp, std::size_t max_k);

  // Equality of generator words (length <= max_len) in the two-copy wreath
  // automaton against wreath arithmetic, plus the action of monoid states on
  // strings b alpha with |alpha| <= 3 and of tuple states with |alpha| <= 2.
  VerifyReport verify_wreath_oracle(Automaton const&    base,
                                    FiniteMonoid const& monoid,
                                    std::size_t         max_len);

  // Restricted equality on the initial-symbol automaton against wreath
  // arithmetic.  Unrestricted equality is reported but never fails.
  VerifyReport verify_initial_symbol_oracle(Automaton const&    base,
                                            FiniteMonoid const& monoid,
                                            std::size_t         max_len);

  // Length preservation and prefix compatibility of every state on all
  // strings of length <= depth, and of every two-letter word on strings of
  // length <= depth - 1.
  VerifyReport verify_tree_endomorphism(Automaton const& aut,
                                        std::size_t      depth);

  // Inputs for run_suite; each suite reads the fields it needs and throws
  // UsageError when one is missing.
  struct SuiteInputs {
    std::optional<ConstructionOutput> automaton;
    std::optional<std::string>        state;
    std::optional<Automaton>          base;
    std::optional<FiniteMonoid>       monoid;
    std::size_t                       max_len = 4;
    std::size_t                       max_k   = 3;
  };

  std::vector<std::string_view> suite_names();

  // Throws UsageError for an unknown suite name.
  VerifyReport run_suite(std::string_view name, SuiteInputs const& inputs);

}  // namespace autosg

#endif  // AUTOSG_VERIFY_HPP_
