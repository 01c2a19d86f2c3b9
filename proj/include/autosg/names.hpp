#ifndef AUTOSG_NAMES_HPP_
#define AUTOSG_NAMES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Helpers for the names of states and symbols.  A name is a nonempty string
// without whitespace, without "->", and with balanced parentheses; commas are
// allowed only inside parentheses so that tuple names such as "(q,e)" survive
// comma-separated lists.

namespace autosg {

  std::string_view trim(std::string_view text) noexcept;

  // Splits on `separator` occurring at parenthesis depth zero; every piece is
  // trimmed.  An empty (or all-blank) input gives an empty vector.
  std::vector<std::string> split_top_level(std::string_view text,
                                           char             separator = ',');

  // Reason the name is unusable, or nullopt if it is fine.
  std::optional<std::string> name_problem(std::string_view name);

  std::string join(std::vector<std::string> const& parts,
                   std::string_view                 separator = ",");

  // Returns `base`, or `base` followed by as many primes as needed to avoid
  // every name already in `taken`.
  std::string fresh_name(std::string const&              base,
                         std::vector<std::string> const& taken);

}  // namespace autosg

#endif  // AUTOSG_NAMES_HPP_
