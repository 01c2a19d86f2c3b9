#include "autosg/monoid.hpp"

#include <algorithm>
#include <set>

#include "autosg/error.hpp"
#include "autosg/names.hpp"

namespace autosg {

  FiniteMonoid::FiniteMonoid(std::vector<std::string>  elements,
                             std::vector<monoid_index> table,
                             monoid_index              identity)
      : _elements(std::move(elements)),
        _table(std::move(table)),
        _identity(identity) {
    std::size_t const n = _elements.size();
    if (n == 0) {
      throw UsageError("a monoid needs at least one element");
    }
    std::set<std::string> seen;
    for (auto const& e : _elements) {
      if (auto problem = name_problem(e)) {
        throw UsageError("monoid element \"" + e + "\": " + *problem);
      }
      if (!seen.insert(e).second) {
        throw UsageError("monoid element \"" + e + "\" listed twice");
      }
    }
    if (_table.size() != n * n) {
      throw UsageError("multiplication table must have " + std::to_string(n * n)
                       + " entries");
    }
    if (std::any_of(_table.begin(), _table.end(), [n](monoid_index v) {
          return v >= n;
        })) {
      throw UsageError("multiplication table entry out of range");
    }
    if (_identity >= n) {
      throw UsageError("identity out of range");
    }
    for (monoid_index a = 0; a < n; ++a) {
      if (multiply(_identity, a) != a || multiply(a, _identity) != a) {
        throw UsageError("\"" + _elements[_identity]
                         + "\" is not a two-sided identity (fails at \""
                         + _elements[a] + "\")");
      }
    }
    for (monoid_index a = 0; a < n; ++a) {
      for (monoid_index b = 0; b < n; ++b) {
        for (monoid_index c = 0; c < n; ++c) {
          if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
            throw UsageError("multiplication is not associative at ("
                             + _elements[a] + ", " + _elements[b] + ", "
                             + _elements[c] + ")");
          }
        }
      }
    }
  }

  FiniteMonoid FiniteMonoid::cyclic_group(std::size_t n) {
    if (n == 0) {
      throw UsageError("cyclic group order must be positive");
    }
    std::vector<std::string> names{"1"};
    for (std::size_t i = 1; i < n; ++i) {
      names.push_back(i == 1 ? "g" : "g" + std::to_string(i));
    }
    std::vector<monoid_index> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = static_cast<monoid_index>((i + j) % n);
      }
    }
    return FiniteMonoid(std::move(names), std::move(table), 0);
  }

  std::optional<monoid_index> FiniteMonoid::find(std::string_view name) const {
    auto it = std::find(_elements.begin(), _elements.end(), name);
    if (it == _elements.end()) {
      return std::nullopt;
    }
    return static_cast<monoid_index>(it - _elements.begin());
  }

}  // namespace autosg
