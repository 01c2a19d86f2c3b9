#ifndef AUTOSG_MONOID_HPP_
#define AUTOSG_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace autosg {

  using monoid_index = std::uint32_t;

  // A finite monoid given by its multiplication table.  The constructor
  // checks associativity on all n^3 triples and the two-sided identity law,
  // throwing UsageError otherwise.
  class FiniteMonoid {
   public:
    // table[i * n + j] is the index of elements[i] * elements[j].
    FiniteMonoid(std::vector<std::string>  elements,
                 std::vector<monoid_index> table,
                 monoid_index              identity);

    // The cyclic group of order n with elements "1", "g", "g2", ...
    static FiniteMonoid cyclic_group(std::size_t n);

    std::size_t size() const noexcept {
      return _elements.size();
    }

    monoid_index identity() const noexcept {
      return _identity;
    }

    monoid_index multiply(monoid_index a, monoid_index b) const noexcept {
      return _table[a * _elements.size() + b];
    }

    std::vector<std::string> const& element_names() const noexcept {
      return _elements;
    }

    std::string const& name(monoid_index a) const {
      return _elements.at(a);
    }

    std::optional<monoid_index> find(std::string_view name) const;

    friend bool operator==(FiniteMonoid const&, FiniteMonoid const&) = default;

   private:
    std::vector<std::string>  _elements;
    std::vector<monoid_index> _table;
    monoid_index              _identity;
  };

}  // namespace autosg

#endif  // AUTOSG_MONOID_HPP_
