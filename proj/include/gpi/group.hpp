#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpi {

/// Dense index of a group element; names live only at the I/O boundary.
struct Element {
  std::uint16_t id = 0;

  constexpr auto operator<=>(const Element&) const = default;
};

inline constexpr std::size_t kDefaultMaxGroupOrder = 64;

/// Finite group given by an explicit, exhaustively validated Cayley table.
class Group {
 public:
  /// Validates every axiom. Throws GroupError naming the failing row, column or triple.
  Group(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table,
        std::size_t max_order = kDefaultMaxGroupOrder);

  std::size_t order() const noexcept { return names_.size(); }
  Element identity() const noexcept { return identity_; }

  Element mul(Element g, Element h) const {
    return Element{table_[g.id * order() + h.id]};
  }
  Element inv(Element g) const { return inverse_[g.id]; }

  bool contains(Element g) const noexcept { return g.id < order(); }
  const std::string& name(Element g) const;
  std::optional<Element> find(std::string_view name) const;
  /// Like find, but throws InvalidArgument for unknown names.
  Element at(std::string_view name) const;
  std::vector<Element> elements() const;
  /// g^k with k possibly negative.
  Element power(Element g, long k) const;

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::vector<std::vector<std::size_t>> table() const;

  bool operator==(const Group& other) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint16_t> table_;  // row-major, order() x order()
  std::vector<Element> inverse_;
  Element identity_;
};

/// Z_order with elements e, a, a2, ..., a<order-1>.
Group make_cyclic(std::size_t order, std::size_t max_order = kDefaultMaxGroupOrder);

Group make_from_table(std::vector<std::string> names,
                      std::vector<std::vector<std::size_t>> table,
                      std::size_t max_order = kDefaultMaxGroupOrder);

/// Symmetric group on {0..degree-1}; identity is "e", every other permutation
/// is named "p" followed by its one-line images, e.g. p102. Product g*h applies g first.
Group make_symmetric(std::size_t degree, std::size_t max_order = kDefaultMaxGroupOrder);

/// Klein four-group {e, a, b, c} with c = ab.
Group make_klein_four();

}  // namespace gpi
