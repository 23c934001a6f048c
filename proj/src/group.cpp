#include "gpi/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "gpi/error.hpp"

namespace gpi {
namespace {

bool valid_name(const std::string& name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::string triple(const std::vector<std::string>& names, std::size_t a, std::size_t b,
                   std::size_t c) {
  return "(" + names[a] + ", " + names[b] + ", " + names[c] + ")";
}

}  // namespace

Group::Group(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table,
             std::size_t max_order)
    : names_(std::move(names)) {
  const std::size_t m = names_.size();
  if (m == 0) throw GroupError("group must have at least one element");
  if (m > max_order) {
    throw GroupError("group order " + std::to_string(m) + " exceeds the configured cap " +
                     std::to_string(max_order));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!valid_name(names_[i])) {
      throw GroupError("element name '" + names_[i] + "' must match [A-Za-z0-9_]+");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw GroupError("duplicate element name '" + names_[i] + "'");
    }
  }
  if (table.size() != m) {
    throw GroupError("table has " + std::to_string(table.size()) + " rows, expected " +
                     std::to_string(m));
  }
  table_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (table[i].size() != m) {
      throw GroupError("table row " + std::to_string(i) + " has " +
                       std::to_string(table[i].size()) + " entries, expected " +
                       std::to_string(m));
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (table[i][j] >= m) {
        throw GroupError("table entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") is out of range");
      }
      table_[i * m + j] = static_cast<std::uint16_t>(table[i][j]);
    }
  }

  // Latin square: every row and every column is a permutation.
  std::vector<char> seen(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < m; ++j) {
      auto& s = seen[table_[i * m + j]];
      if (s) throw GroupError("Latin-square violation in row " + std::to_string(i) +
                              " (" + names_[i] + ")");
      s = 1;
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      auto& s = seen[table_[i * m + j]];
      if (s) throw GroupError("Latin-square violation in column " + std::to_string(j) +
                              " (" + names_[j] + ")");
      s = 1;
    }
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < m && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < m && ok; ++g) {
      ok = table_[e * m + g] == g && table_[g * m + e] == g;
    }
    if (ok) identity = e;
  }
  if (!identity) throw GroupError("table has no two-sided identity element");
  identity_ = Element{static_cast<std::uint16_t>(*identity)};

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t ab = table_[a * m + b];
      for (std::size_t c = 0; c < m; ++c) {
        const std::size_t bc = table_[b * m + c];
        if (table_[ab * m + c] != table_[a * m + bc]) {
          throw GroupError("associativity fails for the triple " + triple(names_, a, b, c));
        }
      }
    }
  }

  inverse_.resize(m);
  for (std::size_t g = 0; g < m; ++g) {
    // A Latin square with identity always has a right inverse; check it is two-sided.
    std::size_t h = 0;
    while (table_[g * m + h] != identity_.id) ++h;
    if (table_[h * m + g] != identity_.id) {
      throw GroupError("element " + names_[g] + " has no two-sided inverse");
    }
    inverse_[g] = Element{static_cast<std::uint16_t>(h)};
  }
}

const std::string& Group::name(Element g) const {
  if (!contains(g)) throw InvalidArgument("element index " + std::to_string(g.id) + " out of range");
  return names_[g.id];
}

std::optional<Element> Group::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return Element{static_cast<std::uint16_t>(i)};
  }
  return std::nullopt;
}

Element Group::at(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw InvalidArgument("unknown group element '" + std::string(name) + "'");
}

std::vector<Element> Group::elements() const {
  std::vector<Element> out(order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Element{static_cast<std::uint16_t>(i)};
  return out;
}

Element Group::power(Element g, long k) const {
  if (k < 0) {
    g = inv(g);
    k = -k;
  }
  Element result = identity_;
  for (long i = 0; i < k; ++i) result = mul(result, g);
  return result;
}

std::vector<std::vector<std::size_t>> Group::table() const {
  const std::size_t m = order();
  std::vector<std::vector<std::size_t>> out(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[i][j] = table_[i * m + j];
  return out;
}

Group make_cyclic(std::size_t order, std::size_t max_order) {
  if (order == 0) throw InvalidArgument("cyclic group order must be positive");
  if (order > max_order) {
    throw InvalidArgument("cyclic group order " + std::to_string(order) +
                          " exceeds the configured cap " + std::to_string(max_order));
  }
  std::vector<std::string> names(order);
  for (std::size_t k = 0; k < order; ++k) {
    names[k] = k == 0 ? "e" : k == 1 ? "a" : "a" + std::to_string(k);
  }
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) table[i][j] = (i + j) % order;
  return Group(std::move(names), std::move(table), max_order);
}

Group make_from_table(std::vector<std::string> names,
                      std::vector<std::vector<std::size_t>> table, std::size_t max_order) {
  return Group(std::move(names), std::move(table), max_order);
}

Group make_symmetric(std::size_t degree, std::size_t max_order) {
  if (degree == 0) throw InvalidArgument("symmetric group degree must be positive");
  std::vector<std::size_t> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do {
    perms.push_back(perm);
    if (perms.size() > max_order) {
      throw InvalidArgument("symmetric group of degree " + std::to_string(degree) +
                            " exceeds the configured order cap " + std::to_string(max_order));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::size_t m = perms.size();
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (i == 0) {
      names[i] = "e";
      continue;
    }
    names[i] = "p";
    for (auto x : perms[i]) names[i] += std::to_string(x);
  }
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  std::vector<std::size_t> composed(degree);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t x = 0; x < degree; ++x) composed[x] = perms[j][perms[i][x]];
      table[i][j] = static_cast<std::size_t>(
          std::find(perms.begin(), perms.end(), composed) - perms.begin());
    }
  }
  return Group(std::move(names), std::move(table), max_order);
}

Group make_klein_four() {
  return Group({"e", "a", "b", "c"},
               {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

}  // namespace gpi
