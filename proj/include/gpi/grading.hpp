#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpi/group.hpp"

namespace gpi {

/// A group element together with the involution flag: h or h^*.
struct SignedElement {
  Element element;
  bool star = false;

  constexpr auto operator<=>(const SignedElement&) const = default;
};

using SignedWord = std::vector<SignedElement>;

/// Injective partial self-map of {1..n}. Rows are 1-based throughout the library.
class PartialInjection {
 public:
  PartialInjection() = default;
  /// The empty map on {1..n}.
  explicit PartialInjection(std::size_t n) : target_(n, 0) {}

  /// targets[i-1] is the image of i, or 0 where undefined. Throws InvalidArgument
  /// if two points share an image or an image is out of range.
  static PartialInjection from_targets(const std::vector<int>& targets);
  static PartialInjection identity(std::size_t n);

  std::size_t size() const noexcept { return target_.size(); }
  bool defined_at(int i) const noexcept {
    return i >= 1 && static_cast<std::size_t>(i) <= size() && target_[i - 1] != 0;
  }
  std::optional<int> operator()(int i) const {
    if (!defined_at(i)) return std::nullopt;
    return target_[i - 1];
  }
  /// Image of i; 0 when undefined.
  int raw(int i) const noexcept { return defined_at(i) ? target_[i - 1] : 0; }

  std::vector<int> domain() const;
  std::vector<int> image() const;
  std::size_t domain_size() const noexcept;
  bool empty() const noexcept { return domain_size() == 0; }

  PartialInjection inverse() const;
  /// Apply *this first, then next.
  PartialInjection then(const PartialInjection& next) const;
  /// Same as then(), written into out without reallocating.
  void then_into(const PartialInjection& next, PartialInjection& out) const;

  /// Packed key for memo tables: one byte per point.
  const std::vector<std::uint8_t>& targets() const noexcept { return target_; }

  std::string to_string() const;

  bool operator==(const PartialInjection&) const = default;
  auto operator<=>(const PartialInjection&) const = default;

 private:
  std::vector<std::uint8_t> target_;
};

/// Elementary grading of M_n induced by a tuple of pairwise-distinct elements,
/// with e_ij of degree g_i^{-1} g_j. All hat maps are cached at construction.
class Grading {
 public:
  /// Throws InvalidGrading if the tuple is empty or repeats an element.
  static Grading build(Group group, std::vector<Element> tuple);

  const Group& group() const noexcept { return group_; }
  const std::vector<Element>& tuple() const noexcept { return tuple_; }
  std::size_t n() const noexcept { return tuple_.size(); }

  /// Support elements in canonical (index) order.
  const std::vector<Element>& support() const noexcept { return support_; }
  bool in_support(Element g) const { return group_.contains(g) && in_support_[g.id]; }

  /// g_i^{-1} g_j.
  Element degree_of_unit(int i, int j) const;

  std::vector<int> d_set(Element g) const { return hat(g).domain(); }
  std::vector<int> im_set(Element g) const { return hat(g).image(); }

  /// i -> the unique j with g_i g = g_j; empty map when g is outside the support.
  const PartialInjection& hat(Element g) const;
  /// hat(h) for plain letters, hat(h^{-1}) for starred ones.
  const PartialInjection& hat_signed(SignedElement s) const {
    return hat(s.star ? group_.inv(s.element) : s.element);
  }
  /// Degree of a letter: h, or h^{-1} when starred.
  Element signed_degree(SignedElement s) const {
    return s.star ? group_.inv(s.element) : s.element;
  }

  /// Composition of the letters' hat maps, first letter applied first.
  PartialInjection compose_signed(std::span<const SignedElement> word) const;

  std::string tuple_string() const;

 private:
  Grading(Group group, std::vector<Element> tuple);

  Group group_;
  std::vector<Element> tuple_;
  std::vector<Element> support_;
  std::vector<char> in_support_;
  std::vector<PartialInjection> hat_;  // indexed by element id
};

inline Grading build_grading(Group group, std::vector<Element> tuple) {
  return Grading::build(std::move(group), std::move(tuple));
}

}  // namespace gpi
