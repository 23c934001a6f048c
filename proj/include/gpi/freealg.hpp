#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gpi/grading.hpp"
#include "gpi/scalar.hpp"
#include "gpi/symalg.hpp"

namespace gpi {

/// x_{index,element}, or x*_{index,element} when star is set.
struct GVar {
  int index = 1;
  Element element;
  bool star = false;

  constexpr auto operator<=>(const GVar&) const = default;

  SignedElement letter() const { return {element, star}; }
  GVar toggled() const { return {index, element, !star}; }
};

/// Noncommutative word in the GVars. Ordered by length, then lexicographically.
class GMonomial {
 public:
  GMonomial() = default;
  explicit GMonomial(std::vector<GVar> letters) : letters_(std::move(letters)) {}

  const std::vector<GVar>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const GVar& operator[](std::size_t i) const { return letters_[i]; }

  /// Reverse the word and toggle every star.
  GMonomial star() const;
  /// Letters k..l, 1-based inclusive. Throws InvalidArgument on a bad range.
  GMonomial subword(std::size_t k, std::size_t l) const;
  /// The index-free signed word (h_1^{e_1}, ..., h_m^{e_m}).
  SignedWord signed_word() const;
  /// Letters with their variable index as slot.
  std::vector<SlotLetter> slot_word() const;

  friend GMonomial operator*(const GMonomial& a, const GMonomial& b);

  bool operator==(const GMonomial&) const = default;
  std::strong_ordering operator<=>(const GMonomial& other) const;

 private:
  std::vector<GVar> letters_;
};

/// Variable index -> combined count of x_k and x*_k.
using MultiDegree = std::map<int, int>;

MultiDegree multidegree(const GMonomial& m);

/// Element of the free (G,*)-algebra; no zero coefficients are stored.
class GPolynomial {
 public:
  GPolynomial() = default;
  explicit GPolynomial(CoeffRing ring) : ring_(ring) {}
  /// The monomial with coefficient one.
  static GPolynomial monomial(GMonomial m, CoeffRing ring = CoeffRing::rationals());

  CoeffRing ring() const noexcept { return ring_; }
  const std::map<GMonomial, Scalar>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const GMonomial& m, const Scalar& c);

  GPolynomial& operator+=(const GPolynomial& other);
  GPolynomial& operator-=(const GPolynomial& other);
  GPolynomial& operator*=(const Scalar& c);
  friend GPolynomial operator+(GPolynomial a, const GPolynomial& b) { return a += b; }
  friend GPolynomial operator-(GPolynomial a, const GPolynomial& b) { return a -= b; }
  friend GPolynomial operator*(const GPolynomial& a, const GPolynomial& b);

  /// Coefficients mapped into another ring; terms that vanish are dropped.
  GPolynomial with_ring(CoeffRing target) const;

  bool operator==(const GPolynomial&) const = default;

 private:
  CoeffRing ring_;
  std::map<GMonomial, Scalar> terms_;
};

/// Product of letter degrees: g for x_{k,g}, g^{-1} for x*_{k,g}.
Element gdegree(const GMonomial& m, const Group& group);

GPolynomial star_polynomial(const GPolynomial& f);

GMonomial subword(const GMonomial& m, std::size_t k, std::size_t l);

/// Partition of f's terms by MultiDegree, in MultiDegree order.
std::vector<GPolynomial> multihomogeneous_components(const GPolynomial& f);
bool is_strongly_multihomogeneous(const GPolynomial& f);

/// Substitute x_{k,g} -> A_{k,g} and x*_{k,g} -> A*_{k,g}. Throws InvalidVariable
/// when a letter's element is not in the grading's group.
SparseMatrix evaluate(const GPolynomial& f, const Grading& grading);
SparseMatrix evaluate(const GMonomial& m, const Grading& grading,
                      CoeffRing ring = CoeffRing::rationals());

/// Grammar: poly := ['+'|'-'] term (('+'|'-') term)* | '0';
/// term := [integer ['/' integer]] factor+; factor := 'x' index ':' name ['*'].
/// Throws ParseError (1-based column) or InvalidArgument for unknown names.
GPolynomial parse_poly(std::string_view text, const Group& group,
                       CoeffRing ring = CoeffRing::rationals());
/// Parses a single monomial with coefficient one.
GMonomial parse_monomial(std::string_view text, const Group& group);

std::string format_poly(const GPolynomial& f, const Group& group);
std::string format_monomial(const GMonomial& m, const Group& group);
/// Index-free rendering of a signed word, e.g. "(a, a*, a2)".
std::string format_word(std::span<const SignedElement> word, const Group& group);

}  // namespace gpi
