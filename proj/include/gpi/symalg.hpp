#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpi/grading.hpp"
#include "gpi/scalar.hpp"

namespace gpi {

/// Commuting variable y^slot_{row,col}. Within one slot a position belongs to at
/// most one homogeneous component, so the group element is not stored.
struct OmegaVar {
  int slot = 1;
  int row = 1;
  int col = 1;

  constexpr auto operator<=>(const OmegaVar&) const = default;
  std::string to_string() const;  // y[slot,row,col]
};

/// Commutative monomial: a sorted multiset of Omega variables.
class CMonomial {
 public:
  CMonomial() = default;
  explicit CMonomial(std::vector<OmegaVar> vars);
  static CMonomial of(OmegaVar v) { return CMonomial(std::vector<OmegaVar>{v}); }

  const std::vector<OmegaVar>& vars() const noexcept { return vars_; }
  std::size_t degree() const noexcept { return vars_.size(); }
  std::size_t count(const OmegaVar& v) const;
  bool is_one() const noexcept { return vars_.empty(); }

  friend CMonomial operator*(const CMonomial& a, const CMonomial& b);

  /// "1" for the empty monomial, else factors joined by '*', powers as ^k.
  std::string to_string() const;

  auto operator<=>(const CMonomial&) const = default;
  bool operator==(const CMonomial&) const = default;

 private:
  std::vector<OmegaVar> vars_;
};

/// Polynomial in F[Omega]; terms sorted by monomial, no zero coefficients.
class CPolynomial {
 public:
  using Term = std::pair<CMonomial, Scalar>;

  CPolynomial() = default;
  explicit CPolynomial(CoeffRing ring) : ring_(ring) {}
  /// m with coefficient one.
  CPolynomial(CoeffRing ring, CMonomial m);
  CPolynomial(CoeffRing ring, CMonomial m, Scalar c);
  static CPolynomial variable(CoeffRing ring, OmegaVar v);

  CoeffRing ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Single term with coefficient one.
  bool is_unit_monomial() const;

  CPolynomial& operator+=(const CPolynomial& other);
  CPolynomial& operator-=(const CPolynomial& other);
  CPolynomial& operator*=(const Scalar& c);
  friend CPolynomial operator+(CPolynomial a, const CPolynomial& b) { return a += b; }
  friend CPolynomial operator-(CPolynomial a, const CPolynomial& b) { return a -= b; }
  friend CPolynomial operator*(const CPolynomial& a, const CPolynomial& b);
  friend CPolynomial operator*(CPolynomial a, const Scalar& c) { return a *= c; }

  bool operator==(const CPolynomial& other) const;

  std::string to_string() const;

 private:
  void normalize();

  CoeffRing ring_;
  std::vector<Term> terms_;
};

/// n x n matrix over F[Omega], storing only nonzero entries. Rows and columns are 1-based.
class SparseMatrix {
 public:
  using Position = std::pair<int, int>;

  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t n, CoeffRing ring = CoeffRing::rationals())
      : n_(n), ring_(ring) {}

  static SparseMatrix identity(std::size_t n, CoeffRing ring = CoeffRing::rationals());
  static SparseMatrix unit(std::size_t n, int row, int col,
                           CoeffRing ring = CoeffRing::rationals());

  std::size_t n() const noexcept { return n_; }
  CoeffRing ring() const noexcept { return ring_; }
  const std::map<Position, CPolynomial>& entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// Zero polynomial when the entry is absent.
  CPolynomial at(int row, int col) const;
  void add_to(int row, int col, const CPolynomial& value);
  void set(int row, int col, CPolynomial value);

  SparseMatrix& operator+=(const SparseMatrix& other);
  SparseMatrix& operator-=(const SparseMatrix& other);
  SparseMatrix& operator*=(const Scalar& c);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(SparseMatrix a, const Scalar& c) { return a *= c; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

  SparseMatrix transpose() const;

  bool operator==(const SparseMatrix& other) const;

  /// Canonical listing "(r,c): poly" one per line, in (row, col) order; "0" when zero.
  std::string to_string() const;

 private:
  void check_index(int row, int col) const;
  void check_compatible(const SparseMatrix& other) const;

  std::size_t n_ = 0;
  CoeffRing ring_;
  std::map<Position, CPolynomial> entries_;
};

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix mat_add(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix transpose(const SparseMatrix& a);

/// Swapped-position variable y^j_{col,row}. Throws InvalidVariable unless
/// col = hat(g)(row) for some support element g.
OmegaVar star_omega(const OmegaVar& v, const Grading& grading);

/// A_{slot,g} = sum over i in D(g) of y^slot_{i,hat(g)(i)} e_{i,hat(g)(i)}.
SparseMatrix generic_matrix(int slot, Element g, const Grading& grading,
                            CoeffRing ring = CoeffRing::rationals());
/// A*_{slot,g}, the transpose of A_{slot,g}.
SparseMatrix generic_matrix_star(int slot, Element g, const Grading& grading,
                                 CoeffRing ring = CoeffRing::rationals());

/// One factor of a generic product: the matrix A_{slot,h} or A*_{slot,h}.
struct SlotLetter {
  int slot = 1;
  SignedElement letter;

  constexpr auto operator<=>(const SlotLetter&) const = default;
};

/// s and t sequences along a word from start row k. s has length m+1 with
/// s_1 = k and s_{r+1} = hat_signed(letter_r)(s_r). t_r is the column of the
/// slot-r variable inside A_{r,h_r}: hat(h_r)(s_r) for a plain letter, s_r for
/// a starred one (whose variable is y_{hat(h_r)^{-1}(s_r), s_r}).
struct STSequences {
  int k = 1;
  std::vector<int> s;
  std::vector<int> t;

  /// Row of the slot-r variable (1-based r): s_r if plain, s_{r+1} if starred.
  int variable_row(std::size_t r, bool starred) const { return starred ? s[r] : s[r - 1]; }
};

/// Throws DomainError if k is outside the domain of the word's composition.
STSequences st_sequences(int k, std::span<const SignedElement> word, const Grading& grading);

/// Product of generic matrices in closed form: one monomial per row of the
/// composition's domain, placed at (k, s_{m+1}^k).
SparseMatrix closed_form_product(std::span<const SlotLetter> word, const Grading& grading,
                                 CoeffRing ring = CoeffRing::rationals());

/// The same product computed by iterated sparse multiplication.
SparseMatrix iterated_product(std::span<const SlotLetter> word, const Grading& grading,
                              CoeffRing ring = CoeffRing::rationals());

/// Word with slots 1..m assigned by position.
std::vector<SlotLetter> with_positional_slots(std::span<const SignedElement> word);

}  // namespace gpi
