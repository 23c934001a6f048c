#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpi/freealg.hpp"
#include "gpi/grading.hpp"
#include "gpi/symalg.hpp"

namespace gpi {

/// Matrix units, one per letter of the index-free word, whose product is
/// e_{start_row, end_row}. units[p] = (a, b) means the p-th variable is sent to
/// e_ab; a starred letter therefore contributes e_ba to the product.
struct Witness {
  int start_row = 1;
  std::vector<std::pair<int, int>> units;
  int end_row = 1;
};

struct OffendingEntry {
  int row = 1;
  int col = 1;
  CPolynomial value;
};

struct IdentityVerdict {
  bool is_identity = true;
  std::optional<Witness> witness;        // monomials only
  std::vector<OffendingEntry> offending;  // polynomials only
};

/// Identity iff the composition of the letters' hat maps is empty.
IdentityVerdict is_monomial_identity(std::span<const SignedElement> word, const Grading& grading);
IdentityVerdict is_monomial_identity(const GMonomial& m, const Grading& grading);

/// Multiplies the witness units as honest matrix units: every unit must have
/// the letter's degree and the product must be e_{start_row, end_row}.
bool check_witness(std::span<const SignedElement> word, const Witness& w, const Grading& grading);

/// Identity iff the generic evaluation vanishes.
IdentityVerdict is_identity(const GPolynomial& f, const Grading& grading);

/// Shortest contiguous window [k, l] (1-based) of the word whose composition is
/// empty, among windows of length at most max_length.
std::optional<std::pair<std::size_t, std::size_t>> find_identity_subword(
    std::span<const SignedElement> word, const Grading& grading, std::size_t max_length);

/// Window [first, last] (1-based) cut into consecutive blocks. Substituting
/// x_{j,d_j} -> block j sends the monomial x_{1,d_1} ... x_{r,d_r} onto the
/// window, and that monomial is itself an identity, so the word is a
/// consequence of an identity of degree r.
struct ConsequenceCertificate {
  std::size_t first = 1;
  std::size_t last = 1;
  std::vector<std::size_t> block_ends;  // last position of each block, ascending
  std::vector<Element> block_degrees;
};

/// Certificate with at most max_blocks blocks, using the shortest window and
/// then the fewest blocks; nullopt when none exists.
std::optional<ConsequenceCertificate> find_consequence_certificate(
    std::span<const SignedElement> word, const Grading& grading, std::size_t max_blocks);

/// Same search restricted to the window [first, last].
std::optional<ConsequenceCertificate> block_certificate(std::span<const SignedElement> word,
                                                        std::size_t first, std::size_t last,
                                                        const Grading& grading,
                                                        std::size_t max_blocks);

/// Recomputes block degrees from the letters and re-checks the identity.
bool check_consequence_certificate(std::span<const SignedElement> word,
                                   const ConsequenceCertificate& cert, const Grading& grading);

struct EnumerationLimits {
  std::size_t max_degree_cap = 12;
  std::size_t max_words = 2'000'000;
};

/// Letters the enumeration ranges over: (g, plain) and (g, star) for g in the support.
std::vector<SignedElement> signed_alphabet(const Grading& grading);

/// All index-free monomial identities of degree 1..max_degree in shortlex order.
/// Off-support letters appear only as degree-1 words. With minimal_only, words
/// having a proper contiguous identity subword are dropped. Throws ResourceError
/// past the configured caps.
std::vector<SignedWord> enumerate_monomial_identities(const Grading& grading,
                                                      std::size_t max_degree, bool minimal_only,
                                                      const EnumerationLimits& limits = {});

/// Shortlex order on index-free words, letters ordered by (element, star).
bool word_less(const SignedWord& a, const SignedWord& b);

/// Number of minimal monomial identities per length 1..max_degree (index 0 unused);
/// counts only words over the support alphabet.
std::vector<std::uint64_t> count_minimal_identities(const Grading& grading, std::size_t max_degree);

/// Evaluations share a nonzero entry at a common position. Both monomials must
/// be non-identities (PreconditionError otherwise).
bool congruent_mod_J(const GMonomial& m1, const GMonomial& m2, const Grading& grading);

/// One elementary move modulo J, applied to the current word. Positions are
/// 1-based: commute swaps [first, mid-1] with [mid, last]; star_factor replaces
/// [first, last] with its star (a single gdegree-e letter is a star toggle).
struct RewriteStep {
  enum class Kind { commute, star_toggle, star_factor };
  Kind kind = Kind::commute;
  std::size_t first = 1;
  std::size_t mid = 1;
  std::size_t last = 1;
  GMonomial result;
};

std::string to_string(RewriteStep::Kind kind);

/// Breadth-first search for moves turning m2 into m1, each move an instance of
/// a generator of J. Requires congruent_mod_J(m1, m2). nullopt means the search
/// was inconclusive within depth_cap (default 2*len(m1) + 8).
std::optional<std::vector<RewriteStep>> derivation_mod_J(const GMonomial& m1, const GMonomial& m2,
                                                         const Grading& grading,
                                                         std::optional<std::size_t> depth_cap = {});

/// Every admissible move from m, in a fixed order.
std::vector<RewriteStep> rewrite_moves(const GMonomial& m, const Grading& grading);

/// Applies one move and returns the new word; throws PreconditionError if the
/// move is not admissible (wrong degrees or range).
GMonomial apply_rewrite(const GMonomial& m, const RewriteStep& step, const Grading& grading);

struct MonomialIdentityTerm {
  GMonomial monomial;
  Scalar coefficient;
  /// Identity subword window of length <= 2n-1; absent if none exists (flagged).
  std::optional<std::pair<std::size_t, std::size_t>> certificate;
  /// Fallback when no short subword exists: a block substitution into an
  /// identity of degree <= 2n-1.
  std::optional<ConsequenceCertificate> consequence;
};

struct CongruenceClass {
  std::vector<std::pair<GMonomial, Scalar>> members;
  Scalar sum;
  std::string fingerprint;  // canonical serialization of the shared evaluation
};

/// Certificate that a strongly multi-homogeneous polynomial lies (or not) in U.
struct UReduction {
  std::vector<MonomialIdentityTerm> monomial_identity_terms;
  std::vector<CongruenceClass> classes;
  bool in_T = true;
  /// in_T and every monomial-identity term has a subword or block certificate.
  bool in_U_certified = true;
};

/// Requires a strongly multi-homogeneous input (PreconditionError otherwise).
UReduction u_reduce(const GPolynomial& f, const Grading& grading);

struct BasisFamilyReport {
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::vector<std::string> failures;
};

struct BasisReport {
  std::vector<BasisFamilyReport> families;
  bool all_passed() const;
};

/// The four basis polynomials as instantiated for this grading, keyed by family:
/// 1 commutator of neutral variables, 2 x - x* on the neutral component,
/// 3 off-support variables, 4 x_g x_{g^-1} x_g - reversed for g != e in the support.
std::vector<std::pair<int, GPolynomial>> basis_identities(const Grading& grading,
                                                          CoeffRing ring = CoeffRing::rationals());

/// Checks every basis family by generic evaluation and by `samples` random
/// homogeneous substitutions (see vanishes_on_random_substitutions).
BasisReport verify_basis(const Grading& grading, std::size_t samples, std::uint64_t seed = 1,
                         CoeffRing ring = CoeffRing::rationals());

/// Independent numeric check: evaluates f on `samples` random homogeneous
/// substitutions x_{k,g} -> sum of c_i e_{i,hat(g)(i)} over F_p (p = 2^31 - 1),
/// x* -> transpose, and reports whether every result is zero. Coefficients of f
/// must be integral (rationals are mapped into F_p).
bool vanishes_on_random_substitutions(const GPolynomial& f, const Grading& grading,
                                      std::size_t samples, std::uint64_t seed);

/// Smallest length of a minimal monomial identity over the support alphabet, up
/// to max_degree; nullopt when none exists. Experimental probe of whether
/// degree n always suffices.
std::optional<std::size_t> shortest_minimal_identity(const Grading& grading,
                                                     std::size_t max_degree);

}  // namespace gpi
