#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "gpi/freealg.hpp"
#include "gpi/grading.hpp"

namespace gpi {

/// Seeded generator with platform-independent bounded draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish in [0, bound); bound must be positive.
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
  /// Inclusive range.
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

/// Random index-free word over the support alphabet, length 1..max_length.
SignedWord random_signed_word(const Grading& grading, Rng& rng, std::size_t max_length);

/// Random strongly multi-homogeneous polynomial with integer coefficients in
/// [-3, 3]. Roughly half the outputs are built to be identities: pairs of
/// monomials related by random moves modulo J with opposite coefficients, plus
/// monomial-identity terms.
GPolynomial random_smh_polynomial(const Grading& grading, Rng& rng, std::size_t max_degree,
                                  std::size_t max_terms, CoeffRing ring = CoeffRing::rationals());

}  // namespace gpi
