#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gpi {

/// Coefficient ring: the rationals (modulus 0) or a prime field F_p.
struct CoeffRing {
  std::uint64_t modulus = 0;

  static CoeffRing rationals() { return {}; }
  /// Throws InvalidArgument unless p is prime and below 2^62.
  static CoeffRing prime(std::uint64_t p);
  /// "q" or "modp:P", as accepted on the command line.
  static CoeffRing parse(const std::string& text);

  bool is_rational() const noexcept { return modulus == 0; }
  std::string to_string() const;

  bool operator==(const CoeffRing&) const = default;
};

bool is_prime(std::uint64_t p);

/// Element of a CoeffRing. Mixing rings in one operation throws InvalidArgument.
class Scalar {
 public:
  Scalar() = default;
  Scalar(CoeffRing ring, long value);
  /// Maps a rational into the ring; throws if the denominator vanishes mod p.
  Scalar(CoeffRing ring, const mpq_class& value);

  CoeffRing ring() const noexcept { return ring_; }
  bool is_zero() const;
  bool is_one() const;
  /// Integer-valued rationals (and all residues) are "integral"; used by the printer.
  bool is_negative() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  bool operator==(const Scalar& other) const;

  /// Rational value (residue for F_p, in 0..p-1).
  mpq_class value() const;
  /// Reduce into another ring (Q -> F_p, or F_p -> F_p identity).
  Scalar to_ring(CoeffRing target) const;

  std::string to_string() const;

 private:
  void check_same(const Scalar& other) const;

  CoeffRing ring_;
  mpq_class q_;           // used when ring_ is Q
  std::uint64_t r_ = 0;   // used when ring_ is F_p
};

}  // namespace gpi
