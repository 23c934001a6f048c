#include "gpi/scalar.hpp"

#include <charconv>

#include "gpi/error.hpp"

namespace gpi {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (p % d == 0) return p == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, p);
      composite = x != p - 1;
    }
    if (composite) return false;
  }
  return true;
}

CoeffRing CoeffRing::prime(std::uint64_t p) {
  if (p >= (1ULL << 62)) throw InvalidArgument("modulus " + std::to_string(p) + " is too large");
  if (!is_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
  return CoeffRing{p};
}

CoeffRing CoeffRing::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  const std::string prefix = "modp:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw InvalidArgument("bad modulus in coefficient ring '" + text + "'");
    }
    return prime(p);
  }
  throw InvalidArgument("coefficient ring must be 'q' or 'modp:P', got '" + text + "'");
}

std::string CoeffRing::to_string() const {
  return is_rational() ? "Q" : "F_" + std::to_string(modulus);
}

Scalar::Scalar(CoeffRing ring, long value) : ring_(ring) {
  if (ring_.is_rational()) {
    q_ = value;
  } else {
    const auto p = static_cast<long long>(ring_.modulus);
    long long r = static_cast<long long>(value) % p;
    if (r < 0) r += p;
    r_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(CoeffRing ring, const mpq_class& value) : ring_(ring) {
  if (ring_.is_rational()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const std::uint64_t p = ring_.modulus;
  const std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0) {
    throw InvalidArgument("coefficient " + value.get_str() + " has a denominator divisible by " +
                          std::to_string(p));
  }
  r_ = mulmod(reduce(value.get_num(), p), powmod(den, p - 2, p), p);
}

bool Scalar::is_zero() const { return ring_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return ring_.is_rational() ? q_ == 1 : r_ == 1 % ring_.modulus; }

bool Scalar::is_negative() const { return ring_.is_rational() && sgn(q_) < 0; }

void Scalar::check_same(const Scalar& other) const {
  if (!(ring_ == other.ring_)) {
    throw InvalidArgument("mixing coefficient rings " + ring_.to_string() + " and " +
                          other.ring_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (ring_.is_rational()) {
    out.q_ = -q_;
  } else if (r_ != 0) {
    out.r_ = ring_.modulus - r_;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same(other);
  if (ring_.is_rational()) {
    q_ += other.q_;
  } else {
    r_ += other.r_;
    if (r_ >= ring_.modulus) r_ -= ring_.modulus;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same(other);
  if (ring_.is_rational()) {
    q_ *= other.q_;
  } else {
    r_ = mulmod(r_, other.r_, ring_.modulus);
  }
  return *this;
}

bool Scalar::operator==(const Scalar& other) const {
  if (!(ring_ == other.ring_)) return false;
  return ring_.is_rational() ? q_ == other.q_ : r_ == other.r_;
}

mpq_class Scalar::value() const {
  if (ring_.is_rational()) return q_;
  return mpq_class(mpz_class(static_cast<unsigned long>(r_)));
}

Scalar Scalar::to_ring(CoeffRing target) const {
  if (ring_ == target) return *this;
  if (!ring_.is_rational()) {
    throw InvalidArgument("cannot move a coefficient from " + ring_.to_string() + " to " +
                          target.to_string());
  }
  return Scalar(target, q_);
}

std::string Scalar::to_string() const {
  return ring_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace gpi
