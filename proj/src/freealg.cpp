#include "gpi/freealg.hpp"

#include <algorithm>

#include "gpi/error.hpp"

namespace gpi {

GMonomial GMonomial::star() const {
  std::vector<GVar> out(letters_.rbegin(), letters_.rend());
  for (auto& v : out) v.star = !v.star;
  return GMonomial(std::move(out));
}

GMonomial GMonomial::subword(std::size_t k, std::size_t l) const {
  if (k < 1 || k > l || l > size()) {
    throw InvalidArgument("subword range [" + std::to_string(k) + ", " + std::to_string(l) +
                          "] invalid for a word of length " + std::to_string(size()));
  }
  return GMonomial(std::vector<GVar>(letters_.begin() + static_cast<std::ptrdiff_t>(k - 1),
                                     letters_.begin() + static_cast<std::ptrdiff_t>(l)));
}

SignedWord GMonomial::signed_word() const {
  SignedWord out;
  out.reserve(size());
  for (const auto& v : letters_) out.push_back(v.letter());
  return out;
}

std::vector<SlotLetter> GMonomial::slot_word() const {
  std::vector<SlotLetter> out;
  out.reserve(size());
  for (const auto& v : letters_) out.push_back({v.index, v.letter()});
  return out;
}

GMonomial operator*(const GMonomial& a, const GMonomial& b) {
  std::vector<GVar> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return GMonomial(std::move(out));
}

std::strong_ordering GMonomial::operator<=>(const GMonomial& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(),
                                                other.letters_.begin(), other.letters_.end());
}

MultiDegree multidegree(const GMonomial& m) {
  MultiDegree d;
  for (const auto& v : m.letters()) ++d[v.index];
  return d;
}

GPolynomial GPolynomial::monomial(GMonomial m, CoeffRing ring) {
  GPolynomial f(ring);
  f.add_term(m, Scalar(ring, 1L));
  return f;
}

void GPolynomial::add_term(const GMonomial& m, const Scalar& c) {
  Scalar cc = c.to_ring(ring_);
  if (cc.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, cc);
  if (!inserted) {
    it->second += cc;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GPolynomial& GPolynomial::operator+=(const GPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GPolynomial& GPolynomial::operator-=(const GPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GPolynomial& GPolynomial::operator*=(const Scalar& c) {
  const Scalar cc = c.to_ring(ring_);
  if (cc.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= cc;
  return *this;
}

GPolynomial operator*(const GPolynomial& a, const GPolynomial& b) {
  GPolynomial out(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

GPolynomial GPolynomial::with_ring(CoeffRing target) const {
  GPolynomial out(target);
  for (const auto& [m, c] : terms_) out.add_term(m, c.to_ring(target));
  return out;
}

Element gdegree(const GMonomial& m, const Group& group) {
  if (m.empty()) throw InvalidArgument("gdegree of the empty monomial");
  Element d = group.identity();
  for (const auto& v : m.letters()) {
    if (!group.contains(v.element)) throw InvalidVariable("letter element not in the group");
    d = group.mul(d, v.star ? group.inv(v.element) : v.element);
  }
  return d;
}

GPolynomial star_polynomial(const GPolynomial& f) {
  GPolynomial out(f.ring());
  for (const auto& [m, c] : f.terms()) out.add_term(m.star(), c);
  return out;
}

GMonomial subword(const GMonomial& m, std::size_t k, std::size_t l) { return m.subword(k, l); }

std::vector<GPolynomial> multihomogeneous_components(const GPolynomial& f) {
  std::map<MultiDegree, GPolynomial> parts;
  for (const auto& [m, c] : f.terms()) {
    auto [it, _] = parts.try_emplace(multidegree(m), GPolynomial(f.ring()));
    it->second.add_term(m, c);
  }
  std::vector<GPolynomial> out;
  out.reserve(parts.size());
  for (auto& [d, p] : parts) out.push_back(std::move(p));
  return out;
}

bool is_strongly_multihomogeneous(const GPolynomial& f) {
  if (f.terms().empty()) return true;
  const MultiDegree d = multidegree(f.terms().begin()->first);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return multidegree(t.first) == d; });
}

namespace {

class GenericCache {
 public:
  GenericCache(const Grading& grading, CoeffRing ring) : grading_(grading), ring_(ring) {}

  const SparseMatrix& get(const GVar& v) {
    if (!grading_.group().contains(v.element)) {
      throw InvalidVariable("variable x" + std::to_string(v.index) +
                            " refers to an element outside the grading's group");
    }
    auto it = cache_.find(v);
    if (it != cache_.end()) return it->second;
    SparseMatrix a = v.star ? generic_matrix_star(v.index, v.element, grading_, ring_)
                            : generic_matrix(v.index, v.element, grading_, ring_);
    return cache_.emplace(v, std::move(a)).first->second;
  }

 private:
  const Grading& grading_;
  CoeffRing ring_;
  std::map<GVar, SparseMatrix> cache_;
};

SparseMatrix evaluate_with(const GMonomial& m, GenericCache& cache, const Grading& grading,
                           CoeffRing ring) {
  if (m.empty()) return SparseMatrix::identity(grading.n(), ring);
  SparseMatrix acc = cache.get(m[0]);
  for (std::size_t i = 1; i < m.size() && !acc.is_zero(); ++i) acc = acc * cache.get(m[i]);
  // A zero prefix still has to validate the remaining letters.
  for (const auto& v : m.letters()) cache.get(v);
  return acc;
}

}  // namespace

SparseMatrix evaluate(const GMonomial& m, const Grading& grading, CoeffRing ring) {
  GenericCache cache(grading, ring);
  return evaluate_with(m, cache, grading, ring);
}

SparseMatrix evaluate(const GPolynomial& f, const Grading& grading) {
  GenericCache cache(grading, f.ring());
  SparseMatrix out(grading.n(), f.ring());
  for (const auto& [m, c] : f.terms()) out += evaluate_with(m, cache, grading, f.ring()) * c;
  return out;
}

}  // namespace gpi
