#include "gpi/symalg.hpp"

#include <algorithm>

#include "gpi/error.hpp"

namespace gpi {

std::string OmegaVar::to_string() const {
  return "y[" + std::to_string(slot) + "," + std::to_string(row) + "," + std::to_string(col) + "]";
}

CMonomial::CMonomial(std::vector<OmegaVar> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
}

std::size_t CMonomial::count(const OmegaVar& v) const {
  auto [lo, hi] = std::equal_range(vars_.begin(), vars_.end(), v);
  return static_cast<std::size_t>(hi - lo);
}

CMonomial operator*(const CMonomial& a, const CMonomial& b) {
  CMonomial out;
  out.vars_.reserve(a.vars_.size() + b.vars_.size());
  std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
             std::back_inserter(out.vars_));
  return out;
}

std::string CMonomial::to_string() const {
  if (vars_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < vars_.size();) {
    std::size_t j = i;
    while (j < vars_.size() && vars_[j] == vars_[i]) ++j;
    if (!out.empty()) out += "*";
    out += vars_[i].to_string();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

CPolynomial::CPolynomial(CoeffRing ring, CMonomial m) : ring_(ring) {
  terms_.emplace_back(std::move(m), Scalar(ring, 1L));
}

CPolynomial::CPolynomial(CoeffRing ring, CMonomial m, Scalar c) : ring_(ring) {
  c = c.to_ring(ring);
  if (!c.is_zero()) terms_.emplace_back(std::move(m), std::move(c));
}

CPolynomial CPolynomial::variable(CoeffRing ring, OmegaVar v) {
  return CPolynomial(ring, CMonomial::of(v));
}

bool CPolynomial::is_unit_monomial() const {
  return terms_.size() == 1 && terms_.front().second.is_one();
}

void CPolynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.second.is_zero(); });
  terms_ = std::move(merged);
}

CPolynomial& CPolynomial::operator+=(const CPolynomial& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    ring_ = other.ring_;
    terms_ = other.terms_;
    return *this;
  }
  if (!(ring_ == other.ring_)) throw InvalidArgument("adding polynomials over different rings");
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Scalar c = a->second + b->second;
      if (!c.is_zero()) out.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

CPolynomial& CPolynomial::operator-=(const CPolynomial& other) {
  CPolynomial neg = other;
  for (auto& t : neg.terms_) t.second = -t.second;
  return *this += neg;
}

CPolynomial& CPolynomial::operator*=(const Scalar& c) {
  const Scalar cc = c.to_ring(ring_);
  if (cc.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= cc;
  return *this;
}

CPolynomial operator*(const CPolynomial& a, const CPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return CPolynomial(a.is_zero() ? a.ring_ : b.ring_);
  if (!(a.ring_ == b.ring_)) throw InvalidArgument("multiplying polynomials over different rings");
  CPolynomial out(a.ring_);
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.terms_.emplace_back(ma * mb, ca * cb);
  if (out.terms_.size() > 1) {
    out.normalize();
  } else {
    std::erase_if(out.terms_, [](const CPolynomial::Term& t) { return t.second.is_zero(); });
  }
  return out;
}

bool CPolynomial::operator==(const CPolynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].first == other.terms_[i].first) || !(terms_[i].second == other.terms_[i].second))
      return false;
  }
  return true;
}

std::string CPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = c.is_negative();
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mag.is_one()) {
      out += m.to_string();
    } else if (m.is_one()) {
      out += mag.to_string();
    } else {
      out += mag.to_string() + "*" + m.to_string();
    }
  }
  return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n, CoeffRing ring) {
  SparseMatrix out(n, ring);
  for (int i = 1; i <= static_cast<int>(n); ++i) out.entries_.emplace(Position{i, i}, CPolynomial(ring, CMonomial{}));
  return out;
}

SparseMatrix SparseMatrix::unit(std::size_t n, int row, int col, CoeffRing ring) {
  SparseMatrix out(n, ring);
  out.set(row, col, CPolynomial(ring, CMonomial{}));
  return out;
}

void SparseMatrix::check_index(int row, int col) const {
  const int n = static_cast<int>(n_);
  if (row < 1 || row > n || col < 1 || col > n) {
    throw InvalidArgument("matrix position (" + std::to_string(row) + ", " + std::to_string(col) +
                          ") out of range 1.." + std::to_string(n_));
  }
}

void SparseMatrix::check_compatible(const SparseMatrix& other) const {
  if (n_ != other.n_) {
    throw InvalidArgument("matrix size mismatch: " + std::to_string(n_) + " vs " +
                          std::to_string(other.n_));
  }
}

CPolynomial SparseMatrix::at(int row, int col) const {
  check_index(row, col);
  auto it = entries_.find({row, col});
  return it == entries_.end() ? CPolynomial(ring_) : it->second;
}

void SparseMatrix::add_to(int row, int col, const CPolynomial& value) {
  check_index(row, col);
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SparseMatrix::set(int row, int col, CPolynomial value) {
  check_index(row, col);
  if (value.is_zero()) {
    entries_.erase({row, col});
  } else {
    entries_.insert_or_assign({row, col}, std::move(value));
  }
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
  check_compatible(other);
  for (const auto& [pos, v] : other.entries_) add_to(pos.first, pos.second, v);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& other) {
  check_compatible(other);
  for (const auto& [pos, v] : other.entries_) add_to(pos.first, pos.second, CPolynomial(ring_) - v);
  return *this;
}

SparseMatrix& SparseMatrix::operator*=(const Scalar& c) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? entries_.erase(it) : std::next(it);
  }
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  a.check_compatible(b);
  SparseMatrix out(a.n_, a.ring_);
  for (const auto& [pa, va] : a.entries_) {
    const int k = pa.second;
    for (auto it = b.entries_.lower_bound({k, 0}); it != b.entries_.end() && it->first.first == k;
         ++it) {
      out.add_to(pa.first, it->first.second, va * it->second);
    }
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(n_, ring_);
  for (const auto& [pos, v] : entries_) out.entries_.emplace(Position{pos.second, pos.first}, v);
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  return n_ == other.n_ && entries_ == other.entries_;
}

std::string SparseMatrix::to_string() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& [pos, v] : entries_) {
    if (!out.empty()) out += "\n";
    out += "(" + std::to_string(pos.first) + "," + std::to_string(pos.second) + "): " + v.to_string();
  }
  return out;
}

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b) { return a * b; }
SparseMatrix mat_add(const SparseMatrix& a, const SparseMatrix& b) { return a + b; }
SparseMatrix transpose(const SparseMatrix& a) { return a.transpose(); }

OmegaVar star_omega(const OmegaVar& v, const Grading& grading) {
  const int n = static_cast<int>(grading.n());
  if (v.row < 1 || v.row > n || v.col < 1 || v.col > n) {
    throw InvalidVariable(v.to_string() + " has a position outside 1.." + std::to_string(n));
  }
  // Every position (i,j) is realized by exactly one element, g_i^{-1} g_j.
  const Element g = grading.degree_of_unit(v.row, v.col);
  if (grading.hat(g).raw(v.row) != v.col) {
    throw InvalidVariable(v.to_string() + " is not an entry of any generic matrix");
  }
  return OmegaVar{v.slot, v.col, v.row};
}

SparseMatrix generic_matrix(int slot, Element g, const Grading& grading, CoeffRing ring) {
  SparseMatrix out(grading.n(), ring);
  const auto& h = grading.hat(g);
  for (int i : h.domain()) {
    const int j = h.raw(i);
    out.set(i, j, CPolynomial::variable(ring, OmegaVar{slot, i, j}));
  }
  return out;
}

SparseMatrix generic_matrix_star(int slot, Element g, const Grading& grading, CoeffRing ring) {
  // Entry (i, hat(g^{-1})(i)) holds y_{hat(g)^{-1}(i), i}.
  SparseMatrix out(grading.n(), ring);
  const auto& h = grading.hat(grading.group().inv(g));
  for (int i : h.domain()) {
    const int j = h.raw(i);
    out.set(i, j, CPolynomial::variable(ring, OmegaVar{slot, j, i}));
  }
  return out;
}

STSequences st_sequences(int k, std::span<const SignedElement> word, const Grading& grading) {
  if (word.empty()) throw InvalidArgument("st_sequences needs a nonempty word");
  STSequences out;
  out.k = k;
  out.s.reserve(word.size() + 1);
  out.t.reserve(word.size());
  out.s.push_back(k);
  int row = k;
  for (const auto& letter : word) {
    const int next = grading.hat_signed(letter).raw(row);
    if (next == 0) {
      throw DomainError("row " + std::to_string(k) +
                        " is outside the domain of the word's composition");
    }
    out.t.push_back(letter.star ? row : next);
    out.s.push_back(next);
    row = next;
  }
  return out;
}

SparseMatrix closed_form_product(std::span<const SlotLetter> word, const Grading& grading,
                                 CoeffRing ring) {
  if (word.empty()) throw InvalidArgument("closed_form_product needs a nonempty word");
  SparseMatrix out(grading.n(), ring);
  std::vector<OmegaVar> vars;
  vars.reserve(word.size());
  for (int k = 1; k <= static_cast<int>(grading.n()); ++k) {
    vars.clear();
    int row = k;
    for (const auto& [slot, letter] : word) {
      const int next = grading.hat_signed(letter).raw(row);
      if (next == 0) break;
      vars.push_back(letter.star ? OmegaVar{slot, next, row} : OmegaVar{slot, row, next});
      row = next;
    }
    if (vars.size() == word.size()) {
      out.set(k, row, CPolynomial(ring, CMonomial(std::move(vars))));
      vars = {};
    }
  }
  return out;
}

SparseMatrix iterated_product(std::span<const SlotLetter> word, const Grading& grading,
                              CoeffRing ring) {
  if (word.empty()) throw InvalidArgument("iterated_product needs a nonempty word");
  auto factor = [&](const SlotLetter& l) {
    return l.letter.star ? generic_matrix_star(l.slot, l.letter.element, grading, ring)
                         : generic_matrix(l.slot, l.letter.element, grading, ring);
  };
  SparseMatrix acc = factor(word.front());
  for (std::size_t r = 1; r < word.size(); ++r) acc = acc * factor(word[r]);
  return acc;
}

std::vector<SlotLetter> with_positional_slots(std::span<const SignedElement> word) {
  std::vector<SlotLetter> out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) out.push_back({static_cast<int>(i + 1), word[i]});
  return out;
}

}  // namespace gpi
