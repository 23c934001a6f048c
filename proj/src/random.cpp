#include "gpi/random.hpp"

#include <algorithm>

#include "gpi/identities.hpp"

namespace gpi {
namespace {

GMonomial random_arrangement(std::vector<GVar> letters, Rng& rng) {
  for (std::size_t i = letters.size(); i > 1; --i) std::swap(letters[i - 1], letters[rng.below(i)]);
  for (auto& v : letters) v.star = rng.chance(50);
  return GMonomial(std::move(letters));
}

GMonomial random_walk_mod_J(GMonomial m, const Grading& grading, Rng& rng) {
  const std::size_t steps = 1 + rng.below(4);
  for (std::size_t s = 0; s < steps; ++s) {
    auto moves = rewrite_moves(m, grading);
    if (moves.empty()) break;
    m = moves[rng.below(moves.size())].result;
  }
  return m;
}

long nonzero_coefficient(Rng& rng) {
  const long c = rng.between(1, 3);
  return rng.chance(50) ? c : -c;
}

}  // namespace

SignedWord random_signed_word(const Grading& grading, Rng& rng, std::size_t max_length) {
  const auto& support = grading.support();
  const std::size_t len = 1 + rng.below(max_length);
  SignedWord w(len);
  for (auto& l : w) l = {support[rng.below(support.size())], rng.chance(50)};
  return w;
}

GPolynomial random_smh_polynomial(const Grading& grading, Rng& rng, std::size_t max_degree,
                                  std::size_t max_terms, CoeffRing ring) {
  const Group& group = grading.group();
  const auto& support = grading.support();
  std::vector<Element> off_support;
  for (const auto g : group.elements())
    if (!grading.in_support(g)) off_support.push_back(g);

  const std::size_t degree = 1 + rng.below(max_degree);
  const std::size_t distinct = 1 + rng.below(degree);
  auto pick_element = [&] {
    if (!off_support.empty() && rng.chance(5)) return off_support[rng.below(off_support.size())];
    return support[rng.below(support.size())];
  };
  std::vector<Element> element_of(distinct + 1);
  for (std::size_t k = 1; k <= distinct; ++k) element_of[k] = pick_element();
  std::vector<GVar> base;
  for (std::size_t p = 0; p < degree; ++p) {
    const int k = static_cast<int>(p < distinct ? p + 1 : 1 + rng.below(distinct));
    base.push_back({k, element_of[static_cast<std::size_t>(k)], false});
  }

  const std::size_t terms = 1 + rng.below(max_terms);
  GPolynomial f(ring);
  if (rng.chance(50)) {
    for (std::size_t attempt = 0; attempt < 4 * terms && f.size() < terms; ++attempt) {
      GMonomial m = random_arrangement(base, rng);
      const long c = nonzero_coefficient(rng);
      if (grading.compose_signed(m.signed_word()).empty()) {
        f.add_term(m, Scalar(ring, c));
        continue;
      }
      GMonomial partner = random_walk_mod_J(m, grading, rng);
      if (partner == m) continue;
      f.add_term(m, Scalar(ring, c));
      f.add_term(partner, Scalar(ring, -c));
    }
  } else {
    // Same index counts, elements occasionally re-drawn per term.
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<GVar> letters = base;
      if (rng.chance(20)) {
        std::vector<Element> fresh(distinct + 1);
        for (std::size_t k = 1; k <= distinct; ++k) fresh[k] = pick_element();
        for (auto& v : letters) v.element = fresh[static_cast<std::size_t>(v.index)];
      }
      f.add_term(random_arrangement(std::move(letters), rng), Scalar(ring, nonzero_coefficient(rng)));
    }
  }
  if (f.is_zero()) f.add_term(random_arrangement(base, rng), Scalar(ring, 1L));
  return f;
}

}  // namespace gpi
