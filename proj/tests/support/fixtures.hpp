#pragma once
// Gradings used across the test suites, and an oracle for products of generic
// matrices built directly from the group table (no hat maps, no sparse code).

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "gpi/freealg.hpp"
#include "gpi/grading.hpp"
#include "gpi/group.hpp"
#include "gpi/symalg.hpp"

namespace fixtures {

inline gpi::Grading grading(const gpi::Group& g, const std::vector<std::string>& names) {
  std::vector<gpi::Element> tuple;
  for (const auto& n : names) tuple.push_back(g.at(n));
  return gpi::Grading::build(g, tuple);
}

inline gpi::Grading cyclic(std::size_t order, const std::vector<std::string>& names) {
  return grading(gpi::make_cyclic(order), names);
}

inline gpi::Grading z2() { return cyclic(2, {"e", "a"}); }
inline gpi::Grading z3() { return cyclic(3, {"e", "a", "a2"}); }
inline gpi::Grading z4_full() { return cyclic(4, {"e", "a", "a2", "a3"}); }
inline gpi::Grading z4() { return cyclic(4, {"e", "a", "a2"}); }
inline gpi::Grading z6() { return cyclic(6, {"e", "a", "a2"}); }
inline gpi::Grading klein() { return grading(gpi::make_klein_four(), {"e", "a", "b"}); }
// Two distinct triples in S_3 (images written 0-based): one with two
// transpositions, one mixing a transposition with a 3-cycle.
inline gpi::Grading s3_first() { return grading(gpi::make_symmetric(3), {"e", "p102", "p021"}); }
inline gpi::Grading s3_second() { return grading(gpi::make_symmetric(3), {"e", "p102", "p120"}); }

/// The gradings the property criteria range over.
inline std::vector<std::pair<std::string, gpi::Grading>> corpus() {
  return {{"Z2(e,a)", z2()},          {"Z4(e,a,a2)", z4()},   {"Z6(e,a,a2)", z6()},
          {"Klein(e,a,b)", klein()},  {"S3(e,p102,p021)", s3_first()},
          {"S3(e,p102,p120)", s3_second()}};
}

// ---- dense symbolic oracle ----

using Var = std::array<int, 3>;  // slot, row, col
using Mono = std::vector<Var>;   // sorted
using Poly = std::map<Mono, long>;
using Dense = std::vector<std::vector<Poly>>;

inline Mono mono_mul(Mono a, const Mono& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

/// A_{slot,g} from the definition: y_{ij} at (i,j) whenever g_i^{-1} g_j = g.
inline Dense dense_generic(const gpi::Grading& gr, int slot, gpi::Element g, bool star) {
  const auto& G = gr.group();
  const int n = static_cast<int>(gr.n());
  Dense m(n, std::vector<Poly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (G.mul(G.inv(gr.tuple()[i - 1]), gr.tuple()[j - 1]) == g) {
        if (star)
          m[j - 1][i - 1][Mono{{slot, i, j}}] = 1;
        else
          m[i - 1][j - 1][Mono{{slot, i, j}}] = 1;
      }
  return m;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [ma, ca] : a[i][k])
        for (std::size_t j = 0; j < n; ++j)
          for (const auto& [mb, cb] : b[k][j]) {
            auto& slot = c[i][j][mono_mul(ma, mb)];
            slot += ca * cb;
            if (slot == 0) c[i][j].erase(mono_mul(ma, mb));
          }
  return c;
}

inline Dense dense_product(const gpi::Grading& gr, const std::vector<gpi::SlotLetter>& word) {
  Dense acc = dense_generic(gr, word[0].slot, word[0].letter.element, word[0].letter.star);
  for (std::size_t p = 1; p < word.size(); ++p)
    acc = dense_mul(acc, dense_generic(gr, word[p].slot, word[p].letter.element, word[p].letter.star));
  return acc;
}

/// Integer-coefficient view of a sparse matrix over Q, for comparison with the oracle.
inline Dense to_dense(const gpi::SparseMatrix& m) {
  const std::size_t n = m.n();
  Dense d(n, std::vector<Poly>(n));
  for (const auto& [pos, value] : m.entries())
    for (const auto& [mono, coeff] : value.terms()) {
      Mono key;
      for (const auto& v : mono.vars()) key.push_back({v.slot, v.row, v.col});
      d[pos.first - 1][pos.second - 1][key] = coeff.value().get_num().get_si();
    }
  return d;
}

inline bool dense_zero(const Dense& d) {
  for (const auto& row : d)
    for (const auto& p : row)
      if (!p.empty()) return false;
  return true;
}

}  // namespace fixtures
