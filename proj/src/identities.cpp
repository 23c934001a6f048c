#include "gpi/identities.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gpi/error.hpp"
#include "gpi/kernels.hpp"

namespace gpi {

IdentityVerdict is_monomial_identity(std::span<const SignedElement> word, const Grading& grading) {
  if (word.empty()) throw InvalidArgument("monomial must be nonempty");
  for (const auto& l : word) {
    if (!grading.group().contains(l.element))
      throw InvalidVariable("letter element not in the grading's group");
  }
  IdentityVerdict v;
  const PartialInjection comp = grading.compose_signed(word);
  if (comp.empty()) return v;

  v.is_identity = false;
  const int k = comp.domain().front();
  const STSequences st = st_sequences(k, word, grading);
  Witness w;
  w.start_row = k;
  w.end_row = st.s.back();
  w.units.reserve(word.size());
  for (std::size_t p = 0; p < word.size(); ++p) {
    const int from = st.s[p];
    const int to = st.s[p + 1];
    w.units.emplace_back(word[p].star ? to : from, word[p].star ? from : to);
  }
  v.witness = std::move(w);
  return v;
}

IdentityVerdict is_monomial_identity(const GMonomial& m, const Grading& grading) {
  return is_monomial_identity(m.signed_word(), grading);
}

bool check_witness(std::span<const SignedElement> word, const Witness& w, const Grading& grading) {
  if (w.units.size() != word.size() || word.empty()) return false;
  const int n = static_cast<int>(grading.n());
  int row = w.start_row;
  for (std::size_t p = 0; p < word.size(); ++p) {
    const auto [a, b] = w.units[p];
    if (a < 1 || a > n || b < 1 || b > n) return false;
    if (grading.degree_of_unit(a, b) != word[p].element) return false;
    const int from = word[p].star ? b : a;
    const int to = word[p].star ? a : b;
    if (from != row) return false;  // e_{.,row} e_{from,to} vanishes otherwise
    row = to;
  }
  return row == w.end_row;
}

IdentityVerdict is_identity(const GPolynomial& f, const Grading& grading) {
  IdentityVerdict v;
  const SparseMatrix e = evaluate(f, grading);
  for (const auto& [pos, value] : e.entries()) v.offending.push_back({pos.first, pos.second, value});
  v.is_identity = v.offending.empty();
  return v;
}

std::optional<std::pair<std::size_t, std::size_t>> find_identity_subword(
    std::span<const SignedElement> word, const Grading& grading, std::size_t max_length) {
  const std::size_t m = word.size();
  for (std::size_t len = 1; len <= std::min(max_length, m); ++len) {
    for (std::size_t k = 0; k + len <= m; ++k) {
      if (grading.compose_signed(word.subspan(k, len)).empty()) return std::make_pair(k + 1, k + len);
    }
  }
  return std::nullopt;
}

std::optional<ConsequenceCertificate> block_certificate(std::span<const SignedElement> word,
                                                        std::size_t first, std::size_t last,
                                                        const Grading& grading,
                                                        std::size_t max_blocks) {
  if (first < 1 || last > word.size() || first > last)
    throw InvalidArgument("block window out of range");
  const Group& group = grading.group();
  const std::size_t len = last - first + 1;
  // deg[i][j]: degree of window letters i..j-1 (0-based, half open).
  std::vector<Element> deg_flat((len + 1) * (len + 1), group.identity());
  const auto deg = [&](std::size_t i, std::size_t j) -> Element& { return deg_flat[i * (len + 1) + j]; };
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j <= len; ++j) {
      const auto& l = word[first - 1 + j - 1];
      deg(i, j) = group.mul(deg(i, j - 1), l.star ? group.inv(l.element) : l.element);
    }
  // Layered search by number of blocks; state = (cut position, composition so far).
  struct State {
    std::size_t pos;
    PartialInjection comp;
    std::size_t parent;  // index into the previous layer
  };
  std::vector<std::vector<State>> layers{{{0, PartialInjection::identity(grading.n()), 0}}};
  for (std::size_t blocks = 1; blocks <= std::min(max_blocks, len); ++blocks) {
    std::vector<State> next;
    // Few distinct compositions reach each cut, so a linear scan beats a tree.
    std::vector<std::vector<std::size_t>> at_cut(len + 1);
    const auto& prev = layers.back();
    PartialInjection comp;
    for (std::size_t p = 0; p < prev.size(); ++p) {
      for (std::size_t j = prev[p].pos + 1; j <= len; ++j) {
        prev[p].comp.then_into(grading.hat(deg(prev[p].pos, j)), comp);
        if (comp.empty() && j == len) {
          ConsequenceCertificate cert;
          cert.first = first;
          cert.last = last;
          std::size_t at = p, cut = j;
          for (std::size_t layer = layers.size(); layer-- > 0;) {
            cert.block_ends.push_back(first - 1 + cut);
            cut = layers[layer][at].pos;
            at = layers[layer][at].parent;
          }
          std::reverse(cert.block_ends.begin(), cert.block_ends.end());
          std::size_t start = 0;
          for (const auto end : cert.block_ends) {
            cert.block_degrees.push_back(deg(start, end - first + 1));
            start = end - first + 1;
          }
          return cert;
        }
        // An empty composition before the end cannot recover; skip it.
        if (comp.empty() || j == len) continue;
        auto& bucket = at_cut[j];
        if (std::none_of(bucket.begin(), bucket.end(), [&](std::size_t k) { return next[k].comp == comp; })) {
          bucket.push_back(next.size());
          next.push_back({j, comp, p});
        }
      }
    }
    if (next.empty()) break;
    layers.push_back(std::move(next));
  }
  return std::nullopt;
}

std::optional<ConsequenceCertificate> find_consequence_certificate(
    std::span<const SignedElement> word, const Grading& grading, std::size_t max_blocks) {
  const std::size_t m = word.size();
  for (std::size_t len = 1; len <= m; ++len)
    for (std::size_t k = 0; k + len <= m; ++k) {
      if (!grading.compose_signed(word.subspan(k, len)).empty()) continue;
      if (auto cert = block_certificate(word, k + 1, k + len, grading, max_blocks)) return cert;
    }
  return std::nullopt;
}

bool check_consequence_certificate(std::span<const SignedElement> word,
                                   const ConsequenceCertificate& cert, const Grading& grading) {
  const Group& group = grading.group();
  if (cert.first < 1 || cert.last > word.size() || cert.first > cert.last) return false;
  if (cert.block_ends.empty() || cert.block_ends.size() != cert.block_degrees.size()) return false;
  if (cert.block_ends.back() != cert.last) return false;
  SignedWord blocks;
  std::size_t pos = cert.first;
  for (std::size_t b = 0; b < cert.block_ends.size(); ++b) {
    if (cert.block_ends[b] < pos) return false;
    Element d = group.identity();
    for (; pos <= cert.block_ends[b]; ++pos) {
      const auto& l = word[pos - 1];
      d = group.mul(d, l.star ? group.inv(l.element) : l.element);
    }
    if (d != cert.block_degrees[b]) return false;
    blocks.push_back({d, false});
  }
  return grading.compose_signed(blocks).empty();
}

std::vector<SignedElement> signed_alphabet(const Grading& grading) {
  std::vector<SignedElement> out;
  for (const Element g : grading.support()) {
    out.push_back({g, false});
    out.push_back({g, true});
  }
  return out;
}

bool word_less(const SignedWord& a, const SignedWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<SignedWord> enumerate_monomial_identities(const Grading& grading,
                                                      std::size_t max_degree, bool minimal_only,
                                                      const EnumerationLimits& limits) {
  if (max_degree < 1) throw InvalidArgument("max_degree must be at least 1");
  if (max_degree > limits.max_degree_cap) {
    throw ResourceError("max_degree " + std::to_string(max_degree) + " exceeds the cap " +
                        std::to_string(limits.max_degree_cap));
  }
  if (kernels::parallel_available() && kernels::max_threads() > 1) {
    return kernels::enumerate_identities_parallel(grading, max_degree, minimal_only,
                                                  limits.max_words);
  }
  return kernels::enumerate_identities_serial(grading, max_degree, minimal_only, limits.max_words);
}

std::vector<std::uint64_t> count_minimal_identities(const Grading& grading,
                                                    std::size_t max_degree) {
  std::vector<std::uint64_t> counts(max_degree + 1, 0);
  if (max_degree == 0) return counts;
  std::vector<PartialInjection> hats;
  for (const auto& l : signed_alphabet(grading)) hats.push_back(grading.hat_signed(l));

  // State: (composition of the word, composition of the word minus its first letter).
  using State = std::pair<PartialInjection, PartialInjection>;
  std::map<State, std::uint64_t> layer;
  const PartialInjection id = PartialInjection::identity(grading.n());
  for (const auto& h : hats) {
    if (h.empty()) {
      ++counts[1];
    } else {
      ++layer[{h, id}];
    }
  }
  for (std::size_t len = 1; len < max_degree && !layer.empty(); ++len) {
    std::map<State, std::uint64_t> next;
    for (const auto& [state, c] : layer) {
      for (const auto& h : hats) {
        PartialInjection tail = state.second.then(h);
        if (tail.empty()) continue;
        PartialInjection comp = state.first.then(h);
        if (comp.empty()) {
          counts[len + 1] += c;
        } else {
          next[{std::move(comp), std::move(tail)}] += c;
        }
      }
    }
    layer = std::move(next);
  }
  return counts;
}

std::optional<std::size_t> shortest_minimal_identity(const Grading& grading,
                                                     std::size_t max_degree) {
  const auto counts = count_minimal_identities(grading, max_degree);
  for (std::size_t len = 1; len < counts.size(); ++len)
    if (counts[len]) return len;
  return std::nullopt;
}

bool congruent_mod_J(const GMonomial& m1, const GMonomial& m2, const Grading& grading) {
  if (is_monomial_identity(m1, grading).is_identity || is_monomial_identity(m2, grading).is_identity) {
    throw PreconditionError("congruence modulo J is only decided for non-identity monomials");
  }
  const SparseMatrix e1 = evaluate(m1, grading);
  const SparseMatrix e2 = evaluate(m2, grading);
  bool shared = false;
  for (const auto& [pos, value] : e1.entries()) {
    auto it = e2.entries().find(pos);
    if (it != e2.entries().end() && it->second == value) {
      shared = true;
      break;
    }
  }
  if (shared && !(e1 == e2)) {
    throw InvariantFailure("monomials share an entry but their evaluations differ");
  }
  return shared;
}

UReduction u_reduce(const GPolynomial& f, const Grading& grading) {
  if (!is_strongly_multihomogeneous(f)) {
    throw PreconditionError(
        "u_reduce needs a strongly multi-homogeneous polynomial; split it into components first");
  }
  UReduction r;
  const std::size_t bound = 2 * grading.n() - 1;
  std::map<std::string, std::size_t> class_of;
  for (const auto& [m, c] : f.terms()) {
    const SignedWord word = m.signed_word();
    if (grading.compose_signed(word).empty()) {
      MonomialIdentityTerm t{m, c, find_identity_subword(word, grading, bound), std::nullopt};
      if (!t.certificate) t.consequence = find_consequence_certificate(word, grading, bound);
      if (!t.certificate && !t.consequence) r.in_U_certified = false;
      r.monomial_identity_terms.push_back(std::move(t));
      continue;
    }
    std::string key = evaluate(m, grading, f.ring()).to_string();
    auto [it, inserted] = class_of.try_emplace(key, r.classes.size());
    if (inserted) r.classes.push_back({{}, Scalar(f.ring(), 0L), key});
    auto& cls = r.classes[it->second];
    cls.members.emplace_back(m, c);
    cls.sum += c;
  }
  r.in_T = std::all_of(r.classes.begin(), r.classes.end(),
                       [](const CongruenceClass& c) { return c.sum.is_zero(); });
  r.in_U_certified = r.in_U_certified && r.in_T;
  return r;
}

std::vector<std::pair<int, GPolynomial>> basis_identities(const Grading& grading, CoeffRing ring) {
  const Group& group = grading.group();
  const Element e = group.identity();
  auto mono = [&](std::vector<GVar> letters) {
    return GPolynomial::monomial(GMonomial(std::move(letters)), ring);
  };
  std::vector<std::pair<int, GPolynomial>> out;
  out.emplace_back(1, mono({{1, e, false}, {2, e, false}}) - mono({{2, e, false}, {1, e, false}}));
  out.emplace_back(2, mono({{1, e, false}}) - mono({{1, e, true}}));
  for (const Element g : group.elements()) {
    if (!grading.in_support(g)) out.emplace_back(3, mono({{1, g, false}}));
  }
  for (const Element g : grading.support()) {
    if (g == e) continue;
    const Element gi = group.inv(g);
    out.emplace_back(4, mono({{1, g, false}, {2, gi, false}, {3, g, false}}) -
                            mono({{3, g, false}, {2, gi, false}, {1, g, false}}));
  }
  return out;
}

bool BasisReport::all_passed() const {
  return std::all_of(families.begin(), families.end(),
                     [](const BasisFamilyReport& f) { return f.passed; });
}

namespace {

constexpr std::uint64_t kSampleModulus = 2147483647ULL;  // 2^31 - 1

using Dense = std::vector<std::uint64_t>;  // n*n, row-major residues

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

Dense dense_mul(const Dense& a, const Dense& b, std::size_t n, std::uint64_t p) {
  Dense c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t aik = a[i * n + k];
      if (!aik) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + mulmod(aik, b[k * n + j], p)) % p;
    }
  return c;
}

}  // namespace

bool vanishes_on_random_substitutions(const GPolynomial& f, const Grading& grading,
                                      std::size_t samples, std::uint64_t seed) {
  const std::size_t n = grading.n();
  const CoeffRing sample_ring = f.ring().is_rational() ? CoeffRing{kSampleModulus} : f.ring();
  const std::uint64_t p = sample_ring.modulus;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    std::map<std::pair<int, Element>, Dense> plain;
    auto value_of = [&](const GVar& v) -> Dense {
      auto key = std::make_pair(v.index, v.element);
      auto it = plain.find(key);
      if (it == plain.end()) {
        Dense a(n * n, 0);
        const auto& h = grading.hat(v.element);
        for (int i : h.domain()) a[(i - 1) * n + (h.raw(i) - 1)] = rng() % p;
        it = plain.emplace(key, std::move(a)).first;
      }
      if (!v.star) return it->second;
      Dense t(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[j * n + i] = it->second[i * n + j];
      return t;
    };
    Dense total(n * n, 0);
    for (const auto& [m, c] : f.terms()) {
      Dense acc = value_of(m[0]);
      for (std::size_t i = 1; i < m.size(); ++i) acc = dense_mul(acc, value_of(m[i]), n, p);
      const std::uint64_t coeff = c.to_ring(sample_ring).value().get_num().get_ui();
      for (std::size_t i = 0; i < n * n; ++i)
        total[i] = (total[i] + mulmod(acc[i], coeff, p)) % p;
    }
    if (std::any_of(total.begin(), total.end(), [](std::uint64_t x) { return x != 0; })) return false;
  }
  return true;
}

BasisReport verify_basis(const Grading& grading, std::size_t samples, std::uint64_t seed,
                         CoeffRing ring) {
  static const char* const kNames[] = {"", "commuting neutral variables", "neutral variables are symmetric",
                                       "off-support variables vanish", "x_g x_{g^-1} x_g reversal"};
  BasisReport report;
  for (int fam = 1; fam <= 4; ++fam) report.families.push_back({kNames[fam], true, 0, {}});
  std::size_t instance = 0;
  for (const auto& [fam, poly] : basis_identities(grading, ring)) {
    auto& entry = report.families[static_cast<std::size_t>(fam - 1)];
    ++entry.instances;
    const bool generic_ok = is_identity(poly, grading).is_identity;
    const bool sample_ok = vanishes_on_random_substitutions(poly, grading, samples, seed + instance);
    ++instance;
    if (!generic_ok || !sample_ok) {
      entry.passed = false;
      entry.failures.push_back(format_poly(poly, grading.group()) +
                               (generic_ok ? " (random substitution)" : " (generic evaluation)"));
    }
  }
  return report;
}

}  // namespace gpi
