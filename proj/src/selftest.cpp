#include "gpi/selftest.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "gpi/error.hpp"
#include "gpi/freealg.hpp"
#include "gpi/identities.hpp"
#include "gpi/random.hpp"
#include "gpi/symalg.hpp"

namespace gpi {
namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.message = describe();
    }
  }
  void note(std::string text) {
    if (result_.passed) result_.message = std::move(text);
  }
  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

SuiteResult group_suite(const Grading& grading) {
  Suite s("group axioms");
  const Group& G = grading.group();
  const auto els = G.elements();
  for (auto a : els) {
    s.expect(G.mul(a, G.inv(a)) == G.identity(), [&] { return "inverse fails for " + G.name(a); });
    for (auto b : els)
      for (auto c : els)
        s.expect(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)),
                 [&] { return "associativity fails at " + G.name(a) + "," + G.name(b) + "," + G.name(c); });
  }
  return s.done();
}

SuiteResult hat_suite(const Grading& grading) {
  Suite s("hat maps and supports");
  const Group& G = grading.group();
  const int n = static_cast<int>(grading.n());
  std::set<Element> units;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) units.insert(grading.degree_of_unit(i, j));
  s.expect(std::set<Element>(grading.support().begin(), grading.support().end()) == units,
           [] { return std::string("support differs from unit degrees"); });
  for (auto g : G.elements()) {
    const auto& h = grading.hat(g);
    s.expect(h.domain() == grading.d_set(g) && h.image() == grading.im_set(g),
             [&] { return "domain/image mismatch for " + G.name(g); });
    s.expect(h.empty() != grading.in_support(g), [&] { return "support test wrong for " + G.name(g); });
    s.expect(grading.hat(G.inv(g)) == h.inverse(), [&] { return "hat(g^-1) != hat(g)^-1 for " + G.name(g); });
    for (int i = 1; i <= n; ++i)
      if (h.defined_at(i))
        s.expect(grading.degree_of_unit(i, h.raw(i)) == g, [&] { return "unit degree mismatch for " + G.name(g); });
    for (auto k : G.elements()) {
      const auto hk = h.then(grading.hat(k));
      const auto ghk = grading.hat(G.mul(g, k));
      // hat(g) then hat(k) is a restriction of hat(gk).
      bool restricted = true;
      for (int i = 1; i <= n; ++i)
        if (hk.defined_at(i)) restricted = restricted && ghk.defined_at(i) && ghk.raw(i) == hk.raw(i);
      s.expect(restricted, [&] { return "composition not a restriction at " + G.name(g) + "," + G.name(k); });
    }
  }
  return s.done();
}

SuiteResult generic_suite(const Grading& grading) {
  Suite s("generic matrices");
  const int n = static_cast<int>(grading.n());
  std::set<std::pair<int, int>> seen;
  for (auto g : grading.group().elements()) {
    const auto a = generic_matrix(1, g, grading);
    s.expect(transpose(a) == generic_matrix_star(1, g, grading),
             [&] { return "transposed generic matrix differs for " + grading.group().name(g); });
    for (const auto& [pos, value] : a.entries()) {
      s.expect(seen.insert(pos).second, [&] { return std::string("position shared by two components"); });
      s.expect(value == CPolynomial::variable(a.ring(), OmegaVar{1, pos.first, pos.second}),
               [] { return std::string("entry is not its own variable"); });
    }
  }
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      const OmegaVar v{1, r, c};
      s.expect(star_omega(star_omega(v, grading), grading) == v, [] { return std::string("star on Omega not involutive"); });
    }
  return s.done();
}

SuiteResult closed_form_suite(const Grading& grading, const SelftestOptions& opt, Rng& rng) {
  Suite s("closed form product");
  for (std::size_t t = 0; t < opt.random_words; ++t) {
    const auto word = random_signed_word(grading, rng, 6);
    const auto slotted = with_positional_slots(word);
    const auto closed = closed_form_product(slotted, grading, opt.ring);
    s.expect(closed == iterated_product(slotted, grading, opt.ring),
             [&] { return "closed form differs for " + format_word(word, grading.group()); });
    std::set<int> rows;
    for (const auto& [pos, value] : closed.entries()) s.expect(rows.insert(pos.first).second, [] { return std::string("two entries in a row"); });
    s.expect(std::vector<int>(rows.begin(), rows.end()) == grading.compose_signed(word).domain(), [] { return std::string("rows differ from the composition's domain"); });
  }
  return s.done();
}

// Enumerate every word up to `degree` over `alphabet`, stopping at `budget`.
template <class F>
std::size_t for_each_word(const std::vector<SignedElement>& alphabet, std::size_t degree,
                          std::size_t budget, F&& f) {
  std::size_t visited = 0;
  SignedWord w;
  std::function<void()> rec = [&] {
    if (!w.empty()) {
      if (visited >= budget) return;
      ++visited;
      f(w);
    }
    if (w.size() == degree) return;
    for (const auto& l : alphabet) {
      w.push_back(l);
      rec();
      w.pop_back();
      if (visited >= budget) return;
    }
  };
  rec();
  return visited;
}

SuiteResult monomial_suite(const Grading& grading, const SelftestOptions& opt) {
  Suite s("monomial criterion");
  const auto alphabet = signed_alphabet(grading);
  const std::size_t visited = for_each_word(alphabet, opt.exhaustive_degree, opt.exhaustive_budget, [&](const SignedWord& w) {
    const bool empty = grading.compose_signed(w).empty();
    const auto verdict = is_monomial_identity(w, grading);
    const bool zero = closed_form_product(with_positional_slots(w), grading, opt.ring).is_zero();
    s.expect(empty == verdict.is_identity && empty == zero,
             [&] { return "criteria disagree on " + format_word(w, grading.group()); });
    s.expect(empty == !verdict.witness.has_value(), [&] { return "witness presence wrong on " + format_word(w, grading.group()); });
    if (verdict.witness)
      s.expect(check_witness(w, *verdict.witness, grading), [&] { return "bad witness on " + format_word(w, grading.group()); });
  });
  if (visited >= opt.exhaustive_budget) s.note("word budget reached; truncated exhaustive pass");
  return s.done();
}

SuiteResult freealg_suite(const Grading& grading, const SelftestOptions& opt, Rng& rng) {
  Suite s("free algebra and evaluation");
  const Group& G = grading.group();
  for (std::size_t t = 0; t < opt.random_polynomials; ++t) {
    const auto f = random_smh_polynomial(grading, rng, 4, 4, opt.ring);
    s.expect(star_polynomial(star_polynomial(f)) == f, [] { return std::string("star is not involutive"); });
    s.expect(transpose(evaluate(f, grading)) == evaluate(star_polynomial(f), grading),
             [&] { return "evaluation does not intertwine star on " + format_poly(f, G); });
    s.expect(is_strongly_multihomogeneous(f), [] { return std::string("generator output not strongly multi-homogeneous"); });
    s.expect(parse_poly(format_poly(f, G), G, opt.ring) == f, [&] { return "format/parse round trip fails on " + format_poly(f, G); });
    const auto& m = f.terms().begin()->first;
    if (m.size() >= 2) {
      const auto left = m.subword(1, 1), right = m.subword(2, m.size());
      s.expect(evaluate(left, grading, opt.ring) * evaluate(right, grading, opt.ring) == evaluate(m, grading, opt.ring),
               [] { return std::string("evaluation is not multiplicative"); });
    }
  }
  return s.done();
}

SuiteResult congruence_suite(const Grading& grading, const SelftestOptions& opt, Rng& rng) {
  Suite s("congruence modulo J");
  for (std::size_t t = 0; t < opt.random_polynomials; ++t) {
    const auto f = random_smh_polynomial(grading, rng, 3, 4, opt.ring);
    std::vector<GMonomial> live;
    for (const auto& [m, c] : f.terms())
      if (!grading.compose_signed(m.signed_word()).empty()) live.push_back(m);
    for (std::size_t i = 0; i < live.size(); ++i)
      for (std::size_t j = i; j < live.size(); ++j) {
        const bool cong = congruent_mod_J(live[i], live[j], grading);
        const bool equal = evaluate(live[i], grading, opt.ring) == evaluate(live[j], grading, opt.ring);
        s.expect(cong == equal, [] { return std::string("congruence disagrees with evaluation"); });
        if (!cong) continue;
        const auto steps = derivation_mod_J(live[i], live[j], grading);
        s.expect(steps.has_value(), [] { return std::string("no derivation found for congruent pair"); });
        if (!steps) continue;
        GMonomial cur = live[j];
        for (const auto& st : *steps) {
          cur = apply_rewrite(cur, st, grading);
          s.expect(evaluate(cur, grading, opt.ring) == evaluate(live[j], grading, opt.ring),
                   [] { return std::string("derivation step changes the evaluation"); });
        }
        s.expect(cur == live[i], [] { return std::string("derivation does not reach the target"); });
      }
  }
  return s.done();
}

SuiteResult reduction_suite(const Grading& grading, const SelftestOptions& opt, Rng& rng) {
  Suite s("reduction to U");
  const Group& G = grading.group();
  for (std::size_t t = 0; t < opt.random_polynomials; ++t) {
    const auto f = random_smh_polynomial(grading, rng, 5, 6, opt.ring);
    const auto r = u_reduce(f, grading);
    s.expect(r.in_T == is_identity(f, grading).is_identity,
             [&] { return "reduction verdict differs from evaluation on " + format_poly(f, G); });
    if (r.in_T) s.expect(r.in_U_certified, [&] { return "identity without a U-certificate: " + format_poly(f, G); });
  }
  return s.done();
}

SuiteResult basis_suite(const Grading& grading, const SelftestOptions& opt) {
  Suite s("basis identities");
  const auto report = verify_basis(grading, 8, opt.seed, opt.ring);
  for (const auto& fam : report.families)
    s.expect(fam.passed, [&] { return fam.name + ": " + (fam.failures.empty() ? std::string("failed") : fam.failures.front()); });
  return s.done();
}

SuiteResult bound_suite(const Grading& grading, const SelftestOptions& opt) {
  Suite s("monomial identities from degree <= 2n-1");
  const std::size_t bound = 2 * grading.n() - 1;
  EnumerationLimits limits;
  limits.max_words = opt.exhaustive_budget;
  std::vector<SignedWord> minimal;
  std::size_t degree = std::min<std::size_t>(2 * bound, limits.max_degree_cap);
  for (; degree >= 1; --degree) {
    try {
      minimal = enumerate_monomial_identities(grading, degree, true, limits);
      break;
    } catch (const ResourceError&) {
    }
  }
  const auto counts = count_minimal_identities(grading, degree);
  std::vector<std::uint64_t> listed(degree + 1, 0);
  for (const auto& w : minimal)
    if (grading.in_support(w.front().element)) ++listed[w.size()];
  for (std::size_t len = 1; len <= degree; ++len)
    s.expect(counts[len] == listed[len], [&] { return "count mismatch at length " + std::to_string(len); });
  for (const auto& w : minimal) {
    const auto cert = block_certificate(w, 1, w.size(), grading, bound);
    s.expect(cert && check_consequence_certificate(w, *cert, grading),
             [&] { return "no block certificate for " + format_word(w, grading.group()); });
  }
  if (degree < 2 * bound) s.note("checked minimal identities up to degree " + std::to_string(degree));
  return s.done();
}

}  // namespace

std::vector<SuiteResult> run_selftest(const Grading& grading, const SelftestOptions& options) {
  Rng rng(options.seed);
  std::vector<SuiteResult> out;
  out.push_back(group_suite(grading));
  out.push_back(hat_suite(grading));
  out.push_back(generic_suite(grading));
  out.push_back(closed_form_suite(grading, options, rng));
  out.push_back(monomial_suite(grading, options));
  out.push_back(freealg_suite(grading, options, rng));
  out.push_back(congruence_suite(grading, options, rng));
  out.push_back(reduction_suite(grading, options, rng));
  out.push_back(basis_suite(grading, options));
  out.push_back(bound_suite(grading, options));
  return out;
}

}  // namespace gpi
