// Acceptance runner: one PASS/FAIL line per criterion, with wall time against
// its limit. Exit status is zero when every criterion passes, except those
// listed in kKnownFindings, which must fail (with a reported counterexample).

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gpi/error.hpp"
#include "gpi/identities.hpp"
#include "gpi/kernels.hpp"
#include "gpi/random.hpp"

using namespace gpi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Criterion 7 in its literal contiguous-subword form is false; see README.
const std::set<std::string> kKnownFindings = {"7"};

struct Summary {
  int passed = 0;
  int failed = 0;
  bool unexpected = false;
};

// Criteria named on the command line; empty means all.
std::set<std::string> g_selected;

void run(Summary& sum, const std::string& id, const std::string& title, double limit_s,
         const std::function<Outcome()>& body) {
  if (!g_selected.empty() && !g_selected.count(id)) return;
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) out.fail("time limit exceeded");
  std::ostringstream line;
  line << (out.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << "  [" << std::fixed
       << std::setprecision(2) << secs << " s / " << std::setprecision(0) << limit_s << " s]";
  if (!out.detail.empty()) line << "  " << out.detail;
  std::cout << line.str() << '\n';
  for (const auto& n : out.notes) std::cout << "        " << n << '\n';
  std::cout.flush();
  (out.pass ? sum.passed : sum.failed)++;
  const bool known = kKnownFindings.count(id) > 0;
  if (out.pass == known) sum.unexpected = true;
}

std::string word_str(const SignedWord& w, const Grading& gr) { return format_word(w, gr.group()); }

// ---------------------------------------------------------------- criterion 1
Outcome crossed_product() {
  Outcome out;
  for (std::size_t n : {2u, 3u, 4u}) {
    std::vector<std::string> names{"e", "a"};
    for (std::size_t k = 2; k < n; ++k) names.push_back("a" + std::to_string(k));
    const auto gr = fixtures::cyclic(n, names);
    const std::size_t deg = 2 * n - 1;
    const auto ids = enumerate_monomial_identities(gr, deg, false);
    if (!ids.empty()) out.fail("Z_" + std::to_string(n) + " has identity " + word_str(ids.front(), gr));
    const auto counts = count_minimal_identities(gr, deg);
    if (std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}) != 0)
      out.fail("minimal-identity count nonzero for Z_" + std::to_string(n));
    const auto report = verify_basis(gr, 20, 17);
    // Families are reported in the library order: commutator, symmetry, off-support, reversal.
    for (std::size_t f = 0; f < 2; ++f) {
      const auto& fam = report.families.at(f);
      if (!fam.passed || fam.instances == 0) out.fail("family " + fam.name + " fails for Z_" + std::to_string(n));
    }
    if (report.families.at(2).instances != 0) out.fail("off-support family nonempty");
    out.notes.push_back("Z_" + std::to_string(n) + ": no monomial identity up to degree " + std::to_string(deg) +
                        "; commutator and symmetry families vanish");
  }
  return out;
}

// ---------------------------------------------------------------- criterion 2
// Verdict per basis instance, kept for the ring comparison.
using BasisVerdicts = std::vector<std::pair<std::string, bool>>;

Outcome basis_identities_vanish(CoeffRing ring, BasisVerdicts* verdicts) {
  Outcome out;
  for (const auto& [label, gr] : fixtures::corpus()) {
    const Group& G = gr.group();
    std::map<int, std::size_t> per_family;
    for (const auto& [family, f] : basis_identities(gr, ring)) {
      ++per_family[family];
      const bool zero = evaluate(f, gr).is_zero();
      // Keyed by position: printed coefficients depend on the ring.
      if (verdicts) verdicts->push_back({label + " family " + std::to_string(family) + " #" + std::to_string(per_family[family]), zero});
      if (!zero) out.fail(label + ": " + format_poly(f, G) + " does not vanish");
      if (ring.is_rational()) {
        // Oracle built straight from the group table.
        fixtures::Dense acc(gr.n(), std::vector<fixtures::Poly>(gr.n()));
        for (const auto& [m, c] : f.terms()) {
          const auto d = fixtures::dense_product(gr, m.slot_word());
          const long coeff = c.value().get_num().get_si();
          for (std::size_t i = 0; i < gr.n(); ++i)
            for (std::size_t j = 0; j < gr.n(); ++j)
              for (const auto& [mono, k] : d[i][j]) {
                auto& slot = acc[i][j][mono];
                slot += coeff * k;
                if (slot == 0) acc[i][j].erase(mono);
              }
        }
        if (!fixtures::dense_zero(acc)) out.fail(label + ": dense oracle disagrees on " + format_poly(f, G));
      }
    }
    const std::size_t off = G.order() - gr.support().size();
    if (per_family[1] != 1 || per_family[2] != 1 || per_family[3] != off ||
        per_family[4] != gr.support().size() - 1) {
      out.fail(label + ": unexpected number of basis instances");
    }
    const auto report = verify_basis(gr, 20, 23, ring);
    if (!report.all_passed()) out.fail(label + ": random substitutions do not vanish");
  }
  out.notes.push_back("6 gradings; a reversal instance for every g != e in the support, an off-support instance for every g outside it");
  return out;
}

// ---------------------------------------------------------------- criterion 3
Outcome closed_form_oracle() {
  Outcome out;
  auto gradings = fixtures::corpus();
  gradings.emplace_back("Z5(full)", fixtures::cyclic(5, {"e", "a", "a2", "a3", "a4"}));
  gradings.emplace_back("Z8(e,a,a2,a5,a7)", fixtures::cyclic(8, {"e", "a", "a2", "a5", "a7"}));
  gradings.emplace_back("Klein(full)", fixtures::grading(make_klein_four(), {"e", "a", "b", "c"}));
  gradings.emplace_back("S3(e,p102,p120,p210)", fixtures::grading(make_symmetric(3), {"e", "p102", "p120", "p210"}));
  Rng rng(2024);
  std::size_t words = 0, entries = 0;
  for (const auto& [label, gr] : gradings) {
    for (int t = 0; t < 150; ++t, ++words) {
      const auto sw = random_signed_word(gr, rng, 8);
      const auto slotted = with_positional_slots(sw);
      const auto closed = closed_form_product(slotted, gr);
      if (!(closed == iterated_product(slotted, gr))) out.fail(label + ": closed form != product on " + word_str(sw, gr));
      if (fixtures::to_dense(closed) != fixtures::dense_product(gr, slotted))
        out.fail(label + ": closed form != dense oracle on " + word_str(sw, gr));
      const auto domain = gr.compose_signed(sw).domain();
      std::vector<int> rows;
      for (const auto& [pos, value] : closed.entries()) {
        ++entries;
        if (!rows.empty() && rows.back() == pos.first) out.fail(label + ": two entries in one row");
        rows.push_back(pos.first);
        const auto st = st_sequences(pos.first, sw, gr);
        if (pos.second != st.s.back()) out.fail(label + ": entry column is not s_{m+1}");
        if (!value.is_unit_monomial()) {
          out.fail(label + ": entry is not a single monomial");
          continue;
        }
        const auto& vars = value.terms().front().first.vars();
        for (std::size_t p = 1; p <= sw.size(); ++p) {
          std::vector<OmegaVar> at_slot;
          for (const auto& v : vars)
            if (v.slot == static_cast<int>(p)) at_slot.push_back(v);
          const OmegaVar expected{static_cast<int>(p), st.variable_row(p, sw[p - 1].star), st.t[p - 1]};
          if (at_slot != std::vector<OmegaVar>{expected}) out.fail(label + ": slot factor mismatch on " + word_str(sw, gr));
        }
      }
      if (rows != domain) out.fail(label + ": nonzero rows differ from the composition's domain");
    }
  }
  out.notes.push_back(std::to_string(words) + " words over " + std::to_string(gradings.size()) +
                      " gradings (n <= 5, length <= 8), " + std::to_string(entries) + " nonzero entries checked");
  return out;
}

// ---------------------------------------------------------------- criterion 4
// Boolean pattern of a letter straight from the group table; rows as bitmasks.
using Pattern = std::array<std::uint8_t, 8>;

Pattern letter_pattern(const Grading& gr, SignedElement l) {
  const Group& G = gr.group();
  Pattern p{};
  const int n = static_cast<int>(gr.n());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Element d = G.mul(G.inv(gr.tuple()[i]), gr.tuple()[j]);
      if (d == l.element) {
        if (l.star)
          p[j] |= static_cast<std::uint8_t>(1u << i);
        else
          p[i] |= static_cast<std::uint8_t>(1u << j);
      }
    }
  return p;
}

struct MonomialRun {
  std::size_t words = 0;
  std::size_t identities = 0;
  std::vector<char> verdicts;  // in DFS order, for the ring comparison
};

Outcome monomial_criterion(CoeffRing ring, std::size_t max_degree, std::size_t eval_degree,
                           std::vector<MonomialRun>* runs) {
  Outcome out;
  std::size_t total = 0;
  for (const auto& [label, gr] : fixtures::corpus()) {
    const int n = static_cast<int>(gr.n());
    std::vector<SignedElement> alphabet;
    for (auto g : gr.group().elements()) {
      alphabet.push_back({g, false});
      alphabet.push_back({g, true});
    }
    std::vector<Pattern> pats;
    for (const auto& l : alphabet) pats.push_back(letter_pattern(gr, l));
    MonomialRun run;
    SignedWord w;
    std::vector<Pattern> stack;
    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        w.push_back(alphabet[a]);
        Pattern cur{};
        if (depth == 0) {
          cur = pats[a];
        } else {
          const Pattern& prev = stack.back();
          for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
              if (prev[i] >> k & 1u) cur[i] |= pats[a][k];
        }
        bool zero = true;
        for (int i = 0; i < n; ++i) zero = zero && cur[i] == 0;
        const auto comp = gr.compose_signed(w);
        const auto v = is_monomial_identity(w, gr);
        ++run.words;
        run.verdicts.push_back(static_cast<char>(v.is_identity));
        if (v.is_identity) ++run.identities;
        if (comp.empty() != v.is_identity || comp.empty() != zero)
          out.fail(label + ": criteria disagree on " + word_str(w, gr));
        if (v.is_identity == v.witness.has_value()) out.fail(label + ": witness presence wrong on " + word_str(w, gr));
        if (v.witness) {
          const auto& wit = *v.witness;
          if (!check_witness(w, wit, gr)) out.fail(label + ": witness does not multiply out on " + word_str(w, gr));
          if (comp.raw(wit.start_row) != wit.end_row) out.fail(label + ": witness unit is not e_{k,s_{m+1}}");
          if (!(cur[wit.start_row - 1] >> (wit.end_row - 1) & 1u)) out.fail(label + ": witness entry absent in product");
        }
        if (w.size() <= eval_degree) {
          const bool sparse_zero = closed_form_product(with_positional_slots(w), gr, ring).is_zero();
          if (sparse_zero != comp.empty()) out.fail(label + ": evaluation over " + ring.to_string() + " disagrees on " + word_str(w, gr));
          if (w.size() <= 3) {
            const auto m = GMonomial([&] {
              std::vector<GVar> vs;
              for (std::size_t p = 0; p < w.size(); ++p) vs.push_back({static_cast<int>(p + 1), w[p].element, w[p].star});
              return vs;
            }());
            if (evaluate(m, gr, ring).is_zero() != comp.empty()) out.fail(label + ": generic evaluation disagrees");
          }
        }
        if (w.size() < max_degree) {
          stack.push_back(cur);
          rec(depth + 1);
          stack.pop_back();
        }
        w.pop_back();
      }
    };
    rec(0);
    total += run.words;
    out.notes.push_back(label + ": " + std::to_string(run.words) + " words, " + std::to_string(run.identities) + " identities");
    if (runs) runs->push_back(std::move(run));
  }
  out.notes.push_back(std::to_string(total) + " words in total; sparse evaluation over " + ring.to_string() +
                      " up to degree " + std::to_string(eval_degree));
  return out;
}

// ---------------------------------------------------------------- criterion 5
struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Canonical buckets: per-index element signatures, non-decreasing by index.
void for_each_bucket(const std::vector<Element>& support, std::size_t degree,
                     const std::function<void(const std::vector<GVar>&)>& visit) {
  std::vector<std::vector<Element>> chosen;
  // All sorted element multisets of each size.
  std::vector<std::vector<std::vector<Element>>> by_size(degree + 1);
  std::function<void(std::vector<Element>&, std::size_t, std::size_t)> gen = [&](std::vector<Element>& cur, std::size_t start, std::size_t size) {
    if (!cur.empty()) by_size[cur.size()].push_back(cur);
    if (cur.size() == size) return;
    for (std::size_t i = start; i < support.size(); ++i) {
      cur.push_back(support[i]);
      gen(cur, i, size);
      cur.pop_back();
    }
  };
  std::vector<Element> scratch;
  gen(scratch, 0, degree);
  std::vector<std::vector<Element>> flat;
  for (std::size_t s = 1; s <= degree; ++s)
    for (auto& v : by_size[s]) flat.push_back(v);
  std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t min_index, std::size_t remaining) {
    if (remaining == 0) {
      std::vector<GVar> letters;
      for (std::size_t idx = 0; idx < chosen.size(); ++idx)
        for (auto g : chosen[idx]) letters.push_back({static_cast<int>(idx + 1), g, false});
      visit(letters);
      return;
    }
    for (std::size_t i = min_index; i < flat.size(); ++i) {
      if (flat[i].size() > remaining) continue;
      chosen.push_back(flat[i]);
      pick(i, remaining - flat[i].size());
      chosen.pop_back();
    }
  };
  pick(0, degree);
}

Outcome congruence() {
  Outcome out;
  std::size_t pairs = 0, derivations = 0, monomials = 0, buckets = 0;
  for (const auto& [label, gr] : fixtures::corpus()) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t pairs0 = pairs, mono0 = monomials;
    std::map<std::string, std::size_t> entry_owner;  // "(r,c) monomial" -> bucket
    for (std::size_t degree = 1; degree <= 4; ++degree) {
      for_each_bucket(gr.support(), degree, [&](const std::vector<GVar>& base) {
        const std::size_t bucket = buckets++;
        std::vector<GVar> perm = base;
        std::sort(perm.begin(), perm.end());
        std::vector<GMonomial> members;
        do {
          for (unsigned mask = 0; mask < (1u << degree); ++mask) {
            std::vector<GVar> letters = perm;
            for (std::size_t p = 0; p < degree; ++p) letters[p].star = mask >> p & 1u;
            GMonomial m(std::move(letters));
            if (!gr.compose_signed(m.signed_word()).empty()) members.push_back(std::move(m));
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::sort(members.begin(), members.end());
        monomials += members.size();
        std::vector<SparseMatrix> evals;
        std::vector<std::string> prints;
        for (const auto& m : members) {
          evals.push_back(evaluate(m, gr));
          prints.push_back(evals.back().to_string());
          for (const auto& [pos, v] : evals.back().entries()) {
            const std::string key = std::to_string(pos.first) + "," + std::to_string(pos.second) + " " + v.to_string();
            auto [it, fresh] = entry_owner.emplace(key, bucket);
            if (!fresh && it->second != bucket) out.fail(label + ": monomials from different buckets share an entry");
          }
        }
        // J-orbits from the elementary moves.
        UnionFind uf(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
          for (const auto& step : rewrite_moves(members[i], gr)) {
            const auto it = std::lower_bound(members.begin(), members.end(), step.result);
            if (it == members.end() || !(*it == step.result)) {
              out.fail(label + ": a move leaves the bucket or reaches an identity");
              continue;
            }
            uf.unite(i, static_cast<std::size_t>(it - members.begin()));
          }
        std::map<std::string, std::size_t> rep_of_print;
        std::vector<std::size_t> rep(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) rep[i] = rep_of_print.emplace(prints[i], i).first->second;
        for (std::size_t i = 0; i < members.size(); ++i) {
          if ((uf.find(i) == uf.find(rep[i])) == false)
            out.fail(label + ": equal evaluations but no chain of moves: " + format_monomial(members[i], gr.group()));
        }
        std::map<std::size_t, std::size_t> print_of_orbit;
        for (std::size_t i = 0; i < members.size(); ++i) {
          auto [it, fresh] = print_of_orbit.emplace(uf.find(i), rep[i]);
          if (!fresh && it->second != rep[i]) out.fail(label + ": moves connect monomials with different evaluations");
        }
        // The library predicate, on every pair (degree <= 3) or against class representatives.
        for (std::size_t i = 0; i < members.size(); ++i) {
          const auto check_pair = [&](std::size_t j) {
            ++pairs;
            const bool cong = congruent_mod_J(members[i], members[j], gr);
            if (cong != (prints[i] == prints[j]))
              out.fail(label + ": congruent_mod_J wrong on " + format_monomial(members[i], gr.group()) + " / " +
                       format_monomial(members[j], gr.group()));
          };
          if (degree <= 3) {
            for (std::size_t j = i; j < members.size(); ++j) check_pair(j);
          } else if (rep[i] != i) {
            check_pair(rep[i]);
          } else {
            for (std::size_t j = i + 1; j < members.size(); ++j)
              if (rep[j] == j) check_pair(j);
          }
        }
        if (degree > 3) return;
        for (std::size_t i = 0; i < members.size(); ++i)
          for (std::size_t j = 0; j < members.size(); ++j) {
            if (i == j || rep[i] != rep[j]) continue;
            ++derivations;
            const auto steps = derivation_mod_J(members[i], members[j], gr);
            if (!steps) {
              out.fail(label + ": no derivation for a congruent pair");
              continue;
            }
            GMonomial cur = members[j];
            for (const auto& s : *steps) {
              cur = apply_rewrite(cur, s, gr);
              if (!(closed_form_product(cur.slot_word(), gr) == evals[j])) out.fail(label + ": a step changes the evaluation");
            }
            if (!(cur == members[i])) out.fail(label + ": derivation ends elsewhere");
          }
      });
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream note;
    note << label << ": " << (monomials - mono0) << " monomials, " << (pairs - pairs0) << " pairs ("
         << std::fixed << std::setprecision(2) << secs << " s)";
    out.notes.push_back(note.str());
  }
  out.notes.push_back(std::to_string(monomials) + " non-identity monomials in " + std::to_string(buckets) +
                      " canonical buckets; move orbits equal evaluation classes in every bucket");
  out.notes.push_back(std::to_string(pairs) + " congruent_mod_J calls (all pairs to degree 3, then member/representative and representative pairs); " +
                      std::to_string(derivations) +
                      " derivations replayed (degree <= 3)");
  return out;
}

// ---------------------------------------------------------------- criterion 6
struct ReductionRecord {
  bool in_T = false;
  std::vector<std::vector<GMonomial>> classes;
  std::vector<Scalar> sums;
  std::vector<GMonomial> identity_terms;
};

std::vector<std::pair<std::string, std::vector<GPolynomial>>> reduction_corpus() {
  std::vector<std::pair<std::string, std::vector<GPolynomial>>> out;
  std::uint64_t seed = 600;
  for (const auto& [label, gr] : fixtures::corpus()) {
    Rng rng(seed++);
    std::vector<GPolynomial> fs;
    for (int t = 0; t < 500; ++t) fs.push_back(random_smh_polynomial(gr, rng, 5, 6));
    out.emplace_back(label, std::move(fs));
  }
  return out;
}

ReductionRecord record_of(const UReduction& r) {
  ReductionRecord rec;
  rec.in_T = r.in_T;
  for (const auto& c : r.classes) {
    std::vector<GMonomial> ms;
    for (const auto& [m, coeff] : c.members) ms.push_back(m);
    std::sort(ms.begin(), ms.end());
    rec.classes.push_back(ms);
    rec.sums.push_back(c.sum);
  }
  for (const auto& t : r.monomial_identity_terms) rec.identity_terms.push_back(t.monomial);
  return rec;
}

Outcome main_reduction(CoeffRing ring, std::vector<std::vector<ReductionRecord>>* records) {
  Outcome out;
  const auto corpus = fixtures::corpus();
  const auto polys = reduction_corpus();
  std::size_t identities = 0, total = 0, monomial_terms = 0;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const auto& [label, gr] = corpus[gi];
    const std::size_t bound = 2 * gr.n() - 1;
    std::vector<ReductionRecord> recs;
    for (const auto& f0 : polys[gi].second) {
      const GPolynomial f = f0.with_ring(ring);
      ++total;
      const auto r = u_reduce(f, gr);
      const bool ident = is_identity(f, gr).is_identity;
      if (r.in_T != ident) out.fail(label + ": in_T != is_identity on " + format_poly(f, gr.group()));
      if (ring.is_rational() && vanishes_on_random_substitutions(f, gr, 3, 99) != ident)
        out.fail(label + ": random substitutions disagree on " + format_poly(f, gr.group()));
      if (ident) {
        ++identities;
        if (!r.in_U_certified) out.fail(label + ": identity without U-certificate");
        for (const auto& c : r.classes)
          if (!c.sum.is_zero()) out.fail(label + ": identity with a nonzero class sum");
        for (const auto& t : r.monomial_identity_terms) {
          ++monomial_terms;
          if (!t.certificate) {
            out.fail(label + ": no subword certificate for " + format_monomial(t.monomial, gr.group()));
            continue;
          }
          const auto [k, l] = *t.certificate;
          const auto w = t.monomial.signed_word();
          if (l - k + 1 > bound || !gr.compose_signed(std::span(w).subspan(k - 1, l - k + 1)).empty())
            out.fail(label + ": invalid subword certificate");
        }
      }
      recs.push_back(record_of(r));
    }
    if (records) records->push_back(std::move(recs));
  }
  out.notes.push_back(std::to_string(total) + " polynomials over " + ring.to_string() + ", " + std::to_string(identities) +
                      " identities, " + std::to_string(monomial_terms) + " monomial-identity terms certified");
  return out;
}

// ---------------------------------------------------------------- criterion 7
Outcome degree_bound_literal() {
  Outcome out;
  for (const auto& [label, gr] : fixtures::corpus()) {
    const std::size_t n = gr.n();
    const std::size_t bound = 2 * n - 1;
    const auto counts = count_minimal_identities(gr, 2 * bound);
    std::uint64_t beyond = 0;
    for (std::size_t len = bound + 1; len < counts.size(); ++len) beyond += counts[len];
    if (beyond == 0) continue;
    // Report the first counterexample explicitly and confirm it by hand.
    const auto words = enumerate_monomial_identities(gr, bound + 1, true);
    for (const auto& w : words) {
      if (w.size() != bound + 1) continue;
      if (find_identity_subword(w, gr, bound)) continue;
      out.fail("counterexample " + label + " " + word_str(w, gr));
      out.notes.push_back(label + ": " + std::to_string(beyond) + " minimal identities of degree " +
                          std::to_string(bound + 1) + ".." + std::to_string(2 * bound) +
                          " with no identity subword of degree <= " + std::to_string(bound) +
                          "; first: " + word_str(w, gr));
      break;
    }
  }
  return out;
}

Outcome degree_bound_consequence() {
  Outcome out;
  std::uint64_t checked = 0;
  for (const auto& [label, gr] : fixtures::corpus()) {
    const std::size_t bound = 2 * gr.n() - 1;
    EnumerationLimits limits;
    limits.max_words = 50'000'000;
    const auto minimal = enumerate_monomial_identities(gr, 2 * bound, true, limits);
    const auto counts = count_minimal_identities(gr, 2 * bound);
    std::vector<std::uint64_t> listed(counts.size(), 0);
    for (const auto& w : minimal) {
      if (gr.in_support(w.front().element)) ++listed[w.size()];
      const auto cert = block_certificate(w, 1, w.size(), gr, bound);
      ++checked;
      if (!cert || !check_consequence_certificate(w, *cert, gr)) {
        out.fail("no block certificate for " + label + " " + word_str(w, gr));
        break;
      }
    }
    if (listed != counts) out.fail(label + ": explicit list and count disagree");
  }
  out.notes.push_back(std::to_string(checked) +
                      " minimal identities of degree <= 2(2n-1) each follow from an identity of degree <= 2n-1");
  return out;
}

// ---------------------------------------------------------------- criterion 8
Outcome characteristic_independence() {
  Outcome out;
  BasisVerdicts q_basis;
  basis_identities_vanish(CoeffRing::rationals(), &q_basis);
  std::vector<MonomialRun> q_mono;
  monomial_criterion(CoeffRing::rationals(), 6, 0, &q_mono);
  std::vector<std::vector<ReductionRecord>> q_red;
  main_reduction(CoeffRing::rationals(), &q_red);

  for (std::uint64_t p : {2u, 5u}) {
    const auto ring = CoeffRing::prime(p);
    const std::string tag = "F_" + std::to_string(p);
    BasisVerdicts b;
    const auto c2 = basis_identities_vanish(ring, &b);
    if (!c2.pass) out.fail(tag + " criterion 2: " + c2.detail);
    if (b != q_basis) out.fail(tag + ": basis verdicts differ from Q");

    std::vector<MonomialRun> mono;
    const auto c4 = monomial_criterion(ring, 6, 5, &mono);
    if (!c4.pass) out.fail(tag + " criterion 4: " + c4.detail);
    for (std::size_t g = 0; g < mono.size(); ++g)
      if (mono[g].verdicts != q_mono[g].verdicts) out.fail(tag + ": monomial verdicts differ from Q");

    std::vector<std::vector<ReductionRecord>> red;
    const auto c6 = main_reduction(ring, &red);
    if (!c6.pass) out.fail(tag + " criterion 6: " + c6.detail);
    std::size_t same = 0, predicted_flips = 0;
    for (std::size_t g = 0; g < red.size(); ++g)
      for (std::size_t i = 0; i < red[g].size(); ++i) {
        const auto& qr = q_red[g][i];
        const auto& pr = red[g][i];
        // Rebuild the Q partition with the terms that survive reduction mod p.
        bool predicted = true;
        std::vector<std::vector<GMonomial>> expected;
        for (std::size_t c = 0; c < qr.classes.size(); ++c) {
          if (!qr.sums[c].to_ring(ring).is_zero()) predicted = false;
          expected.push_back(qr.classes[c]);
        }
        std::vector<std::vector<GMonomial>> got = pr.classes;
        // Classes can only lose members whose coefficient vanishes mod p.
        for (const auto& cls : got) {
          const bool inside = std::any_of(expected.begin(), expected.end(), [&](const auto& e) {
            return std::includes(e.begin(), e.end(), cls.begin(), cls.end());
          });
          if (!inside) out.fail(tag + ": class partition changed");
        }
        if (pr.in_T != predicted) out.fail(tag + ": verdict differs from Q class sums mod p");
        if (pr.in_T == qr.in_T)
          ++same;
        else
          ++predicted_flips;
      }
    out.notes.push_back(tag + ": basis and monomial verdicts identical to Q; reduction verdicts identical on " +
                        std::to_string(same) + " polynomials, " + std::to_string(predicted_flips) +
                        " differ only where a Q class sum is divisible by p");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) g_selected.insert(argv[i]);
  std::cout << "acceptance: " << kernels::max_threads() << " thread(s), OpenMP "
            << (kernels::parallel_available() ? "on" : "off") << "\n";
  Summary sum;
  run(sum, "1", "crossed-product gradings: no monomial identities up to 2n-1; commutator and symmetry families vanish", 5, crossed_product);
  run(sum, "2", "all four basis families vanish on every corpus grading", 5,
      [] { return basis_identities_vanish(CoeffRing::rationals(), nullptr); });
  run(sum, "3", "closed-form product equals iterated product; one entry per row; slot factors", 30, closed_form_oracle);
  run(sum, "4", "empty composition <=> zero evaluation <=> no witness, all words of degree <= 6", 60,
      [] { return monomial_criterion(CoeffRing::rationals(), 6, 4, nullptr); });
  run(sum, "5", "congruence modulo J <=> equal evaluation, degree <= 4; derivations replay", 120, congruence);
  run(sum, "6", "u_reduce.in_T <=> is_identity with U-certificates, 500 polynomials per grading", 120,
      [] { return main_reduction(CoeffRing::rationals(), nullptr); });
  run(sum, "7", "every identity of degree <= 2(2n-1) has a contiguous identity subword of degree <= 2n-1", 60,
      degree_bound_literal);
  run(sum, "7c", "(consequence form) every identity of degree <= 2(2n-1) follows from one of degree <= 2n-1", 60,
      degree_bound_consequence);
  run(sum, "8", "criteria 2, 4, 6 over F_2 and F_5 agree with Q", 120, characteristic_independence);
  std::cout << "summary: " << sum.passed << " passed, " << sum.failed << " failed";
  if (!kKnownFindings.empty()) {
    std::cout << " (expected to fail:";
    for (const auto& k : kKnownFindings) std::cout << ' ' << k;
    std::cout << ")";
  }
  std::cout << '\n';
  return sum.unexpected ? 1 : 0;
}
