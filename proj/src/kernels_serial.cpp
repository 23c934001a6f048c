#include <algorithm>
#include <map>
#include <tuple>

#include "gpi/error.hpp"
#include "gpi/identities.hpp"
#include "gpi/kernels.hpp"
#include "kernels_detail.hpp"

namespace gpi::kernels {
namespace detail {

WordTreeWalker::WordTreeWalker(const Grading& grading, std::size_t max_degree, bool minimal_only,
                               std::size_t max_words)
    : grading_(grading),
      alphabet_(signed_alphabet(grading)),
      max_degree_(max_degree),
      minimal_only_(minimal_only),
      max_words_(max_words) {
  hats_.reserve(alphabet_.size());
  for (const auto& l : alphabet_) hats_.push_back(grading.hat_signed(l));
}

void WordTreeWalker::emit(const SignedWord& w) {
  if (out_.size() >= max_words_) {
    throw ResourceError("enumeration produced more than " + std::to_string(max_words_) +
                        " words; lower --max-deg or use --minimal");
  }
  out_.push_back(w);
}

void WordTreeWalker::emit_all_extensions(SignedWord& w) {
  emit(w);
  if (w.size() >= max_degree_) return;
  for (const auto& l : alphabet_) {
    w.push_back(l);
    emit_all_extensions(w);
    w.pop_back();
  }
}

bool WordTreeWalker::subtree_has_minimal(const PartialInjection& comp, const PartialInjection& tail,
                                         std::size_t remaining) {
  if (remaining == 0) return false;
  auto key = std::make_tuple(comp.targets(), tail.targets(), remaining);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool found = false;
  for (std::size_t a = 0; a < hats_.size() && !found; ++a) {
    PartialInjection next_tail = tail.then(hats_[a]);
    if (next_tail.empty()) continue;
    PartialInjection next = comp.then(hats_[a]);
    found = next.empty() || subtree_has_minimal(next, next_tail, remaining - 1);
  }
  memo_.emplace(std::move(key), found);
  return found;
}

void WordTreeWalker::walk(SignedWord& w, const PartialInjection& comp,
                          const PartialInjection& tail) {
  for (std::size_t a = 0; a < alphabet_.size(); ++a) {
    PartialInjection next = comp.then(hats_[a]);
    PartialInjection next_tail = tail.then(hats_[a]);
    w.push_back(alphabet_[a]);
    if (next.empty()) {
      if (!minimal_only_) {
        emit_all_extensions(w);
      } else if (!next_tail.empty()) {
        emit(w);
      }
    } else if (w.size() < max_degree_) {
      if (!minimal_only_) {
        walk(w, next, next_tail);
      } else if (subtree_has_minimal(next, next_tail, max_degree_ - w.size())) {
        walk(w, next, next_tail);
      }
    }
    w.pop_back();
  }
}

void WordTreeWalker::walk_root(std::size_t letter) {
  SignedWord w{alphabet_[letter]};
  const PartialInjection& comp = hats_[letter];
  // Support letters never die alone.
  if (w.size() < max_degree_) walk(w, comp, PartialInjection::identity(grading_.n()));
}

std::vector<SignedWord> off_support_singletons(const Grading& grading) {
  std::vector<SignedWord> out;
  for (const Element g : grading.group().elements())
    if (!grading.in_support(g)) out.push_back({SignedElement{g, false}});
  return out;
}

void finish(std::vector<SignedWord>& words, std::size_t max_words) {
  if (words.size() > max_words) {
    throw ResourceError("enumeration produced more than " + std::to_string(max_words) + " words");
  }
  std::sort(words.begin(), words.end(), word_less);
}

}  // namespace detail

std::vector<SignedWord> enumerate_identities_serial(const Grading& grading, std::size_t max_degree,
                                                    bool minimal_only, std::size_t max_words) {
  std::vector<SignedWord> out = detail::off_support_singletons(grading);
  if (max_degree == 0) return {};
  detail::WordTreeWalker walker(grading, max_degree, minimal_only, max_words);
  for (std::size_t a = 0; a < walker.alphabet_size(); ++a) walker.walk_root(a);
  auto words = walker.take();
  out.insert(out.end(), std::make_move_iterator(words.begin()), std::make_move_iterator(words.end()));
  detail::finish(out, max_words);
  return out;
}

std::vector<char> monomial_verdicts_serial(const Grading& grading,
                                           std::span<const SignedWord> words) {
  std::vector<char> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    out[i] = words[i].empty() ? 0 : grading.compose_signed(words[i]).empty();
  return out;
}

}  // namespace gpi::kernels
