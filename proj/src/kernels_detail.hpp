#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "gpi/grading.hpp"

namespace gpi::kernels::detail {

/// Depth-first walk over signed words that keeps the composition of the word
/// and of the word without its first letter. A word is a minimal identity iff
/// the first is empty and the second is not.
class WordTreeWalker {
 public:
  WordTreeWalker(const Grading& grading, std::size_t max_degree, bool minimal_only,
                 std::size_t max_words);

  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  void walk_root(std::size_t letter);
  std::vector<SignedWord> take() { return std::move(out_); }

 private:
  void walk(SignedWord& w, const PartialInjection& comp, const PartialInjection& tail);
  void emit(const SignedWord& w);
  void emit_all_extensions(SignedWord& w);
  bool subtree_has_minimal(const PartialInjection& comp, const PartialInjection& tail,
                           std::size_t remaining);

  const Grading& grading_;
  std::vector<SignedElement> alphabet_;
  std::vector<PartialInjection> hats_;
  std::size_t max_degree_;
  bool minimal_only_;
  std::size_t max_words_;
  std::vector<SignedWord> out_;
  std::map<std::tuple<std::vector<std::uint8_t>, std::vector<std::uint8_t>, std::size_t>, bool>
      memo_;
};

std::vector<SignedWord> off_support_singletons(const Grading& grading);
void finish(std::vector<SignedWord>& words, std::size_t max_words);

}  // namespace gpi::kernels::detail
