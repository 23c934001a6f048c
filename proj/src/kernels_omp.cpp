#include <algorithm>

#include "gpi/error.hpp"
#include "gpi/identities.hpp"
#include "gpi/kernels.hpp"
#include "kernels_detail.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gpi::kernels {

bool parallel_available() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<SignedWord> enumerate_identities_parallel(const Grading& grading,
                                                      std::size_t max_degree, bool minimal_only,
                                                      std::size_t max_words) {
  if (max_degree == 0) return {};
  const auto alphabet = signed_alphabet(grading);
  const auto roots = static_cast<long>(alphabet.size());
  std::vector<std::vector<SignedWord>> per_root(alphabet.size());
  bool overflow = false;

#pragma omp parallel for schedule(dynamic, 1)
  for (long a = 0; a < roots; ++a) {
    bool stop = false;
#pragma omp atomic read
    stop = overflow;
    if (stop) continue;
    try {
      detail::WordTreeWalker walker(grading, max_degree, minimal_only, max_words);
      walker.walk_root(static_cast<std::size_t>(a));
      per_root[static_cast<std::size_t>(a)] = walker.take();
    } catch (const ResourceError&) {
#pragma omp atomic write
      overflow = true;
    }
  }
  if (overflow) {
    throw ResourceError("enumeration produced more than " + std::to_string(max_words) +
                        " words; lower --max-deg or use --minimal");
  }

  std::vector<SignedWord> out = detail::off_support_singletons(grading);
  for (auto& part : per_root) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    if (out.size() > max_words) break;
  }
  detail::finish(out, max_words);
  return out;
}

std::vector<char> monomial_verdicts_parallel(const Grading& grading,
                                             std::span<const SignedWord> words) {
  std::vector<char> out(words.size());
  const auto count = static_cast<long>(words.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    const auto& w = words[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = w.empty() ? 0 : grading.compose_signed(w).empty();
  }
  return out;
}

}  // namespace gpi::kernels
