#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gpi/grading.hpp"

namespace gpi::kernels {

/// Serial reference enumeration of index-free monomial identities. Output in
/// shortlex order; throws ResourceError once more than max_words are produced.
std::vector<SignedWord> enumerate_identities_serial(const Grading& grading, std::size_t max_degree,
                                                    bool minimal_only, std::size_t max_words);

/// Same result as the serial kernel; the word tree is split by first letter
/// across OpenMP threads and merged in canonical order.
std::vector<SignedWord> enumerate_identities_parallel(const Grading& grading,
                                                      std::size_t max_degree, bool minimal_only,
                                                      std::size_t max_words);

/// 1 where the word's composition is empty (monomial identity), else 0.
std::vector<char> monomial_verdicts_serial(const Grading& grading,
                                           std::span<const SignedWord> words);
std::vector<char> monomial_verdicts_parallel(const Grading& grading,
                                             std::span<const SignedWord> words);

bool parallel_available() noexcept;
int max_threads() noexcept;

}  // namespace gpi::kernels
