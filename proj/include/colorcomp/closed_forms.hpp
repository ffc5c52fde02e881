#pragma once

#include <cstdint>
#include <optional>

#include "colorcomp/sequences.hpp"

namespace colorcomp {

/// Closed-formula value of C(n, k) for families that have one; absent for
/// custom, binom_general, matrix, and for catalan_shifted at n = k (the
/// formula's boundary case, where the ballot-number convention breaks down).
/// Requires n >= 1, 1 <= k <= n for a present result.
std::optional<BigCount> closed_nk(const ColorFamily& family, std::uint64_t n,
                                  std::uint64_t k);

/// Closed-formula value of C(n) for families that have one; absent otherwise
/// (custom, binom_general, matrix, figured). Requires n >= 1.
std::optional<BigCount> closed_total(const ColorFamily& family, std::uint64_t n);

/// Inner summation bound of the Catalan-convolution identity. The printed
/// identity starts the inner sum at i = 1; starting at i = 0 is what actually
/// reproduces the Catalan numbers. Both are kept so the discrepancy stays
/// visible.
enum class ConvolutionBound { corrected, paper_literal };

/// 1 + sum_{k=1..n-1} sum_i C(k,i) * B(n-k, k-i); equals the n-th Catalan
/// number with the corrected bound. n = 0 gives the bare leading 1 = c_0.
BigCount catalan_convolution(std::uint64_t n,
                             ConvolutionBound bound = ConvolutionBound::corrected);

/// C(n, k) for b_i = c_(i-1): the number of weak generalized compositions of
/// n-k with exactly k zero parts. Requires n >= k >= 1.
BigCount weak_composition_count(std::uint64_t n, std::uint64_t k);

}  // namespace colorcomp
