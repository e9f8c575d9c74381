#pragma once

#include <cstddef>
#include <vector>

#include "boolift/bitvector.hpp"
#include "boolift/limits.hpp"

namespace boolift {

/// Rank over the rationals of a 0/1 matrix given as equal-length rows.
///
/// Rows and columns are deduplicated, then the matrix is eliminated modulo
/// primes below 2^26 until the product of the primes used exceeds the
/// Hadamard bound on any nonzero minor; the maximum rank seen is exact.
std::size_t matrix_rank(const std::vector<BitVector>& rows, const Limits& limits = {});

/// Same value by fraction-free (Bareiss) elimination over big integers.
/// Slower; kept as an independent route.
std::size_t rank_bareiss(const std::vector<BitVector>& rows, const Limits& limits = {});

/// Rank modulo a prime p < 2^26 of the given dense matrix (values in [0, p)).
std::size_t rank_mod_prime(std::vector<double> matrix, std::size_t rows, std::size_t cols, std::uint32_t p);

}  // namespace boolift
