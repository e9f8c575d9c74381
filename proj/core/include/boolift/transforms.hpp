#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "boolift/boolean_function.hpp"
#include "boolift/limits.hpp"

namespace boolift {

/// Nonzero Möbius coefficients, sorted by increasing mask.
struct MobiusSpectrum {
  int arity = 0;
  std::vector<std::pair<std::uint64_t, std::int64_t>> coeffs;

  std::size_t sparsity() const { return coeffs.size(); }
  std::vector<std::uint64_t> support() const;
  /// Coefficient at mask (0 when absent).
  std::int64_t at(std::uint64_t mask) const;
};

enum class FourierConvention { ZeroOne, PlusMinus };

/// Nonzero scaled coefficients 2^n * f^(S) (of f, or of 1 - 2f for
/// PlusMinus), sorted by increasing mask.
struct FourierSpectrum {
  int arity = 0;
  FourierConvention convention = FourierConvention::ZeroOne;
  std::vector<std::pair<std::uint64_t, std::int64_t>> coeffs;

  std::size_t sparsity() const { return coeffs.size(); }
  std::int64_t at(std::uint64_t mask) const;
};

/// In-place subset-lattice Möbius transform of the table; entry S is f~(S).
std::vector<std::int32_t> mobius_dense(const BooleanFunction& f);
MobiusSpectrum mobius_spectrum(const BooleanFunction& f);
std::size_t mobius_sparsity(const BooleanFunction& f);
std::vector<std::uint64_t> mobius_support(const BooleanFunction& f);

/// Table reconstructed by summing coefficients over submasks. Throws
/// PreconditionError when some value is not 0 or 1.
BitVector inverse_mobius(const MobiusSpectrum& spectrum);

std::vector<std::int32_t> fourier_dense(const BooleanFunction& f, FourierConvention convention);
FourierSpectrum fourier_spectrum(const BooleanFunction& f, FourierConvention convention);
std::size_t fourier_sparsity(const BooleanFunction& f, FourierConvention convention);

struct TitsworthResult {
  bool ok = true;
  std::optional<std::uint64_t> violating;  // least W where the identity fails
  std::int64_t coefficient = 0;            // f~(W)
  std::int64_t pair_sum = 0;               // sum over S | T = W of f~(S) f~(T)
};

/// Checks f~(W) = sum_{S | T = W} f~(S) f~(T) for every W by enumerating
/// ordered pairs of support sets.
TitsworthResult titsworth_check(const BooleanFunction& f, const Limits& limits = {});
TitsworthResult titsworth_check(const MobiusSpectrum& spectrum, const Limits& limits = {});

}  // namespace boolift
