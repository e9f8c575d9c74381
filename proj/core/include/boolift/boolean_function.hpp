#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolift/bitvector.hpp"
#include "boolift/limits.hpp"

namespace boolift {

/// A total or partial Boolean function on n <= 24 bits.
///
/// Input x = (x_1, ..., x_n) is the integer sum_i x_i 2^{i-1}, so x_1 is the
/// least significant bit. A subset S of [n] is the mask sum_{i in S} 2^{i-1}.
/// Table slots outside the domain are stored as 0, which makes equality a
/// plain bit-vector comparison.
class BooleanFunction {
 public:
  BooleanFunction() = default;

  /// Builds from a table (and optional domain). Table bits outside the
  /// domain are cleared.
  static BooleanFunction from_table(int arity, BitVector table,
                                    std::optional<BitVector> domain = std::nullopt,
                                    const Limits& limits = {});

  template <class Pred>
  static BooleanFunction from_predicate(int arity, Pred&& pred, const Limits& limits = {}) {
    BitVector t(checked_size(arity, limits));
    for (std::uint64_t x = 0; x < t.size(); ++x)
      if (pred(x)) t.set(x);
    return from_table(arity, std::move(t), std::nullopt, limits);
  }

  static BooleanFunction constant(int arity, bool value, const Limits& limits = {});

  int arity() const { return arity_; }
  std::uint64_t input_count() const { return std::uint64_t{1} << arity_; }
  bool is_total() const { return total_; }
  bool defined(std::uint64_t x) const { return domain_.test(x); }
  std::uint64_t domain_size() const { return domain_.count(); }

  /// Raw table bit (0 outside the domain). No domain check.
  bool operator()(std::uint64_t x) const { return table_.test(x); }

  const BitVector& table() const { return table_; }
  const BitVector& domain() const { return domain_; }

  /// Restriction to the given domain (intersected with the current one).
  BooleanFunction restricted_to(const BitVector& domain) const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

  static std::uint64_t checked_size(int arity, const Limits& limits);

 private:
  int arity_ = 0;
  bool total_ = true;
  BitVector table_;
  BitVector domain_;
};

/// Table bit at x; throws UndefinedInput outside the domain.
bool evaluate(const BooleanFunction& f, std::uint64_t x);

/// Two-party inner function g : {0,1}^{b1} x {0,1}^{b2} -> {0,1}. The table is
/// indexed by alice | (bob << b1).
class GadgetSpec {
 public:
  GadgetSpec() = default;
  GadgetSpec(int alice_bits, int bob_bits, BitVector table);

  int alice_bits() const { return alice_bits_; }
  int bob_bits() const { return bob_bits_; }
  const BitVector& table() const { return table_; }

  bool operator()(std::uint64_t alice, std::uint64_t bob) const {
    return table_.test(alice | (bob << alice_bits_));
  }

  friend bool operator==(const GadgetSpec&, const GadgetSpec&) = default;

 private:
  int alice_bits_ = 0;
  int bob_bits_ = 0;
  BitVector table_;
};

namespace gadgets {
GadgetSpec and2();
GadgetSpec xor2();
/// Inner product on b + b bits.
GadgetSpec ip(int b);
/// Addressing with Alice holding the b target bits and Bob the log b address
/// bits: g(x, a) = x_a. b must be a power of two >= 2.
GadgetSpec addr(int b);
}  // namespace gadgets

/// f o g, evaluated lazily. Alice's block i occupies bits [i*b1, (i+1)*b1) of
/// her input; likewise for Bob with b2.
class ComposedFunction {
 public:
  ComposedFunction(BooleanFunction outer, GadgetSpec gadget)
      : outer_(std::move(outer)), gadget_(std::move(gadget)) {}

  const BooleanFunction& outer() const { return outer_; }
  const GadgetSpec& gadget() const { return gadget_; }
  int blocks() const { return outer_.arity(); }
  int alice_arity() const { return outer_.arity() * gadget_.alice_bits(); }
  int bob_arity() const { return outer_.arity() * gadget_.bob_bits(); }

  /// (g(X_1, Y_1), ..., g(X_n, Y_n)) packed with block 1 in bit 0.
  std::uint64_t inner_vector(std::uint64_t alice, std::uint64_t bob) const;
  bool defined(std::uint64_t alice, std::uint64_t bob) const {
    return outer_.defined(inner_vector(alice, bob));
  }
  /// Raw value (0 where undefined).
  bool value(std::uint64_t alice, std::uint64_t bob) const {
    return outer_(inner_vector(alice, bob));
  }

 private:
  BooleanFunction outer_;
  GadgetSpec gadget_;
};

/// Throws CapExceeded when n*b1 or n*b2 exceeds limits.max_composed_bits.
ComposedFunction compose(const BooleanFunction& f, const GadgetSpec& g, const Limits& limits = {});

/// Throws UndefinedInput when (alice, bob) is outside the promise.
bool evaluate(const ComposedFunction& cf, std::uint64_t alice, std::uint64_t bob);

struct DependenceReport {
  bool depends_on_all = false;
  /// witness[i] = least z with bit i clear and f(z) != f(z | e_i), per
  /// 0-based variable i; empty when the function ignores variable i.
  std::vector<std::optional<std::uint64_t>> witness;
  /// 0-based indices of irrelevant variables.
  std::vector<int> missing() const;
};

DependenceReport depends_on_all(const BooleanFunction& f);

/// True iff f is constant on every cell {x in domain : x & mask = a}.
bool is_determined_by(const BooleanFunction& f, std::uint64_t mask);

bool is_symmetric(const BooleanFunction& f);
/// Entry w is f's value on weight-w inputs. Throws for non-symmetric f.
std::vector<bool> symmetric_spectrum(const BooleanFunction& f);
/// min{k : f constant on all x with |x| < n - k}. Requires f total,
/// symmetric and non-constant.
int switch_value(const BooleanFunction& f);

/// Named constructors for the functions used throughout the library.
namespace named {
/// OMB_n(x) = 1 iff the largest 1-based i with x_i = 0 is odd; OMB_n(1^n) = 0.
BooleanFunction omb(int n, const Limits& limits = {});
/// OMB_n restricted to {0^i 1^{n-i} : i in [n]} (contains 0^n, not 1^n).
BooleanFunction omb_prime(int n, const Limits& limits = {});
/// ADDR_n on log n + n bits; n a power of two >= 2.
BooleanFunction addr(int n, const Limits& limits = {});
/// IP on 2b bits, x in the low b bits and y in the high b bits.
BooleanFunction ip(int b, const Limits& limits = {});
BooleanFunction and_fn(int n, const Limits& limits = {});
BooleanFunction or_fn(int n, const Limits& limits = {});
BooleanFunction nor_fn(int n, const Limits& limits = {});
BooleanFunction xor_fn(int n, const Limits& limits = {});
/// 1 iff 2|x| >= n (ties go to 1 for even n).
BooleanFunction maj(int n, const Limits& limits = {});
/// 1 iff |x| >= k.
BooleanFunction thr(int k, int n, const Limits& limits = {});
/// values[w] is the output on weight-w inputs; arity = values.size() - 1.
BooleanFunction symmetric(const std::vector<bool>& values, const Limits& limits = {});
}  // namespace named

/// "n=3;tt=e8" (plus ";dom=..." for partial functions).
std::string serialize_function(const BooleanFunction& f);
BooleanFunction parse_serialized_function(const std::string& text, const Limits& limits = {});

/// Hex numeral of the table integer, most significant digit first, exactly
/// ceil(2^n / 4) digits.
std::string table_to_hex(const BitVector& table);
/// Inverse of table_to_hex for a table of `bits` bits; throws SpecError on a
/// wrong digit count, a bad digit or set bits beyond `bits`.
BitVector table_from_hex(const std::string& hex, std::uint64_t bits, std::size_t offset = 0);

}  // namespace boolift
