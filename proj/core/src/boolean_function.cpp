#include "boolift/boolean_function.hpp"

#include <bit>
#include <string>

#include "boolift/combinatorics.hpp"
#include "boolift/error.hpp"

namespace boolift {

std::uint64_t BooleanFunction::checked_size(int arity, const Limits& limits) {
  if (arity < 0) throw PreconditionError("arity must be nonnegative");
  if (arity > limits.max_arity || arity > 62)
    throw CapExceeded("arity " + std::to_string(arity) + " exceeds cap " +
                      std::to_string(limits.max_arity));
  return std::uint64_t{1} << arity;
}

BooleanFunction BooleanFunction::from_table(int arity, BitVector table,
                                            std::optional<BitVector> domain,
                                            const Limits& limits) {
  const std::uint64_t size = checked_size(arity, limits);
  if (table.size() != size) throw PreconditionError("table length must be 2^arity");
  BooleanFunction f;
  f.arity_ = arity;
  if (domain) {
    if (domain->size() != size) throw PreconditionError("domain length must be 2^arity");
    table &= *domain;
    f.domain_ = std::move(*domain);
    f.total_ = f.domain_.all();
  } else {
    f.domain_ = BitVector(size, true);
    f.total_ = true;
  }
  f.table_ = std::move(table);
  return f;
}

BooleanFunction BooleanFunction::constant(int arity, bool value, const Limits& limits) {
  return from_table(arity, BitVector(checked_size(arity, limits), value), std::nullopt, limits);
}

BooleanFunction BooleanFunction::restricted_to(const BitVector& domain) const {
  BitVector d = domain_ & domain;
  Limits l;
  l.max_arity = arity_;
  return from_table(arity_, table_, std::move(d), l);
}

bool evaluate(const BooleanFunction& f, std::uint64_t x) {
  if (x >= f.input_count()) throw PreconditionError("input out of range");
  if (!f.defined(x)) throw UndefinedInput("undefined input " + std::to_string(x));
  return f(x);
}

GadgetSpec::GadgetSpec(int alice_bits, int bob_bits, BitVector table)
    : alice_bits_(alice_bits), bob_bits_(bob_bits), table_(std::move(table)) {
  if (alice_bits < 1 || bob_bits < 1) throw PreconditionError("gadget arities must be >= 1");
  if (alice_bits + bob_bits > 24) throw CapExceeded("gadget table too large");
  if (table_.size() != (std::uint64_t{1} << (alice_bits + bob_bits)))
    throw PreconditionError("gadget table length must be 2^(b1+b2)");
}

namespace gadgets {

namespace {
template <class Pred>
GadgetSpec from_predicate(int b1, int b2, Pred pred) {
  if (b1 + b2 > 24) throw CapExceeded("gadget table too large");
  BitVector t(std::uint64_t{1} << (b1 + b2));
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << b2); ++y)
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << b1); ++x)
      if (pred(x, y)) t.set(x | (y << b1));
  return GadgetSpec(b1, b2, std::move(t));
}
}  // namespace

GadgetSpec and2() {
  return from_predicate(1, 1, [](std::uint64_t x, std::uint64_t y) { return (x & y) != 0; });
}

GadgetSpec xor2() {
  return from_predicate(1, 1, [](std::uint64_t x, std::uint64_t y) { return (x ^ y) != 0; });
}

GadgetSpec ip(int b) {
  if (b < 1) throw PreconditionError("ip gadget needs b >= 1");
  return from_predicate(b, b, [](std::uint64_t x, std::uint64_t y) {
    return (std::popcount(x & y) & 1) != 0;
  });
}

GadgetSpec addr(int b) {
  if (b < 2 || !is_power_of_two(static_cast<std::uint64_t>(b)))
    throw PreconditionError("addr gadget size must be a power of two >= 2");
  const int la = ceil_log2(static_cast<std::uint64_t>(b));
  return from_predicate(b, la, [](std::uint64_t x, std::uint64_t a) { return ((x >> a) & 1u) != 0; });
}

}  // namespace gadgets

std::uint64_t ComposedFunction::inner_vector(std::uint64_t alice, std::uint64_t bob) const {
  const int b1 = gadget_.alice_bits(), b2 = gadget_.bob_bits();
  const std::uint64_t m1 = (std::uint64_t{1} << b1) - 1, m2 = (std::uint64_t{1} << b2) - 1;
  std::uint64_t z = 0;
  for (int i = 0; i < blocks(); ++i) {
    if (gadget_((alice >> (i * b1)) & m1, (bob >> (i * b2)) & m2)) z |= std::uint64_t{1} << i;
  }
  return z;
}

ComposedFunction compose(const BooleanFunction& f, const GadgetSpec& g, const Limits& limits) {
  const int a = f.arity() * g.alice_bits(), b = f.arity() * g.bob_bits();
  if (a > limits.max_composed_bits || b > limits.max_composed_bits)
    throw CapExceeded("composed arity " + std::to_string(std::max(a, b)) + " exceeds cap " +
                      std::to_string(limits.max_composed_bits));
  return ComposedFunction(f, g);
}

bool evaluate(const ComposedFunction& cf, std::uint64_t alice, std::uint64_t bob) {
  return evaluate(cf.outer(), cf.inner_vector(alice, bob));
}

std::vector<int> DependenceReport::missing() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < witness.size(); ++i)
    if (!witness[i]) out.push_back(static_cast<int>(i));
  return out;
}

DependenceReport depends_on_all(const BooleanFunction& f) {
  if (!f.is_total()) throw PreconditionError("depends_on_all requires a total function");
  const int n = f.arity();
  DependenceReport r;
  r.witness.assign(static_cast<std::size_t>(n), std::nullopt);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t e = std::uint64_t{1} << i;
    for (std::uint64_t z = 0; z < f.input_count(); ++z) {
      if (z & e) continue;
      if (f(z) != f(z | e)) {
        r.witness[static_cast<std::size_t>(i)] = z;
        break;
      }
    }
  }
  r.depends_on_all = r.missing().empty();
  return r;
}

bool is_determined_by(const BooleanFunction& f, std::uint64_t mask) {
  const std::uint64_t size = f.input_count();
  mask &= size - 1;
  // cell value per restriction a = x & mask: 0 unseen, 1 value 0, 2 value 1
  std::vector<std::uint8_t> seen(size, 0);
  for (std::uint64_t x = 0; x < size; ++x) {
    if (!f.defined(x)) continue;
    const std::uint8_t v = f(x) ? 2 : 1;
    auto& s = seen[x & mask];
    if (s == 0) {
      s = v;
    } else if (s != v) {
      return false;
    }
  }
  return true;
}

bool is_symmetric(const BooleanFunction& f) {
  if (!f.is_total()) throw PreconditionError("is_symmetric requires a total function");
  std::vector<int> val(static_cast<std::size_t>(f.arity()) + 1, -1);
  for (std::uint64_t x = 0; x < f.input_count(); ++x) {
    int& v = val[static_cast<std::size_t>(std::popcount(x))];
    if (v < 0) {
      v = f(x);
    } else if (v != static_cast<int>(f(x))) {
      return false;
    }
  }
  return true;
}

std::vector<bool> symmetric_spectrum(const BooleanFunction& f) {
  if (!is_symmetric(f)) throw PreconditionError("function is not symmetric");
  std::vector<bool> out(static_cast<std::size_t>(f.arity()) + 1);
  for (int w = 0; w <= f.arity(); ++w) out[static_cast<std::size_t>(w)] = f((std::uint64_t{1} << w) - 1);
  return out;
}

int switch_value(const BooleanFunction& f) {
  const auto spec = symmetric_spectrum(f);
  const int n = f.arity();
  bool constant = true;
  for (bool v : spec) constant = constant && v == spec[0];
  if (constant) throw PreconditionError("switch is undefined for constant functions");
  // Largest m such that weights 0..m-1 share one value; switch = n - m.
  int m = 1;
  while (m <= n && spec[static_cast<std::size_t>(m)] == spec[0]) ++m;
  return n - m;
}

namespace named {

BooleanFunction omb(int n, const Limits& limits) {
  if (n < 1) throw PreconditionError("omb needs n >= 1");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  return BooleanFunction::from_predicate(
      n,
      [full](std::uint64_t x) {
        const std::uint64_t zeros = ~x & full;
        if (!zeros) return false;
        const int top = 64 - std::countl_zero(zeros);  // 1-based index of highest zero
        return (top & 1) != 0;
      },
      limits);
}

BooleanFunction omb_prime(int n, const Limits& limits) {
  BooleanFunction f = omb(n, limits);
  BitVector dom(f.input_count());
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (int i = 1; i <= n; ++i) dom.set(full & ~((std::uint64_t{1} << i) - 1));
  return BooleanFunction::from_table(n, f.table(), std::move(dom), limits);
}

BooleanFunction addr(int n, const Limits& limits) {
  if (n < 2 || !is_power_of_two(static_cast<std::uint64_t>(n)))
    throw PreconditionError("addr size must be a power of two >= 2");
  const int la = ceil_log2(static_cast<std::uint64_t>(n));
  const std::uint64_t amask = (std::uint64_t{1} << la) - 1;
  return BooleanFunction::from_predicate(
      la + n, [la, amask](std::uint64_t x) { return ((x >> (la + (x & amask))) & 1u) != 0; },
      limits);
}

BooleanFunction ip(int b, const Limits& limits) {
  if (b < 1) throw PreconditionError("ip needs b >= 1");
  const std::uint64_t m = (std::uint64_t{1} << b) - 1;
  return BooleanFunction::from_predicate(
      2 * b, [b, m](std::uint64_t z) { return (std::popcount(z & (z >> b) & m) & 1) != 0; },
      limits);
}

BooleanFunction and_fn(int n, const Limits& limits) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  return BooleanFunction::from_predicate(n, [full](std::uint64_t x) { return x == full; }, limits);
}

BooleanFunction or_fn(int n, const Limits& limits) {
  return BooleanFunction::from_predicate(n, [](std::uint64_t x) { return x != 0; }, limits);
}

BooleanFunction nor_fn(int n, const Limits& limits) {
  return BooleanFunction::from_predicate(n, [](std::uint64_t x) { return x == 0; }, limits);
}

BooleanFunction xor_fn(int n, const Limits& limits) {
  return BooleanFunction::from_predicate(
      n, [](std::uint64_t x) { return (std::popcount(x) & 1) != 0; }, limits);
}

BooleanFunction maj(int n, const Limits& limits) {
  return BooleanFunction::from_predicate(
      n, [n](std::uint64_t x) { return 2 * std::popcount(x) >= n; }, limits);
}

BooleanFunction thr(int k, int n, const Limits& limits) {
  if (k < 0 || k > n + 1) throw PreconditionError("threshold out of range");
  return BooleanFunction::from_predicate(
      n, [k](std::uint64_t x) { return std::popcount(x) >= k; }, limits);
}

BooleanFunction symmetric(const std::vector<bool>& values, const Limits& limits) {
  if (values.empty()) throw PreconditionError("symmetric spectrum must be nonempty");
  const int n = static_cast<int>(values.size()) - 1;
  return BooleanFunction::from_predicate(
      n, [&values](std::uint64_t x) { return static_cast<bool>(values[static_cast<std::size_t>(std::popcount(x))]); },
      limits);
}

}  // namespace named

std::string table_to_hex(const BitVector& table) {
  static constexpr char digits[] = "0123456789abcdef";
  const std::size_t nd = (table.size() + 3) / 4;
  std::string out(nd, '0');
  for (std::size_t d = 0; d < nd; ++d) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::size_t i = 4 * d + b;
      if (i < table.size() && table.test(i)) v |= 1u << b;
    }
    out[nd - 1 - d] = digits[v];
  }
  return out;
}

BitVector table_from_hex(const std::string& hex, std::uint64_t bits, std::size_t offset) {
  const std::size_t nd = static_cast<std::size_t>((bits + 3) / 4);
  if (hex.size() != nd)
    throw SpecError("expected " + std::to_string(nd) + " hex digits, got " + std::to_string(hex.size()),
                    offset);
  BitVector t(bits);
  for (std::size_t k = 0; k < nd; ++k) {
    const char c = hex[k];
    unsigned v;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw SpecError(std::string("bad hex digit '") + c + "'", offset + k);
    }
    const std::size_t d = nd - 1 - k;
    for (unsigned b = 0; b < 4; ++b) {
      if (!((v >> b) & 1u)) continue;
      const std::size_t i = 4 * d + b;
      if (i >= bits) throw SpecError("hex sets bits beyond the table length", offset + k);
      t.set(i);
    }
  }
  return t;
}

std::string serialize_function(const BooleanFunction& f) {
  std::string s = "n=" + std::to_string(f.arity()) + ";tt=" + table_to_hex(f.table());
  if (!f.is_total()) s += ";dom=" + table_to_hex(f.domain());
  return s;
}

BooleanFunction parse_serialized_function(const std::string& text, const Limits& limits) {
  if (text.rfind("n=", 0) != 0) throw SpecError("expected 'n='", 0);
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw SpecError("expected ';tt='", text.size());
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(text.substr(2, semi - 2), &used);
    if (used != semi - 2) throw SpecError("bad arity", 2);
  } catch (const std::logic_error&) {
    throw SpecError("bad arity", 2);
  }
  const std::uint64_t size = BooleanFunction::checked_size(n, limits);
  if (text.compare(semi, 4, ";tt=") != 0) throw SpecError("expected ';tt='", semi);
  const std::size_t tstart = semi + 4;
  const auto dpos = text.find(";dom=", tstart);
  const std::string tt = text.substr(tstart, dpos == std::string::npos ? std::string::npos : dpos - tstart);
  BitVector table = table_from_hex(tt, size, tstart);
  std::optional<BitVector> dom;
  if (dpos != std::string::npos) dom = table_from_hex(text.substr(dpos + 5), size, dpos + 5);
  return BooleanFunction::from_table(n, std::move(table), std::move(dom), limits);
}

}  // namespace boolift
