#include "boolift/transforms.hpp"

#include <algorithm>
#include <string>

#include "boolift/error.hpp"

namespace boolift {

namespace {

void require_total(const BooleanFunction& f, const char* op) {
  if (!f.is_total()) throw PreconditionError(std::string(op) + " requires a total function");
}

std::vector<std::int32_t> unpack(const BooleanFunction& f) {
  std::vector<std::int32_t> a(f.input_count());
  const auto words = f.table().words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t v = words[w];
    const std::size_t base = w * 64;
    const std::size_t lim = std::min<std::size_t>(64, a.size() - base);
    for (std::size_t b = 0; b < lim; ++b) a[base + b] = static_cast<std::int32_t>((v >> b) & 1u);
  }
  return a;
}

template <class Coeffs>
std::int64_t lookup(const Coeffs& coeffs, std::uint64_t mask) {
  auto it = std::lower_bound(coeffs.begin(), coeffs.end(), mask,
                             [](const auto& p, std::uint64_t m) { return p.first < m; });
  return it != coeffs.end() && it->first == mask ? it->second : 0;
}

}  // namespace

std::vector<std::uint64_t> MobiusSpectrum::support() const {
  std::vector<std::uint64_t> out;
  out.reserve(coeffs.size());
  for (const auto& [m, c] : coeffs) out.push_back(m);
  return out;
}

std::int64_t MobiusSpectrum::at(std::uint64_t mask) const { return lookup(coeffs, mask); }
std::int64_t FourierSpectrum::at(std::uint64_t mask) const { return lookup(coeffs, mask); }

std::vector<std::int32_t> mobius_dense(const BooleanFunction& f) {
  require_total(f, "mobius_spectrum");
  std::vector<std::int32_t> a = unpack(f);
  const std::size_t size = a.size();
  for (std::size_t h = 1; h < size; h <<= 1)
    for (std::size_t i = 0; i < size; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) a[j + h] -= a[j];
  return a;
}

MobiusSpectrum mobius_spectrum(const BooleanFunction& f) {
  const auto a = mobius_dense(f);
  MobiusSpectrum s;
  s.arity = f.arity();
  for (std::size_t m = 0; m < a.size(); ++m)
    if (a[m]) s.coeffs.emplace_back(m, a[m]);
  return s;
}

std::size_t mobius_sparsity(const BooleanFunction& f) {
  const auto a = mobius_dense(f);
  return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](std::int32_t v) { return v != 0; }));
}

std::vector<std::uint64_t> mobius_support(const BooleanFunction& f) {
  return mobius_spectrum(f).support();
}

BitVector inverse_mobius(const MobiusSpectrum& spectrum) {
  const std::size_t size = std::size_t{1} << spectrum.arity;
  std::vector<std::int64_t> a(size, 0);
  for (const auto& [m, c] : spectrum.coeffs) a[m] = c;
  for (std::size_t h = 1; h < size; h <<= 1)
    for (std::size_t i = 0; i < size; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) a[j + h] += a[j];
  BitVector t(size);
  for (std::size_t x = 0; x < size; ++x) {
    if (a[x] != 0 && a[x] != 1)
      throw PreconditionError("spectrum does not reconstruct a 0/1 function at x=" + std::to_string(x));
    if (a[x]) t.set(x);
  }
  return t;
}

std::vector<std::int32_t> fourier_dense(const BooleanFunction& f, FourierConvention convention) {
  require_total(f, "fourier_spectrum");
  std::vector<std::int32_t> a = unpack(f);
  if (convention == FourierConvention::PlusMinus)
    for (auto& v : a) v = 1 - 2 * v;
  const std::size_t size = a.size();
  for (std::size_t h = 1; h < size; h <<= 1)
    for (std::size_t i = 0; i < size; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t u = a[j], v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
  return a;
}

FourierSpectrum fourier_spectrum(const BooleanFunction& f, FourierConvention convention) {
  const auto a = fourier_dense(f, convention);
  FourierSpectrum s;
  s.arity = f.arity();
  s.convention = convention;
  for (std::size_t m = 0; m < a.size(); ++m)
    if (a[m]) s.coeffs.emplace_back(m, a[m]);
  return s;
}

std::size_t fourier_sparsity(const BooleanFunction& f, FourierConvention convention) {
  const auto a = fourier_dense(f, convention);
  return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](std::int32_t v) { return v != 0; }));
}

TitsworthResult titsworth_check(const BooleanFunction& f, const Limits& limits) {
  require_total(f, "titsworth_check");
  if (f.arity() > limits.max_titsworth_arity)
    throw CapExceeded("titsworth_check arity " + std::to_string(f.arity()) + " exceeds cap " +
                      std::to_string(limits.max_titsworth_arity));
  return titsworth_check(mobius_spectrum(f), limits);
}

TitsworthResult titsworth_check(const MobiusSpectrum& spectrum, const Limits& limits) {
  if (spectrum.arity > limits.max_titsworth_arity)
    throw CapExceeded("titsworth_check arity exceeds cap");
  const auto& c = spectrum.coeffs;
  const std::uint64_t pairs = static_cast<std::uint64_t>(c.size()) * c.size();
  if (pairs > limits.max_search) throw CapExceeded("titsworth_check pair count exceeds search cap");
  const std::size_t size = std::size_t{1} << spectrum.arity;
  std::vector<__int128> sum(size, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    sum[c[i].first] += static_cast<__int128>(c[i].second) * c[i].second;
    for (std::size_t j = i + 1; j < c.size(); ++j)
      sum[c[i].first | c[j].first] += 2 * static_cast<__int128>(c[i].second) * c[j].second;
  }
  TitsworthResult r;
  std::size_t k = 0;
  for (std::size_t w = 0; w < size; ++w) {
    while (k < c.size() && c[k].first < w) ++k;
    const std::int64_t coef = (k < c.size() && c[k].first == w) ? c[k].second : 0;
    if (sum[w] != coef) {
      r.ok = false;
      r.violating = w;
      r.coefficient = coef;
      r.pair_sum = static_cast<std::int64_t>(sum[w]);
      return r;
    }
  }
  return r;
}

}  // namespace boolift
