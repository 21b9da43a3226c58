#include "bsgamma/tensor.hpp"

#include <bit>
#include <cmath>

#include "bsgamma/errors.hpp"

namespace bsgamma {

namespace {

std::uint64_t full_mask(int k) { return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1; }

void require_same_universe(const CoreState& a, const CoreState& b) {
  if (a.p != b.p || a.k != b.k) throw InvalidArgument("core states over different block universes");
}

}  // namespace

BigInt CoreState::dimension() const {
  BigInt total = 0;
  for (const auto& [blocks, mult] : classes) total += mult * ipow(p, static_cast<unsigned long>(std::popcount(blocks)));
  return total;
}

ClassProduct tensor_product(std::uint64_t a, std::uint64_t b, int p) {
  const std::uint64_t u = a | b;
  const int exponent = std::popcount(a) + std::popcount(b) - std::popcount(u);
  return ClassProduct{u, ipow(p, static_cast<unsigned long>(exponent))};
}

std::optional<ClassProduct> tensor_classes(std::uint64_t a, std::uint64_t b, int k, int p) {
  ClassProduct out = tensor_product(a, b, p);
  if (out.blocks == full_mask(k)) return std::nullopt;
  return out;
}

CoreState core_of(const Decomposition& dec) {
  CoreState out{dec.p, dec.rank, {}};
  for (const auto& [sig, mult] : dec.multiplicities) {
    if (std::popcount(sig.blocks) != sig.d)
      throw InvalidArgument("core_of: decomposition is not over the max-rank group");
    if (dec.is_projective(sig) || mult == 0) continue;
    out.classes[sig.blocks] += mult;
  }
  return out;
}

CoreState core_of(const SymmetricDecomposition& dec, int max_blocks) { return core_of(dec.expand(max_blocks)); }

CoreState tensor_step(const CoreState& state, const CoreState& m) {
  require_same_universe(state, m);
  CoreState out{state.p, state.k, {}};
  for (const auto& [a, ma] : state.classes) {
    for (const auto& [b, mb] : m.classes) {
      auto product = tensor_classes(a, b, state.k, state.p);
      if (!product) continue;
      out.classes[product->blocks] += ma * mb * product->multiplicity;
    }
  }
  return out;
}

CoreState tensor_step_transform(const CoreState& state, const CoreState& m) {
  require_same_universe(state, m);
  if (state.k > 24) throw InstanceTooLarge("tensor_step_transform: 2^k table too large");
  const std::size_t size = std::size_t{1} << state.k;
  const int p = state.p;

  // Work with dimensions: the dimension carried by a union class is the
  // product of the factor dimensions, summed over pairs with that union.
  std::vector<BigInt> f(size, 0), g(size, 0);
  for (const auto& [a, mult] : state.classes) f[a] = mult * ipow(p, static_cast<unsigned long>(std::popcount(a)));
  for (const auto& [b, mult] : m.classes) g[b] = mult * ipow(p, static_cast<unsigned long>(std::popcount(b)));

  for (std::size_t bit = 1; bit < size; bit <<= 1)
    for (std::size_t s = 0; s < size; ++s)
      if (s & bit) {
        f[s] += f[s ^ bit];
        g[s] += g[s ^ bit];
      }
  for (std::size_t s = 0; s < size; ++s) f[s] *= g[s];
  for (std::size_t bit = 1; bit < size; bit <<= 1)
    for (std::size_t s = 0; s < size; ++s)
      if (s & bit) f[s] -= f[s ^ bit];

  CoreState out{state.p, state.k, {}};
  const std::uint64_t projective = full_mask(state.k);
  for (std::size_t s = 0; s < size; ++s) {
    if (s == projective || f[s] == 0) continue;
    const BigInt dim = ipow(p, static_cast<unsigned long>(std::popcount(s)));
    if (f[s] % dim != 0) throw NonIntegralMultiplicity("tensor_step_transform: class dimension not divisible");
    out.classes.emplace(s, f[s] / dim);
  }
  return out;
}

BigInt core_dimension_by_faces(const CoreState& m, int j) {
  if (m.k > 24) throw InstanceTooLarge("core_dimension_by_faces: 2^k table too large");
  const std::uint64_t full = full_mask(m.k);
  BigInt total = 0;
  for (std::uint64_t s = 0; s < full; ++s) {
    BigInt w = 0;
    for (const auto& [blocks, mult] : m.classes)
      if ((blocks & ~s) == 0) w += mult * ipow(m.p, static_cast<unsigned long>(std::popcount(blocks)));
    BigInt term;
    mpz_pow_ui(term.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(j));
    if ((m.k - 1 - std::popcount(s)) % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

double integer_root(const BigInt& c, int j) {
  if (c <= 0) return 0.0;
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, c.get_mpz_t());
  return std::exp((std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0)) / j);
}

GrowthEstimate growth(const PartitionPair& pp, int p, const GrowthOptions& options) {
  if (options.m_max < 2) throw InvalidArgument("growth: m_max must be >= 2");
  const SymmetricDecomposition dec = decompose_formula(pp, p);
  if (dec.k > options.max_blocks)
    throw InstanceTooLarge("growth: k = " + std::to_string(dec.k) + " blocks exceeds the limit " +
                           std::to_string(options.max_blocks));
  const CoreState m = core_of(dec, options.max_blocks);

  GrowthEstimate out;
  out.target = options.target;
  CoreState state = m;
  for (int j = 1; j <= options.m_max; ++j) {
    if (j > 1) state = tensor_step_transform(state, m);
    out.c_values.push_back(state.dimension());
    out.roots.push_back(integer_root(out.c_values.back(), j));
  }
  for (std::size_t j = 0; j + 1 < out.c_values.size(); ++j) {
    if (out.c_values[j] == 0) {
      out.ratios.emplace_back(std::nullopt);
      out.relative_errors.emplace_back(std::nullopt);
      continue;
    }
    BigRational ratio(out.c_values[j + 1], out.c_values[j]);
    ratio.canonicalize();
    out.ratios.emplace_back(ratio);
    if (out.target && *out.target != 0) {
      BigRational err = abs(ratio - BigRational(*out.target)) / BigRational(*out.target);
      err.canonicalize();
      out.relative_errors.emplace_back(err);
    } else {
      out.relative_errors.emplace_back(std::nullopt);
    }
  }
  return out;
}

}  // namespace bsgamma
