#include "bsgamma/tabloid.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <limits>

#include "bsgamma/combinatorics.hpp"
#include "bsgamma/errors.hpp"

namespace bsgamma {

namespace {

using BinomialTable = std::array<std::array<std::uint64_t, 65>, 65>;

const BinomialTable& small_binomials() {
  static const BinomialTable table = [] {
    BinomialTable t{};
    for (int a = 0; a <= 64; ++a) {
      t[a][0] = 1;
      for (int b = 1; b <= a; ++b) t[a][b] = t[a - 1][b - 1] + (b <= a - 1 ? t[a - 1][b] : 0);
    }
    return t;
  }();
  return table;
}

// Colexicographic rank of an r-subset, in [0, C(n, r)).
std::uint64_t colex_rank(std::uint64_t mask) {
  const auto& c = small_binomials();
  std::uint64_t rank = 0;
  int i = 1;
  while (mask) {
    const int pos = std::countr_zero(mask);
    rank += c[pos][i];
    ++i;
    mask &= mask - 1;
  }
  return rank;
}

std::uint64_t permute_mask(const Permutation& g, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask) {
    const int x = std::countr_zero(mask);
    out |= std::uint64_t{1} << g[static_cast<std::size_t>(x)];
    mask &= mask - 1;
  }
  return out;
}

int log_base(std::uint64_t value, int p) {
  int e = 0;
  while (value > 1) {
    if (value % static_cast<std::uint64_t>(p) != 0) throw std::logic_error("orbit size is not a power of p");
    value /= static_cast<std::uint64_t>(p);
    ++e;
  }
  return e;
}

// Local index of x after adding `shift` digitwise (base p, `digits` digits).
int translate(int x, int shift, int p, int digits) {
  int out = 0;
  int place = 1;
  for (int i = 0; i < digits; ++i, place *= p) {
    out += ((x % p + shift % p) % p) * place;
    x /= p;
    shift /= p;
  }
  return out;
}

void require_group_fits(const PartitionPair& pp, const ElementaryGroup& group) {
  if (pp.n() != group.degree())
    throw InvalidArgument("partition of " + std::to_string(pp.n()) + " does not match group degree " +
                          std::to_string(group.degree()));
}

}  // namespace

std::uint64_t tabloid_count(int n, int r) {
  if (r < 0 || r > n || n < 0) return 0;
  if (n <= 64) return small_binomials()[n][r];
  const BigInt c = binom(n, r);
  return c.fits_ulong_p() ? c.get_ui() : std::numeric_limits<std::uint64_t>::max();
}

PartitionPair PartitionPair::from_lambda(int lambda1, int lambda2) {
  if (lambda1 < 0 || lambda2 < 0) throw InvalidArgument("partition parts must be non-negative");
  if (lambda1 + lambda2 < 1) throw InvalidArgument("partition of n >= 1 required");
  return PartitionPair(std::max(lambda1, lambda2), std::min(lambda1, lambda2));
}

PartitionPair PartitionPair::from_nr(int n, int r) {
  if (r < 0 || r > n) throw InvalidArgument("need 0 <= r <= n");
  return from_lambda(n - r, r);
}

PrimeData PartitionPair::at_prime(int p) const {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  return PrimeData{n() / p, n() % p, r() / p, r() % p};
}

std::vector<int> Tabloid::points() const {
  std::vector<int> out;
  for (std::uint64_t m = second_row; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

Tabloid Tabloid::from_points(const std::vector<int>& points) {
  Tabloid t;
  for (int x : points) {
    if (x < 1 || x > 64) throw InvalidArgument("tabloid point out of range");
    t.second_row |= std::uint64_t{1} << (x - 1);
  }
  return t;
}

TabloidStream::TabloidStream(int n, int r) : n_(n), r_(r) {
  if (n < 0 || n > 64 || r < 0 || r > n) throw InvalidArgument("TabloidStream: need 0 <= r <= n <= 64");
}

bool TabloidStream::next() {
  if (!started_) {
    started_ = true;
    index_.resize(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i) index_[static_cast<std::size_t>(i)] = i;
  } else {
    int i = r_ - 1;
    while (i >= 0 && index_[static_cast<std::size_t>(i)] == n_ - r_ + i) --i;
    if (i < 0) return false;
    ++index_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r_; ++j) index_[static_cast<std::size_t>(j)] = index_[static_cast<std::size_t>(j - 1)] + 1;
  }
  current_.second_row = 0;
  for (int x : index_) current_.second_row |= std::uint64_t{1} << x;
  return true;
}

std::vector<Tabloid> enumerate_tabloids(const PartitionPair& pp) {
  std::vector<Tabloid> out;
  TabloidStream stream(pp.n(), pp.r());
  while (stream.next()) out.push_back(stream.current());
  return out;
}

std::vector<int> SummandSignature::block_indices() const {
  std::vector<int> out;
  for (std::uint64_t m = blocks; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

bool operator<(const SummandSignature& a, const SummandSignature& b) {
  if (a.d != b.d) return a.d < b.d;
  std::uint64_t x = a.blocks, y = b.blocks;
  while (x && y) {
    const int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return !x && y;
}

BigInt Decomposition::total_dimension() const {
  BigInt total = 0;
  for (const auto& [sig, mult] : multiplicities) total += mult * ipow(p, static_cast<unsigned long>(sig.d));
  return total;
}

BigInt SymmetricDecomposition::multiplicity(const SummandSignature& s) const {
  const int size = std::popcount(s.blocks);
  if (size != s.d || size > k) return 0;
  if (k < 64 && (s.blocks >> k) != 0) return 0;
  return per_subset[static_cast<std::size_t>(size)];
}

BigInt SymmetricDecomposition::total_dimension() const {
  BigInt total = 0;
  for (int d = 0; d <= k; ++d) total += binom(k, d) * per_subset[static_cast<std::size_t>(d)] * ipow(p, static_cast<unsigned long>(d));
  return total;
}

Decomposition SymmetricDecomposition::expand(int max_blocks) const {
  if (k > max_blocks)
    throw InstanceTooLarge("expanding 2^" + std::to_string(k) + " signatures exceeds the limit of 2^" +
                           std::to_string(max_blocks));
  Decomposition out{p, k, k, {}};
  const std::uint64_t subsets = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const int d = std::popcount(mask);
    const BigInt& m = per_subset[static_cast<std::size_t>(d)];
    if (m != 0) out.multiplicities.emplace(SummandSignature{mask, d}, m);
  }
  return out;
}

SummandSignature signature_of(const Tabloid& t, const ElementaryGroup& group) {
  SummandSignature sig;
  const int p = group.prime();
  const auto& blocks = group.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Block& block = blocks[b];
    const std::uint64_t window = block.size == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << block.size) - 1);
    const std::uint64_t local = (t.second_row >> block.first) & window;
    if (local == 0 || local == window) continue;
    // Stabilizer of the local subset inside the regular factor on this block.
    std::uint64_t stabilizer = 0;
    for (int shift = 0; shift < block.size; ++shift) {
      std::uint64_t moved = 0;
      for (std::uint64_t m = local; m; m &= m - 1)
        moved |= std::uint64_t{1} << translate(std::countr_zero(m), shift, p, block.exponent);
      if (moved == local) ++stabilizer;
    }
    const std::uint64_t orbit = static_cast<std::uint64_t>(block.size) / stabilizer;
    sig.blocks |= std::uint64_t{1} << b;
    sig.d += log_base(orbit, p);
  }
  return sig;
}

Decomposition decompose_enumerated(const PartitionPair& pp, const ElementaryGroup& group, std::uint64_t budget) {
  require_group_fits(pp, group);
  const std::uint64_t total = tabloid_count(pp.n(), pp.r());
  if (total > budget)
    throw InstanceTooLarge("C(" + std::to_string(pp.n()) + "," + std::to_string(pp.r()) + ") = " +
                           std::to_string(total) + " tabloids exceeds the enumeration budget " + std::to_string(budget));

  Decomposition out{group.prime(), group.rank(), static_cast<int>(group.blocks().size()), {}};
  std::vector<bool> seen(total, false);
  std::deque<std::uint64_t> frontier;
  TabloidStream stream(pp.n(), pp.r());
  while (stream.next()) {
    const std::uint64_t start = stream.current().second_row;
    const std::uint64_t start_rank = colex_rank(start);
    if (seen[start_rank]) continue;
    seen[start_rank] = true;
    frontier.assign(1, start);
    std::uint64_t orbit_size = 1;
    while (!frontier.empty()) {
      const std::uint64_t current = frontier.front();
      frontier.pop_front();
      for (const Permutation& g : group.generators()) {
        const std::uint64_t image = permute_mask(g, current);
        const std::uint64_t rank = colex_rank(image);
        if (!seen[rank]) {
          seen[rank] = true;
          ++orbit_size;
          frontier.push_back(image);
        }
      }
    }
    const SummandSignature sig = signature_of(Tabloid{start}, group);
    if (log_base(orbit_size, group.prime()) != sig.d)
      throw std::logic_error("orbit size disagrees with the partial-block signature");
    out.multiplicities[sig] += 1;
  }
  return out;
}

SymmetricDecomposition decompose_formula(const PartitionPair& pp, int p) {
  const PrimeData pd = pp.at_prime(p);
  if (p > pp.n()) throw PrimeTooLarge(p, pp.n());
  SymmetricDecomposition out{p, pd.k, std::vector<BigInt>(static_cast<std::size_t>(pd.k) + 1, 0)};
  out.per_subset[0] = binom(pd.k, pd.q) * binom(pd.a0, pd.b0);
  for (int d = 1; d <= pd.k; ++d) {
    BigInt tabloids = 0;
    for (int j = 0; j <= d; ++j) {
      const BigInt coef = binom(pd.k - d, pd.q - j);
      if (coef == 0) continue;
      const int total = j * p + pd.b0;
      tabloids += coef * (block_sum(p, pd.a0, total, d, false, true) + block_sum(p, pd.a0, total, d, true, true));
    }
    const BigInt dim = ipow(p, static_cast<unsigned long>(d));
    if (tabloids % dim != 0)
      throw NonIntegralMultiplicity("tabloid count " + to_decimal(tabloids) + " for d = " + std::to_string(d) +
                                    " is not divisible by " + to_decimal(dim));
    out.per_subset[static_cast<std::size_t>(d)] = tabloids / dim;
  }
  return out;
}

bool same_multiplicities(const SymmetricDecomposition& formula, const Decomposition& enumerated) {
  if (formula.p != enumerated.p || formula.k != enumerated.block_count || formula.k != enumerated.rank) return false;
  for (const auto& [sig, mult] : enumerated.multiplicities)
    if (formula.multiplicity(sig) != mult) return false;
  // Every non-zero formula class must also have been seen.
  BigInt classes_expected = 0;
  for (int d = 0; d <= formula.k; ++d)
    if (formula.per_subset[static_cast<std::size_t>(d)] != 0) classes_expected += binom(formula.k, d);
  return classes_expected == static_cast<unsigned long>(enumerated.multiplicities.size());
}

BigInt fixed_count(const ElementaryGroup& group, const SubgroupOrderP& z, const PartitionPair& pp,
                   std::uint64_t budget) {
  require_group_fits(pp, group);
  if (static_cast<int>(z.line.size()) != group.rank()) throw InvalidArgument("fixed_count: line has wrong length");
  const std::uint64_t total = tabloid_count(pp.n(), pp.r());
  if (total <= budget) {
    const Permutation g = group.permutation_of(GroupElement{z.line});
    std::uint64_t fixed = 0;
    TabloidStream stream(pp.n(), pp.r());
    while (stream.next()) {
      const std::uint64_t t = stream.current().second_row;
      if (permute_mask(g, t) == t) ++fixed;
    }
    return BigInt(static_cast<unsigned long>(fixed));
  }
  if (group.orbit_type().is_max_rank() && z.support() == 1) {
    const int n = pp.n(), r = pp.r(), p = group.prime();
    return binom(n - p, r) + binom(n - p, r - p);
  }
  throw InstanceTooLarge("fixed_count: " + std::to_string(total) + " tabloids exceeds the budget and no closed count applies");
}

}  // namespace bsgamma
