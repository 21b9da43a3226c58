#ifndef BSGAMMA_TENSOR_HPP
#define BSGAMMA_TENSOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bsgamma/bigint.hpp"
#include "bsgamma/tabloid.hpp"

namespace bsgamma {

/// Non-projective part of a module restricted to the max-rank group, keyed
/// by block subset (the class of a summand is its set of partial blocks, and
/// its dimension is p^|subset|). The full subset is projective and never stored.
struct CoreState {
  int p = 0;
  int k = 0;
  std::map<std::uint64_t, BigInt> classes;

  BigInt dimension() const;
  bool empty() const { return classes.empty(); }
  friend bool operator==(const CoreState&, const CoreState&) = default;
};

/// Result of tensoring two classes: union of block sets, with
/// p^d1 * p^d2 = multiplicity * p^|union|.
struct ClassProduct {
  std::uint64_t blocks = 0;
  BigInt multiplicity;
};

ClassProduct tensor_product(std::uint64_t a, std::uint64_t b, int p);

/// As tensor_product, but nullopt when the union covers all k blocks.
std::optional<ClassProduct> tensor_classes(std::uint64_t a, std::uint64_t b, int k, int p);

CoreState core_of(const Decomposition& dec);
CoreState core_of(const SymmetricDecomposition& dec, int max_blocks = 20);

/// core(state (x) m) by summing tensor_classes over every pair of classes.
CoreState tensor_step(const CoreState& state, const CoreState& m);

/// Same product via subset-sum (zeta) transforms over the block lattice:
/// O(k 2^k) big-integer operations instead of one per pair of classes.
CoreState tensor_step_transform(const CoreState& state, const CoreState& m);

struct GrowthEstimate {
  std::vector<BigInt> c_values;              // c_1 .. c_m
  std::vector<std::optional<BigRational>> ratios;  // c_{j+1}/c_j; nullopt when c_j = 0
  std::vector<double> roots;                 // c_j^(1/j)
  std::optional<BigInt> target;
  std::vector<std::optional<BigRational>> relative_errors;  // |ratio - target| / target
};

struct GrowthOptions {
  int m_max = 200;
  int max_blocks = 16;
  std::optional<BigInt> target;
};

/// Dimension of the core of the j-th tensor power of the max-rank
/// restriction, j = 1 .. m_max. Throws InstanceTooLarge above max_blocks.
GrowthEstimate growth(const PartitionPair& pp, int p, const GrowthOptions& options = {});

/// Dimension of core(M^(x)j) from the face sums alone: with w(S) the total
/// dimension of the classes inside block set S,
///   c_j = sum over proper subsets S of (-1)^(k-1-|S|) w(S)^j.
/// Shares no code with the tensor steps.
BigInt core_dimension_by_faces(const CoreState& m, int j);

/// c^(1/j) evaluated in floating point without overflowing on huge c.
double integer_root(const BigInt& c, int j);

}  // namespace bsgamma

#endif
