#ifndef BSGAMMA_TABLOID_HPP
#define BSGAMMA_TABLOID_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "bsgamma/bigint.hpp"
#include "bsgamma/group.hpp"

namespace bsgamma {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// n = kp + a0 and r = qp + b0 with 0 <= a0, b0 < p.
struct PrimeData {
  int k = 0;
  int a0 = 0;
  int q = 0;
  int b0 = 0;
};

/// Two-part partition (lambda1, lambda2) of n with lambda1 >= lambda2.
/// Construction sorts the parts, so r = lambda2 is always the smaller one.
class PartitionPair {
 public:
  static PartitionPair from_lambda(int lambda1, int lambda2);
  static PartitionPair from_nr(int n, int r);

  int n() const { return lambda1_ + lambda2_; }
  int lambda1() const { return lambda1_; }
  int lambda2() const { return lambda2_; }
  int r() const { return lambda2_; }
  PrimeData at_prime(int p) const;

  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;

 private:
  PartitionPair(int l1, int l2) : lambda1_(l1), lambda2_(l2) {}
  int lambda1_;
  int lambda2_;
};

/// A tabloid identified by its second row; bit i stands for point i+1.
struct Tabloid {
  std::uint64_t second_row = 0;

  std::vector<int> points() const;
  static Tabloid from_points(const std::vector<int>& points);
  friend bool operator==(const Tabloid&, const Tabloid&) = default;
};

/// Yields the C(n, r) tabloids in lexicographic order of their sorted rows.
class TabloidStream {
 public:
  TabloidStream(int n, int r);
  bool next();
  Tabloid current() const { return current_; }

 private:
  int n_;
  int r_;
  std::vector<int> index_;
  Tabloid current_;
  bool started_ = false;
};

std::vector<Tabloid> enumerate_tabloids(const PartitionPair& pp);

/// Isomorphism class of a cyclic summand: the set of blocks a generating
/// tabloid uses partially, and log_p of the summand's dimension.
struct SummandSignature {
  std::uint64_t blocks = 0;  // bit b = blocks()[b] of the acting group
  int d = 0;

  std::vector<int> block_indices() const;  // 1-based
  friend bool operator==(const SummandSignature&, const SummandSignature&) = default;
};

/// Ordered by d, then lexicographically by block index list.
bool operator<(const SummandSignature& a, const SummandSignature& b);

/// Explicit multiplicity map, one entry per summand class that occurs.
struct Decomposition {
  int p = 0;
  int rank = 0;
  int block_count = 0;
  std::map<SummandSignature, BigInt> multiplicities;

  /// Sum of multiplicity * p^d; equals C(n, r) for a tabloid module.
  BigInt total_dimension() const;
  bool is_projective(const SummandSignature& s) const { return s.d == rank; }
};

/// The max-rank decomposition in closed form: multiplicity depends only on
/// the number of partial blocks, so it is stored once per size.
struct SymmetricDecomposition {
  int p = 0;
  int k = 0;
  std::vector<BigInt> per_subset;  // per_subset[d] = multiplicity of each d-subset of blocks

  BigInt multiplicity(const SummandSignature& s) const;
  BigInt total_dimension() const;
  /// Materializes every signature with non-zero multiplicity.
  /// Throws InstanceTooLarge above max_blocks blocks.
  Decomposition expand(int max_blocks = 20) const;
};

SummandSignature signature_of(const Tabloid& t, const ElementaryGroup& group);

/// Splits the tabloids into orbits by closing each one under the generators.
/// Every orbit contributes one summand to the class of its first tabloid.
/// Throws InstanceTooLarge when C(n, r) exceeds the budget.
Decomposition decompose_enumerated(const PartitionPair& pp, const ElementaryGroup& group,
                                   std::uint64_t budget = kDefaultBudget);

/// Multiplicities of the max-rank restriction from the counting formulas:
///   d = 0:  C(k, q) C(a0, b0)
///   d >= 1: p^-d sum_{j=0}^{d} C(k-d, q-j) [S_d(jp+b0) + T_d(jp+b0)]
/// where S_d and T_d are the bounded block sums without and with the tail.
/// Throws NonIntegralMultiplicity if a division by p^d is inexact.
SymmetricDecomposition decompose_formula(const PartitionPair& pp, int p);

/// Signature-by-signature equality of the two routes.
bool same_multiplicities(const SymmetricDecomposition& formula, const Decomposition& enumerated);

/// Number of tabloids fixed by a generator of Z. Enumerates within the
/// budget; above it only the coordinate lines of the max-rank group have a
/// closed count, C(n-p, r) + C(n-p, r-p).
BigInt fixed_count(const ElementaryGroup& group, const SubgroupOrderP& z, const PartitionPair& pp,
                   std::uint64_t budget = kDefaultBudget);

/// C(n, r) as a machine integer, saturating.
std::uint64_t tabloid_count(int n, int r);

}  // namespace bsgamma

#endif
