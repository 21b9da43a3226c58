#ifndef BSGAMMA_GROUP_HPP
#define BSGAMMA_GROUP_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bsgamma {

/// One conjugacy class of maximal elementary abelian p-subgroups of S_n.
///
/// n = a0 + sum_j counts[j-1] * p^j with a0 = n mod p; the class is the
/// product of counts[j-1] copies of the regular action of (Z/p)^j.
struct OrbitType {
  int p = 0;
  int n = 0;
  int a0 = 0;
  std::vector<int> counts;  // counts[j-1] = number of factors of rank j; no trailing zeros

  int rank() const;
  /// Number of orbits of size > 1.
  int block_count() const;
  bool is_max_rank() const;
  /// "1:2,2:1" lists j:counts[j-1] for the non-zero counts.
  std::string encoding() const;

  /// Parses an encoding and validates it against n and p. Throws InvalidArgument.
  static OrbitType parse(std::string_view text, int n, int p);

  friend bool operator==(const OrbitType&, const OrbitType&) = default;
};

/// All orbit types for S_n at prime p, max-rank type first, then by counts
/// in decreasing lexicographic order. Throws PrimeTooLarge when p > n.
std::vector<OrbitType> enumerate_orbit_types(int n, int p);

/// The type whose group is generated by floor(n/p) disjoint p-cycles.
OrbitType max_rank_type(int n, int p);

/// Permutation of {0..n-1} stored as its image list.
using Permutation = std::vector<int>;

/// Element of the group as an exponent vector over F_p, one entry per generator.
struct GroupElement {
  std::vector<int> exponents;
};

/// Order-p subgroup, stored as the generating line with first non-zero coordinate 1.
struct SubgroupOrderP {
  std::vector<int> line;

  /// Non-zero coordinates; a single one means a coordinate (one-generator) line.
  int support() const;
  friend bool operator==(const SubgroupOrderP&, const SubgroupOrderP&) = default;
};

/// Rescales a non-zero vector so its first non-zero coordinate is 1.
SubgroupOrderP canonical_line(std::vector<int> vector, int p);

/// A contiguous orbit {first+1, ..., first+size} of size p^exponent, acted on
/// regularly by generators first_generator .. first_generator+exponent-1.
struct Block {
  int first = 0;
  int size = 0;
  int exponent = 0;
  int first_generator = 0;
};

/// Concrete realization of an orbit type. Points of a block of size p^j are
/// indexed 0..p^j-1 in base p; the j generators of that block each add 1 to
/// one digit. Non-singleton blocks come first in order of increasing size,
/// followed by the a0 fixed points.
class ElementaryGroup {
 public:
  static constexpr int kMaxDegree = 64;

  explicit ElementaryGroup(OrbitType type);

  const OrbitType& orbit_type() const { return type_; }
  int prime() const { return type_.p; }
  int degree() const { return type_.n; }
  int rank() const { return static_cast<int>(generators_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// Orbits on {1..n}: the blocks followed by the singletons, 1-based.
  std::vector<std::vector<int>> orbits() const;
  /// Index into blocks() of a 0-based point, or -1 for a fixed point.
  int block_of(int point0) const { return block_of_[static_cast<std::size_t>(point0)]; }

  /// Image of a 1-based point.
  int apply(const GroupElement& g, int point) const;
  Permutation permutation_of(const GroupElement& g) const;

 private:
  OrbitType type_;
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
  std::vector<Permutation> generators_;
};

/// Streams the (p^rank - 1)/(p - 1) order-p subgroups of an elementary
/// abelian group of the given rank, each exactly once.
class SubgroupStream {
 public:
  SubgroupStream(int rank, int p);
  bool next();
  const SubgroupOrderP& current() const { return current_; }

 private:
  int rank_;
  int p_;
  int lead_ = -1;
  SubgroupOrderP current_;
};

SubgroupStream order_p_subgroups(const ElementaryGroup& group);

/// (p^rank - 1)/(p - 1), saturating at UINT64_MAX.
std::uint64_t order_p_subgroup_count(int rank, int p);

/// Composition of permutations: (a * b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace bsgamma

#endif
