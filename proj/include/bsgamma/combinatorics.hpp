#ifndef BSGAMMA_COMBINATORICS_HPP
#define BSGAMMA_COMBINATORICS_HPP

#include <optional>
#include <span>
#include <vector>

#include "bsgamma/bigint.hpp"

namespace bsgamma {

/// C(a, b), zero outside the Pascal triangle (b < 0, b > a or a < 0).
BigInt binom(long a, long b);

/// (sum parts)! / prod(parts!).
BigInt multinomial(std::span<const int> parts);

/// Lazily enumerates the compositions of `total` into exactly `count` ordered
/// parts, in lexicographic order.
///
/// With `positive` every part is at least 1, otherwise parts may be 0. With a
/// `bound` every part is strictly below it. The stream is finite and yields
/// each composition once.
///
///   CompositionStream s(3, 2, true);
///   while (s.next()) use(s.current());   // (1,2) then (2,1)
class CompositionStream {
 public:
  CompositionStream(int total, int count, bool positive, std::optional<int> bound = std::nullopt);

  bool next();
  const std::vector<int>& current() const { return parts_; }

 private:
  bool fill_suffix(std::size_t from, long remaining);

  long total_;
  long lo_;
  long hi_;
  std::vector<int> parts_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<std::vector<int>> compositions(int total, int count, bool positive,
                                           std::optional<int> bound = std::nullopt);

/// Sum over compositions mu of `total` into exactly `d` positive parts of
/// prod C(p, mu_i). With `with_tail` an extra positive part mu_{d+1} is
/// weighted by C(a0, mu_{d+1}). With `bounded` every block part is < p.
///
/// Evaluated by convolving the per-part weight polynomials, which sums the
/// same terms as enumeration without visiting each composition.
BigInt block_sum(int p, int a0, int total, int d, bool with_tail, bool bounded);

/// Same value as block_sum, computed by walking every composition.
BigInt block_sum_enumerated(int p, int a0, int total, int d, bool with_tail, bool bounded);

}  // namespace bsgamma

#endif
