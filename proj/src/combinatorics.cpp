#include "bsgamma/combinatorics.hpp"

#include <algorithm>

#include "bsgamma/errors.hpp"

namespace bsgamma {

BigInt binom(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

BigInt multinomial(std::span<const int> parts) {
  BigInt out = 1;
  long running = 0;
  for (int part : parts) {
    if (part < 0) return 0;
    running += part;
    out *= binom(running, part);
  }
  return out;
}

CompositionStream::CompositionStream(int total, int count, bool positive, std::optional<int> bound)
    : total_(total), lo_(positive ? 1 : 0), hi_(bound ? *bound - 1 : std::max(total, 0)) {
  if (total < 0 || count < 0) throw InvalidArgument("compositions: total and count must be >= 0");
  parts_.assign(static_cast<std::size_t>(count), 0);
  if (hi_ < lo_ && count > 0) done_ = true;
}

bool CompositionStream::fill_suffix(std::size_t from, long remaining) {
  const long slots = static_cast<long>(parts_.size() - from);
  if (remaining < slots * lo_ || remaining > slots * hi_) return false;
  for (std::size_t pos = from; pos + 1 < parts_.size(); ++pos) {
    const long left = static_cast<long>(parts_.size() - pos - 1);
    const long v = std::max(lo_, remaining - left * hi_);
    parts_[pos] = static_cast<int>(v);
    remaining -= v;
  }
  parts_.back() = static_cast<int>(remaining);
  return true;
}

bool CompositionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (parts_.empty()) {
      done_ = true;
      return total_ == 0;
    }
    if (!fill_suffix(0, total_)) done_ = true;
    return !done_;
  }
  if (parts_.empty()) {
    done_ = true;
    return false;
  }
  long suffix = parts_.back();
  for (std::size_t i = parts_.size() - 1; i-- > 0;) {
    const long rest = suffix - 1;
    const long slots = static_cast<long>(parts_.size() - i - 1);
    if (parts_[i] + 1 <= hi_ && rest >= slots * lo_) {
      ++parts_[i];
      fill_suffix(i + 1, rest);
      return true;
    }
    suffix += parts_[i];
  }
  done_ = true;
  return false;
}

std::vector<std::vector<int>> compositions(int total, int count, bool positive, std::optional<int> bound) {
  std::vector<std::vector<int>> out;
  CompositionStream stream(total, count, positive, bound);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

namespace {

// Truncated product of two polynomials given by coefficient vectors.
std::vector<BigInt> convolve(const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs, std::size_t degree) {
  std::vector<BigInt> out(degree + 1, 0);
  for (std::size_t i = 0; i < lhs.size() && i <= degree; ++i) {
    if (lhs[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.size() && i + j <= degree; ++j) {
      if (rhs[j] == 0) continue;
      out[i + j] += lhs[i] * rhs[j];
    }
  }
  return out;
}

void check_block_args(int p, int a0, int d) {
  if (p < 1) throw InvalidArgument("block_sum: p must be positive");
  if (a0 < 0 || d < 0) throw InvalidArgument("block_sum: a0 and d must be >= 0");
}

}  // namespace

BigInt block_sum(int p, int a0, int total, int d, bool with_tail, bool bounded) {
  check_block_args(p, a0, d);
  if (total < 0) return 0;
  const auto degree = static_cast<std::size_t>(total);

  const int max_part = bounded ? p - 1 : p;
  std::vector<BigInt> block_weight(static_cast<std::size_t>(std::max(max_part, 0)) + 1, 0);
  for (int mu = 1; mu <= max_part; ++mu) block_weight[static_cast<std::size_t>(mu)] = binom(p, mu);

  std::vector<BigInt> acc{1};
  for (int i = 0; i < d; ++i) acc = convolve(acc, block_weight, degree);
  if (with_tail) {
    std::vector<BigInt> tail_weight(static_cast<std::size_t>(a0) + 1, 0);
    for (int mu = 1; mu <= a0; ++mu) tail_weight[static_cast<std::size_t>(mu)] = binom(a0, mu);
    acc = convolve(acc, tail_weight, degree);
  }
  return degree < acc.size() ? acc[degree] : BigInt(0);
}

BigInt block_sum_enumerated(int p, int a0, int total, int d, bool with_tail, bool bounded) {
  check_block_args(p, a0, d);
  if (total < 0) return 0;
  // Parts above max(p, a0) carry a vanishing binomial, so they are never visited.
  const int cap = std::max(p, a0) + 1;
  const int parts = d + (with_tail ? 1 : 0);
  BigInt sum = 0;
  CompositionStream stream(total, parts, true, cap);
  while (stream.next()) {
    const auto& mu = stream.current();
    BigInt term = 1;
    for (int i = 0; i < d && term != 0; ++i) {
      if (bounded && mu[static_cast<std::size_t>(i)] >= p) term = 0;
      else term *= binom(p, mu[static_cast<std::size_t>(i)]);
    }
    if (with_tail && term != 0) term *= binom(a0, mu.back());
    sum += term;
  }
  return sum;
}

}  // namespace bsgamma
