#include "bsgamma/group.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "bsgamma/bigint.hpp"
#include "bsgamma/errors.hpp"

namespace bsgamma {

namespace {

void check_prime_and_degree(int n, int p) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (n < 0) throw InvalidArgument("n must be non-negative");
  if (p > n) throw PrimeTooLarge(p, n);
}

long power(int base, int exponent) {
  long out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

void collect_types(int p, int level, long remaining, std::vector<int>& counts, std::vector<std::vector<int>>& out) {
  if (level == 0) {
    if (remaining == 0) out.push_back(counts);
    return;
  }
  const long size = power(p, level);
  for (long i = remaining / size; i >= 0; --i) {
    counts[static_cast<std::size_t>(level - 1)] = static_cast<int>(i);
    collect_types(p, level - 1, remaining - i * size, counts, out);
  }
  counts[static_cast<std::size_t>(level - 1)] = 0;
}

}  // namespace

int OrbitType::rank() const {
  int r = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) r += static_cast<int>(j + 1) * counts[j];
  return r;
}

int OrbitType::block_count() const {
  int m = 0;
  for (int c : counts) m += c;
  return m;
}

bool OrbitType::is_max_rank() const { return counts.size() == 1 && counts[0] == n / p; }

std::string OrbitType::encoding() const {
  std::string out;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(j + 1) + ":" + std::to_string(counts[j]);
  }
  return out;
}

OrbitType OrbitType::parse(std::string_view text, int n, int p) {
  check_prime_and_degree(n, p);
  OrbitType t{p, n, n % p, {}};
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t colon = item.find(':');
    int j = 0, count = 0;
    if (colon == std::string_view::npos ||
        std::from_chars(item.data(), item.data() + colon, j).ec != std::errc{} ||
        std::from_chars(item.data() + colon + 1, item.data() + item.size(), count).ec != std::errc{} || j < 1 ||
        count < 0)
      throw InvalidArgument("bad orbit type entry '" + std::string(item) + "', expected j:count");
    if (t.counts.size() < static_cast<std::size_t>(j)) t.counts.resize(static_cast<std::size_t>(j), 0);
    t.counts[static_cast<std::size_t>(j - 1)] += count;
    pos = end + 1;
  }
  while (!t.counts.empty() && t.counts.back() == 0) t.counts.pop_back();
  long covered = t.a0;
  for (std::size_t j = 0; j < t.counts.size(); ++j) covered += t.counts[j] * power(p, static_cast<int>(j + 1));
  if (covered != n || t.rank() < 1)
    throw InvalidArgument("orbit type '" + std::string(text) + "' does not decompose n = " + std::to_string(n));
  return t;
}

std::vector<OrbitType> enumerate_orbit_types(int n, int p) {
  check_prime_and_degree(n, p);
  const int a0 = n % p;
  int levels = 0;
  while (power(p, levels + 1) <= n - a0) ++levels;
  std::vector<std::vector<int>> raw;
  std::vector<int> counts(static_cast<std::size_t>(levels), 0);
  collect_types(p, levels, n - a0, counts, raw);

  std::vector<OrbitType> out;
  for (auto& c : raw) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    out.push_back(OrbitType{p, n, a0, std::move(c)});
  }
  std::sort(out.begin(), out.end(), [](const OrbitType& a, const OrbitType& b) {
    const std::size_t len = std::max(a.counts.size(), b.counts.size());
    for (std::size_t j = 0; j < len; ++j) {
      const int x = j < a.counts.size() ? a.counts[j] : 0;
      const int y = j < b.counts.size() ? b.counts[j] : 0;
      if (x != y) return x > y;
    }
    return false;
  });
  return out;
}

OrbitType max_rank_type(int n, int p) {
  check_prime_and_degree(n, p);
  return OrbitType{p, n, n % p, {n / p}};
}

int SubgroupOrderP::support() const {
  return static_cast<int>(std::count_if(line.begin(), line.end(), [](int x) { return x != 0; }));
}

SubgroupOrderP canonical_line(std::vector<int> vector, int p) {
  for (int& x : vector) x = ((x % p) + p) % p;
  auto lead = std::find_if(vector.begin(), vector.end(), [](int x) { return x != 0; });
  if (lead == vector.end()) throw InvalidArgument("canonical_line: zero vector spans no subgroup");
  int inverse = 1;
  while ((*lead * inverse) % p != 1) ++inverse;
  for (int& x : vector) x = (x * inverse) % p;
  return SubgroupOrderP{std::move(vector)};
}

ElementaryGroup::ElementaryGroup(OrbitType type) : type_(std::move(type)) {
  const int p = type_.p;
  const int n = type_.n;
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (n > kMaxDegree) throw InvalidArgument("ElementaryGroup: degree above " + std::to_string(kMaxDegree));

  int offset = 0;
  int generator = 0;
  for (std::size_t j = 0; j < type_.counts.size(); ++j) {
    const int exponent = static_cast<int>(j + 1);
    const int size = static_cast<int>(power(p, exponent));
    for (int c = 0; c < type_.counts[j]; ++c) {
      blocks_.push_back(Block{offset, size, exponent, generator});
      offset += size;
      generator += exponent;
    }
  }
  if (offset + type_.a0 != n || type_.a0 != n % p)
    throw InvalidArgument("orbit type does not decompose n = " + std::to_string(n));

  block_of_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int x = 0; x < blocks_[b].size; ++x) block_of_[static_cast<std::size_t>(blocks_[b].first + x)] = static_cast<int>(b);

  for (const Block& block : blocks_) {
    int place = 1;
    for (int digit = 0; digit < block.exponent; ++digit, place *= p) {
      Permutation g(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) g[static_cast<std::size_t>(x)] = x;
      for (int local = 0; local < block.size; ++local) {
        const int current = (local / place) % p;
        const int moved = local + (((current + 1) % p) - current) * place;
        g[static_cast<std::size_t>(block.first + local)] = block.first + moved;
      }
      generators_.push_back(std::move(g));
    }
  }
}

std::vector<std::vector<int>> ElementaryGroup::orbits() const {
  std::vector<std::vector<int>> out;
  for (const Block& block : blocks_) {
    std::vector<int> points;
    for (int x = 0; x < block.size; ++x) points.push_back(block.first + x + 1);
    out.push_back(std::move(points));
  }
  for (int x = 0; x < degree(); ++x)
    if (block_of_[static_cast<std::size_t>(x)] < 0) out.push_back({x + 1});
  return out;
}

int ElementaryGroup::apply(const GroupElement& g, int point) const {
  if (point < 1 || point > degree()) throw InvalidArgument("apply: point out of range");
  if (static_cast<int>(g.exponents.size()) != rank()) throw InvalidArgument("apply: element has wrong length");
  const int p = prime();
  const int b = block_of_[static_cast<std::size_t>(point - 1)];
  if (b < 0) return point;
  const Block& block = blocks_[static_cast<std::size_t>(b)];
  int local = point - 1 - block.first;
  int image = 0;
  int place = 1;
  for (int digit = 0; digit < block.exponent; ++digit, place *= p) {
    const int shift = g.exponents[static_cast<std::size_t>(block.first_generator + digit)];
    image += ((local % p + shift % p + p) % p) * place;
    local /= p;
  }
  return block.first + image + 1;
}

Permutation ElementaryGroup::permutation_of(const GroupElement& g) const {
  Permutation out(static_cast<std::size_t>(degree()));
  for (int x = 1; x <= degree(); ++x) out[static_cast<std::size_t>(x - 1)] = apply(g, x) - 1;
  return out;
}

SubgroupStream::SubgroupStream(int rank, int p) : rank_(rank), p_(p) {
  if (rank < 1) throw InvalidArgument("order_p_subgroups: rank must be >= 1");
  current_.line.assign(static_cast<std::size_t>(rank), 0);
}

bool SubgroupStream::next() {
  auto& v = current_.line;
  if (lead_ < 0) {
    lead_ = 0;
    v.assign(static_cast<std::size_t>(rank_), 0);
    v[0] = 1;
    return true;
  }
  // Increment the coordinates after the leading 1 as a base-p counter.
  for (int i = rank_ - 1; i > lead_; --i) {
    if (++v[static_cast<std::size_t>(i)] < p_) return true;
    v[static_cast<std::size_t>(i)] = 0;
  }
  if (++lead_ >= rank_) return false;
  std::fill(v.begin(), v.end(), 0);
  v[static_cast<std::size_t>(lead_)] = 1;
  return true;
}

SubgroupStream order_p_subgroups(const ElementaryGroup& group) { return SubgroupStream(group.rank(), group.prime()); }

std::uint64_t order_p_subgroup_count(int rank, int p) {
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  for (int i = 0; i < rank; ++i) {
    if (total > cap - term) return cap;
    total += term;
    if (i + 1 < rank) {
      if (term > cap / static_cast<std::uint64_t>(p)) return cap;
      term *= static_cast<std::uint64_t>(p);
    }
  }
  return total;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[static_cast<std::size_t>(b[x])];
  return out;
}

}  // namespace bsgamma
