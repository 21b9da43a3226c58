#include "bsgamma/identities.hpp"

#include <array>
#include <utility>

#include "bsgamma/combinatorics.hpp"
#include "bsgamma/errors.hpp"

namespace bsgamma {

namespace {

struct NameEntry {
  Identity id;
  std::string_view name;
  std::string_view letter;
};

constexpr std::array<NameEntry, 11> kNames{{
    {Identity::ChuVandermonde, "chu-vandermonde", "A1"},
    {Identity::VandermondeBlocks, "vandermonde-blocks", "A2"},
    {Identity::IntoDParts, "into-d-parts", "A3"},
    {Identity::IntoDPlusOneParts, "into-d+1-parts", "A4"},
    {Identity::CombinedParts, "combined-parts", "A5"},
    {Identity::BoundedParts, "bounded-parts", "A6"},
    {Identity::AlternatingDelta, "delta", "A7"},
    {Identity::CoefficientDelta, "coefficient-delta", "A8"},
    {Identity::GammaREqualsP, "gamma-r-eq-p", "T1"},
    {Identity::GammaRLessThanP, "gamma-r-lt-p", "T2"},
    {Identity::GammaRGreaterThanP, "gamma-r-gt-p", "T3"},
}};

long require(const IdentityParams& params, const char* key) {
  auto it = params.find(key);
  if (it == params.end()) throw ParamsOutOfDomain(std::string("missing parameter '") + key + "'");
  return it->second;
}

void ensure(bool ok, const std::string& what) {
  if (!ok) throw ParamsOutOfDomain("parameters out of domain: " + what);
}

void ensure_prime(long p) { ensure(is_prime(p), "p must be prime"); }

BigInt sign(long i) { return (i % 2 == 0) ? BigInt(1) : BigInt(-1); }

// Sum over non-negative compositions of r into d parts of prod C(p, mu_i),
// walking each composition.
BigInt vandermonde_blocks_lhs(long p, long d, long r) {
  BigInt sum = 0;
  CompositionStream stream(static_cast<int>(r), static_cast<int>(d), false, static_cast<int>(p) + 1);
  while (stream.next()) {
    BigInt term = 1;
    for (int mu : stream.current()) term *= binom(p, mu);
    sum += term;
  }
  return sum;
}

// Right-hand side shared by the combined and the bounded identities.
BigInt alternating_with_tail(long p, long a0, long d, long r) {
  BigInt sum = 0;
  for (long i = 0; i <= d; ++i) sum += sign(i) * binom(d, i) * binom((d - i) * p + a0, r);
  return sum;
}

// Summand-count left sides, with the block sums evaluated by convolution.
BigInt combined_bounded(long p, long a0, long total, long d) {
  return block_sum(static_cast<int>(p), static_cast<int>(a0), static_cast<int>(total), static_cast<int>(d), false, true) +
         block_sum(static_cast<int>(p), static_cast<int>(a0), static_cast<int>(total), static_cast<int>(d), true, true);
}

BigInt combined_unbounded(long p, long a0, long total, long d) {
  return block_sum(static_cast<int>(p), static_cast<int>(a0), static_cast<int>(total), static_cast<int>(d), false, false) +
         block_sum(static_cast<int>(p), static_cast<int>(a0), static_cast<int>(total), static_cast<int>(d), true, false);
}

std::pair<BigInt, BigInt> evaluate(Identity id, const IdentityParams& params) {
  switch (id) {
    case Identity::ChuVandermonde: {
      const long r = require(params, "r"), s = require(params, "s"), n = require(params, "n");
      ensure(r >= 0 && s >= 0 && n >= 0, "r, s, n >= 0");
      BigInt lhs = 0;
      for (long i = 0; i <= r; ++i) lhs += binom(r, i) * binom(s, n - i);
      return {lhs, binom(r + s, n)};
    }
    case Identity::VandermondeBlocks: {
      const long p = require(params, "p"), d = require(params, "d"), r = require(params, "r");
      ensure(p >= 1 && d >= 1 && r >= 0, "p >= 1, d >= 1, r >= 0");
      return {vandermonde_blocks_lhs(p, d, r), binom(d * p, r)};
    }
    case Identity::IntoDParts: {
      const long p = require(params, "p"), d = require(params, "d"), r = require(params, "r");
      ensure(p >= 1 && d >= 1 && r >= 0, "p >= 1, d >= 1, r >= 0");
      BigInt rhs = 0;
      for (long i = 0; i <= d; ++i) rhs += sign(i) * binom(d, i) * binom((d - i) * p, r);
      return {block_sum_enumerated(static_cast<int>(p), 0, static_cast<int>(r), static_cast<int>(d), false, false), rhs};
    }
    case Identity::IntoDPlusOneParts: {
      const long p = require(params, "p"), a0 = require(params, "a0"), d = require(params, "d"),
                 r = require(params, "r");
      ensure_prime(p);
      ensure(0 <= a0 && a0 < p && d >= 1 && r >= 0, "0 <= a0 < p, d >= 1, r >= 0");
      BigInt rhs = 0;
      for (long i = 0; i <= d; ++i)
        rhs += sign(i) * binom(d, i) * (binom((d - i) * p + a0, r) - binom((d - i) * p, r));
      return {block_sum_enumerated(static_cast<int>(p), static_cast<int>(a0), static_cast<int>(r),
                                   static_cast<int>(d), true, false),
              rhs};
    }
    case Identity::CombinedParts: {
      const long p = require(params, "p"), a0 = require(params, "a0"), d = require(params, "d"),
                 r = require(params, "r");
      ensure_prime(p);
      ensure(0 <= a0 && a0 < p && d >= 1 && r >= 0, "0 <= a0 < p, d >= 1, r >= 0");
      const int pi = static_cast<int>(p), ai = static_cast<int>(a0), ri = static_cast<int>(r), di = static_cast<int>(d);
      BigInt lhs = block_sum_enumerated(pi, ai, ri, di, false, false) + block_sum_enumerated(pi, ai, ri, di, true, false);
      return {lhs, alternating_with_tail(p, a0, d, r)};
    }
    case Identity::BoundedParts: {
      const long p = require(params, "p"), a0 = require(params, "a0"), d = require(params, "d"),
                 j = require(params, "j"), b0 = require(params, "b0");
      ensure_prime(p);
      ensure(0 <= a0 && a0 < p && 0 <= b0 && b0 < p && d >= 1 && j >= 0, "0 <= a0, b0 < p, d >= 1, j >= 0");
      const int pi = static_cast<int>(p), ai = static_cast<int>(a0), di = static_cast<int>(d);
      const int total = static_cast<int>(j * p + b0);
      BigInt lhs = block_sum_enumerated(pi, ai, total, di, false, true) + block_sum_enumerated(pi, ai, total, di, true, true);
      BigInt rhs = 0;
      for (long h = 0; h <= j && h <= d; ++h) {
        BigInt inner = 0;
        for (long i = 0; i <= d - h; ++i)
          inner += sign(i) * binom(d - h, i) * binom((d - h - i) * p + a0, (j - h) * p + b0);
        rhs += sign(h) * binom(d, h) * inner;
      }
      return {lhs, rhs};
    }
    case Identity::AlternatingDelta: {
      const long n = require(params, "n"), m = require(params, "m");
      ensure(n >= 0 && m >= 0, "n, m >= 0");
      BigInt lhs = 0;
      for (long i = 0; i <= n; ++i) lhs += sign(i) * binom(n, i) * binom(n - i, m);
      return {lhs, BigInt(m == n ? 1 : 0)};
    }
    case Identity::CoefficientDelta: {
      const long k = require(params, "k"), m = require(params, "m"), r = require(params, "r");
      ensure(k >= 1 && m >= 0 && r >= 0, "k >= 1, m >= 0, r >= 0");
      BigInt lhs = 0;
      for (long i = m; i <= k - 1; ++i) {
        BigInt inner = 0;
        for (long j = 0; j <= i - m; ++j) inner += binom(i - m, j) * binom(k - i, r - j);
        lhs += sign(i) * binom(k - 1, i) * binom(i, m) * inner;
      }
      lhs *= sign(m);
      return {lhs, BigInt(m == k - 1 && (r == 0 || r == 1) ? 1 : 0)};
    }
    case Identity::GammaREqualsP: {
      const long p = require(params, "p"), k = require(params, "k"), a0 = require(params, "a0");
      ensure_prime(p);
      ensure(k >= 1 && 0 <= a0 && a0 < p, "k >= 1, 0 <= a0 < p");
      const long n = k * p + a0;
      BigInt lhs = k;
      lhs += (k - 1) * block_sum(static_cast<int>(p), static_cast<int>(a0), static_cast<int>(p), 1, true, false);
      for (long d = 2; d <= k - 1; ++d) lhs += binom(k - 1, d) * combined_unbounded(p, a0, p, d);
      return {lhs, 1 + binom(n - p, p)};
    }
    case Identity::GammaRLessThanP: {
      const long p = require(params, "p"), k = require(params, "k"), a0 = require(params, "a0"),
                 r = require(params, "r");
      ensure_prime(p);
      ensure(k >= 1 && 0 <= a0 && a0 < p && 0 <= r && r < p, "k >= 1, 0 <= a0 < p, 0 <= r < p");
      const long n = k * p + a0;
      BigInt lhs = binom(a0, r);
      for (long d = 1; d <= k - 1; ++d) lhs += binom(k - 1, d) * combined_unbounded(p, a0, r, d);
      return {lhs, binom(n - p, r)};
    }
    case Identity::GammaRGreaterThanP: {
      const long p = require(params, "p"), k = require(params, "k"), a0 = require(params, "a0"),
                 q = require(params, "q"), b0 = require(params, "b0");
      ensure_prime(p);
      ensure(k >= 1 && 0 <= a0 && a0 < p && 0 <= b0 && b0 < p && q >= 1, "k >= 1, 0 <= a0, b0 < p, q >= 1");
      ensure(q * p + b0 <= k * p + a0, "r = qp + b0 <= n = kp + a0");
      BigInt lhs = binom(k, q) * binom(a0, b0);
      for (long d = 1; d <= k - 1; ++d) {
        BigInt inner = 0;
        for (long j = 0; j <= d; ++j) {
          BigInt coef = binom(k - d, q - j);
          if (coef == 0) continue;
          inner += coef * combined_bounded(p, a0, j * p + b0, d);
        }
        lhs += binom(k - 1, d) * inner;
      }
      const long m = (k - 1) * p + a0;
      return {lhs, binom(m, q * p + b0) + binom(m, (q - 1) * p + b0)};
    }
  }
  throw UnknownIdentity("<unhandled enum value>");
}

}  // namespace

std::string_view identity_name(Identity id) {
  for (const auto& entry : kNames)
    if (entry.id == id) return entry.name;
  return "unknown";
}

Identity parse_identity(std::string_view name) {
  for (const auto& entry : kNames) {
    if (name == entry.name || name == entry.letter) return entry.id;
    if (name.size() > entry.letter.size() + 1 && name.substr(0, entry.letter.size()) == entry.letter &&
        name[entry.letter.size()] == '-')
      return entry.id;
  }
  throw UnknownIdentity(std::string(name));
}

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> out;
    for (const auto& entry : kNames) out.push_back(entry.id);
    return out;
  }();
  return ids;
}

IdentityCheck verify_identity(Identity id, const IdentityParams& params) {
  auto [lhs, rhs] = evaluate(id, params);
  IdentityCheck out{std::move(lhs), std::move(rhs), false};
  out.equal = out.lhs == out.rhs;
  return out;
}

IdentityCheck verify_identity(std::string_view name, const IdentityParams& params) {
  return verify_identity(parse_identity(name), params);
}

std::vector<IdentityCase> identity_grid(int p, IdentityGridLimits limits, bool include_prime_free) {
  if (!is_prime(p)) throw InvalidArgument("identity_grid: p must be prime");
  std::vector<IdentityCase> out;
  const long P = p;
  for (long d = 1; d <= limits.max_d; ++d) {
    for (long r = 0; r <= d * P; ++r) {
      out.push_back({Identity::VandermondeBlocks, {{"p", P}, {"d", d}, {"r", r}}});
      out.push_back({Identity::IntoDParts, {{"p", P}, {"d", d}, {"r", r}}});
    }
    for (long a0 = 0; a0 < P; ++a0) {
      for (long r = 0; r <= d * P + a0; ++r) {
        out.push_back({Identity::IntoDPlusOneParts, {{"p", P}, {"a0", a0}, {"d", d}, {"r", r}}});
        out.push_back({Identity::CombinedParts, {{"p", P}, {"a0", a0}, {"d", d}, {"r", r}}});
      }
      for (long j = 0; j <= d; ++j)
        for (long b0 = 0; b0 < P; ++b0)
          out.push_back({Identity::BoundedParts, {{"p", P}, {"a0", a0}, {"d", d}, {"j", j}, {"b0", b0}}});
    }
  }
  for (long k = 1; k <= limits.max_k; ++k) {
    for (long a0 = 0; a0 < P; ++a0) {
      out.push_back({Identity::GammaREqualsP, {{"p", P}, {"k", k}, {"a0", a0}}});
      for (long r = 0; r < P; ++r)
        out.push_back({Identity::GammaRLessThanP, {{"p", P}, {"k", k}, {"a0", a0}, {"r", r}}});
      for (long q = 1; q <= k; ++q)
        for (long b0 = 0; b0 < P; ++b0)
          if (q * P + b0 <= k * P + a0)
            out.push_back({Identity::GammaRGreaterThanP, {{"p", P}, {"k", k}, {"a0", a0}, {"q", q}, {"b0", b0}}});
    }
  }
  if (include_prime_free) {
    for (long r = 0; r <= 20; ++r)
      for (long s = 0; s <= 20; ++s)
        for (long n = 0; n <= r + s + 1; ++n)
          out.push_back({Identity::ChuVandermonde, {{"r", r}, {"s", s}, {"n", n}}});
    for (long n = 0; n <= 2 * limits.max_k; ++n)
      for (long m = 0; m <= n + 1; ++m) out.push_back({Identity::AlternatingDelta, {{"n", n}, {"m", m}}});
    for (long k = 1; k <= limits.max_k; ++k)
      for (long m = 0; m <= k; ++m)
        for (long r = 0; r <= k + 1; ++r)
          out.push_back({Identity::CoefficientDelta, {{"k", k}, {"m", m}, {"r", r}}});
  }
  return out;
}

}  // namespace bsgamma
