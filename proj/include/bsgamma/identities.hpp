#ifndef BSGAMMA_IDENTITIES_HPP
#define BSGAMMA_IDENTITIES_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bsgamma/bigint.hpp"

namespace bsgamma {

/// The binomial and composition identities behind the summand-counting
/// evaluation of gamma. Every identity is checked by evaluating its two sides
/// along unrelated code paths: the left side walks compositions (or the
/// defining sum), the right side evaluates a closed alternating sum.
enum class Identity {
  ChuVandermonde,         // sum_i C(r,i) C(s,n-i) = C(r+s,n)
  VandermondeBlocks,      // sum over mu |= r, d non-negative parts of prod C(p,mu_i) = C(dp,r)
  IntoDParts,             // d positive parts, alternating sum of C((d-i)p, r)
  IntoDPlusOneParts,      // d positive parts plus a positive tail weighted by C(a0, .)
  CombinedParts,          // the two sums above added
  BoundedParts,           // combined sum with every block part < p, total jp+b0
  AlternatingDelta,       // sum_i (-1)^i C(n,i) C(n-i,m) = [m = n]
  CoefficientDelta,       // the double alternating sum equal to [m = k-1, r in {0,1}]
  GammaREqualsP,          // summand count for r = p equals 1 + C(n-p, p)
  GammaRLessThanP,        // summand count for r < p equals C(n-p, r)
  GammaRGreaterThanP,     // summand count for r >= p equals C(n-p, r) + C(n-p, r-p)
};

/// Parameter tuple keyed by name, e.g. {{"p",2},{"d",2},{"r",2}}.
using IdentityParams = std::map<std::string, long>;

struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool equal = false;
};

struct IdentityCase {
  Identity identity;
  IdentityParams params;
};

std::string_view identity_name(Identity id);

/// Accepts canonical names ("into-d-parts") and lettered aliases ("A3-into-d-parts", "A3").
/// Throws UnknownIdentity.
Identity parse_identity(std::string_view name);

const std::vector<Identity>& all_identities();

/// Throws ParamsOutOfDomain when a parameter is missing or violates the
/// identity's hypotheses.
IdentityCheck verify_identity(Identity id, const IdentityParams& params);
IdentityCheck verify_identity(std::string_view name, const IdentityParams& params);

struct IdentityGridLimits {
  int max_k = 8;
  int max_d = 6;
};

/// Every admissible parameter tuple of every p-dependent identity for one
/// prime, plus the p-free identities when `include_prime_free` is set.
std::vector<IdentityCase> identity_grid(int p, IdentityGridLimits limits, bool include_prime_free);

}  // namespace bsgamma

#endif
