#ifndef BSGAMMA_JSON_IO_HPP
#define BSGAMMA_JSON_IO_HPP

#include <json.hpp>

#include "bsgamma/gamma.hpp"
#include "bsgamma/identities.hpp"
#include "bsgamma/tabloid.hpp"
#include "bsgamma/tensor.hpp"

namespace bsgamma {

// Big integers are written as decimal strings; object keys come out sorted.

nlohmann::json orbit_type_json(const OrbitType& t);

/// {"signature": [...], "d": d, "dim": p^d, "mult": "...", "projective": bool},
/// sorted by (d, signature).
nlohmann::json decomposition_rows(const Decomposition& dec);

nlohmann::json gamma_report_json(const GammaReport& report);

/// One object per power: {"m": j, "c": "...", "ratio": "num/den" | null, "root": x}.
nlohmann::json growth_line(const GrowthEstimate& g, std::size_t index);

nlohmann::json identity_json(const IdentityCase& c, const IdentityCheck& check);

/// Rounds to 12 significant digits so printed roots are stable.
double round_significant(double value, int digits = 12);

}  // namespace bsgamma

#endif
