#pragma once

#include <nlohmann/json.hpp>

#include "binomoment/freeconv.hpp"
#include "binomoment/mellin.hpp"
#include "binomoment/series.hpp"
#include "binomoment/slater.hpp"
#include "binomoment/verify.hpp"

namespace binomoment {

/// Exact values become {"num": "...", "den": "..."}; doubles stay numbers.
nlohmann::json to_json(const Scalar& x);
Scalar scalar_from_json(const nlohmann::json& j);

/// {"order": N, "coeffs": [...]}
nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

/// A plain array of coefficients.
nlohmann::json moments_to_json(const MomentVector& m);

nlohmann::json to_json(const GammaQuotientSymbol& s);
nlohmann::json to_json(const SlaterExpansion& e);
nlohmann::json to_json(const MellinFactorization& f);
nlohmann::json to_json(const CertifyReport& r);
nlohmann::json to_json(const IdentityCheck& c);
nlohmann::json to_json(const Witness& w);

}  // namespace binomoment
