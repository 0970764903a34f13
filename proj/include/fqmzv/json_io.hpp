#pragma once

#include <string>

#include "json.hpp"

#include "fqmzv/poly.hpp"
#include "fqmzv/power_sums.hpp"
#include "fqmzv/zeta.hpp"

namespace fqmzv {

/// Insertion-ordered JSON so emitted records are byte-stable.
using Json = nlohmann::ordered_json;

/// Canonical polynomial form: {"p", "f", "modulus", "coeffs"} with coeffs[k]
/// the coordinate vector of the degree-k coefficient.
Json poly_to_json(const Polynomial& a);
Polynomial poly_from_json(const Json& j);

Json valuation_to_json(const Valuation& v);  // integer, or "inf"
Json witness_to_json(const Witness& w);

const char* method_name(SumMethod m);

/// {"q", "d", "s", "v", "value", "nu", "method"}; "nu" is the v-adic
/// valuation of the value when a prime is present, else null.
Json power_sum_record(const PowerSumResult& r);

/// {"q", "v", "s", "value", "is_zero", "class", "witness", "nu_predicted",
///  "nu_actual"}.
Json zeta_record(const ZeroReport& report, const MZVIndex& idx);

}  // namespace fqmzv
