#include "fqmzv/json_io.hpp"

namespace fqmzv {

Json poly_to_json(const Polynomial& a) {
    const auto& fp = a.field();
    Json coeffs = Json::array();
    const std::size_t n = a.is_zero() ? 0 : *a.degree() + 1;
    for (std::size_t k = 0; k < n; ++k) coeffs.push_back(fp->coords(a.coeff(k)));
    return Json{{"p", fp->p()}, {"f", fp->f()}, {"modulus", fp->modulus()}, {"coeffs", coeffs}};
}

Polynomial poly_from_json(const Json& j) {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto f = j.at("f").get<std::uint32_t>();
    const auto modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    Field fp = FieldParams::make(p, f, modulus);
    std::vector<FieldElement> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(fp->from_coords(c.get<std::vector<std::uint32_t>>()));
    return Polynomial::from_coeffs(fp, std::move(coeffs));
}

Json valuation_to_json(const Valuation& v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

Json witness_to_json(const Witness& w) {
    Json j{{"i", w.i}};
    if (w.j) j["j"] = *w.j;
    return j;
}

const char* method_name(SumMethod m) {
    switch (m) {
        case SumMethod::Enumeration: return "enumeration";
        case SumMethod::Formula: return "formula";
        case SumMethod::Identity: return "identity";
    }
    return "?";
}

Json power_sum_record(const PowerSumResult& r) {
    Json j;
    j["q"] = r.value.field()->q();
    j["d"] = r.d;
    j["s"] = r.s;
    j["v"] = r.prime ? Json(r.prime->to_string()) : Json(nullptr);
    j["value"] = r.value.to_string();
    j["nu"] = r.prime ? valuation_to_json(v_adic_valuation(r.value, *r.prime)) : Json(nullptr);
    j["method"] = method_name(r.method);
    return j;
}

Json zeta_record(const ZeroReport& report, const MZVIndex& idx) {
    Json j;
    j["q"] = report.value.field()->q();
    j["v"] = report.prime ? Json(report.prime->to_string()) : Json(nullptr);
    j["s"] = idx.exponents();
    j["value"] = report.value.to_string();
    j["is_zero"] = report.is_zero;
    j["class"] = zero_class_name(report.classification);
    j["witness"] = report.witness ? witness_to_json(*report.witness) : Json(nullptr);
    j["nu_predicted"] = report.nu_predicted ? valuation_to_json(*report.nu_predicted) : Json(nullptr);
    j["nu_actual"] = report.nu_actual ? valuation_to_json(*report.nu_actual) : Json(nullptr);
    return j;
}

}  // namespace fqmzv
