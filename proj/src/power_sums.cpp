#include "fqmzv/power_sums.hpp"

namespace fqmzv {

namespace {

void check_exponent(std::int64_t s) {
    if (s > 0) throw std::invalid_argument("power sums here take non-positive exponents");
}

std::size_t exponent_to_index(const BigInt& e) {
    if (e > 10'000'000) throw std::overflow_error("term degree too large to materialize");
    return e.convert_to<std::size_t>();
}

Polynomial formula_sum(const Field& fp, std::size_t d, const BigInt& k, IndexKind kind) {
    Polynomial acc(fp);
    enumerate_index_set(d, k, *fp, kind, [&](const IndexTuple& t) {
        const std::uint32_t coef = multinomial_mod_p(k, t.parts, fp->p());
        acc += Polynomial::monomial(fp, fp->from_integer(coef), exponent_to_index(t.degree_exponent()));
        return true;
    });
    if (d % 2 == 1) acc = -acc;
    return acc;
}

}  // namespace

PowerSumResult power_sum_enumerate(const Field& fp, std::size_t d, std::int64_t s,
                                   const std::optional<PrimeModulus>& v, std::uint64_t cost_cap) {
    check_exponent(s);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (count > cost_cap / fp->q())
            throw CostGuardExceeded("enumeration cost q^d exceeds the configured cap");
        count *= fp->q();
    }
    if (count > cost_cap) throw CostGuardExceeded("enumeration cost q^d exceeds the configured cap");

    const BigInt k = -BigInt(s);
    Polynomial acc(fp);
    for (const Polynomial& a : MonicRange(fp, d)) {
        if (v && divides(v->poly(), a)) continue;
        acc += a.pow(k);
    }
    return {std::move(acc), d, s, v, SumMethod::Enumeration};
}

PowerSumResult power_sum_formula(const Field& fp, std::size_t d, std::int64_t s) {
    check_exponent(s);
    return {formula_sum(fp, d, -BigInt(s), IndexKind::U), d, s, std::nullopt, SumMethod::Formula};
}

PowerSumResult twisted_power_sum(const Field& fp, std::size_t d, std::int64_t s,
                                 const PrimeModulus& v) {
    check_exponent(s);
    const std::size_t w = v.degree();
    const BigInt k = -BigInt(s);
    Polynomial value = formula_sum(fp, d, k, IndexKind::U);
    if (d >= w) value -= v.poly().pow(k) * formula_sum(fp, d - w, k, IndexKind::U);
    return {std::move(value), d, s, v, SumMethod::Identity};
}

PowerSumResult twisted_power_sum_formula_t(const Field& fp, std::size_t d, std::int64_t s) {
    check_exponent(s);
    if (d < 1) throw std::invalid_argument("the twisted formula route needs d >= 1");
    PrimeModulus t(Polynomial::variable(fp));
    return {formula_sum(fp, d, -BigInt(s), IndexKind::UTwisted), d, s, std::move(t),
            SumMethod::Formula};
}

bool power_sum_vanishes(const FieldParams& fp, std::size_t d, std::int64_t s) {
    check_exponent(s);
    return vanishing_threshold(-BigInt(s), fp).less_than(BigInt(d));
}

bool twisted_power_sum_vanishes(const FieldParams& fp, std::size_t d, std::int64_t s,
                                std::size_t deg_v) {
    check_exponent(s);
    const auto threshold = vanishing_threshold(-BigInt(s), fp);
    if (threshold.less_than(BigInt(d) - BigInt(deg_v))) return true;
    return deg_v > d && BigInt(d) > threshold.floor();
}

std::optional<BigInt> max_degree_prediction(const FieldParams& fp, std::size_t d, std::int64_t s) {
    check_exponent(s);
    auto greedy = greedy_element(d, -BigInt(s), fp);
    if (!greedy) return std::nullopt;
    return greedy->degree_exponent();
}

std::optional<BigInt> min_degree_prediction_t(const FieldParams& fp, std::size_t d, std::int64_t s) {
    check_exponent(s);
    if (d < 1) throw std::invalid_argument("the twisted minimum degree needs d >= 1");
    std::optional<BigInt> best;
    enumerate_index_set(d, -BigInt(s), fp, IndexKind::UTwisted, [&](const IndexTuple& t) {
        BigInt e = t.degree_exponent();
        if (!best || e < *best) best = std::move(e);
        return true;
    });
    return best;
}

Valuation twisted_sum_valuation(const Field& fp, std::size_t d, std::int64_t s,
                                const PrimeModulus& v) {
    return v_adic_valuation(twisted_power_sum(fp, d, s, v).value, v);
}

PowerSumTable::PowerSumTable(Field fp, std::optional<PrimeModulus> v)
    : fp_(std::move(fp)), v_(std::move(v)) {}

const Polynomial& PowerSumTable::untwisted(std::size_t d, std::int64_t s) {
    const auto key = std::make_pair(d, s);
    auto it = untwisted_cache_.find(key);
    if (it == untwisted_cache_.end())
        it = untwisted_cache_.emplace(key, power_sum_formula(fp_, d, s).value).first;
    return it->second;
}

const Polynomial& PowerSumTable::prime_power(std::int64_t s) {
    auto it = vpow_cache_.find(s);
    if (it == vpow_cache_.end())
        it = vpow_cache_.emplace(s, v_->poly().pow(-BigInt(s))).first;
    return it->second;
}

const Polynomial& PowerSumTable::twisted(std::size_t d, std::int64_t s) {
    if (!v_) throw std::logic_error("twisted sums need a prime");
    const auto key = std::make_pair(d, s);
    auto it = twisted_cache_.find(key);
    if (it == twisted_cache_.end()) {
        Polynomial value = untwisted(d, s);
        if (d >= v_->degree()) value -= prime_power(s) * untwisted(d - v_->degree(), s);
        it = twisted_cache_.emplace(key, std::move(value)).first;
    }
    return it->second;
}

Valuation PowerSumTable::nu(std::size_t d, std::int64_t s) {
    return v_adic_valuation(twisted(d, s), *v_);
}

}  // namespace fqmzv
