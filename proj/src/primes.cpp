#include "fqmzv/primes.hpp"

namespace fqmzv {

MonicRange::MonicRange(Field field, std::size_t degree)
    : field_(std::move(field)), degree_(degree) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < degree_; ++i) {
        if (n > (std::uint64_t{1} << 62) / field_->q())
            throw std::overflow_error("monic range too large to index");
        n *= field_->q();
    }
    size_ = n;
}

Polynomial MonicRange::at(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("monic index out of range");
    std::vector<FieldElement> coeffs(degree_ + 1, field_->zero());
    for (std::size_t i = 0; i < degree_; ++i) {
        coeffs[i] = FieldElement(static_cast<std::uint16_t>(index % field_->q()));
        index /= field_->q();
    }
    coeffs[degree_] = field_->one();
    return Polynomial::from_coeffs(field_, std::move(coeffs));
}

bool is_irreducible(const Polynomial& a) {
    auto deg = a.degree();
    if (!deg || *deg < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
    for (std::size_t dd = 1; dd <= *deg / 2; ++dd)
        for (const Polynomial& cand : MonicRange(a.field(), dd))
            if (divides(cand, a)) return false;
    return true;
}

PrimeModulus::PrimeModulus(Polynomial poly) : poly_(std::move(poly)) {
    auto deg = poly_.degree();
    if (!deg || *deg < 1) throw std::invalid_argument("prime must have degree >= 1");
    if (!poly_.is_monic()) throw std::invalid_argument("prime must be monic");
    if (!is_irreducible(poly_)) throw std::invalid_argument("prime must be irreducible");
    degree_ = *deg;
}

std::vector<PrimeModulus> primes_of_degree(const Field& field, std::size_t d) {
    if (d < 1) throw std::invalid_argument("prime degree must be positive");
    std::vector<PrimeModulus> out;
    for (const Polynomial& a : MonicRange(field, d))
        if (is_irreducible(a)) out.emplace_back(a);
    return out;
}

Valuation v_adic_valuation(const Polynomial& a, const PrimeModulus& v) {
    if (a.is_zero()) return Valuation::infinity();
    // fast path: t-adic valuation is the order at t
    if (v.degree() == 1 && v.poly().coeff(0).is_zero()) return Valuation::of(*a.order_at_t());
    std::uint64_t n = 0;
    Polynomial cur = a;
    while (true) {
        auto [q, r] = divmod(cur, v.poly());
        if (!r.is_zero()) return Valuation::of(n);
        cur = std::move(q);
        ++n;
    }
}

}  // namespace fqmzv
