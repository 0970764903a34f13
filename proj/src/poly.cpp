#include "fqmzv/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fqmzv {

Polynomial Polynomial::one(Field field) {
    return constant(std::move(field), FieldElement(1));
}

Polynomial Polynomial::variable(Field field) {
    Polynomial r(std::move(field));
    r.coeffs_ = {r.field_->zero(), r.field_->one()};
    return r;
}

Polynomial Polynomial::constant(Field field, FieldElement c) {
    Polynomial r(std::move(field));
    if (!c.is_zero()) r.coeffs_ = {c};
    return r;
}

Polynomial Polynomial::monomial(Field field, FieldElement c, std::size_t k) {
    Polynomial r(std::move(field));
    if (!c.is_zero()) {
        r.coeffs_.assign(k + 1, r.field_->zero());
        r.coeffs_[k] = c;
    }
    return r;
}

Polynomial Polynomial::from_coeffs(Field field, std::vector<FieldElement> coeffs) {
    Polynomial r(std::move(field));
    r.coeffs_ = std::move(coeffs);
    r.normalize();
    return r;
}

std::optional<std::size_t> Polynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

FieldElement Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : field_->zero();
}

FieldElement Polynomial::leading_coeff() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool Polynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == field_->one();
}

bool Polynomial::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == field_->one();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::check_same_field(const Polynomial& o) const {
    if (field_.get() != o.field_.get() && !field_->same(*o.field_))
        throw std::invalid_argument("polynomial operands over different fields");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_field(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] = field_->add(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_field(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] = field_->sub(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = field_->neg(c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_field(o);
    Polynomial r(field_);
    if (coeffs_.empty() || o.coeffs_.empty()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] = field_->add(r.coeffs_[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
    }
    r.normalize();
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (field_.get() != o.field_.get() && !field_->same(*o.field_)) return false;
    return coeffs_ == o.coeffs_;
}

Polynomial Polynomial::pow(const BigInt& e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial r = one(field_);
    if (e == 0) return r;
    const auto bits = boost::multiprecision::msb(e);
    for (std::ptrdiff_t b = static_cast<std::ptrdiff_t>(bits); b >= 0; --b) {
        r = r * r;
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(b))) r = r * *this;
    }
    return r;
}

Polynomial Polynomial::shifted(std::size_t k) const {
    if (coeffs_.empty() || k == 0) {
        Polynomial r = *this;
        return r;
    }
    Polynomial r(field_);
    r.coeffs_.assign(coeffs_.size() + k, field_->zero());
    std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
}

Polynomial Polynomial::scaled(FieldElement c) const {
    Polynomial r(field_);
    if (c.is_zero()) return r;
    r.coeffs_ = coeffs_;
    for (auto& x : r.coeffs_) x = field_->mul(x, c);
    r.normalize();
    return r;
}

std::optional<std::size_t> Polynomial::order_at_t() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return i;
    return std::nullopt;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        FieldElement c = coeffs_[k];
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += field_->element_text(c);
        } else if (c == field_->one()) {
            out += (k == 1) ? "t" : "t^" + std::to_string(k);
        } else {
            out += field_->element_text(c) + "*t^" + std::to_string(k);
        }
    }
    return out;
}

Polynomial Polynomial::parse(const Field& field, std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char ch : text)
        if (ch != ' ' && ch != '\t') compact += ch;
    if (compact.empty()) throw std::invalid_argument("empty polynomial text");
    if (compact == "0") return zero(field);

    Polynomial r(field);
    std::size_t pos = 0;
    while (pos <= compact.size()) {
        std::size_t next = compact.find('+', pos);
        std::string term = compact.substr(pos, next == std::string::npos ? next : next - pos);
        if (term.empty()) throw std::invalid_argument("malformed polynomial text");

        FieldElement c = field->one();
        std::size_t k = 0;
        std::size_t star = term.find('*');
        std::string tpart;
        if (star != std::string::npos) {
            c = field->element_from_text(term.substr(0, star));
            tpart = term.substr(star + 1);
        } else if (term[0] == 't') {
            tpart = term;
        } else {
            c = field->element_from_text(term);
            tpart.clear();
        }
        if (!tpart.empty()) {
            if (tpart[0] != 't') throw std::invalid_argument("malformed polynomial term");
            if (tpart.size() == 1) {
                k = 1;
            } else {
                if (tpart[1] != '^' || tpart.size() == 2)
                    throw std::invalid_argument("malformed polynomial exponent");
                k = 0;
                for (std::size_t i = 2; i < tpart.size(); ++i) {
                    if (tpart[i] < '0' || tpart[i] > '9')
                        throw std::invalid_argument("malformed polynomial exponent");
                    k = k * 10 + static_cast<std::size_t>(tpart[i] - '0');
                    if (k > 1'000'000) throw std::invalid_argument("exponent too large");
                }
            }
        }
        r += monomial(field, c, k);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return r;
}

DivModResult divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    const Field& fp = a.field();
    Polynomial rem = a;
    Polynomial quot(fp);
    const std::size_t db = *b.degree();
    const FieldElement lead_inv = fp->inv(b.leading_coeff());
    while (!rem.is_zero() && *rem.degree() >= db) {
        const std::size_t k = *rem.degree() - db;
        const FieldElement c = fp->mul(rem.leading_coeff(), lead_inv);
        quot += Polynomial::monomial(fp, c, k);
        rem -= b.scaled(c).shifted(k);
    }
    return {std::move(quot), std::move(rem)};
}

bool divides(const Polynomial& b, const Polynomial& a) {
    return divmod(a, b).remainder.is_zero();
}

}  // namespace fqmzv
