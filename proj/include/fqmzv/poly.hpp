#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqmzv/bigint.hpp"
#include "fqmzv/field.hpp"

namespace fqmzv {

/// Dense polynomial in F_q[t]. Coefficients are stored by ascending degree
/// and kept normalized (no trailing zeros); the zero polynomial has an empty
/// coefficient vector and degree() == nullopt, never a -1 sentinel.
///
/// Every value carries its field; mixing operands from structurally
/// different fields throws std::invalid_argument.
class Polynomial {
public:
    explicit Polynomial(Field field) : field_(std::move(field)) {}

    static Polynomial zero(Field field) { return Polynomial(std::move(field)); }
    static Polynomial one(Field field);
    static Polynomial variable(Field field);  // t
    static Polynomial constant(Field field, FieldElement c);
    static Polynomial monomial(Field field, FieldElement c, std::size_t k);  // c * t^k
    static Polynomial from_coeffs(Field field, std::vector<FieldElement> coeffs);

    const Field& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    /// Coefficient of t^k (zero beyond the degree).
    FieldElement coeff(std::size_t k) const;
    FieldElement leading_coeff() const;  // throws on the zero polynomial
    bool is_monic() const;
    bool is_one() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;

    /// a^e by square-and-multiply; a^0 == 1 for every a. e must be >= 0.
    Polynomial pow(const BigInt& e) const;
    /// this * t^k
    Polynomial shifted(std::size_t k) const;
    Polynomial scaled(FieldElement c) const;

    /// Index of the lowest nonzero coefficient; nullopt for zero.
    std::optional<std::size_t> order_at_t() const;

    /// Text form: terms "c*t^k" joined by "+", highest degree first. Unit
    /// coefficients are left implicit ("t^2+t+1"); other coefficients print
    /// as base-p digit strings of the coordinate vector, plain integers when
    /// f = 1 (e.g. "2*t^2+1"). The zero polynomial prints as "0".
    std::string to_string() const;
    /// Inverse of to_string; also accepts redundant forms like "1*t^1".
    static Polynomial parse(const Field& field, std::string_view text);

private:
    void normalize();
    void check_same_field(const Polynomial& o) const;

    Field field_;
    std::vector<FieldElement> coeffs_;
};

struct DivModResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division a = q*b + r with deg r < deg b. b must be nonzero.
DivModResult divmod(const Polynomial& a, const Polynomial& b);

/// True when b divides a exactly. b must be nonzero.
bool divides(const Polynomial& b, const Polynomial& a);

}  // namespace fqmzv
