#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fqmzv {

/// Element of F_q in the power basis of the field's defining modulus,
/// stored as the packed coordinate vector: packed = sum_i c_i * p^i where
/// c_i is the coordinate of x^i. Arithmetic lives on FieldParams.
class FieldElement {
public:
    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint16_t packed) : packed_(packed) {}

    constexpr std::uint16_t packed() const { return packed_; }
    constexpr bool is_zero() const { return packed_ == 0; }

    friend constexpr bool operator==(FieldElement, FieldElement) = default;

private:
    std::uint16_t packed_ = 0;
};

class FieldParams;
using Field = std::shared_ptr<const FieldParams>;

/// The finite field F_q = F_p[x]/(modulus), q = p^f. Immutable and shared
/// between all values built over it. Construction validates that p is prime
/// and the modulus is monic irreducible of degree f, then memoizes the
/// element add/mul tables from power-basis coordinate arithmetic.
///
/// All member functions are const and the object never changes after
/// construction, so a FieldParams may be used from any number of threads.
class FieldParams {
public:
    /// Largest supported field size. Keeps the arithmetic tables small; far
    /// beyond anything the verification grids need.
    static constexpr std::uint32_t kMaxQ = 1024;

    /// Builds F_{p^f} with the default modulus: the lexicographically
    /// smallest monic irreducible of degree f over F_p, ordering coefficient
    /// vectors from the constant term upward. For f = 1 this is x itself.
    static Field make(std::uint32_t p, std::uint32_t f);

    /// Builds F_{p^f} with an explicit modulus (f+1 coefficients over F_p,
    /// constant term first, monic). Throws std::invalid_argument if p is not
    /// prime or the modulus is not monic irreducible of degree f.
    static Field make(std::uint32_t p, std::uint32_t f, const std::vector<std::uint32_t>& modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t f() const { return f_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement(0); }
    FieldElement one() const { return FieldElement(1); }

    /// Element with the given packed coordinate index; throws if out of range.
    FieldElement element(std::uint32_t packed) const;
    /// Element from an explicit coordinate vector (length f, entries < p).
    FieldElement from_coords(const std::vector<std::uint32_t>& coords) const;
    /// Image of the integer n in the prime subfield (n mod p).
    FieldElement from_integer(std::int64_t n) const;
    /// Coordinate vector of e in the power basis, constant coordinate first.
    std::vector<std::uint32_t> coords(FieldElement e) const;

    FieldElement add(FieldElement a, FieldElement b) const { return FieldElement(add_[idx(a, b)]); }
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement mul(FieldElement a, FieldElement b) const { return FieldElement(mul_[idx(a, b)]); }
    FieldElement neg(FieldElement a) const { return FieldElement(neg_[a.packed()]); }
    /// Multiplicative inverse; throws std::domain_error on zero.
    FieldElement inv(FieldElement a) const;

    /// Text form of an element: its packed index written in base p with no
    /// leading zeros ("plain integer" when f = 1). Requires p <= 10 when
    /// f > 1 so the digit string is unambiguous.
    std::string element_text(FieldElement e) const;
    FieldElement element_from_text(std::string_view text) const;

    /// Structural equality (same p, f and modulus).
    bool same(const FieldParams& other) const;

    /// Factors a prime power q = p^f and builds the field with the default
    /// modulus. Throws std::invalid_argument when q is not a prime power.
    static Field of_order(std::uint32_t q);

private:
    FieldParams() = default;
    std::size_t idx(FieldElement a, FieldElement b) const {
        return static_cast<std::size_t>(a.packed()) * q_ + b.packed();
    }

    std::uint32_t p_ = 0, f_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint16_t> add_, mul_, neg_;
    std::vector<std::uint16_t> inv_;  // inv_[0] unused
};

}  // namespace fqmzv
