#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqmzv/bigint.hpp"
#include "fqmzv/field.hpp"

namespace fqmzv {

/// Base-`base` digits of k, least significant first. k = 0 gives {0}.
std::vector<std::uint32_t> digits_base(const BigInt& k, std::uint64_t base);

/// Sum of the base-`base` digits of k. Requires k >= 0 and base >= 2.
BigInt digit_sum(const BigInt& k, std::uint64_t base);

/// True iff (q-1) | s. Every integer is q-even when q = 2.
bool is_q_even(std::int64_t s, const FieldParams& fp);

/// True iff adding the parts in base p produces no carry, equivalently the
/// base-p digit sum of the total equals the sum of the parts' digit sums.
bool carry_free(const std::vector<BigInt>& parts, std::uint32_t p);

/// Multinomial coefficient (k; parts...) mod p, digit-wise by Lucas'
/// theorem. Zero exactly when the sum of the parts carries in base p.
/// Requires sum(parts) == k.
std::uint32_t multinomial_mod_p(const BigInt& k, const std::vector<BigInt>& parts, std::uint32_t p);

/// The exact rational min_{0<=i<f} l(k*p^i) / (q-1), where l is the base-q
/// digit sum. Power sums of degree d at exponent -k vanish exactly when d
/// exceeds this threshold, which is why every comparison here is an integer
/// cross-multiplication; the boundary cases are the whole point.
class VanishingThreshold {
public:
    VanishingThreshold(BigInt numerator, std::uint64_t denominator);

    const BigInt& numerator() const { return num_; }
    std::uint64_t denominator() const { return den_; }

    bool is_integer() const { return num_ % den_ == 0; }
    BigInt floor() const { return num_ / den_; }

    /// Sign of (this - n): negative when the threshold is below the integer n.
    int compare(const BigInt& n) const;
    bool less_than(const BigInt& n) const { return compare(n) < 0; }
    bool greater_than(const BigInt& n) const { return compare(n) > 0; }

    std::string to_string() const;  // "3/2"

private:
    BigInt num_;
    std::uint64_t den_;
};

/// The threshold for exponent -k over F_q; k = 0 yields 0/(q-1) so the
/// vanishing predicates stay uniform at exponent zero.
VanishingThreshold vanishing_threshold(const BigInt& k, const FieldParams& fp);

}  // namespace fqmzv
