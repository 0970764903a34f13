#include "fqmzv/digits.hpp"

#include <stdexcept>

namespace fqmzv {

std::vector<std::uint32_t> digits_base(const BigInt& k, std::uint64_t base) {
    if (k < 0) throw std::invalid_argument("digits of a negative integer");
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    std::vector<std::uint32_t> digits;
    BigInt m = k;
    do {
        digits.push_back(static_cast<std::uint32_t>(m % base));
        m /= base;
    } while (m > 0);
    return digits;
}

BigInt digit_sum(const BigInt& k, std::uint64_t base) {
    if (k < 0) throw std::invalid_argument("digit sum of a negative integer");
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    BigInt sum = 0;
    BigInt m = k;
    while (m > 0) {
        sum += m % base;
        m /= base;
    }
    return sum;
}

bool is_q_even(std::int64_t s, const FieldParams& fp) {
    return s % static_cast<std::int64_t>(fp.q() - 1) == 0;
}

bool carry_free(const std::vector<BigInt>& parts, std::uint32_t p) {
    if (parts.empty()) throw std::invalid_argument("carry_free needs at least one part");
    BigInt total = 0;
    BigInt digit_total = 0;
    for (const auto& m : parts) {
        total += m;
        digit_total += digit_sum(m, p);
    }
    return digit_sum(total, p) == digit_total;
}

std::uint32_t multinomial_mod_p(const BigInt& k, const std::vector<BigInt>& parts, std::uint32_t p) {
    BigInt total = 0;
    for (const auto& m : parts) {
        if (m < 0) throw std::invalid_argument("negative multinomial part");
        total += m;
    }
    if (total != k) throw std::invalid_argument("multinomial parts must sum to k");

    // factorials mod p for one base-p digit position
    std::vector<std::uint64_t> fact(p);
    fact[0] = 1;
    for (std::uint32_t i = 1; i < p; ++i) fact[i] = fact[i - 1] * i % p;

    const auto kd = digits_base(k, p);
    std::vector<std::vector<std::uint32_t>> pd;
    pd.reserve(parts.size());
    for (const auto& m : parts) pd.push_back(digits_base(m, p));

    std::uint64_t result = 1;
    for (std::size_t j = 0; j < kd.size(); ++j) {
        std::uint32_t used = 0;
        std::uint64_t denom = 1;
        for (const auto& d : pd) {
            const std::uint32_t mj = j < d.size() ? d[j] : 0;
            used += mj;
            if (used > kd[j]) return 0;  // carry: coefficient vanishes mod p
            denom = denom * fact[mj] % p;
        }
        if (used != kd[j]) return 0;
        // inverse by Fermat
        std::uint64_t inv = 1, b = denom, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * b % p;
            b = b * b % p;
            e >>= 1;
        }
        result = result * fact[kd[j]] % p * inv % p;
    }
    // digits of the parts beyond k's digits must all be zero
    for (const auto& d : pd)
        for (std::size_t j = kd.size(); j < d.size(); ++j)
            if (d[j] != 0) return 0;
    return static_cast<std::uint32_t>(result);
}

VanishingThreshold::VanishingThreshold(BigInt numerator, std::uint64_t denominator)
    : num_(std::move(numerator)), den_(denominator) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (num_ < 0) throw std::invalid_argument("negative threshold numerator");
}

int VanishingThreshold::compare(const BigInt& n) const {
    const BigInt rhs = n * den_;
    if (num_ < rhs) return -1;
    if (num_ > rhs) return 1;
    return 0;
}

std::string VanishingThreshold::to_string() const {
    return num_.str() + "/" + std::to_string(den_);
}

VanishingThreshold vanishing_threshold(const BigInt& k, const FieldParams& fp) {
    if (k < 0) throw std::invalid_argument("threshold is defined for k >= 0");
    const std::uint64_t den = fp.q() - 1;
    if (k == 0) return VanishingThreshold(BigInt(0), den);
    BigInt best;
    BigInt m = k;
    for (std::uint32_t i = 0; i < fp.f(); ++i) {
        BigInt l = digit_sum(m, fp.q());
        if (i == 0 || l < best) best = l;
        m *= fp.p();
    }
    return VanishingThreshold(best, den);
}

}  // namespace fqmzv
