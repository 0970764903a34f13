// Test-only brute-force oracles, kept independent of the formula routes and
// the digit-backtracking enumerator they are used to validate.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "fqmzv/digits.hpp"
#include "fqmzv/power_sums.hpp"
#include "fqmzv/primes.hpp"
#include "fqmzv/zeta.hpp"

namespace oracle {

using fqmzv::BigInt;
using fqmzv::Field;
using fqmzv::Polynomial;
using fqmzv::PrimeModulus;

// Carry check by long addition in base p, digit by digit.
inline bool carry_free_by_addition(const std::vector<BigInt>& parts, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> digits;
    std::size_t width = 0;
    for (const auto& m : parts) {
        digits.push_back(fqmzv::digits_base(m, p));
        width = std::max(width, digits.back().size());
    }
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < width; ++j) {
        std::uint64_t column = carry;
        for (const auto& d : digits) column += j < d.size() ? d[j] : 0;
        carry = column / p;
        if (carry != 0) return false;
    }
    return true;
}

// Exact multinomial coefficient k! / prod(m_i!) reduced mod p at the end.
inline std::uint32_t multinomial_by_factorials(const BigInt& k, const std::vector<BigInt>& parts,
                                               std::uint32_t p) {
    auto factorial = [](const BigInt& n) {
        BigInt r = 1;
        for (BigInt i = 2; i <= n; ++i) r *= i;
        return r;
    };
    BigInt value = factorial(k);
    for (const auto& m : parts) value /= factorial(m);
    return static_cast<std::uint32_t>(value % p);
}

// All tuples of the given kind by direct digit-split products, sorted in
// descending lexicographic order. Exponential in the digit count; small
// inputs only.
inline std::vector<std::vector<BigInt>> index_set_by_splits(std::size_t d, const BigInt& k,
                                                            const fqmzv::FieldParams& fp,
                                                            fqmzv::IndexKind kind) {
    const auto kd = fqmzv::digits_base(k, fp.p());
    std::vector<std::vector<BigInt>> out;
    std::vector<BigInt> parts(d + 1, 0);
    const std::uint64_t qm1 = fp.q() - 1;

    std::function<void(std::size_t, BigInt)> rec = [&](std::size_t j, BigInt scale) {
        if (j == kd.size()) {
            bool ok = true;
            for (std::size_t i = 1; i <= d && ok; ++i) {
                if (kind == fqmzv::IndexKind::UTwisted && i == d)
                    ok = parts[i] % qm1 == 0;
                else
                    ok = parts[i] > 0 && parts[i] % qm1 == 0;
            }
            if (kind == fqmzv::IndexKind::V && parts[0] == 0) ok = false;
            if (ok) out.push_back(parts);
            return;
        }
        // distribute digit kd[j] over the d+1 parts
        std::vector<std::uint32_t> split(d + 1, 0);
        std::function<void(std::size_t, std::uint32_t)> dist = [&](std::size_t i,
                                                                   std::uint32_t left) {
            if (i == d) {
                split[d] = left;
                for (std::size_t t = 0; t <= d; ++t) parts[t] += BigInt(split[t]) * scale;
                rec(j + 1, scale * fp.p());
                for (std::size_t t = 0; t <= d; ++t) parts[t] -= BigInt(split[t]) * scale;
                return;
            }
            for (std::uint32_t c = 0; c <= left; ++c) {
                split[i] = c;
                dist(i + 1, left - c);
            }
        };
        dist(0, kd[j]);
    };
    rec(0, 1);
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Power sum by repeated multiplication, no square-and-multiply and no
// index-set formula.
inline Polynomial power_sum_by_iteration(const Field& fp, std::size_t d, std::int64_t s,
                                         const PrimeModulus* v = nullptr) {
    Polynomial acc(fp);
    for (const Polynomial& a : fqmzv::MonicRange(fp, d)) {
        if (v && fqmzv::divides(v->poly(), a)) continue;
        Polynomial power = Polynomial::one(fp);
        for (std::int64_t i = 0; i < -s; ++i) power = power * a;
        acc += power;
    }
    return acc;
}

// Zeta by chains over the iterated power sums with a caller-chosen bound on
// d_1 (take it beyond the vanishing range to confirm the sum truncates).
inline Polynomial zeta_by_chains(const Field& fp, const std::vector<std::int64_t>& s,
                                 const PrimeModulus* v, std::int64_t top) {
    Polynomial acc(fp);
    const std::size_t r = s.size();
    std::vector<std::int64_t> chain(r, 0);
    std::function<void(std::size_t, std::int64_t, const Polynomial&)> rec =
        [&](std::size_t i, std::int64_t prev, const Polynomial& prod) {
            if (i == r) {
                acc += prod;
                return;
            }
            for (std::int64_t dd = (i == 0 ? top : prev - 1); dd >= 0; --dd) {
                if (dd < static_cast<std::int64_t>(r - 1 - i)) break;
                rec(i + 1, dd,
                    prod * power_sum_by_iteration(fp, static_cast<std::size_t>(dd), s[i], v));
            }
        };
    rec(0, 0, Polynomial::one(fp));
    return acc;
}

// Count of monic irreducibles of degree d by Moebius inversion.
inline std::int64_t irreducible_count(std::int64_t q, std::int64_t d) {
    auto mobius = [](std::int64_t n) {
        std::int64_t result = 1;
        for (std::int64_t p = 2; p <= n; ++p) {
            if (n % p != 0) continue;
            n /= p;
            if (n % p == 0) return std::int64_t{0};
            result = -result;
        }
        return result;
    };
    std::int64_t total = 0;
    for (std::int64_t e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        std::int64_t power = 1;
        for (std::int64_t i = 0; i < d / e; ++i) power *= q;
        total += mobius(e) * power;
    }
    return total / d;
}

}  // namespace oracle
