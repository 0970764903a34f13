#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "fqmzv/index_sets.hpp"
#include "fqmzv/primes.hpp"

namespace fqmzv {

/// Default bound on q^d for the brute-force enumeration route. The oracle
/// exists to validate the formula route, not to scale.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

struct CostGuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SumMethod { Enumeration, Formula, Identity };

/// An exactly evaluated power sum over monics of degree d at exponent s <= 0:
/// sum of a^(-s), optionally restricted to a coprime to `prime`.
struct PowerSumResult {
    Polynomial value;
    std::size_t d;
    std::int64_t s;
    std::optional<PrimeModulus> prime;
    SumMethod method;
};

/// Brute-force route: direct powering and summation over all monics of
/// degree d (skipping multiples of v when given). Throws CostGuardExceeded
/// when q^d exceeds cost_cap.
PowerSumResult power_sum_enumerate(const Field& fp, std::size_t d, std::int64_t s,
                                   const std::optional<PrimeModulus>& v = std::nullopt,
                                   std::uint64_t cost_cap = kDefaultEnumerationCap);

/// Carry-free multinomial formula: (-1)^d * sum over U_d(-s) of the Lucas
/// multinomial times t^(d*m_0 + ... + m_{d-1}). Zero on an empty index set.
PowerSumResult power_sum_formula(const Field& fp, std::size_t d, std::int64_t s);

/// Twisted sum by the identity route: equal to the untwisted sum for
/// d < deg(v), otherwise S_d(s) - v^(-s) * S_{d-deg v}(s).
PowerSumResult twisted_power_sum(const Field& fp, std::size_t d, std::int64_t s,
                                 const PrimeModulus& v);

/// Twisted sum for v = t by its own index-set formula (the UTwisted set);
/// agrees with twisted_power_sum at v = t. Needs d >= 1.
PowerSumResult twisted_power_sum_formula_t(const Field& fp, std::size_t d, std::int64_t s);

/// Vanishing predicates, decided purely by exact rational comparison
/// against the digit-sum threshold; no polynomial is computed.
bool power_sum_vanishes(const FieldParams& fp, std::size_t d, std::int64_t s);
bool twisted_power_sum_vanishes(const FieldParams& fp, std::size_t d, std::int64_t s,
                                std::size_t deg_v);

/// Degree of the greedy element's term, the unique maximal degree of the
/// untwisted sum when it is nonzero. nullopt when U_d(-s) is empty.
std::optional<BigInt> max_degree_prediction(const FieldParams& fp, std::size_t d, std::int64_t s);

/// Minimum exponent over the UTwisted index set: the predicted t-adic
/// valuation of the twisted sum (v = t) when it is nonzero. Needs d >= 1;
/// nullopt when the set is empty.
std::optional<BigInt> min_degree_prediction_t(const FieldParams& fp, std::size_t d, std::int64_t s);

/// v-adic valuation of the twisted power sum; infinite iff the sum is zero.
Valuation twisted_sum_valuation(const Field& fp, std::size_t d, std::int64_t s,
                                const PrimeModulus& v);

/// Memoizes formula-route power sums, twisted sums and v^(-s) powers for one
/// (field, prime) pair across a sweep. Not thread-safe: give each worker its
/// own table.
class PowerSumTable {
public:
    explicit PowerSumTable(Field fp, std::optional<PrimeModulus> v = std::nullopt);

    const Field& field() const { return fp_; }
    const std::optional<PrimeModulus>& prime() const { return v_; }

    const Polynomial& untwisted(std::size_t d, std::int64_t s);
    const Polynomial& twisted(std::size_t d, std::int64_t s);  // requires a prime
    Valuation nu(std::size_t d, std::int64_t s);               // valuation of twisted(d, s)

private:
    const Polynomial& prime_power(std::int64_t s);  // v^(-s)

    Field fp_;
    std::optional<PrimeModulus> v_;
    std::map<std::pair<std::size_t, std::int64_t>, Polynomial> untwisted_cache_;
    std::map<std::pair<std::size_t, std::int64_t>, Polynomial> twisted_cache_;
    std::map<std::int64_t, Polynomial> vpow_cache_;
};

}  // namespace fqmzv
