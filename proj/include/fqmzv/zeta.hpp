#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fqmzv/power_sums.hpp"

namespace fqmzv {

struct PositiveExponentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A depth-r tuple (s_1, ..., s_r) of non-positive integer exponents.
/// Positive entries are rejected at construction: values at positive
/// integers live in a completion and are out of scope here.
class MZVIndex {
public:
    explicit MZVIndex(std::vector<std::int64_t> exponents);

    const std::vector<std::int64_t>& exponents() const { return s_; }
    std::int64_t at(std::size_t i) const { return s_[i - 1]; }  // 1-based, as in the definitions
    std::size_t depth() const { return s_.size(); }

private:
    std::vector<std::int64_t> s_;
};

/// A trivial-zero witness: index i with r-i beyond the vanishing range, or a
/// pair (i, j) for the two-index condition. Indices are 1-based.
struct Witness {
    std::size_t i = 0;
    std::optional<std::size_t> j;
    friend bool operator==(const Witness&, const Witness&) = default;
};

enum class ZeroClass { Nonzero, TrivialZero, NontrivialZero, Depth1QEvenZero };
const char* zero_class_name(ZeroClass c);

/// Classification of one zeta value. The witness is present exactly when the
/// classification is TrivialZero. nu_predicted is filled for degree-1 primes
/// only; nu_actual is the v-adic valuation of the value (absent at infinity).
struct ZeroReport {
    Polynomial value;
    bool is_zero;
    ZeroClass classification;
    std::optional<Witness> witness;
    std::optional<PrimeModulus> prime;
    std::optional<Valuation> nu_predicted;
    std::optional<Valuation> nu_actual;
};

/// Zeta value at infinity: the finite sum over strictly decreasing chains
/// d_1 > ... > d_r >= 0 of products of untwisted power sums; each d_i is
/// bounded by the exact vanishing threshold of s_i.
ZeroReport zeta_at_infinity(const Field& fp, const MZVIndex& idx);

/// v-adic zeta value: same chain sum over the twisted power sums, with the
/// bounds widened by deg(v).
ZeroReport zeta_v_adic(const Field& fp, const MZVIndex& idx, const PrimeModulus& v);

/// Trivial-zero test at infinity (depth > 1): the smallest i < r with
/// r - i beyond the threshold of s_i. Exponent 0 participates with
/// threshold 0. Throws on depth-1 input.
std::optional<Witness> infinity_trivial_witness(const FieldParams& fp, const MZVIndex& idx);

/// v-adic trivial-zero test (depth > 1). Condition one: some i has r - i
/// greater than threshold(s_i) + deg v. Condition two: some (i, j) has
/// deg v > r - i > threshold(s_i) and i - j > threshold(s_j). The search is
/// by smallest i, then smallest j, and depends on v only through deg v.
std::optional<Witness> v_adic_trivial_witness(const FieldParams& fp, const MZVIndex& idx,
                                              std::size_t deg_v);

/// A tuple is a trivial zero across every prime iff it is one for all primes
/// of degree <= r; the conditions depend only on the degree, so one check
/// per degree suffices.
struct AllPrimesReport {
    bool trivial_for_all = false;
    std::vector<std::pair<std::size_t, std::optional<Witness>>> per_degree;  // degrees 1..r
};
AllPrimesReport all_primes_trivial_zero(const FieldParams& fp, const MZVIndex& idx);

/// Sum of the twisted-sum valuations along the leading chain (r-1, ..., 0);
/// infinite when any factor vanishes. Defined for degree-1 primes, where it
/// equals the v-adic valuation of the zeta value whenever that is finite.
Valuation valuation_prediction(const Field& fp, const MZVIndex& idx, const PrimeModulus& v);

}  // namespace fqmzv
