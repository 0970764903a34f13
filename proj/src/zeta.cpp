#include "fqmzv/zeta.hpp"

#include <functional>
#include <limits>

namespace fqmzv {

MZVIndex::MZVIndex(std::vector<std::int64_t> exponents) : s_(std::move(exponents)) {
    if (s_.empty()) throw std::invalid_argument("zeta tuple must be nonempty");
    for (auto s : s_)
        if (s > 0) throw PositiveExponentError("zeta is evaluated at non-positive integers only");
}

const char* zero_class_name(ZeroClass c) {
    switch (c) {
        case ZeroClass::Nonzero: return "nonzero";
        case ZeroClass::TrivialZero: return "trivial-zero";
        case ZeroClass::NontrivialZero: return "nontrivial-zero";
        case ZeroClass::Depth1QEvenZero: return "depth1-q-even-zero";
    }
    return "?";
}

namespace {

std::int64_t chain_bound(const FieldParams& fp, std::int64_t s, std::size_t deg_v) {
    const auto threshold = vanishing_threshold(-BigInt(s), fp);
    return threshold.floor().convert_to<std::int64_t>() + static_cast<std::int64_t>(deg_v);
}

// Sum over strictly decreasing chains d_1 > ... > d_r >= 0, each d_i capped
// by its vanishing bound, of the products of the table's power sums.
Polynomial chain_sum(PowerSumTable& table, const MZVIndex& idx, bool twisted,
                     const std::vector<std::int64_t>& bounds) {
    const auto& s = idx.exponents();
    const std::size_t r = s.size();
    Polynomial acc(table.field());
    std::function<void(std::size_t, std::int64_t, const Polynomial&)> rec =
        [&](std::size_t i, std::int64_t prev, const Polynomial& prod) {
            if (i == r) {
                acc += prod;
                return;
            }
            std::int64_t hi = (i == 0) ? bounds[0] : std::min(bounds[i], prev - 1);
            const auto lo = static_cast<std::int64_t>(r - 1 - i);
            for (std::int64_t d = hi; d >= lo; --d) {
                const auto dd = static_cast<std::size_t>(d);
                const Polynomial& sum = twisted ? table.twisted(dd, s[i]) : table.untwisted(dd, s[i]);
                if (sum.is_zero()) continue;
                rec(i + 1, d, prod * sum);
            }
        };
    rec(0, std::numeric_limits<std::int64_t>::max(), Polynomial::one(table.field()));
    return acc;
}

ZeroClass classify(const FieldParams& fp, const MZVIndex& idx, bool zero,
                   const std::optional<Witness>& witness) {
    if (!zero) return ZeroClass::Nonzero;
    if (idx.depth() == 1)
        return is_q_even(idx.at(1), fp) ? ZeroClass::Depth1QEvenZero : ZeroClass::NontrivialZero;
    return witness ? ZeroClass::TrivialZero : ZeroClass::NontrivialZero;
}

}  // namespace

ZeroReport zeta_at_infinity(const Field& fp, const MZVIndex& idx) {
    const std::size_t r = idx.depth();
    std::vector<std::int64_t> bounds;
    bounds.reserve(r);
    for (auto s : idx.exponents()) bounds.push_back(chain_bound(*fp, s, 0));

    PowerSumTable table(fp);
    Polynomial value = chain_sum(table, idx, /*twisted=*/false, bounds);
    const bool zero = value.is_zero();

    std::optional<Witness> witness;
    if (r > 1 && zero) witness = infinity_trivial_witness(*fp, idx);

    ZeroReport report{std::move(value), zero, classify(*fp, idx, zero, witness),
                      std::move(witness), std::nullopt, std::nullopt, std::nullopt};
    return report;
}

ZeroReport zeta_v_adic(const Field& fp, const MZVIndex& idx, const PrimeModulus& v) {
    const std::size_t r = idx.depth();
    std::vector<std::int64_t> bounds;
    bounds.reserve(r);
    for (auto s : idx.exponents()) bounds.push_back(chain_bound(*fp, s, v.degree()));

    PowerSumTable table(fp, v);
    Polynomial value = chain_sum(table, idx, /*twisted=*/true, bounds);
    const bool zero = value.is_zero();

    std::optional<Witness> witness;
    if (r > 1 && zero) witness = v_adic_trivial_witness(*fp, idx, v.degree());

    std::optional<Valuation> predicted;
    if (v.degree() == 1) {
        Valuation sum = Valuation::of(0);
        for (std::size_t i = 1; i <= r; ++i) sum = sum + table.nu(r - i, idx.at(i));
        predicted = sum;
    }

    Valuation actual = v_adic_valuation(value, v);
    ZeroReport report{std::move(value), zero,       classify(*fp, idx, zero, witness),
                      std::move(witness), v,        predicted,
                      actual};
    return report;
}

std::optional<Witness> infinity_trivial_witness(const FieldParams& fp, const MZVIndex& idx) {
    const std::size_t r = idx.depth();
    if (r < 2) throw std::invalid_argument("trivial zeros are defined for depth > 1");
    for (std::size_t i = 1; i + 1 <= r; ++i) {
        const auto threshold = vanishing_threshold(-BigInt(idx.at(i)), fp);
        if (threshold.less_than(BigInt(r - i))) return Witness{i, std::nullopt};
    }
    return std::nullopt;
}

std::optional<Witness> v_adic_trivial_witness(const FieldParams& fp, const MZVIndex& idx,
                                              std::size_t deg_v) {
    const std::size_t r = idx.depth();
    if (r < 2) throw std::invalid_argument("trivial zeros are defined for depth > 1");
    // condition one, by smallest i
    for (std::size_t i = 1; i <= r; ++i) {
        const auto threshold = vanishing_threshold(-BigInt(idx.at(i)), fp);
        if (threshold.less_than(BigInt(r - i) - BigInt(deg_v))) return Witness{i, std::nullopt};
    }
    // condition two, by smallest i then smallest j
    for (std::size_t i = 1; i <= r; ++i) {
        if (deg_v <= r - i) continue;
        const auto threshold_i = vanishing_threshold(-BigInt(idx.at(i)), fp);
        if (!threshold_i.less_than(BigInt(r - i))) continue;
        for (std::size_t j = 1; j <= r; ++j) {
            const auto threshold_j = vanishing_threshold(-BigInt(idx.at(j)), fp);
            if (j < i && threshold_j.less_than(BigInt(i - j))) return Witness{i, j};
        }
    }
    return std::nullopt;
}

AllPrimesReport all_primes_trivial_zero(const FieldParams& fp, const MZVIndex& idx) {
    const std::size_t r = idx.depth();
    if (r < 2) throw std::invalid_argument("trivial zeros are defined for depth > 1");
    AllPrimesReport report;
    report.trivial_for_all = true;
    for (std::size_t deg = 1; deg <= r; ++deg) {
        auto w = v_adic_trivial_witness(fp, idx, deg);
        if (!w) report.trivial_for_all = false;
        report.per_degree.emplace_back(deg, std::move(w));
    }
    return report;
}

Valuation valuation_prediction(const Field& fp, const MZVIndex& idx, const PrimeModulus& v) {
    if (v.degree() != 1) throw std::invalid_argument("the valuation prediction needs a degree-1 prime");
    PowerSumTable table(fp, v);
    Valuation sum = Valuation::of(0);
    const std::size_t r = idx.depth();
    for (std::size_t i = 1; i <= r; ++i) sum = sum + table.nu(r - i, idx.at(i));
    return sum;
}

}  // namespace fqmzv
