#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fqmzv/bigint.hpp"
#include "fqmzv/digits.hpp"
#include "fqmzv/field.hpp"

namespace fqmzv {

/// Which admissible index set a tuple belongs to.
///  U        : m_0 >= 0; m_i > 0 and (q-1) | m_i for 1 <= i <= d.
///  V        : U with the extra constraint m_0 > 0.
///  UTwisted : m_0 >= 0; m_i > 0 and (q-1) | m_i for 1 <= i < d;
///             m_d >= 0 with (q-1) | m_d (zero allowed). Needs d >= 1.
/// All kinds additionally require the parts to sum to k with no base-p
/// carries.
enum class IndexKind { U, V, UTwisted };

struct IndexTuple {
    std::vector<BigInt> parts;  // (m_0, ..., m_d)
    BigInt target;              // k
    IndexKind kind;

    /// d*m_0 + (d-1)*m_1 + ... + m_{d-1}: the exponent of t contributed by
    /// this tuple's term in the power-sum formula.
    BigInt degree_exponent() const;
};

/// Visits every tuple of the requested set exactly once, in descending
/// lexicographic order on (m_0, ..., m_d). Return false from the visitor to
/// stop early. Implemented as backtracking over base-p digit positions with
/// residue and digit-mass feasibility pruning.
void enumerate_index_set(std::size_t d, const BigInt& k, const FieldParams& fp, IndexKind kind,
                         const std::function<bool(const IndexTuple&)>& visit);

/// Materialized enumeration, same order.
std::vector<IndexTuple> index_set(std::size_t d, const BigInt& k, const FieldParams& fp,
                                  IndexKind kind);

/// Lexicographically largest element of U_d(k), or nullopt when the set is
/// empty. Equal to the first element streamed by enumerate_index_set.
std::optional<IndexTuple> greedy_element(std::size_t d, const BigInt& k, const FieldParams& fp);

/// Reverse-lexicographically largest element of U_d(k): m_d maximal, then
/// m_{d-1}, and so on. nullopt when the set is empty.
std::optional<IndexTuple> modest_element(std::size_t d, const BigInt& k, const FieldParams& fp);

}  // namespace fqmzv
