#include "fqmzv/index_sets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fqmzv {

BigInt IndexTuple::degree_exponent() const {
    const std::size_t d = parts.size() - 1;
    BigInt e = 0;
    for (std::size_t i = 0; i < d; ++i) e += BigInt(d - i) * parts[i];
    return e;
}

namespace {

enum class PartClass { Free, PosFree, PosQEven, QEvenOrZero };

// Smallest base-p digit mass of a positive integer divisible by q-1, with
// digits placed at arbitrary positions. Used as a per-part lower bound when
// pruning; exact feasibility is re-checked at the leaves.
std::uint64_t min_positive_qeven_mass(std::uint32_t p, std::uint64_t qm1, std::uint32_t f) {
    if (qm1 == 1) return 1;
    std::vector<std::uint64_t> weights(f);
    std::uint64_t w = 1 % qm1;
    for (std::uint32_t j = 0; j < f; ++j) {
        weights[j] = w;
        w = w * p % qm1;
    }
    constexpr std::uint64_t kInf = ~std::uint64_t{0};
    std::vector<std::uint64_t> dist(qm1, kInf);
    for (std::uint64_t wj : weights)
        for (std::uint32_t c = 1; c < p; ++c) {
            const std::uint64_t r = c * wj % qm1;
            dist[r] = std::min<std::uint64_t>(dist[r], c);
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint64_t r = 0; r < qm1; ++r) {
            if (dist[r] == kInf) continue;
            for (std::uint64_t wj : weights)
                for (std::uint32_t c = 1; c < p; ++c) {
                    const std::uint64_t nr = (r + c * wj) % qm1;
                    if (dist[r] + c < dist[nr]) {
                        dist[nr] = dist[r] + c;
                        changed = true;
                    }
                }
        }
    }
    return dist[0];
}

std::uint64_t class_min_mass(PartClass c, std::uint64_t mu) {
    switch (c) {
        case PartClass::PosFree: return 1;
        case PartClass::PosQEven: return mu;
        default: return 0;
    }
}

bool class_residue_free(PartClass c) {
    return c == PartClass::Free || c == PartClass::PosFree;
}

struct Enumerator {
    std::uint32_t p;
    std::uint64_t qm1;
    std::vector<std::uint32_t> kd;       // digits of k, least significant first
    std::vector<std::uint64_t> weight;   // p^j mod (q-1) per position
    std::vector<PartClass> cls;          // per part index
    std::vector<std::size_t> order;      // assignment order; last slot takes the remainder
    std::vector<std::uint64_t> suffix_min_mass;
    std::vector<bool> suffix_residue_free;
    BigInt k;
    IndexKind kind;
    const std::function<bool(const IndexTuple&)>* visit = nullptr;

    std::vector<std::uint32_t> rem;
    std::vector<std::vector<std::uint32_t>> assigned;  // digits per part index
    bool stopped = false;

    std::uint64_t mass(const std::vector<std::uint32_t>& v) const {
        return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
    }
    std::uint64_t residue(const std::vector<std::uint32_t>& v) const {
        std::uint64_t r = 0;
        for (std::size_t j = 0; j < v.size(); ++j) r = (r + v[j] * weight[j]) % qm1;
        return r;
    }
    bool class_ok(PartClass c, std::uint64_t m, std::uint64_t res) const {
        switch (c) {
            case PartClass::Free: return true;
            case PartClass::PosFree: return m > 0;
            case PartClass::PosQEven: return m > 0 && res == 0;
            case PartClass::QEvenOrZero: return res == 0;
        }
        return false;
    }
    BigInt value_of(const std::vector<std::uint32_t>& digits) const {
        BigInt v = 0;
        for (std::size_t j = digits.size(); j-- > 0;) v = v * p + digits[j];
        return v;
    }

    void run() {
        if (mass(rem) < suffix_min_mass[0]) return;
        if (!suffix_residue_free[0] && residue(rem) != 0) return;
        recurse(0);
    }

    void recurse(std::size_t slot) {
        if (stopped) return;
        const std::size_t part = order[slot];
        if (slot + 1 == order.size()) {
            if (!class_ok(cls[part], mass(rem), residue(rem))) return;
            assigned[part] = rem;
            yield();
            return;
        }
        gen(slot, static_cast<std::ptrdiff_t>(kd.size()) - 1, 0, 0);
    }

    // Choose the digits of part order[slot] from the most significant
    // position downward, largest digit first, so candidates come out in
    // descending numeric order.
    void gen(std::size_t slot, std::ptrdiff_t pos, std::uint64_t cand_mass, std::uint64_t cand_res) {
        if (stopped) return;
        const std::size_t part = order[slot];
        if (pos < 0) {
            if (!class_ok(cls[part], cand_mass, cand_res % qm1)) return;
            if (mass(rem) < suffix_min_mass[slot + 1]) return;
            if (!suffix_residue_free[slot + 1] && residue(rem) != 0) return;
            recurse(slot + 1);
            return;
        }
        const std::size_t j = static_cast<std::size_t>(pos);
        const std::uint32_t avail = rem[j];
        for (std::uint32_t c = avail;; --c) {
            rem[j] = avail - c;
            assigned[part][j] = c;
            gen(slot, pos - 1, cand_mass + c, cand_res + c * weight[j]);
            if (stopped) {
                rem[j] = avail;
                return;
            }
            if (c == 0) break;
        }
        rem[j] = avail;
        assigned[part][j] = 0;
    }

    void yield() {
        IndexTuple t;
        t.kind = kind;
        t.target = k;
        t.parts.reserve(cls.size());
        for (std::size_t i = 0; i < cls.size(); ++i) t.parts.push_back(value_of(assigned[i]));
        if (!(*visit)(t)) stopped = true;
    }
};

void enumerate_ordered(std::size_t d, const BigInt& k, const FieldParams& fp, IndexKind kind,
                       std::vector<std::size_t> order,
                       const std::function<bool(const IndexTuple&)>& visit) {
    if (k < 0) throw std::invalid_argument("index sets are defined for k >= 0");
    if (kind == IndexKind::UTwisted && d < 1)
        throw std::invalid_argument("the twisted index set needs d >= 1");

    Enumerator e;
    e.p = fp.p();
    e.qm1 = fp.q() - 1;
    e.kd = digits_base(k, fp.p());
    e.weight.resize(e.kd.size());
    {
        std::uint64_t w = 1 % e.qm1;
        std::vector<std::uint64_t> cycle(fp.f());
        for (std::uint32_t j = 0; j < fp.f(); ++j) {
            cycle[j] = w;
            w = w * fp.p() % e.qm1;
        }
        for (std::size_t j = 0; j < e.weight.size(); ++j) e.weight[j] = cycle[j % fp.f()];
    }
    e.cls.assign(d + 1, PartClass::PosQEven);
    e.cls[0] = (kind == IndexKind::V) ? PartClass::PosFree : PartClass::Free;
    if (kind == IndexKind::UTwisted) e.cls[d] = PartClass::QEvenOrZero;
    e.order = std::move(order);
    e.k = k;
    e.kind = kind;
    e.visit = &visit;
    e.rem = e.kd;
    e.assigned.assign(d + 1, std::vector<std::uint32_t>(e.kd.size(), 0));

    const std::uint64_t mu = min_positive_qeven_mass(fp.p(), e.qm1, fp.f());
    e.suffix_min_mass.assign(d + 2, 0);
    e.suffix_residue_free.assign(d + 2, false);
    for (std::size_t s = d + 1; s-- > 0;) {
        const PartClass c = e.cls[e.order[s]];
        e.suffix_min_mass[s] = e.suffix_min_mass[s + 1] + class_min_mass(c, mu);
        e.suffix_residue_free[s] = e.suffix_residue_free[s + 1] || class_residue_free(c);
    }
    e.run();
}

std::vector<std::size_t> identity_order(std::size_t d) {
    std::vector<std::size_t> order(d + 1);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

}  // namespace

void enumerate_index_set(std::size_t d, const BigInt& k, const FieldParams& fp, IndexKind kind,
                         const std::function<bool(const IndexTuple&)>& visit) {
    enumerate_ordered(d, k, fp, kind, identity_order(d), visit);
}

std::vector<IndexTuple> index_set(std::size_t d, const BigInt& k, const FieldParams& fp,
                                  IndexKind kind) {
    std::vector<IndexTuple> out;
    enumerate_index_set(d, k, fp, kind, [&](const IndexTuple& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::optional<IndexTuple> greedy_element(std::size_t d, const BigInt& k, const FieldParams& fp) {
    std::optional<IndexTuple> first;
    enumerate_index_set(d, k, fp, IndexKind::U, [&](const IndexTuple& t) {
        first = t;
        return false;
    });
    return first;
}

std::optional<IndexTuple> modest_element(std::size_t d, const BigInt& k, const FieldParams& fp) {
    // assign m_d first, then m_{d-1}, ...: the first completion maximizes the
    // reversed tuple lexicographically
    std::vector<std::size_t> order(d + 1);
    for (std::size_t i = 0; i <= d; ++i) order[i] = d - i;
    std::optional<IndexTuple> first;
    enumerate_ordered(d, k, fp, IndexKind::U, std::move(order), [&](const IndexTuple& t) {
        first = t;
        return false;
    });
    return first;
}

}  // namespace fqmzv
