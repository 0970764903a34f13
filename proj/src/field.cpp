#include "fqmzv/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace fqmzv {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomial over F_p, constant term first, used only while
// constructing a field.
using FpPoly = std::vector<std::uint32_t>;

void fp_normalize(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mod(FpPoly a, const FpPoly& b, std::uint32_t p) {
    // b monic
    fp_normalize(a);
    while (a.size() >= b.size() && !a.empty()) {
        std::uint32_t c = a.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] = (a[off + i] + (p - c % p) * b[i]) % p;
        fp_normalize(a);
    }
    return a;
}

bool fp_is_irreducible(const FpPoly& a, std::uint32_t p) {
    // trial division by all monic polynomials of degree <= deg/2
    std::size_t deg = a.size() - 1;
    if (deg == 1) return true;
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t n = 0; n < count; ++n) {
            FpPoly cand(dd + 1, 0);
            std::uint64_t m = n;
            for (std::size_t i = 0; i < dd; ++i) { cand[i] = static_cast<std::uint32_t>(m % p); m /= p; }
            cand[dd] = 1;
            if (fp_mod(a, cand, p).empty()) return false;
        }
    }
    return true;
}

FpPoly default_modulus(std::uint32_t p, std::uint32_t f) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < f; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
        FpPoly cand(f + 1, 0);
        std::uint64_t m = n;
        for (std::uint32_t i = 0; i < f; ++i) { cand[i] = static_cast<std::uint32_t>(m % p); m /= p; }
        cand[f] = 1;
        if (fp_is_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

}  // namespace

Field FieldParams::make(std::uint32_t p, std::uint32_t f) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (f < 1) throw std::invalid_argument("extension degree must be positive");
    return make(p, f, default_modulus(p, f));
}

Field FieldParams::make(std::uint32_t p, std::uint32_t f, const std::vector<std::uint32_t>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (f < 1) throw std::invalid_argument("extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < f; ++i) {
        q *= p;
        if (q > kMaxQ) throw std::invalid_argument("field size q exceeds supported maximum");
    }
    if (modulus.size() != f + 1) throw std::invalid_argument("modulus must have degree f");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!fp_is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");

    auto fp = std::shared_ptr<FieldParams>(new FieldParams());
    fp->p_ = p;
    fp->f_ = f;
    fp->q_ = static_cast<std::uint32_t>(q);
    fp->modulus_ = modulus;

    // coordinate arithmetic in the power basis
    auto unpack = [&](std::uint32_t e) {
        std::vector<std::uint32_t> c(f);
        for (std::uint32_t i = 0; i < f; ++i) { c[i] = e % p; e /= p; }
        return c;
    };
    auto pack = [&](const std::vector<std::uint32_t>& c) {
        std::uint32_t v = 0;
        for (std::uint32_t i = f; i-- > 0;) v = v * p + c[i];
        return v;
    };

    const auto n = static_cast<std::size_t>(q);
    fp->add_.resize(n * n);
    fp->mul_.resize(n * n);
    fp->neg_.resize(n);
    fp->inv_.assign(n, 0);

    for (std::size_t a = 0; a < n; ++a) {
        auto ca = unpack(static_cast<std::uint32_t>(a));
        std::vector<std::uint32_t> cn(f);
        for (std::uint32_t i = 0; i < f; ++i) cn[i] = (p - ca[i]) % p;
        fp->neg_[a] = static_cast<std::uint16_t>(pack(cn));
        for (std::size_t b = 0; b < n; ++b) {
            auto cb = unpack(static_cast<std::uint32_t>(b));
            std::vector<std::uint32_t> cs(f);
            for (std::uint32_t i = 0; i < f; ++i) cs[i] = (ca[i] + cb[i]) % p;
            fp->add_[a * n + b] = static_cast<std::uint16_t>(pack(cs));

            // multiply as polynomials in x, then reduce by the modulus
            std::vector<std::uint32_t> prod(2 * f - 1, 0);
            for (std::uint32_t i = 0; i < f; ++i)
                for (std::uint32_t j = 0; j < f; ++j)
                    prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            for (std::size_t k = prod.size(); k-- > f;) {
                std::uint32_t c = prod[k];
                if (c == 0) continue;
                prod[k] = 0;
                for (std::uint32_t i = 0; i < f; ++i)
                    prod[k - f + i] = (prod[k - f + i] + (p - c) * modulus[i]) % p;
            }
            prod.resize(f);
            fp->mul_[a * n + b] = static_cast<std::uint16_t>(pack(prod));
        }
    }
    for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b)
            if (fp->mul_[a * n + b] == 1) { fp->inv_[a] = static_cast<std::uint16_t>(b); break; }

    return fp;
}

Field FieldParams::of_order(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    std::uint32_t p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) {
            p = q;
            break;
        }
    }
    std::uint32_t f = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++f;
    }
    if (m != 1) throw std::invalid_argument("field order must be a prime power");
    return make(p, f);
}

FieldElement FieldParams::element(std::uint32_t packed) const {
    if (packed >= q_) throw std::invalid_argument("element index out of range");
    return FieldElement(static_cast<std::uint16_t>(packed));
}

FieldElement FieldParams::from_coords(const std::vector<std::uint32_t>& coords) const {
    if (coords.size() != f_) throw std::invalid_argument("coordinate vector must have length f");
    std::uint32_t v = 0;
    for (std::uint32_t i = f_; i-- > 0;) {
        if (coords[i] >= p_) throw std::invalid_argument("coordinate out of range");
        v = v * p_ + coords[i];
    }
    return FieldElement(static_cast<std::uint16_t>(v));
}

FieldElement FieldParams::from_integer(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return FieldElement(static_cast<std::uint16_t>(r));
}

std::vector<std::uint32_t> FieldParams::coords(FieldElement e) const {
    std::vector<std::uint32_t> c(f_);
    std::uint32_t v = e.packed();
    for (std::uint32_t i = 0; i < f_; ++i) { c[i] = v % p_; v /= p_; }
    return c;
}

FieldElement FieldParams::inv(FieldElement a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    return FieldElement(inv_[a.packed()]);
}

std::string FieldParams::element_text(FieldElement e) const {
    if (f_ == 1) return std::to_string(e.packed());
    if (p_ > 10) throw std::domain_error("text form needs p <= 10 for extension fields");
    std::string s;
    std::uint32_t v = e.packed();
    do {
        s.insert(s.begin(), static_cast<char>('0' + v % p_));
        v /= p_;
    } while (v > 0);
    return s;
}

FieldElement FieldParams::element_from_text(std::string_view text) const {
    if (text.empty()) throw std::invalid_argument("empty coefficient");
    std::uint64_t v = 0;
    const std::uint32_t base = (f_ == 1) ? 10 : p_;
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("bad coefficient digit");
        std::uint32_t d = static_cast<std::uint32_t>(ch - '0');
        if (d >= base && !(f_ == 1)) throw std::invalid_argument("coefficient digit out of range");
        v = v * base + d;
        if (v >= q_ && f_ > 1) throw std::invalid_argument("coefficient out of range");
    }
    if (v >= q_) throw std::invalid_argument("coefficient out of range");
    return FieldElement(static_cast<std::uint16_t>(v));
}

bool FieldParams::same(const FieldParams& other) const {
    return p_ == other.p_ && f_ == other.f_ && modulus_ == other.modulus_;
}

}  // namespace fqmzv
