#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fqmzv/poly.hpp"

namespace fqmzv {

/// The q^d monic polynomials of degree d, in lexicographic order on the
/// coefficient vector read from the constant term upward (equivalently, by
/// the base-q counter over the d lower coefficients). Polynomials are built
/// on demand; the range may be iterated any number of times.
class MonicRange {
public:
    MonicRange(Field field, std::size_t degree);

    std::uint64_t size() const { return size_; }
    Polynomial at(std::uint64_t index) const;

    class iterator {
    public:
        using value_type = Polynomial;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator(const MonicRange* range, std::uint64_t index) : range_(range), index_(index) {}
        Polynomial operator*() const { return range_->at(index_); }
        iterator& operator++() { ++index_; return *this; }
        iterator operator++(int) { iterator t = *this; ++index_; return t; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        const MonicRange* range_;
        std::uint64_t index_;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size_}; }

private:
    Field field_;
    std::size_t degree_;
    std::uint64_t size_;
};

/// True iff a is irreducible over F_q, by trial division against all monic
/// polynomials of degree <= deg(a)/2. Throws on constant input.
bool is_irreducible(const Polynomial& a);

/// A monic irreducible polynomial v in F_q[t]; validated at construction.
class PrimeModulus {
public:
    explicit PrimeModulus(Polynomial poly);

    const Polynomial& poly() const { return poly_; }
    const Field& field() const { return poly_.field(); }
    std::size_t degree() const { return degree_; }
    std::string to_string() const { return poly_.to_string(); }
    bool operator==(const PrimeModulus& o) const { return poly_ == o.poly_; }

private:
    Polynomial poly_;
    std::size_t degree_;
};

/// All monic irreducibles of degree d, in MonicRange order.
std::vector<PrimeModulus> primes_of_degree(const Field& field, std::size_t d);

/// A v-adic (or t-adic) valuation value. The zero polynomial has infinite
/// valuation; an infinite valuation compares greater than every finite one.
class Valuation {
public:
    static Valuation infinity() { return Valuation(); }
    static Valuation of(std::uint64_t n) {
        Valuation v;
        v.value_ = n;
        return v;
    }

    bool is_infinite() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }
    std::uint64_t value() const {
        if (!value_) throw std::domain_error("infinite valuation has no value");
        return *value_;
    }

    Valuation operator+(const Valuation& o) const {
        if (is_infinite() || o.is_infinite()) return infinity();
        return of(*value_ + *o.value_);
    }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        if (a.is_infinite()) return std::strong_ordering::greater;
        if (b.is_infinite()) return std::strong_ordering::less;
        return *a.value_ <=> *b.value_;
    }

private:
    std::optional<std::uint64_t> value_;
};

/// Largest e with v^e | a; infinite for a == 0.
Valuation v_adic_valuation(const Polynomial& a, const PrimeModulus& v);

}  // namespace fqmzv
