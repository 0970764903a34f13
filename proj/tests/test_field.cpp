#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fqmzv/field.hpp"
#include "fqmzv/poly.hpp"
#include "fqmzv/primes.hpp"
#include "oracles.hpp"

using namespace fqmzv;

namespace {
Polynomial P(const Field& fp, const char* text) { return Polynomial::parse(fp, text); }
}  // namespace

TEST_CASE("default moduli are the lexicographically smallest irreducibles") {
    CHECK(FieldParams::make(2, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(FieldParams::make(3, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(FieldParams::make(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(FieldParams::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(FieldParams::make(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(FieldParams::make(2, 1)->q() == 2);
    CHECK(FieldParams::make(3, 1)->q() == 3);
    CHECK(FieldParams::make(2, 2)->q() == 4);
}

TEST_CASE("field construction rejects bad input") {
    CHECK_THROWS_AS(FieldParams::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams::make(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams::make(2, 0), std::invalid_argument);
    // (x+1)^2 = x^2+1 over F_2 is reducible
    CHECK_THROWS_AS(FieldParams::make(2, 2, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams::make(2, 2, {1, 1}), std::invalid_argument);     // wrong degree
    CHECK_THROWS_AS(FieldParams::make(2, 2, {1, 1, 2}), std::invalid_argument);  // not monic mod 2
    CHECK_THROWS_AS(FieldParams::of_order(6), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams::of_order(12), std::invalid_argument);
    CHECK(FieldParams::of_order(9)->p() == 3);
    CHECK(FieldParams::of_order(9)->f() == 2);
}

TEST_CASE("F4 multiplication table") {
    auto f4 = FieldParams::make(2, 2);
    const std::uint16_t expected[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    for (std::uint16_t a = 0; a < 4; ++a)
        for (std::uint16_t b = 0; b < 4; ++b)
            CHECK(f4->mul(FieldElement(a), FieldElement(b)) == FieldElement(expected[a][b]));
}

TEST_CASE("F9 arithmetic in the power basis of x^2+1") {
    auto f9 = FieldParams::make(3, 2);
    // x * x = -1 = 2
    CHECK(f9->mul(FieldElement(3), FieldElement(3)) == FieldElement(2));
    CHECK(f9->coords(FieldElement(5)) == std::vector<std::uint32_t>{2, 1});
    CHECK(f9->from_coords({2, 1}) == FieldElement(5));
}

TEST_CASE("element inverses and negation") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
        auto fp = FieldParams::of_order(q);
        for (std::uint32_t a = 1; a < q; ++a) {
            FieldElement e = fp->element(a);
            CHECK(fp->mul(e, fp->inv(e)) == fp->one());
            CHECK(fp->add(e, fp->neg(e)) == fp->zero());
        }
    }
    CHECK_THROWS_AS(FieldParams::make(3, 1)->inv(FieldElement(0)), std::domain_error);
}

TEST_CASE("polynomial ring arithmetic") {
    auto f2 = FieldParams::make(2, 1);
    auto f3 = FieldParams::make(3, 1);
    CHECK(P(f2, "t+1") * P(f2, "t+1") == P(f2, "t^2+1"));
    CHECK(P(f3, "t+1") + P(f3, "t+2") == P(f3, "2*t^1"));
    CHECK((P(f2, "t") - P(f2, "t")).is_zero());
    CHECK(!(P(f2, "t") - P(f2, "t")).degree().has_value());
    CHECK_THROWS_AS(P(f2, "t") + P(f3, "t"), std::invalid_argument);
}

TEST_CASE("polynomial powers") {
    auto f2 = FieldParams::make(2, 1);
    auto f3 = FieldParams::make(3, 1);
    CHECK(P(f2, "t+1").pow(3) == P(f2, "t^3+t^2+t+1"));
    CHECK(P(f3, "t+1").pow(3) == P(f3, "t^3+1"));
    CHECK(P(f3, "2*t^2+t").pow(0) == Polynomial::one(f3));
    CHECK(Polynomial::zero(f3).pow(0) == Polynomial::one(f3));
    CHECK_THROWS_AS(P(f3, "t").pow(-1), std::invalid_argument);
}

TEST_CASE("pow is additive in the exponent and Frobenius is additive") {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        auto fp = FieldParams::of_order(q);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<FieldElement> coeffs;
            for (int i = 0; i < 4; ++i)
                coeffs.push_back(FieldElement(static_cast<std::uint16_t>(rng() % q)));
            Polynomial a = Polynomial::from_coeffs(fp, coeffs);
            const std::uint64_t e1 = rng() % 20, e2 = rng() % 20;
            CHECK(a.pow(BigInt(e1) + BigInt(e2)) == a.pow(e1) * a.pow(e2));

            std::vector<FieldElement> coeffs_b;
            for (int i = 0; i < 4; ++i)
                coeffs_b.push_back(FieldElement(static_cast<std::uint16_t>(rng() % q)));
            Polynomial b = Polynomial::from_coeffs(fp, coeffs_b);
            CHECK((a + b).pow(fp->p()) == a.pow(fp->p()) + b.pow(fp->p()));
        }
    }
}

TEST_CASE("monic enumeration") {
    auto f2 = FieldParams::make(2, 1);
    auto f3 = FieldParams::make(3, 1);
    std::vector<std::string> q2d1;
    for (const auto& m : MonicRange(f2, 1)) q2d1.push_back(m.to_string());
    CHECK(q2d1 == std::vector<std::string>{"t", "t+1"});
    std::vector<std::string> q2d2;
    for (const auto& m : MonicRange(f2, 2)) q2d2.push_back(m.to_string());
    CHECK(q2d2 == std::vector<std::string>{"t^2", "t^2+1", "t^2+t", "t^2+t+1"});
    CHECK(MonicRange(f3, 0).size() == 1);
    CHECK(MonicRange(f3, 0).at(0) == Polynomial::one(f3));

    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (std::size_t d = 0; d <= 3; ++d) {
            std::uint64_t count = 0, expected = 1;
            for (std::size_t i = 0; i < d; ++i) expected *= q;
            for (const auto& m : MonicRange(FieldParams::of_order(q), d)) {
                CHECK(m.is_monic());
                CHECK(*m.degree() == d);
                ++count;
            }
            CHECK(count == expected);
        }
}

TEST_CASE("irreducibility and prime enumeration") {
    auto f2 = FieldParams::make(2, 1);
    auto f3 = FieldParams::make(3, 1);
    CHECK(is_irreducible(P(f2, "t^2+t+1")));
    CHECK(!is_irreducible(P(f2, "t^2+1")));
    CHECK(is_irreducible(P(f3, "t^2+1")));
    CHECK_THROWS_AS(is_irreducible(Polynomial::one(f2)), std::invalid_argument);

    auto names = [](const std::vector<PrimeModulus>& ps) {
        std::vector<std::string> out;
        for (const auto& v : ps) out.push_back(v.to_string());
        return out;
    };
    CHECK(names(primes_of_degree(f2, 1)) == std::vector<std::string>{"t", "t+1"});
    CHECK(names(primes_of_degree(f3, 1)) == std::vector<std::string>{"t", "t+1", "t+2"});
    CHECK(names(primes_of_degree(f2, 2)) == std::vector<std::string>{"t^2+t+1"});
    CHECK(names(primes_of_degree(FieldParams::make(2, 2), 1)) ==
          std::vector<std::string>{"t", "t+1", "t+10", "t+11"});

    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (std::int64_t d = 1; d <= 3; ++d)
            CHECK(static_cast<std::int64_t>(
                      primes_of_degree(FieldParams::of_order(q), static_cast<std::size_t>(d)).size()) ==
                  oracle::irreducible_count(q, d));
}

TEST_CASE("prime modulus validation") {
    auto f2 = FieldParams::make(2, 1);
    CHECK_THROWS_AS(PrimeModulus(P(f2, "t^2+1")), std::invalid_argument);
    CHECK_THROWS_AS(PrimeModulus(Polynomial::one(f2)), std::invalid_argument);
    CHECK(PrimeModulus(P(f2, "t^2+t+1")).degree() == 2);
}

TEST_CASE("v-adic valuation") {
    auto f2 = FieldParams::make(2, 1);
    PrimeModulus t(P(f2, "t"));
    CHECK(v_adic_valuation(P(f2, "t^3+t^2"), t) == Valuation::of(2));
    CHECK(v_adic_valuation(P(f2, "t+1"), t) == Valuation::of(0));
    CHECK(v_adic_valuation(Polynomial::zero(f2), t).is_infinite());

    CHECK(Valuation::infinity() > Valuation::of(1'000'000));
    CHECK(Valuation::of(2) + Valuation::infinity() == Valuation::infinity());
    CHECK(Valuation::of(2) + Valuation::of(3) == Valuation::of(5));
    CHECK_THROWS_AS(Valuation::infinity().value(), std::domain_error);
}

TEST_CASE("valuation is additive on products") {
    std::mt19937_64 rng(11);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto fp = FieldParams::of_order(q);
        std::vector<PrimeModulus> primes = primes_of_degree(fp, 1);
        for (const auto& v : primes_of_degree(fp, 2)) primes.push_back(v);
        for (int trial = 0; trial < 30; ++trial) {
            auto random_poly = [&] {
                std::vector<FieldElement> c;
                for (int i = 0; i < 5; ++i)
                    c.push_back(FieldElement(static_cast<std::uint16_t>(rng() % q)));
                return Polynomial::from_coeffs(fp, c);
            };
            Polynomial a = random_poly(), b = random_poly();
            if (a.is_zero() || b.is_zero()) continue;
            const auto& v = primes[rng() % primes.size()];
            CHECK(v_adic_valuation(a * b, v) == v_adic_valuation(a, v) + v_adic_valuation(b, v));
        }
    }
}

TEST_CASE("divmod recovers the dividend") {
    std::mt19937_64 rng(13);
    auto fp = FieldParams::of_order(4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<FieldElement> ca, cb;
        for (int i = 0; i < 6; ++i) ca.push_back(FieldElement(static_cast<std::uint16_t>(rng() % 4)));
        for (int i = 0; i < 3; ++i) cb.push_back(FieldElement(static_cast<std::uint16_t>(rng() % 4)));
        Polynomial a = Polynomial::from_coeffs(fp, ca);
        Polynomial b = Polynomial::from_coeffs(fp, cb);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
    }
    CHECK_THROWS_AS(divmod(Polynomial::one(fp), Polynomial::zero(fp)), std::domain_error);
}

TEST_CASE("polynomial text round trip") {
    auto f3 = FieldParams::make(3, 1);
    auto f4 = FieldParams::make(2, 2);
    CHECK(P(f3, "2*t^2+1").to_string() == "2*t^2+1");
    CHECK(P(f3, "t^2 + 2*t^1 + 2").to_string() == "t^2+2*t^1+2");
    CHECK(Polynomial::zero(f3).to_string() == "0");
    CHECK(P(f3, "0").is_zero());
    // F4 coefficients print as base-2 digit strings of the coordinate vector
    Polynomial a = Polynomial::from_coeffs(f4, {FieldElement(1), FieldElement(2), FieldElement(3)});
    CHECK(a.to_string() == "11*t^2+10*t^1+1");
    CHECK(Polynomial::parse(f4, a.to_string()) == a);
    CHECK(P(f4, "t+10").coeff(0) == FieldElement(2));

    CHECK_THROWS_AS(P(f3, ""), std::invalid_argument);
    CHECK_THROWS_AS(P(f3, "t^"), std::invalid_argument);
    CHECK_THROWS_AS(P(f3, "5*t"), std::invalid_argument);
    CHECK_THROWS_AS(P(f3, "x+1"), std::invalid_argument);

    std::mt19937_64 rng(17);
    for (std::uint32_t q : {2u, 3u, 5u, 9u}) {
        auto fp = FieldParams::of_order(q);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<FieldElement> c;
            for (int i = 0; i < 6; ++i)
                c.push_back(FieldElement(static_cast<std::uint16_t>(rng() % q)));
            Polynomial a2 = Polynomial::from_coeffs(fp, c);
            CHECK(Polynomial::parse(fp, a2.to_string()) == a2);
        }
    }
}
