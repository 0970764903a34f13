#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fqmzv/zeta.hpp"
#include "oracles.hpp"

using namespace fqmzv;

namespace {
Polynomial P(const Field& fp, const char* text) { return Polynomial::parse(fp, text); }
}  // namespace

TEST_CASE("zeta values at infinity") {
    auto f2 = FieldParams::make(2, 1);
    auto f3 = FieldParams::make(3, 1);

    auto r1 = zeta_at_infinity(f3, MZVIndex({-2}));
    CHECK(r1.is_zero);
    CHECK(r1.classification == ZeroClass::Depth1QEvenZero);

    auto r2 = zeta_at_infinity(f3, MZVIndex({-1, -1}));
    CHECK(r2.is_zero);
    CHECK(r2.classification == ZeroClass::TrivialZero);
    CHECK(r2.witness == Witness{1, std::nullopt});

    auto r3 = zeta_at_infinity(f2, MZVIndex({-1}));
    CHECK(r3.is_zero);
    CHECK(r3.classification == ZeroClass::Depth1QEvenZero);

    // the exponent-zero edge: zeta(0) = 1 at infinity
    auto r4 = zeta_at_infinity(f3, MZVIndex({0}));
    CHECK(!r4.is_zero);
    CHECK(r4.value.is_one());

    CHECK(zeta_at_infinity(f3, MZVIndex({-2, 0})).value == P(f3, "2"));
    CHECK(zeta_at_infinity(f3, MZVIndex({-1})).value == P(f3, "t+2"));
}

TEST_CASE("v-adic zeta values over F_3 at v = t") {
    auto f3 = FieldParams::make(3, 1);
    PrimeModulus t(P(f3, "t"));

    auto r1 = zeta_v_adic(f3, MZVIndex({-1}), t);
    CHECK(r1.value == P(f3, "2*t^1+1"));
    CHECK(!r1.is_zero);
    CHECK(r1.classification == ZeroClass::Nonzero);
    CHECK(*r1.nu_predicted == Valuation::of(0));
    CHECK(*r1.nu_actual == Valuation::of(0));

    auto r2 = zeta_v_adic(f3, MZVIndex({-2}), t);
    CHECK(r2.is_zero);
    CHECK(r2.classification == ZeroClass::Depth1QEvenZero);

    auto r3 = zeta_v_adic(f3, MZVIndex({-1, -1}), t);
    CHECK(r3.value == P(f3, "2*t^1"));
    CHECK(r3.classification == ZeroClass::Nonzero);
    CHECK(!r3.witness.has_value());
    CHECK(*r3.nu_predicted == Valuation::of(1));
    CHECK(*r3.nu_actual == Valuation::of(1));

    auto r4 = zeta_v_adic(f3, MZVIndex({-1, -1, -1}), t);
    CHECK(r4.is_zero);
    CHECK(r4.classification == ZeroClass::TrivialZero);
    CHECK(r4.witness == Witness{1, std::nullopt});
    CHECK(r4.nu_predicted->is_infinite());

    // depth-1 value at zero: 1 + (-1) = 0, and 0 is q-even
    auto r5 = zeta_v_adic(f3, MZVIndex({0}), t);
    CHECK(r5.is_zero);
    CHECK(r5.classification == ZeroClass::Depth1QEvenZero);
}

TEST_CASE("v-adic zeta across other primes and fields") {
    auto f2 = FieldParams::make(2, 1);
    auto f3 = FieldParams::make(3, 1);
    auto f4 = FieldParams::make(2, 2);

    CHECK(zeta_v_adic(f2, MZVIndex({-1}), PrimeModulus(P(f2, "t+1"))).is_zero);
    CHECK(zeta_v_adic(f3, MZVIndex({-2, -2}), PrimeModulus(P(f3, "t"))).value ==
          P(f3, "2*t^4+2*t^2+2"));
    CHECK(zeta_v_adic(f3, MZVIndex({-5, -2}), PrimeModulus(P(f3, "t"))).value ==
          P(f3, "2*t^10+t^8+2*t^5+2*t^3+t"));
    CHECK(zeta_v_adic(f3, MZVIndex({-2, -2}), PrimeModulus(P(f3, "t^2+1"))).value ==
          P(f3, "2*t^8+2*t^6+2*t^2+1"));
    CHECK(zeta_v_adic(f2, MZVIndex({-3, -1}), PrimeModulus(P(f2, "t^2+t+1"))).value ==
          P(f2, "t^10+t^9+t^8+t^6+t^5+t^4"));
    CHECK(zeta_v_adic(f4, MZVIndex({-3}), PrimeModulus(P(f4, "t"))).is_zero);
    CHECK(zeta_v_adic(f4, MZVIndex({-1, -3}), PrimeModulus(P(f4, "t"))).value == P(f4, "t"));
}

TEST_CASE("mixed tuples containing zero exponents") {
    auto f3 = FieldParams::make(3, 1);
    PrimeModulus t(P(f3, "t"));

    CHECK(zeta_v_adic(f3, MZVIndex({0, -1}), t).value == P(f3, "2"));
    CHECK(zeta_v_adic(f3, MZVIndex({-1, 0}), t).value == P(f3, "2*t^1"));

    // zero forced by the exponent-zero coordinate; witnessed with threshold 0
    auto rep = zeta_v_adic(f3, MZVIndex({0, -1, -1}), t);
    CHECK(rep.is_zero);
    CHECK(rep.classification == ZeroClass::TrivialZero);
    CHECK(rep.witness == Witness{1, std::nullopt});

    auto inf = zeta_at_infinity(f3, MZVIndex({0, -1}));
    CHECK(inf.is_zero);
    CHECK(inf.classification == ZeroClass::TrivialZero);
    CHECK(inf.witness == Witness{1, std::nullopt});
}

TEST_CASE("trivial-zero witnesses at infinity") {
    auto f2 = FieldParams::make(2, 1);
    auto f3 = FieldParams::make(3, 1);
    CHECK(infinity_trivial_witness(*f3, MZVIndex({-1, -1})) == Witness{1, std::nullopt});
    CHECK(!infinity_trivial_witness(*f3, MZVIndex({-2, -1})).has_value());
    CHECK(!infinity_trivial_witness(*f2, MZVIndex({-3, -1})).has_value());
    CHECK_THROWS_AS(infinity_trivial_witness(*f3, MZVIndex({-1})), std::invalid_argument);
}

TEST_CASE("v-adic trivial-zero witnesses") {
    auto f2 = FieldParams::make(2, 1);
    auto f3 = FieldParams::make(3, 1);
    CHECK(v_adic_trivial_witness(*f3, MZVIndex({-1, -1, -1}), 1) == Witness{1, std::nullopt});
    CHECK(!v_adic_trivial_witness(*f3, MZVIndex({-1, -1}), 1).has_value());
    CHECK(v_adic_trivial_witness(*f2, MZVIndex({-1, -1, -1, -1, -1}), 2) ==
          Witness{1, std::nullopt});
    // the two-index condition
    CHECK(v_adic_trivial_witness(*f3, MZVIndex({-1, -1, -1}), 2) == Witness{2, 1});
    CHECK(v_adic_trivial_witness(*f2, MZVIndex({-1, -1, -1, -1, -1}), 3) == Witness{3, 1});
    CHECK_THROWS_AS(v_adic_trivial_witness(*f3, MZVIndex({-1}), 1), std::invalid_argument);
}

TEST_CASE("all-primes classification") {
    auto f2 = FieldParams::make(2, 1);
    auto f3 = FieldParams::make(3, 1);

    auto a = all_primes_trivial_zero(*f3, MZVIndex({-1, -1, -1}));
    CHECK(a.trivial_for_all);
    REQUIRE(a.per_degree.size() == 3);
    CHECK(a.per_degree[0] == std::pair<std::size_t, std::optional<Witness>>{1, Witness{1, std::nullopt}});
    CHECK(a.per_degree[1] == std::pair<std::size_t, std::optional<Witness>>{2, Witness{2, 1}});
    CHECK(a.per_degree[2] == std::pair<std::size_t, std::optional<Witness>>{3, Witness{2, 1}});

    auto b = all_primes_trivial_zero(*f2, MZVIndex({-1, -1, -1, -1, -1}));
    CHECK(b.trivial_for_all);
    REQUIRE(b.per_degree.size() == 5);
    CHECK(b.per_degree[0].second == Witness{1, std::nullopt});
    CHECK(b.per_degree[1].second == Witness{1, std::nullopt});
    CHECK(b.per_degree[2].second == Witness{3, 1});
    CHECK(b.per_degree[3].second == Witness{3, 1});
    CHECK(b.per_degree[4].second == Witness{3, 1});

    CHECK(!all_primes_trivial_zero(*f3, MZVIndex({-1, -1})).trivial_for_all);
}

TEST_CASE("valuation predictions") {
    auto f3 = FieldParams::make(3, 1);
    PrimeModulus t(P(f3, "t")), t1(P(f3, "t+1"));
    CHECK(valuation_prediction(f3, MZVIndex({-1, -1}), t) == Valuation::of(1));
    CHECK(valuation_prediction(f3, MZVIndex({-1}), t) == Valuation::of(0));
    CHECK(valuation_prediction(f3, MZVIndex({-1, -1, -1}), t).is_infinite());
    CHECK(valuation_prediction(f3, MZVIndex({-5, -2}), t) == Valuation::of(1));
    CHECK(v_adic_valuation(zeta_v_adic(f3, MZVIndex({-5, -2}), t).value, t) == Valuation::of(1));
    CHECK(valuation_prediction(f3, MZVIndex({-5, -2}), t1) == Valuation::of(1));
    CHECK(v_adic_valuation(zeta_v_adic(f3, MZVIndex({-5, -2}), t1).value, t1) == Valuation::of(1));
    CHECK_THROWS_AS(valuation_prediction(f3, MZVIndex({-1, -1}), PrimeModulus(P(f3, "t^2+1"))),
                    std::invalid_argument);
}

TEST_CASE("index validation") {
    CHECK_THROWS_AS(MZVIndex({}), std::invalid_argument);
    CHECK_THROWS_AS(MZVIndex({1}), PositiveExponentError);
    CHECK_THROWS_AS(MZVIndex({-1, 2}), PositiveExponentError);
    CHECK(MZVIndex({-1, 0, -3}).depth() == 3);
    CHECK(MZVIndex({-1, 0, -3}).at(2) == 0);
}

TEST_CASE("zeta matches chains over the iterated oracle, beyond the bound") {
    for (std::uint32_t q : {2u, 3u}) {
        auto fp = FieldParams::of_order(q);
        std::vector<std::optional<PrimeModulus>> places;
        places.push_back(std::nullopt);
        for (const auto& v : primes_of_degree(fp, 1)) places.push_back(v);
        for (const auto& place : places)
            for (std::int64_t s1 = 0; s1 >= -4; --s1)
                for (std::int64_t s2 = 0; s2 >= -4; --s2) {
                    MZVIndex idx({s1, s2});
                    Polynomial got = place ? zeta_v_adic(fp, idx, *place).value
                                           : zeta_at_infinity(fp, idx).value;
                    // sum chains well past the vanishing bound: truncation is
                    // exact, not an approximation
                    std::int64_t top = 0;
                    for (auto s : idx.exponents()) {
                        auto bound =
                            vanishing_threshold(-BigInt(s), *fp).floor().convert_to<std::int64_t>() +
                            (place ? static_cast<std::int64_t>(place->degree()) : 0);
                        top = std::max(top, bound);
                    }
                    Polynomial expected = oracle::zeta_by_chains(
                        fp, idx.exponents(), place ? &*place : nullptr, top + 3);
                    CHECK(got == expected);
                }
    }
}

TEST_CASE("report invariants on a sample grid") {
    auto f3 = FieldParams::make(3, 1);
    for (const auto& v : primes_of_degree(f3, 1))
        for (std::int64_t s1 = 0; s1 >= -5; --s1)
            for (std::int64_t s2 = 0; s2 >= -5; --s2) {
                auto rep = zeta_v_adic(f3, MZVIndex({s1, s2}), v);
                CHECK(rep.is_zero == rep.value.is_zero());
                CHECK(rep.witness.has_value() == (rep.classification == ZeroClass::TrivialZero));
                if (rep.witness) {
                    // the witness inequality holds exactly: r - i > threshold + deg v
                    const auto i = rep.witness->i;
                    const std::int64_t si = (i == 1) ? s1 : s2;
                    CHECK(vanishing_threshold(-BigInt(si), *f3)
                              .less_than(BigInt(2 - i) - BigInt(v.degree())));
                }
            }
}
