#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qmet/absolute_value.hpp"

using namespace qmet;

TEST_CASE("abs_eval on the three base kinds") {
    // 12 = 2^2 * 3 by trial division, so |12|_2 = 2^-2
    CHECK(oracle::valuation_by_division(2, 12, 1) == 2);
    CHECK(abs_eval(AbsoluteValue::padic(2), Rational(12)).rational() == Rational(1, 4));

    CHECK(abs_eval(AbsoluteValue::trivial(), Rational(5)).rational() == Rational(1));
    CHECK(abs_eval(AbsoluteValue::trivial(), Rational(0)).is_zero());
    CHECK(abs_eval(AbsoluteValue::padic(7), Rational(0)).is_zero());
    CHECK(abs_eval(AbsoluteValue::real_std(), Rational(0)).is_zero());
    CHECK(abs_eval(AbsoluteValue::real_std(), Rational(-3, 2)).rational() == Rational(3, 2));
}

TEST_CASE("padic_valuation matches trial division and handles zero") {
    CHECK(padic_valuation(2, Rational(12)).value == 2);
    CHECK(padic_valuation(3, Rational(1, 9)).value == oracle::valuation_by_division(3, 1, 9));
    CHECK(padic_valuation(3, Rational(1, 9)).value == -2);
    CHECK(padic_valuation(5, Rational(0)).infinite);
    CHECK(padic_valuation(7, Rational(-98, 3)).value == 2);
    CHECK_THROWS_AS(padic_valuation(6, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(padic_valuation(1, Rational(1)), std::invalid_argument);
}

TEST_CASE("power normalization collapses nested powers") {
    auto v = AbsoluteValue::power(AbsoluteValue::power(AbsoluteValue::padic(2), Rational(3)), Rational(1, 2));
    CHECK(v.exponent() == Rational(3, 2));
    CHECK(abs_eval(v, Rational(2)) == Magnitude::prime_power(2, Rational(-3, 2)));
    CHECK_THROWS_AS(AbsoluteValue::power(AbsoluteValue::real_std(), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(AbsoluteValue::power(AbsoluteValue::real_std(), Rational(-1)), std::invalid_argument);
}

TEST_CASE("multiplicativity, |1| = 1 and |-x| = |x| over random rationals") {
    std::mt19937_64 rng(11);
    std::vector<AbsoluteValue> kinds = {
        AbsoluteValue::trivial(),
        AbsoluteValue::real_std(),
        AbsoluteValue::padic(2),
        AbsoluteValue::padic(3),
        AbsoluteValue::power(AbsoluteValue::padic(2), Rational(3, 2)),
        AbsoluteValue::power(AbsoluteValue::real_std(), Rational(1, 2)),
    };
    for (const auto& v : kinds) {
        CHECK(abs_eval(v, Rational(1)).rational() == Rational(1));
        for (int iter = 0; iter < 100; ++iter) {
            Rational x = oracle::random_rational(rng, 50);
            Rational y = oracle::random_rational(rng, 50);
            CHECK(abs_eval(v, x * y) == abs_eval(v, x) * abs_eval(v, y));
            CHECK(abs_eval(v, -x) == abs_eval(v, x));
        }
    }
}

TEST_CASE("p-adic ultrametric inequality with equality off the diagonal case") {
    std::mt19937_64 rng(13);
    auto v = AbsoluteValue::padic(3);
    for (int iter = 0; iter < 300; ++iter) {
        Rational x = oracle::random_rational(rng, 60);
        Rational y = oracle::random_rational(rng, 60);
        Magnitude ax = abs_eval(v, x), ay = abs_eval(v, y);
        Magnitude sum = abs_eval(v, x + y);
        CHECK(sum <= Magnitude::max(ax, ay));
        if (!(ax == ay)) CHECK(sum == Magnitude::max(ax, ay));
    }
}

TEST_CASE("check_q_subadditive examples") {
    std::vector<std::pair<Rational, Rational>> one_pair = {{Rational(1), Rational(1)}};
    CHECK(check_q_subadditive(AbsoluteValue::real_std(), one_pair, Rational(1)).empty());

    auto viol = check_q_subadditive(AbsoluteValue::real_std(), one_pair, Rational(2));
    REQUIRE(viol.size() == 1);
    CHECK(viol[0].first == Rational(1));  // |2|^2 = 4 > 1 + 1

    std::mt19937_64 rng(17);
    std::vector<std::pair<Rational, Rational>> sample;
    for (int i = 0; i < 60; ++i)
        sample.emplace_back(oracle::random_rational(rng, 40), oracle::random_rational(rng, 40));
    for (long qn : {1, 2, 5})
        CHECK(check_q_subadditive(AbsoluteValue::padic(2), sample, Rational(qn, 2)).empty());
}

TEST_CASE("q-subadditivity is downward monotone in q") {
    std::mt19937_64 rng(19);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<std::pair<Rational, Rational>> sample;
        for (int i = 0; i < 20; ++i)
            sample.emplace_back(oracle::random_rational(rng, 30), oracle::random_rational(rng, 30));
        std::uniform_int_distribution<long> qpick(1, 8);
        Rational q(qpick(rng), 4);
        Rational qq = q + Rational(qpick(rng), 4);
        // violations at the smaller exponent would contradict the larger one passing
        if (check_q_subadditive(AbsoluteValue::real_std(), sample, qq).empty())
            CHECK(check_q_subadditive(AbsoluteValue::real_std(), sample, q).empty());
    }
}

TEST_CASE("is_archimedean verdicts") {
    auto real = is_archimedean(AbsoluteValue::real_std(), 10);
    CHECK(real.archimedean);
    CHECK(real.n == 2);

    auto p3 = is_archimedean(AbsoluteValue::padic(3), 1000);
    CHECK(!p3.archimedean);
    CHECK(p3.n == 1000);

    auto triv = is_archimedean(AbsoluteValue::trivial(), 10);
    CHECK(!triv.archimedean);
    CHECK(triv.n == 10);

    auto powreal = is_archimedean(AbsoluteValue::power(AbsoluteValue::real_std(), Rational(1, 3)), 10);
    CHECK(powreal.archimedean);

    auto powpadic = is_archimedean(AbsoluteValue::power(AbsoluteValue::padic(2), Rational(3, 2)), 100);
    CHECK(!powpadic.archimedean);

    CHECK_THROWS_AS(is_archimedean(AbsoluteValue::real_std(), 1), std::invalid_argument);
}

TEST_CASE("equivalence_exponent finds, rejects, and flags underdetermined") {
    auto v2 = AbsoluteValue::padic(2);
    auto v2cubed = AbsoluteValue::power(v2, Rational(3));
    auto found = equivalence_exponent(v2, v2cubed, {Rational(2), Rational(4), Rational(1, 2)});
    CHECK(found.status == EquivalenceExponent::Status::Found);
    CHECK(found.exact);
    CHECK(found.value == Rational(3));

    auto absent = equivalence_exponent(v2, AbsoluteValue::padic(3), {Rational(2), Rational(3)});
    CHECK(absent.status == EquivalenceExponent::Status::Absent);

    auto ident = equivalence_exponent(AbsoluteValue::real_std(), AbsoluteValue::real_std(),
                                      {Rational(2), Rational(5)});
    CHECK(ident.status == EquivalenceExponent::Status::Found);
    CHECK(ident.exact);
    CHECK(ident.value == Rational(1));

    // all magnitudes equal 1 under v1
    auto under = equivalence_exponent(AbsoluteValue::padic(2), AbsoluteValue::padic(3),
                                      {Rational(3), Rational(5), Rational(1)});
    CHECK(under.status == EquivalenceExponent::Status::Underdetermined);

    // real vs its square root power, fractional exponent
    auto halfpow = equivalence_exponent(AbsoluteValue::real_std(),
                                        AbsoluteValue::power(AbsoluteValue::real_std(), Rational(1, 2)),
                                        {Rational(4), Rational(9)});
    CHECK(halfpow.status == EquivalenceExponent::Status::Found);
    CHECK(halfpow.exact);
    CHECK(halfpow.value == Rational(1, 2));

    CHECK_THROWS_AS(equivalence_exponent(v2, v2, {}), std::invalid_argument);
    CHECK_THROWS_AS(equivalence_exponent(v2, v2, {Rational(0)}), std::invalid_argument);
}

TEST_CASE("q_exponent declares the triangle regime exponent") {
    CHECK(!AbsoluteValue::padic(5).q_exponent().has_value());
    CHECK(!AbsoluteValue::trivial().q_exponent().has_value());
    CHECK(*AbsoluteValue::real_std().q_exponent() == Rational(1));
    CHECK(*AbsoluteValue::power(AbsoluteValue::real_std(), Rational(2)).q_exponent() == Rational(1, 2));
}
