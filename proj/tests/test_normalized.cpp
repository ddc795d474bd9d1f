#include <doctest.h>

#include "aperylab/normalized.hpp"
#include "aperylab/verify.hpp"

using namespace aperylab;

TEST_CASE("tj tables: base weights") {
    const RationalSeq t1 = tj(1, 4);
    CHECK(t1.at(1) == Rational(2));
    CHECK(t1.at(2) == make_rational(4, 3));
    CHECK_THROWS_AS(t1.at(0), std::out_of_range);  // weight 1 starts at n = 1

    const RationalSeq t2 = tj(2, 4);
    CHECK(t2.at(0) == Rational(1));
    CHECK(t2.at(1) == make_rational(3, 4));
    CHECK(t2.at(2) == make_rational(41, 64));
    CHECK(t2.at(3) == make_rational(147, 256));
    CHECK(t2.at(4) == make_rational(8649, 16384));

    const RationalSeq t3 = tj(3, 2);
    CHECK(t3.at(0) == Rational(0));
    CHECK(t3.at(1) == make_rational(1, 2));
}

TEST_CASE("tj2 table agrees with the defining binomial sum") {
    const RationalSeq t2 = tj2_table(150);
    for (long n = 0; n <= 150; ++n) CHECK(t2.at(n) == tj2_binomial_sum(n));
    // and with J2(n)/J2(0) read off the zeta coefficient
    for (long n = 0; n <= 40; ++n) CHECK(t2.at(n) == j2(n).coefficient(2));
}

TEST_CASE("tj2 denominators are powers of two") {
    const auto odd_part_is_one = [](const Rational& q) {
        BigInt den = denominator(q);
        while (mpz_even_p(den.get_mpz_t())) den /= 2;
        return den == 1;
    };
    const RationalSeq t2 = tj2_table(600);
    for (long n = 0; n <= 600; ++n) CHECK(odd_part_is_one(t2.at(n)));
    // spot the large indices the congruence sweeps reach, so reduction mod
    // any odd prime power is always defined there
    for (const auto& [n, v] : tj2_values({2882, 29790, 44686})) {
        CHECK(odd_part_is_one(v));
        CHECK(n >= 0);
    }
}

TEST_CASE("streamed tj2 values match the table") {
    const RationalSeq t2 = tj2_table(500);
    const auto picked = tj2_values({0, 1, 2, 63, 64, 449, 500});
    for (const auto& [n, v] : picked) CHECK(v == t2.at(n));
}

TEST_CASE("ascent basics") {
    const RationalSeq t1 = tj(1, 8);
    CHECK(ascent(t1, 0) == Rational(0));
    CHECK(ascent(t1, -3) == Rational(0));
    CHECK(ascent(t1, 1) == make_rational(1, 2));    // = tJ3(1)
    const RationalSeq t2 = tj(2, 8);
    CHECK(ascent(t2, 1) == make_rational(3, 16));   // = tJ4(1)
    for (long n = 0; n <= 8; ++n) {
        CHECK(ascent(t1, n) == tj(3, 8).at(n));
        CHECK(ascent(t2, n) == tj(4, 8).at(n));
    }
}

TEST_CASE("normalization at n = 1 for all stored weights") {
    for (int m = 1; m <= 5; ++m) {
        CHECK(tj(2 * m, 2).at(1) == make_rational(BigInt(3), pow_ui(BigInt(4), m)));
        CHECK(tj(2 * m + 1, 2).at(1) == make_rational(BigInt(2), pow_ui(BigInt(4), m)));
    }
    // a broken table is rejected at construction
    CHECK_THROWS_AS(RationalSeq(2, {Rational(1), Rational(1)}), std::logic_error);
}

TEST_CASE("ascent inverts the three-term ladder") {
    for (int k : {1, 2, 4, 6}) {
        CHECK(ascent_recurrence_check(tj(k, 30), 30));
        CHECK(ascent_ladder_check(tj(k, 30), tj(k + 2, 30), 30));
    }
    // a corrupted entry in the stored ascent table is caught
    RationalSeq corrupted = tj(4, 30);
    corrupted.values[17] += make_rational(1, 7);
    CHECK_FALSE(ascent_ladder_check(tj(2, 30), corrupted, 30));
}

TEST_CASE("S sums: bases and spot values") {
    CHECK(s_poly(2, 0, SRoute::Definition) == Rational(1));
    CHECK(s_poly(2, 7, SRoute::Definition) == Rational(1));
    CHECK(s_poly(3, 1, SRoute::Recursion) == Rational(-2));
    CHECK(s_poly(4, 1, SRoute::Definition) == make_rational(-3, 4));
    CHECK(s_poly(4, 1, SRoute::Recursion) == make_rational(-3, 4));
    CHECK(s_poly(4, 1, SRoute::Multisum) == make_rational(-3, 4));
    CHECK(s_poly(4, 2, SRoute::Multisum) == make_rational(-115, 144));
    CHECK(s_poly(5, 1, SRoute::Multisum) == make_rational(-1, 2));
    CHECK(s_poly(5, 2, SRoute::Multisum) == make_rational(-91, 216));
    CHECK(s_poly(6, 1, SRoute::Multisum) == make_rational(-3, 16));
    CHECK_THROWS_AS(s_poly(2, 3, SRoute::Multisum), std::invalid_argument);
    CHECK_THROWS_AS(s_poly(3, 3, SRoute::Multisum), std::invalid_argument);
}

TEST_CASE("S sums: three routes agree for k <= 8, p <= 30") {
    for (int k = 2; k <= 8; ++k) {
        const auto rec = s_table_recursion(k, 30);
        const auto def = s_table_definition(k, 30);
        CHECK(rec == def);
        if (k >= 4) {
            const long p_top = (k >= 7) ? 14 : 30;  // tuple count grows with r
            for (long p = 0; p <= p_top; ++p) CHECK(s_multisum(k, p) == rec[p]);
        }
    }
}

TEST_CASE("multisum exclusion rule") {
    CHECK(multisum_epsilon({3, 3}) == 0);
    CHECK(multisum_epsilon({2, 2}) == 1);
    CHECK(multisum_epsilon({1, 3, 4}) == 1);
    CHECK(multisum_epsilon({1, 3, 3}) == 0);
    CHECK(multisum_epsilon({}) == 1);
    CHECK_THROWS_AS(multisum_epsilon({3, 1}), std::invalid_argument);
}

TEST_CASE("decomposition reconstructs J_k exactly") {
    const auto family = tj_family(8, 24);
    CHECK(decompose(4, 1, family) ==
          ZetaCombination::term(4, make_rational(3, 4)) +
              ZetaCombination::term(2, make_rational(3, 16)));
    CHECK(decompose(3, 1, family) ==
          ZetaCombination::term(3, make_rational(3, 4)) +
              ZetaCombination::unit(make_rational(1, 2)));
    for (long n = 0; n <= 24; ++n)
        CHECK(decompose(2, n, family) == ZetaCombination::term(2, family.at(2).at(n)));

    auto even = jk_recurrence_chain(8, 24);
    auto odd = jk_recurrence_chain(7, 24);
    even.merge(odd);
    for (int k = 2; k <= 8; ++k)
        for (long n = 0; n <= 24; ++n) CHECK(decompose(k, n, family) == even.at(k).at(n));
}

TEST_CASE("even S limits") {
    CHECK(s_limit_check(1, 2000, 1e-3));
    CHECK(s_limit_check(2, 2000, 1e-4));
    // S2 is constantly 1
    CHECK(s_table_recursion(2, 50).back() == Rational(1));
}

TEST_CASE("verify suites pass at reduced sizes") {
    for (const auto& r : verify_recurrence(6, 20)) CHECK_MESSAGE(r.ok, r.name, ": ", r.detail);
    for (const auto& r : verify_routes(6, 12)) CHECK_MESSAGE(r.ok, r.name, ": ", r.detail);
    for (const auto& r : verify_ode(24)) CHECK_MESSAGE(r.ok, r.name, ": ", r.detail);
    for (const auto& r : verify_decomposition(6, 16)) CHECK_MESSAGE(r.ok, r.name, ": ", r.detail);
}
