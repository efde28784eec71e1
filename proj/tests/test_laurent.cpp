#include "doctest.h"

#include "sharpmilnor/laurent.hpp"

#include <random>

using namespace sharpmilnor;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(-5, 5), coef(-6, 6);
    LaurentPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p += LaurentPoly::term(Rat(coef(rng)), expo(rng));
    return p;
}

}  // namespace

TEST_CASE("ring operations") {
    LaurentPoly one_t = one_minus_t();
    CHECK((one_t + (LaurentPoly::t_power(1) - LaurentPoly::one())).is_zero());
    CHECK(LaurentPoly::t_power(-1) * one_t ==
          LaurentPoly::t_power(-1) - LaurentPoly::one());
    LaurentPoly cubes = LaurentPoly::one() + LaurentPoly::t_power(1) + LaurentPoly::t_power(2);
    CHECK(one_t * cubes == one_minus_t_pow(3));
}

TEST_CASE("exact division") {
    CHECK(div_exact(one_minus_t_pow(3), one_minus_t()) ==
          LaurentPoly::one() + LaurentPoly::t_power(1) + LaurentPoly::t_power(2));
    // (t^2 - t^3) / (t^2 (1-t)) = 1
    LaurentPoly num = LaurentPoly::t_power(2) - LaurentPoly::t_power(3);
    LaurentPoly den = LaurentPoly::t_power(2) * one_minus_t();
    CHECK(div_exact(num, den) == LaurentPoly::one());
    CHECK_THROWS_AS(div_exact(one_minus_t_pow(2), one_minus_t_pow(3)), std::domain_error);
}

TEST_CASE("division round trip on random pairs") {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 200) {
        LaurentPoly q = random_poly(rng), r = random_poly(rng);
        if (q.is_zero()) continue;
        CHECK(div_exact(q * r, q) == r);
        ++done;
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == LaurentPoly::t_power(1) - LaurentPoly::one());
    CHECK(cyclotomic(3) ==
          LaurentPoly::t_power(2) + LaurentPoly::t_power(1) + LaurentPoly::one());
    CHECK(cyclotomic(6) ==
          LaurentPoly::t_power(2) - LaurentPoly::t_power(1) + LaurentPoly::one());
    for (long long d : {2, 4, 5, 8, 9, 12, 18}) {
        CHECK(cyclotomic(d).max_exp() == euler_phi(d));
        LaurentPoly td = LaurentPoly::t_power(d) - LaurentPoly::one();
        CHECK(div_exact(td, cyclotomic(d)) * cyclotomic(d) == td);
    }
}

TEST_CASE("reduction modulo a cyclotomic polynomial") {
    CHECK_FALSE(reduce_mod(one_minus_t(), 3).is_zero());
    CHECK(reduce_mod(one_minus_t_pow(3), 3).is_zero());
    // t^-1 mod Phi_3 is -1-t
    CycloElem tinv = reduce_mod(LaurentPoly::t_power(-1), 3);
    CycloElem expected(3, {Rat(-1), Rat(-1)});
    CHECK(tinv == expected);
}

TEST_CASE("reduce_mod is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        for (long long d : {2, 3, 4, 6}) {
            CHECK(reduce_mod(a + b, d) == reduce_mod(a, d) + reduce_mod(b, d));
            CHECK(reduce_mod(a * b, d) == reduce_mod(a, d) * reduce_mod(b, d));
        }
    }
}

TEST_CASE("text round trip") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p = random_poly(rng);
        auto back = LaurentPoly::parse(p.to_string());
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
    CHECK_FALSE(LaurentPoly::parse("").has_value());
    CHECK_FALSE(LaurentPoly::parse("t^").has_value());
    CHECK(*LaurentPoly::parse("t^-1 - 1") ==
          LaurentPoly::t_power(-1) - LaurentPoly::one());
}

TEST_CASE("associates and units") {
    CHECK(LaurentPoly::t_power(3).is_unit());
    CHECK((LaurentPoly::t_power(2) * one_minus_t()).is_associate_of(one_minus_t()));
    CHECK((-(one_minus_t())).is_associate_of(one_minus_t()));
    CHECK_FALSE(one_minus_t_pow(2).is_associate_of(one_minus_t()));
}

TEST_CASE("cyclotomic field inverses") {
    std::mt19937_64 rng(17);
    for (long long d : {2, 3, 4, 5, 6, 9, 12}) {
        int done = 0;
        while (done < 20) {
            LaurentPoly p = random_poly(rng);
            CycloElem x = reduce_mod(p, d);
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == CycloElem::one(d));
            ++done;
        }
    }
}
