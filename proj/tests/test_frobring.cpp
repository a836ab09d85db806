#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "equicode/errors.hpp"
#include "equicode/frobring.hpp"

using namespace equicode;

TEST_CASE("generating character") {
    const RingZk z4(4);
    CHECK(char_value(z4, 0) == Cyclotomic::from_integer(4, 1));
    CHECK(char_value(z4, 1) == Cyclotomic::zeta_power(4, 1));
    CHECK(char_value(z4, 2) == Cyclotomic::from_integer(4, -1));
}

TEST_CASE("character sums vanish off zero") {
    CHECK(char_sum(RingZk(4), 0) == Cyclotomic::from_integer(4, 4));
    CHECK(char_sum(RingZk(4), 2).is_zero());
    CHECK(char_sum(RingZk(5), 3).is_zero());
    for (int k = 2; k <= 12; ++k) {
        const RingZk r(k);
        CHECK(char_sum(r, 0) == Cyclotomic::from_integer(k, k));
        for (int a = 1; a < k; ++a) CHECK(char_sum(r, static_cast<Elem>(a)).is_zero());
    }
}

TEST_CASE("character is a homomorphism") {
    for (int k = 2; k <= 10; ++k) {
        const RingZk r(k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                CHECK(char_value(r, r.add(static_cast<Elem>(a), static_cast<Elem>(b))) ==
                      char_value(r, static_cast<Elem>(a)) * char_value(r, static_cast<Elem>(b)));
    }
}

TEST_CASE("inverses of group orders") {
    CHECK(inverse(RingZk(4), 3) == 3);
    CHECK_THROWS_AS(inverse(RingZk(4), 2), NotInvertible);
    CHECK(inverse(RingZk(5), 1) == 1);
    for (int k = 2; k <= 20; ++k)
        for (long m = 1; m < 3 * k; ++m) {
            const RingZk r(k);
            bool unit = std::gcd(static_cast<long>(k), m) == 1;
            if (unit)
                CHECK((inverse(r, m) * m) % k == 1);
            else
                CHECK_THROWS_AS(inverse(r, m), NotInvertible);
        }
}

TEST_CASE("ring names and range") {
    CHECK(RingZk(5).name() == "F_5");
    CHECK(RingZk(4).name() == "Z_4");
    CHECK(RingZk(5).is_prime_field());
    CHECK_FALSE(RingZk(6).is_prime_field());
    CHECK_THROWS(RingZk(1));
    CHECK_THROWS(RingZk(256));
}
