#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "augmental/integer.hpp"

using augmental::Integer;

TEST_CASE("small arithmetic") {
    CHECK((Integer(3) + Integer(4)) == Integer(7));
    CHECK((Integer(3) - Integer(10)) == Integer(-7));
    CHECK((Integer(-6) * Integer(7)) == Integer(-42));
    CHECK((Integer(17) / Integer(5)) == Integer(3));
    CHECK((Integer(17) % Integer(5)) == Integer(2));
    CHECK((Integer(-17) / Integer(5)) == Integer(-3));
    CHECK((Integer(-17) % Integer(5)) == Integer(-2));
    CHECK(Integer(0).is_zero());
    CHECK(abs(Integer(-9)) == Integer(9));
    CHECK(gcd(Integer(12), Integer(-18)) == Integer(6));
    CHECK(lcm(Integer(4), Integer(6)) == Integer(12));
}

TEST_CASE("promotion past 64 bits stays exact") {
    Integer big(1);
    for (int i = 0; i < 5; ++i) big = big * Integer(1000000007LL);
    CHECK(big.to_string() == "1000000035000000490000003430000012005000016807");
    Integer back = big;
    for (int i = 0; i < 5; ++i) {
        CHECK((back % Integer(1000000007LL)).is_zero());
        back = back / Integer(1000000007LL);
    }
    CHECK(back == Integer(1));
}

TEST_CASE("negatives across the big path") {
    Integer a = Integer(-1);
    for (int i = 0; i < 4; ++i) a = a * Integer(3037000499LL);
    CHECK(a.signum() == -1);  // minus the fourth power
    Integer b = -a;
    CHECK(b.signum() == 1);
    CHECK((a + b).is_zero());
    CHECK((a - b) == (a + a));
}

TEST_CASE("division invariants on random values") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 3000; ++i) {
        long long xa = (long long)(rng() % 2000000) - 1000000;
        long long xb = (long long)(rng() % 2000000) - 1000000;
        long long xc = (long long)(rng() % 1000) - 500;
        if (xc == 0) xc = 13;
        Integer a = Integer(xa) * Integer(xb) * Integer(xb);  // up to ~2^80
        Integer b = Integer(xb) * Integer(xc);
        if (b.is_zero()) continue;
        Integer q, r;
        Integer::divmod(a, b, q, r);
        CHECK((q * b + r) == a);
        CHECK(Integer::cmp_abs(r, b) < 0);
        if (!r.is_zero()) CHECK(r.signum() == a.signum());
        Integer g = gcd(a, b);
        if (!a.is_zero()) {
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
        }
    }
}

TEST_CASE("comparison is a total order consistent with arithmetic") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        long long xa = (long long)(rng() % 4000000000LL) - 2000000000LL;
        long long xb = (long long)(rng() % 4000000000LL) - 2000000000LL;
        Integer a = Integer(xa) * Integer(xa) * Integer(xa);
        Integer b = Integer(xb) * Integer(xb) * Integer(xb);
        CHECK(((a < b) || (a == b) || (a > b)));
        CHECK(((a < b) == ((a - b).signum() < 0)));
    }
}

TEST_CASE("arithmetic at the inline-storage boundary") {
    const long long max = std::numeric_limits<long long>::max();
    const long long min = std::numeric_limits<long long>::min();
    Integer a(max), b(min);
    CHECK((a + Integer(1)).to_string() == "9223372036854775808");
    CHECK((-b).to_string() == "9223372036854775808");
    CHECK((b - Integer(1)).to_string() == "-9223372036854775809");
    CHECK((a + a) == (Integer(2) * a));
    CHECK((b + b) == (Integer(2) * b));
    CHECK((a + b) == Integer(-1));
    Integer q, r;
    Integer::divmod(b, Integer(-1), q, r);
    CHECK(q.to_string() == "9223372036854775808");
    CHECK(r.is_zero());
    CHECK(gcd(b, b) == -b);
    CHECK(abs(b).to_string() == "9223372036854775808");
    // values just above the boundary collapse back when they shrink
    Integer big = a + Integer(10);
    CHECK((big - Integer(10)) == a);
    CHECK((big - Integer(10)).fits_longlong());
}

TEST_CASE("string rendering round-trips through arithmetic") {
    CHECK(Integer(0).to_string() == "0");
    CHECK(Integer(-123456789).to_string() == "-123456789");
    Integer two_pow_100(1);
    for (int i = 0; i < 100; ++i) two_pow_100 = two_pow_100 * Integer(2);
    CHECK(two_pow_100.to_string() == "1267650600228229401496703205376");
}
