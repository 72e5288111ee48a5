#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "banach/bigint.hpp"

using banach::BigInt;

namespace {

// Deterministic 64-bit generator for the randomized division checks.
uint64_t next_rand(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Random value of roughly `limbs` 32-bit limbs, possibly negative.
BigInt random_bigint(uint64_t& state, int limbs) {
    BigInt value;
    for (int i = 0; i < limbs; ++i) {
        value = (value << 32) + BigInt::from_u64(next_rand(state) & 0xffffffffULL);
    }
    if (next_rand(state) & 1) value = -value;
    return value;
}

}  // namespace

TEST_CASE("int64 construction and decimal output") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(1).to_string() == "1");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(123456789).to_string() == "123456789");
    CHECK(BigInt(std::numeric_limits<int64_t>::max()).to_string() ==
          "9223372036854775807");
    CHECK(BigInt(std::numeric_limits<int64_t>::min()).to_string() ==
          "-9223372036854775808");
    CHECK(BigInt::from_u64(std::numeric_limits<uint64_t>::max()).to_string() ==
          "18446744073709551615");
}

TEST_CASE("decimal parsing round-trips") {
    const std::vector<std::string> cases = {
        "0",
        "7",
        "-7",
        "4294967295",
        "4294967296",
        "18446744073709551616",
        "340282366920938463463374607431768211456",
        "-99999999999999999999999999999999999999999999999",
    };
    for (const std::string& text : cases) {
        CAPTURE(text);
        CHECK(BigInt(text).to_string() == text);
    }
    CHECK(BigInt("+42") == BigInt(42));
    CHECK(BigInt("-0") == BigInt(0));
    CHECK(BigInt("007") == BigInt(7));
}

TEST_CASE("invalid decimal input throws") {
    CHECK_THROWS_AS(BigInt(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt("-"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt("12a3"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt(" 12"), std::invalid_argument);
}

TEST_CASE("signs, zero, parity") {
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(0).sign() == 0);
    CHECK_FALSE(BigInt(0).is_negative());
    CHECK(BigInt(5).sign() == 1);
    CHECK(BigInt(-5).sign() == -1);
    CHECK(BigInt(-5).abs() == BigInt(5));
    CHECK((-BigInt(5)) == BigInt(-5));
    CHECK((-BigInt(0)) == BigInt(0));
    CHECK(BigInt(3).is_odd());
    CHECK_FALSE(BigInt(4).is_odd());
    CHECK_FALSE(BigInt(0).is_odd());
}

TEST_CASE("addition and subtraction") {
    CHECK(BigInt(2) + BigInt(3) == BigInt(5));
    CHECK(BigInt(2) - BigInt(3) == BigInt(-1));
    CHECK(BigInt(-2) + BigInt(-3) == BigInt(-5));
    CHECK(BigInt(-2) - BigInt(-3) == BigInt(1));

    // Carry across limb boundaries.
    const BigInt limb_max("4294967295");
    CHECK(limb_max + BigInt(1) == BigInt("4294967296"));
    CHECK(BigInt("18446744073709551616") - BigInt(1) ==
          BigInt("18446744073709551615"));

    SUBCASE("self-aliasing") {
        BigInt x("123456789012345678901234567890");
        x += x;
        CHECK(x == BigInt("246913578024691357802469135780"));
        x -= x;
        CHECK(x.is_zero());
    }
}

TEST_CASE("multiplication") {
    CHECK(BigInt(7) * BigInt(-6) == BigInt(-42));
    CHECK(BigInt(0) * BigInt("123456789123456789") == BigInt(0));
    const BigInt ten40("10000000000000000000000000000000000000000");
    CHECK(ten40 * ten40 ==
          BigInt("1000000000000000000000000000000000000000000000000000000000000"
                 "00000000000000000000"));
    SUBCASE("self-aliasing square") {
        BigInt x("99999999999999999999");
        x *= x;
        CHECK(x == BigInt("9999999999999999999800000000000000000001"));
    }
}

TEST_CASE("shifts") {
    CHECK((BigInt(1) << 0) == BigInt(1));
    CHECK((BigInt(1) << 64) == BigInt("18446744073709551616"));
    CHECK((BigInt(1) << 64 >> 64) == BigInt(1));
    CHECK((BigInt(5) << 33) == BigInt("42949672960"));
    CHECK((BigInt("42949672961") >> 33) == BigInt(5));
    CHECK((BigInt(0) << 100).is_zero());
    CHECK_THROWS_AS(BigInt(-1) << 1, std::domain_error);
    CHECK_THROWS_AS(BigInt(-1) >> 1, std::domain_error);
}

TEST_CASE("pow2") {
    CHECK(BigInt::pow2(0) == BigInt(1));
    CHECK(BigInt::pow2(10) == BigInt(1024));
    CHECK(BigInt::pow2(100) == BigInt("1267650600228229401496703205376"));
}

TEST_CASE("division basics") {
    CHECK(BigInt(7) / BigInt(2) == BigInt(3));
    CHECK(BigInt(7) % BigInt(2) == BigInt(1));
    CHECK(BigInt(-7) / BigInt(2) == BigInt(-3));
    CHECK(BigInt(-7) % BigInt(2) == BigInt(-1));
    CHECK(BigInt(7) / BigInt(-2) == BigInt(-3));
    CHECK(BigInt(7) % BigInt(-2) == BigInt(1));
    CHECK(BigInt(-7) / BigInt(-2) == BigInt(3));
    CHECK(BigInt(6) / BigInt(3) == BigInt(2));
    CHECK((BigInt(6) % BigInt(3)).is_zero());
    CHECK(BigInt(1) / BigInt(2) == BigInt(0));
    CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
    CHECK_THROWS_AS(BigInt(1) % BigInt(0), std::domain_error);
}

TEST_CASE("division with multi-limb operands") {
    const BigInt a("340282366920938463463374607431768211455");  // 2^128 - 1
    CHECK(a / BigInt("4294967296") == BigInt("79228162514264337593543950335"));
    CHECK(a % BigInt("4294967296") == BigInt("4294967295"));
    CHECK(a / a == BigInt(1));
    CHECK((a % a).is_zero());
    CHECK(a / (a + BigInt(1)) == BigInt(0));
}

TEST_CASE("randomized division reconstruction") {
    uint64_t state = 0x5eed;
    for (int round = 0; round < 400; ++round) {
        CAPTURE(round);
        const int na = 1 + static_cast<int>(next_rand(state) % 8);
        const int nb = 1 + static_cast<int>(next_rand(state) % 8);
        const BigInt a = random_bigint(state, na);
        BigInt b = random_bigint(state, nb);
        if (b.is_zero()) b = BigInt(1);
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        REQUIRE(q * b + r == a);
        REQUIRE(r.abs() < b.abs());
        if (!r.is_zero()) REQUIRE(r.sign() == a.sign());
    }
}

TEST_CASE("randomized multiply-divide inverse") {
    uint64_t state = 0xfeed;
    for (int round = 0; round < 200; ++round) {
        CAPTURE(round);
        const BigInt a = random_bigint(state, 1 + static_cast<int>(next_rand(state) % 6));
        BigInt b = random_bigint(state, 1 + static_cast<int>(next_rand(state) % 6));
        if (b.is_zero()) b = BigInt(-1);
        CHECK((a * b) / b == a);
        CHECK(((a * b) % b).is_zero());
    }
}

TEST_CASE("gcd") {
    CHECK(BigInt::gcd(BigInt(0), BigInt(0)) == BigInt(0));
    CHECK(BigInt::gcd(BigInt(0), BigInt(-6)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(17), BigInt(5)) == BigInt(1));
    CHECK(BigInt::gcd(BigInt::pow2(200), BigInt::pow2(150)) == BigInt::pow2(150));

    SUBCASE("agrees with the remainder-based algorithm") {
        uint64_t state = 0x9cd;
        for (int round = 0; round < 100; ++round) {
            CAPTURE(round);
            BigInt a = random_bigint(state, 1 + static_cast<int>(next_rand(state) % 5));
            BigInt b = random_bigint(state, 1 + static_cast<int>(next_rand(state) % 5));
            BigInt x = a.abs();
            BigInt y = b.abs();
            while (!y.is_zero()) {
                BigInt t = x % y;
                x = y;
                y = t;
            }
            CHECK(BigInt::gcd(a, b) == x);
        }
    }
}

TEST_CASE("ordering") {
    CHECK(BigInt(-2) < BigInt(1));
    CHECK(BigInt(-2) < BigInt(-1));
    CHECK(BigInt(3) < BigInt("4294967296"));
    CHECK(BigInt("4294967296") > BigInt(3));
    CHECK(BigInt(5) <= BigInt(5));
    CHECK(BigInt("-4294967297") < BigInt("-4294967296"));
}

TEST_CASE("mod_u32") {
    CHECK(BigInt(10).mod_u32(7) == 3);
    CHECK(BigInt(-10).mod_u32(7) == 4);  // canonical, not truncated
    CHECK(BigInt(0).mod_u32(5) == 0);
    CHECK(BigInt("123456789123456789123456789").mod_u32(1000000007) == 308641892);
}

TEST_CASE("u64 conversion") {
    CHECK(BigInt(0).fits_u64());
    CHECK(BigInt(0).to_u64() == 0);
    CHECK(BigInt("18446744073709551615").fits_u64());
    CHECK(BigInt("18446744073709551615").to_u64() ==
          std::numeric_limits<uint64_t>::max());
    CHECK_FALSE(BigInt("18446744073709551616").fits_u64());
    CHECK_THROWS_AS(BigInt("18446744073709551616").to_u64(), std::overflow_error);
}

TEST_CASE("bit measurements") {
    CHECK(BigInt(0).bit_length() == 0);
    CHECK(BigInt(1).bit_length() == 1);
    CHECK(BigInt(255).bit_length() == 8);
    CHECK(BigInt(256).bit_length() == 9);
    CHECK(BigInt::pow2(123).bit_length() == 124);
    CHECK(BigInt::pow2(123).trailing_zero_bits() == 123);
    CHECK(BigInt(12).trailing_zero_bits() == 2);
}

TEST_CASE("to_double") {
    CHECK(BigInt(0).to_double() == 0.0);
    CHECK(BigInt(5).to_double() == 5.0);
    CHECK(BigInt(-5).to_double() == -5.0);
    CHECK(BigInt::pow2(100).to_double() == doctest::Approx(1.2676506002282294e30));
    CHECK(BigInt("1000000000000000000000").to_double() == doctest::Approx(1e21));
}
