#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exalg/scalar.hpp"

using namespace exalg;

namespace {

Scalar rt2(long long an, long long ad, long long bn, long long bd) {
    return Scalar::quad(Rational(an, ad), Rational(bn, bd), 2);
}

Scalar random_scalar(std::mt19937_64& rng, long long d) {
    std::uniform_int_distribution<long long> num(-30, 30);
    std::uniform_int_distribution<long long> den(1, 12);
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    if (b.is_zero() || d == 0) return Scalar(a);
    return Scalar::quad(a, b, d);
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
    CHECK(Scalar(1, 2) * Scalar(1, 2) == Scalar(1, 4));
    CHECK(Scalar(1, 3).str() == "1/3");
    CHECK((Scalar(2, 4)) == Scalar(1, 2));  // canonical reduction
    CHECK(Scalar(0) == Scalar(Rational(Int(0), Int(7))));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("quadratic field conjugate identities") {
    // (1+sqrt2)(sqrt2-1) = 1
    Scalar x = rt2(1, 1, 1, 1);
    Scalar y = rt2(-1, 1, 1, 1);
    CHECK(x * y == Scalar(1));
    // (3+2sqrt2)/16 + (3-2sqrt2)/16 = 3/8
    Scalar l1 = rt2(3, 16, 2, 16);
    Scalar l2 = rt2(3, 16, -2, 16);
    CHECK(l1 + l2 == Scalar(3, 8));
    CHECK(l1 * l2 == Scalar(1, 256));
}

TEST_CASE("field mismatch and promotion") {
    Scalar a = Scalar::root_of(2);
    Scalar b = Scalar::root_of(3);
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
    // rationals promote into any extension
    CHECK((Scalar(2) + a).disc() == 2);
    CHECK((a - a) == Scalar(0));
    CHECK((a - a).disc() == 0);  // canonical: b == 0 drops the tag
}

TEST_CASE("multiplicative inverse is exact") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; it++) {
        for (long long d : {0LL, 2LL, 3LL, -1LL, 5LL}) {
            Scalar x = random_scalar(rng, d);
            if (x.is_zero()) continue;
            CHECK(x * x.inv() == Scalar(1));
        }
    }
}

TEST_CASE("conjugation is a field automorphism") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; it++) {
        Scalar x = random_scalar(rng, 2);
        Scalar y = random_scalar(rng, 2);
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK((x * y).conj() == x.conj() * y.conj());
    }
}

TEST_CASE("sqrt_in_field") {
    CHECK(*Scalar(1, 4).sqrt_in_field() == Scalar(1, 2));
    // sqrt((3+2sqrt2)/16) = (1+sqrt2)/4, the B-state spectrum root
    Scalar l1 = rt2(3, 16, 2, 16);
    Scalar s = *l1.sqrt_in_field();
    CHECK(s == rt2(1, 4, 1, 4));
    CHECK(s * s == l1);
    // the conjugate eigenvalue: sqrt((3-2sqrt2)/16) = (sqrt2-1)/4
    Scalar l2 = rt2(3, 16, -2, 16);
    CHECK(*l2.sqrt_in_field() == rt2(-1, 4, 1, 4));
    // sqrt(2) not rational
    CHECK(!Scalar(2).sqrt_in_field().has_value());
    // ...but resolves inside Q(sqrt2) when the ambient field is hinted
    CHECK(*Scalar(2).sqrt_in_field(2) == Scalar::quad(Rational(0), Rational(1), 2));
    CHECK(*Scalar(1, 2).sqrt_in_field(2) == Scalar::quad(Rational(0), Rational(1, 2), 2));
    // negative input is an error
    CHECK_THROWS_AS(Scalar(-1).sqrt_in_field(), Error);
    CHECK_THROWS_AS(rt2(-2, 1, 1, 2).sqrt_in_field(), Error);  // -2+sqrt2/2 < 0
    // sqrt2 itself is positive but not totally positive: no root, no error
    CHECK(!Scalar::root_of(2).sqrt_in_field().has_value());
}

TEST_CASE("sqrt_in_field squares back (property)") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 300; it++) {
        Scalar x = random_scalar(rng, it % 2 ? 2 : 5);
        Scalar sq = x * x;
        auto r = sq.sqrt_in_field(x.disc());
        REQUIRE(r.has_value());
        CHECK(*r * *r == sq);
        CHECK(r->sign() >= 0);
    }
}

TEST_CASE("to_float accuracy") {
    CHECK(Scalar(1, 3).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-15));
    // 50-digit oracle: (3-2sqrt2)/16 = 0.010723304703363118899788909473787740...
    double v = rt2(3, 16, -2, 16).to_double();
    CHECK(std::abs(v - 0.01072330470336311889978890947378774) < 1e-16);
    // catastrophic cancellation: 665857/470832 - sqrt2 = 1.59486182460685...e-12
    // must keep RELATIVE accuracy (50-digit oracle)
    double tiny = Scalar::quad(Rational(665857, 470832), Rational(-1), 2).to_double();
    CHECK(std::abs(tiny / 1.59486182460685468043683154688774673879597e-12 - 1.0) < 1e-13);
    auto c = Scalar::i().to_complex();
    CHECK(c.real() == 0.0);
    CHECK(c.imag() == 1.0);
    CHECK_THROWS_AS(Scalar::i().to_double(), Error);
}

TEST_CASE("complex scalars (d = -1)") {
    Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    CHECK(i.conj() == -i);
    Scalar z = Scalar::quad(Rational(3), Rational(4), -1);
    CHECK(z.norm_sq_complex() == Rational(25));
    CHECK_THROWS_AS(z.sign(), Error);
}

TEST_CASE("sign of quadratic values") {
    CHECK(rt2(-1, 1, 1, 1).sign() == 1);   // sqrt2 - 1 > 0
    CHECK(rt2(3, 2, -1, 1).sign() == 1);   // 3/2 - sqrt2 > 0
    CHECK(rt2(7, 5, -1, 1).sign() == -1);  // 7/5 - sqrt2 < 0
    CHECK(rt2(0, 1, 0, 1).sign() == 0);
    CHECK(Scalar(-3, 7).sign() == -1);
}

TEST_CASE("text grammar round-trip") {
    const char* cases[] = {"0",
                           "7",
                           "-7",
                           "2/3",
                           "-2/3",
                           "1/2+1/2*sqrt(2)",
                           "3/16-1/8*sqrt(2)",
                           "-1*sqrt(-1)",
                           "5*sqrt(3)",
                           "-1/4+2*sqrt(-1)"};
    for (const char* c : cases) {
        Scalar s = Scalar::parse(c);
        CHECK(s.str() == c);
        CHECK(Scalar::parse(s.str()) == s);
    }
    // tolerant inputs normalize
    CHECK(Scalar::parse("sqrt(2)").str() == "1*sqrt(2)");
    CHECK(Scalar::parse("-sqrt(2)").str() == "-1*sqrt(2)");
    CHECK(Scalar::parse("4/8").str() == "1/2");
    CHECK_THROWS_AS(Scalar::parse("1+"), Error);
    CHECK_THROWS_AS(Scalar::parse("sqrt(4)"), Error);
    CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
    CHECK_THROWS_AS(Scalar::parse("2 + 3"), Error);
}

TEST_CASE("parse/render property over random values") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 500; it++) {
        for (long long d : {0LL, 2LL, -1LL, 10LL}) {
            Scalar x = random_scalar(rng, d);
            CHECK(Scalar::parse(x.str()) == x);
        }
    }
}

TEST_CASE("canonical encoding uniqueness") {
    Scalar a = Scalar::quad(Rational(1, 2), Rational(0), 2);  // collapses to rational
    Scalar b = Scalar(1, 2);
    std::string ka, kb;
    a.encode(ka);
    b.encode(kb);
    CHECK(ka == kb);
    CHECK(a.hash() == b.hash());
    Scalar c = Scalar::quad(Rational(1, 2), Rational(1), 2);
    std::string kc;
    c.encode(kc);
    CHECK(kc != ka);
}

TEST_CASE("big integer tier") {
    Int f(1);
    for (int k = 2; k <= 40; k++) f = f * Int(k);  // 40!
    CHECK(f.str() == "815915283247897734345611269596115894272000000000");
    CHECK(Int(f.str()) == f);
    Int g = Int::gcd(f, Int(1) + f);
    CHECK(g == Int(1));
    Int root;
    CHECK(Int::sqrt_exact(f * f, root));
    CHECK(root == f);
    // rational arithmetic far past 64 bits stays exact
    Rational big(f, Int(3));
    CHECK(big * Rational(Int(3), f) == Rational(1));
    Rational sum;
    for (int k = 1; k <= 30; k++) sum = sum + Rational(1, k);
    CHECK(sum == Rational(Int("9304682830147"), Int("2329089562800")));
    // squarefree split with a large square factor
    auto sd = squarefree_split(Int(1ll << 40) * Int(6));
    REQUIRE(sd.has_value());
    CHECK(sd->first == Int(1 << 20));
    CHECK(sd->second == 6);
    // a square of a large prime is still recognized
    auto sq = squarefree_split(Int(1000003) * Int(1000003) * Int(2));
    REQUIRE(sq.has_value());
    CHECK(sq->first == Int(1000003));
    CHECK(sq->second == 2);
}
