#include <doctest.h>

#include "orbitdx/random_gen.hpp"
#include "orbitdx/scalar.hpp"

using namespace orbitdx;

TEST_CASE("rational addition stays reduced") {
    CHECK(gr(1, 2) + gr(1, 3) == gr(5, 6));
    CHECK(GaussianRational(Rational(1), Rational(2)) + GaussianRational(Rational(3), Rational(-2)) ==
          GaussianRational(4));
    GaussianRational x = gr(-7, 3) + GaussianRational::i() * gr(2, 5);
    CHECK(GaussianRational(0) + x == x);
}

TEST_CASE("multiplication") {
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(gr(1, 2) * gr(2, 3) == gr(1, 3));
    GaussianRational x = gr(9, 7) - GaussianRational::i() * gr(1, 4);
    CHECK(x * GaussianRational(1) == x);
}

TEST_CASE("inverses") {
    CHECK(GaussianRational(2).inv() == gr(1, 2));
    CHECK(GaussianRational::i().inv() == -GaussianRational::i());
    GaussianRational one_plus_i = GaussianRational(1) + GaussianRational::i();
    CHECK(one_plus_i.inv() == GaussianRational(Rational(1, 2), Rational(-1, 2)));
    CHECK_THROWS_AS(GaussianRational(0).inv(), DivisionByZeroError);
}

TEST_CASE("field axioms on random triples") {
    Rng rng(4711);
    for (int trial = 0; trial < 200; ++trial) {
        GaussianRational a = random_scalar(rng, 50, true);
        GaussianRational b = random_scalar(rng, 50, true);
        GaussianRational c = random_scalar(rng, 50, true);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero())
            CHECK(a * a.inv() == GaussianRational(1));
        CHECK(a + (-a) == GaussianRational(0));
    }
}

TEST_CASE("render and parse round-trip") {
    CHECK(gr(3).str() == "3");
    CHECK((-gr(1, 5) * GaussianRational::i()).str() == "-1/5*i");
    CHECK((GaussianRational(2) + GaussianRational(3) * GaussianRational::i()).str() == "2+3*i");
    CHECK(GaussianRational(Rational(1, 2), Rational(-1, 2)).str() == "1/2-1/2*i");

    for (const char* text : {"3", "-1/5*i", "2+3*i", "0", "1/2-1/2*i", " 2 + 3 * i ", "i", "-i",
                             "7/3", "-12", "1+i", "2*i-1"}) {
        GaussianRational v = GaussianRational::parse(text);
        CHECK(GaussianRational::parse(v.str()) == v);
    }

    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        GaussianRational v{make_rational(rng.uniform(-1000, 1000), rng.uniform(1, 40)),
                           make_rational(rng.uniform(-1000, 1000), rng.uniform(1, 40))};
        CHECK(GaussianRational::parse(v.str()) == v);
    }
}

TEST_CASE("parse rejects malformed text") {
    for (const char* text : {"", "1//2", "2+", "1/0", "3*j", "2+3", "i+i", "1 2", "--2"})
        CHECK_THROWS_AS(GaussianRational::parse(text), ParseError);
}
