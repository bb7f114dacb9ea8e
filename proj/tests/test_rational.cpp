#include <doctest.h>

#include "pkahler/rational.hpp"
#include "support.hpp"

using namespace pkahler;

TEST_CASE("gaussian rational arithmetic is exact and canonical") {
    GaussianRational a(mpq_class(1, 2), mpq_class(-3, 4));
    GaussianRational b(mpq_class(2, 3), mpq_class(5, 6));

    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK((a / b) * b == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());

    // canonical form: lowest terms, positive denominator
    GaussianRational c(mpq_class(2, 4), mpq_class(0));
    CHECK(c.re.get_num() == 1);
    CHECK(c.re.get_den() == 2);
}

TEST_CASE("field axioms hold on random gaussian rationals") {
    testsupport::Rng rng(20240811);
    for (int t = 0; t < 200; ++t) {
        GaussianRational a = rng.gaussian_rational();
        GaussianRational b = rng.gaussian_rational();
        GaussianRational c = rng.gaussian_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("imaginary powers and sigma factors") {
    CHECK(imaginary_power(0) == GaussianRational(1));
    CHECK(imaginary_power(1) == GaussianRational::unit_imaginary());
    CHECK(imaginary_power(2) == GaussianRational(-1));
    CHECK(imaginary_power(-1) == GaussianRational(mpq_class(0), mpq_class(-1)));

    // sigma_1 = i/2
    GaussianRational s1 = sigma_factor(1);
    CHECK(s1 == GaussianRational(mpq_class(0), mpq_class(1, 2)));

    // sigma_p is real exactly when p is even
    for (int p = 0; p <= 8; ++p) {
        CAPTURE(p);
        CHECK(sigma_factor(p).is_real() == (p % 2 == 0));
        CHECK_FALSE(sigma_factor(p).is_zero());
    }
}

TEST_CASE("fraction strings round-trip bit-exactly") {
    testsupport::Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        mpq_class q = rng.rational(1000, 997);
        CHECK(parse_fraction(to_fraction_string(q)) == q);
    }
    CHECK(parse_fraction("-7/3") == mpq_class(-7, 3));
    CHECK(parse_fraction("5") == mpq_class(5));
    CHECK(to_fraction_string(mpq_class(5)) == "5/1");
    CHECK_THROWS(parse_fraction("1.5"));
}

TEST_CASE("continued-fraction rationalization") {
    CHECK(rationalize(0.5) == mpq_class(1, 2));
    CHECK(rationalize(-0.25) == mpq_class(-1, 4));
    CHECK(rationalize(0.0) == 0);

    // approximation error is small for bounded denominators
    double x = 0.73904612;
    mpq_class q = rationalize(x, 100000);
    CHECK(std::abs(q.get_d() - x) < 1e-9);
    CHECK(q.get_den() <= 100000);
}
