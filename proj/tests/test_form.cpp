#include <doctest.h>

#include "pkahler/form.hpp"
#include "pkahler/form_io.hpp"
#include "support.hpp"

using namespace pkahler;
using testsupport::Rng;
using testsupport::to_symbols;

namespace {

ExactForm phi(int n, int k) { return ExactForm::coframe(n, k); }
ExactForm phibar(int n, int k) { return ExactForm::coframe_bar(n, k); }

}  // namespace

TEST_CASE("wedge basics") {
    int n = 4;
    CHECK(wedge(phi(n, 1), phi(n, 1)).is_zero());

    ExactForm w = wedge(wedge(phi(n, 1), phi(n, 2)), wedge(phi(n, 3), phi(n, 4)));
    CHECK(w.coefficient({1, 2, 3, 4}, {}) == GaussianRational(1));

    CHECK_THROWS(wedge(phi(3, 1), phi(4, 1)));
}

TEST_CASE("sigma_3 phi_123 ^ conj(phi_123) is the volume form in n=3") {
    int n = 3;
    ExactForm eta = wedge(wedge(phi(n, 1), phi(n, 2)), phi(n, 3));
    ExactForm vol = sigma_factor(3) * wedge(eta, conjugate(eta));
    CHECK(vol == volume_form<GaussianRational>(n));
}

TEST_CASE("wedge agrees with the symbol-expansion oracle on random forms") {
    Rng rng(101);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(rng.gen() % 4);  // up to n=5
        int p1 = static_cast<int>(rng.gen() % (n + 1));
        int q1 = static_cast<int>(rng.gen() % (n + 1));
        int p2 = static_cast<int>(rng.gen() % (n + 1));
        int q2 = static_cast<int>(rng.gen() % (n + 1));
        ExactForm a = rng.form(n, p1, q1);
        ExactForm b = rng.form(n, p2, q2);
        auto lhs = to_symbols(wedge(a, b));
        auto rhs = to_symbols(a) * to_symbols(b);
        CHECK(lhs.terms == rhs.terms);
    }
}

TEST_CASE("wedge is associative and graded-anticommutative on homogeneous forms") {
    Rng rng(202);
    for (int t = 0; t < 40; ++t) {
        int n = 3 + static_cast<int>(rng.gen() % 3);  // 3..5
        int p1 = static_cast<int>(rng.gen() % 3), q1 = static_cast<int>(rng.gen() % 2);
        int p2 = static_cast<int>(rng.gen() % 2), q2 = static_cast<int>(rng.gen() % 3);
        int p3 = static_cast<int>(rng.gen() % 2), q3 = static_cast<int>(rng.gen() % 2);
        ExactForm a = rng.form(n, p1, q1);
        ExactForm b = rng.form(n, p2, q2);
        ExactForm c = rng.form(n, p3, q3);

        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));

        int da = p1 + q1, db = p2 + q2;
        ExactForm ba = wedge(b, a);
        if ((da * db) % 2 == 1) ba = -ba;
        CHECK(wedge(a, b) == ba);
    }
}

TEST_CASE("conjugate: antilinear, swaps bidegrees, involution") {
    int n = 3;
    CHECK(conjugate(phi(n, 1)) == phibar(n, 1));

    // conj(i phi_1 ^ conj(phi_2)) = -i phi_2 ^ conj(phi_1)
    ExactForm f = GaussianRational::unit_imaginary() * wedge(phi(n, 1), phibar(n, 2));
    ExactForm expected =
        GaussianRational(mpq_class(0), mpq_class(-1)) * wedge(phi(n, 2), phibar(n, 1));
    CHECK(conjugate(f) == expected);

    Rng rng(303);
    for (int t = 0; t < 40; ++t) {
        ExactForm a = rng.form(3, static_cast<int>(rng.gen() % 3), static_cast<int>(rng.gen() % 3));
        CHECK(conjugate(conjugate(a)) == a);
    }
}

TEST_CASE("conjugate(dV) = dV, via explicit product expansion") {
    for (int n = 1; n <= 3; ++n) {
        // build dV as the product of the sigma_1 phi_j ^ conj(phi_j) factors
        ExactForm prod = ExactForm::constant(n, GaussianRational(1));
        for (int j = 1; j <= n; ++j)
            prod = wedge(prod, sigma_factor(1) * wedge(phi(n, j), phibar(n, j)));
        CHECK(prod == volume_form<GaussianRational>(n));
        CHECK(conjugate(prod) == prod);
        CHECK(conjugate(volume_form<GaussianRational>(n)) == volume_form<GaussianRational>(n));
    }
}

TEST_CASE("bidegree projection partitions the grading") {
    int n = 3;
    ExactForm f = wedge(phi(n, 1), phibar(n, 2)) + wedge(phi(n, 1), phi(n, 2));
    CHECK(bidegree_component(f, 1, 1) == wedge(phi(n, 1), phibar(n, 2)));
    CHECK(bidegree_component(volume_form<GaussianRational>(n), n, n) ==
          volume_form<GaussianRational>(n));

    Rng rng(404);
    for (int t = 0; t < 20; ++t) {
        ExactForm a = rng.form(3, 1, 1) + rng.form(3, 2, 0) + rng.form(3, 0, 2);
        ExactForm sum(3);
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q) sum = sum + bidegree_component(a, p, q);
        CHECK(sum == a);
    }
}

TEST_CASE("pair_top: orthonormal-type pattern of the sigma_p phi_I basis") {
    for (int n = 2; n <= 4; ++n) {
        for (int p = 1; p < n; ++p) {
            int k = n - p;
            for (const auto& I : mi::all_subsets(n, p)) {
                ExactForm a = sigma_factor(p) * ExactForm::monomial(n, I, I, GaussianRational(1));
                for (const auto& J : mi::all_subsets(n, k)) {
                    ExactForm b = sigma_factor(k) * ExactForm::monomial(n, J, J, GaussianRational(1));
                    GaussianRational v = pair_top(a, b);
                    if (J == mi::complement(I, n)) {
                        CHECK(v == GaussianRational(1));
                    } else {
                        CHECK(v.is_zero());
                    }
                }
            }
        }
    }
}

TEST_CASE("pair_top edge cases") {
    int n = 2;
    CHECK(pair_top(volume_form<GaussianRational>(n), ExactForm::constant(n, GaussianRational(1))) ==
          GaussianRational(1));

    ExactForm a = sigma_factor(1) * wedge(phi(n, 1), phibar(n, 1));
    CHECK(pair_top(a, a).is_zero());

    CHECK_THROWS(pair_top(a, ExactForm::constant(n, GaussianRational(1))));
}

TEST_CASE("pair_top of real complementary forms is real") {
    Rng rng(505);
    int n = 3;
    for (int t = 0; t < 30; ++t) {
        ExactForm a = rng.form(n, 1, 1);
        a = a + conjugate(a);
        ExactForm b = rng.form(n, 2, 2);
        b = b + conjugate(b);
        CHECK(pair_top(a, b).is_real());
    }
}

TEST_CASE("serialization round-trips bit-exactly") {
    Rng rng(606);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + static_cast<int>(rng.gen() % 3);
        ExactForm a = rng.form(n, static_cast<int>(rng.gen() % 3), static_cast<int>(rng.gen() % 3)) +
                      rng.form(n, 1, 0);
        std::string s = form_to_string(a);
        CHECK(form_from_string(s) == a);
        CHECK(form_to_string(form_from_string(s)) == s);
    }
}

TEST_CASE("reality test matches conjugation fixed points") {
    int n = 2;
    ExactForm real_f = sigma_factor(1) * wedge(phi(n, 1), phibar(n, 1));
    CHECK(is_real(real_f));
    ExactForm not_real = wedge(phi(n, 1), phibar(n, 2));
    CHECK_FALSE(is_real(not_real));
}
