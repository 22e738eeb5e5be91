#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace divlie;
using testsupport::pmono;

TEST_CASE("addition: cancellation, identity, rational arithmetic") {
    Polynomial x1 = Polynomial::variable(2, 1);
    Polynomial x2 = Polynomial::variable(2, 2);
    CHECK((x1 + x2) + (-x2) == x1);
    CHECK(Polynomial(2) + x1 == x1);
    CHECK(x1.scaled(Rational(1, 2)) + x1.scaled(Rational(1, 2)) == x1);
}

TEST_CASE("multiplication: basic products and annihilator") {
    Polynomial x1 = Polynomial::variable(2, 1);
    Polynomial x2 = Polynomial::variable(2, 2);
    CHECK(x1 * x2 == pmono({1, 1}));
    Polynomial one = Polynomial::constant(2, 1);
    CHECK((x1 + one) * (x1 - one) == pmono({2, 0}) - one);
    Polynomial p = x1 * x1 + x2.scaled(Rational(3, 7));
    CHECK(p * Polynomial(2) == Polynomial(2));
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(Polynomial::variable(2, 1) + Polynomial::variable(3, 1), DimensionError);
    CHECK_THROWS_AS(Polynomial::variable(2, 1) * Polynomial::variable(3, 1), DimensionError);
}

TEST_CASE("partial derivatives") {
    CHECK(pmono({2}).partial(1) == pmono({1}, 2));
    CHECK(pmono({0, 3}).partial(1) == Polynomial(2));
    CHECK(pmono({1, 1}).partial(2) == Polynomial::variable(2, 1));
    CHECK_THROWS_AS(pmono({1, 1}).partial(3), IndexError);
    CHECK_THROWS_AS(pmono({1, 1}).partial(0), IndexError);
}

TEST_CASE("compose: substitution examples") {
    Polynomial x1 = Polynomial::variable(2, 1);
    Polynomial x2 = Polynomial::variable(2, 2);
    // x1^2 under x1 -> x1+x2
    CHECK(pmono({2, 0}).compose({x1 + x2, x2}) == pmono({2, 0}) + pmono({1, 1}, 2) + pmono({0, 2}));
    Sampler s(11);
    for (int t = 0; t < 20; ++t) {
        Polynomial p = s.polynomial(2, 4);
        CHECK(p.compose({x1, x2}) == p);
    }
    CHECK(pmono({1, 1}).compose({x2, x1}) == pmono({1, 1}));
}

TEST_CASE("hmap scales monomials by exponent plus one") {
    CHECK(Polynomial::variable(2, 1).hmap(1) == pmono({1, 0}, 2));
    for (int i = 1; i <= 2; ++i) CHECK(Polynomial::constant(2, 1).hmap(i) == Polynomial::constant(2, 1));
    CHECK(pmono({2, 1}).hmap(2) == pmono({2, 1}, 2));
}

TEST_CASE("hmap exhaustive on monomials of degree <= 6, n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (const Monomial& a : monomials_up_to(n, 6))
            for (int i = 1; i <= n; ++i)
                CHECK(Polynomial::monomial(a).hmap(i) == Polynomial::monomial(a, a.exp(i) + 1));
}

TEST_CASE("hmap is injective on random samples") {
    Sampler s(23);
    for (int t = 0; t < 50; ++t) {
        Polynomial p = s.polynomial(3, 5);
        Polynomial q = s.polynomial(3, 5);
        int i = s.pick(1, 3);
        if (p == q) continue;
        CHECK((p - q).hmap(i) != Polynomial(3));
        CHECK(p.hmap(i) != q.hmap(i));
    }
}

TEST_CASE("total degree and the zero marker") {
    CHECK(pmono({2, 1}).total_degree() == 3);
    CHECK(Polynomial::constant(2, 5).total_degree() == 0);
    CHECK_FALSE(Polynomial(2).total_degree().has_value());
}

TEST_CASE("ring axioms on random triples") {
    Sampler s(7);
    for (int t = 0; t < 40; ++t) {
        int n = s.pick(1, 3);
        Polynomial p = s.polynomial(n, 3), q = s.polynomial(n, 3), r = s.polynomial(n, 3);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
    }
}

TEST_CASE("partials commute") {
    Sampler s(13);
    for (int t = 0; t < 40; ++t) {
        int n = s.pick(2, 3);
        Polynomial p = s.polynomial(n, 5);
        int i = s.pick(1, n), j = s.pick(1, n);
        CHECK(p.partial(i).partial(j) == p.partial(j).partial(i));
    }
}

TEST_CASE("Leibniz rule for partial") {
    Sampler s(17);
    for (int t = 0; t < 40; ++t) {
        int n = s.pick(1, 3);
        Polynomial p = s.polynomial(n, 4), q = s.polynomial(n, 4);
        int i = s.pick(1, n);
        CHECK((p * q).partial(i) == p.partial(i) * q + p * q.partial(i));
    }
}

TEST_CASE("compose is an algebra homomorphism") {
    Sampler s(19);
    for (int t = 0; t < 25; ++t) {
        int n = s.pick(1, 3);
        Polynomial p = s.polynomial(n, 3), q = s.polynomial(n, 3);
        std::vector<Polynomial> images;
        for (int i = 0; i < n; ++i) images.push_back(s.polynomial(n, 2));
        CHECK((p * q).compose(images) == p.compose(images) * q.compose(images));
        CHECK((p + q).compose(images) == p.compose(images) + q.compose(images));
    }
}

TEST_CASE("display form") {
    Polynomial p = pmono({2, 1}, 3) - Polynomial::variable(2, 2).scaled(Rational(1, 2)) + Polynomial::constant(2, 4);
    CHECK(p.str() == "3*x1^2*x2 - 1/2*x2 + 4");
    CHECK(Polynomial(2).str() == "0");
}
