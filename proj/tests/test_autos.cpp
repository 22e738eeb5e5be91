#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divlie/autos.hpp"
#include "test_support.hpp"

using namespace divlie;
using testsupport::mono;
using testsupport::pmono;

namespace {

Automorphism shear(int n, int i, const Polynomial& f) {
    return Automorphism(n, {ElementaryMap::triangular(n, i, f)});
}

std::vector<std::vector<Rational>> eye(int n) {
    std::vector<std::vector<Rational>> A(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) A[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return A;
}

}  // namespace

TEST_CASE("forward and inverse images of elementary maps") {
    Automorphism sigma = shear(2, 1, pmono({0, 2}));
    auto fwd = sigma.forward_images();
    CHECK(fwd[0] == Polynomial::variable(2, 1) + pmono({0, 2}));
    CHECK(fwd[1] == Polynomial::variable(2, 2));
    auto inv = sigma.inverse_images();
    CHECK(inv[0] == Polynomial::variable(2, 1) - pmono({0, 2}));

    Automorphism translate(2, {ElementaryMap::affine(eye(2), {Rational(3), Rational(-1, 2)})});
    auto timg = translate.forward_images();
    CHECK(timg[0] == Polynomial::variable(2, 1) + Polynomial::constant(2, 3));
    CHECK(timg[1] == Polynomial::variable(2, 2) - Polynomial::constant(2, Rational(1, 2)));

    Automorphism id = Automorphism::identity(2);
    CHECK(id.forward_images()[0] == Polynomial::variable(2, 1));
    CHECK(id.forward_images()[1] == Polynomial::variable(2, 2));
}

TEST_CASE("forward and inverse substitutions cancel") {
    Sampler s(51);
    for (int t = 0; t < 25; ++t) {
        int n = s.pick(1, 3);
        Automorphism sigma = s.automorphism(n, 4, 2);
        auto fwd = sigma.forward_images();
        auto inv = sigma.inverse_images();
        for (int i = 0; i < n; ++i) {
            CHECK(fwd[static_cast<size_t>(i)].compose(inv) == Polynomial::variable(n, i + 1));
            CHECK(inv[static_cast<size_t>(i)].compose(fwd) == Polynomial::variable(n, i + 1));
        }
    }
}

TEST_CASE("triangular map invariants are enforced") {
    CHECK_THROWS_AS(ElementaryMap::triangular(2, 1, Polynomial::variable(2, 1)), ValueError);
    std::vector<std::vector<Rational>> singular = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_THROWS_AS(ElementaryMap::affine(singular, {Rational(0), Rational(0)}), ValueError);
}

TEST_CASE("jacobian entries follow the gradient-column convention") {
    Automorphism sigma = shear(2, 1, pmono({0, 2}));
    PolyMatrix J = jacobian(sigma);
    // oracle: entry (i,j) is the i-th partial of the j-th forward image
    auto fwd = sigma.forward_images();
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            CHECK(J[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] ==
                  fwd[static_cast<size_t>(j - 1)].partial(i));
    CHECK(J[0][0] == Polynomial::constant(2, 1));
    CHECK(J[0][1] == Polynomial(2));
    CHECK(J[1][0] == pmono({0, 1}, 2));
    CHECK(J[1][1] == Polynomial::constant(2, 1));

    PolyMatrix I = jacobian(Automorphism::identity(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(I[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                  Polynomial::constant(3, i == j ? 1 : 0));
}

TEST_CASE("jacobian determinant") {
    CHECK(jacobian_det(shear(2, 1, pmono({0, 3}))) == Polynomial::constant(2, 1));
    std::vector<std::vector<Rational>> A = {{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
    Automorphism aff(2, {ElementaryMap::affine(A, {Rational(0), Rational(0)})});
    CHECK(jacobian_det(aff) == Polynomial::constant(2, 1));  // det [[2,1],[1,1]] = 1
    std::vector<std::vector<Rational>> B = {{Rational(3), Rational(0)}, {Rational(0), Rational(1, 2)}};
    Automorphism aff2(2, {ElementaryMap::affine(B, {Rational(1), Rational(2)})});
    CHECK(jacobian_det(aff2) == Polynomial::constant(2, Rational(3, 2)));

    Sampler s(53);
    for (int t = 0; t < 15; ++t) {
        int n = s.pick(2, 3);
        Automorphism sigma = s.automorphism(n, 3, 2);
        Polynomial d = jacobian_det(sigma);
        CHECK(d.is_constant());
        CHECK_FALSE(d.is_zero());
    }
}

TEST_CASE("conjugation: shear moves a partial") {
    Automorphism sigma = shear(2, 1, pmono({0, 2}));
    Derivation moved = conjugate(sigma, Derivation::partial(2, 2));
    CHECK(moved == Derivation::partial(2, 2) - Derivation::monomial(mono({0, 1}), 1, 2));
    // oracle: moved partials act as duals of the moved variables
    auto fwd = sigma.forward_images();
    for (int i = 1; i <= 2; ++i) {
        Derivation di = conjugate(sigma, Derivation::partial(2, i));
        for (int j = 1; j <= 2; ++j)
            CHECK(di.apply(fwd[static_cast<size_t>(j - 1)]) == Polynomial::constant(2, i == j ? 1 : 0));
    }
}

TEST_CASE("conjugation by identity and shifts") {
    Sampler s(59);
    for (int t = 0; t < 10; ++t) {
        Derivation d = s.derivation(2, 3);
        CHECK(conjugate(Automorphism::identity(2), d) == d);
    }
    Automorphism shift(2, {ElementaryMap::affine(eye(2), {Rational(5), Rational(-2)})});
    CHECK(conjugate(shift, Derivation::partial(2, 1)) == Derivation::partial(2, 1));
    CHECK(conjugate(shift, Derivation::partial(2, 2)) == Derivation::partial(2, 2));
}

TEST_CASE("substitution route and jacobian route agree") {
    Sampler s(61);
    for (int t = 0; t < 25; ++t) {
        int n = s.pick(1, 3);
        Automorphism sigma = s.automorphism(n, 4, 3);
        Derivation d = s.derivation(n, 3);
        CHECK(conjugate(sigma, d) == conjugate_via_jacobian(sigma, d));
    }
}

TEST_CASE("conjugation is a Lie algebra map") {
    Sampler s(67);
    for (int t = 0; t < 15; ++t) {
        int n = s.pick(2, 3);
        Automorphism sigma = s.automorphism(n, 3, 2);
        Derivation d = s.derivation(n, 2), e = s.derivation(n, 2);
        CHECK(conjugate(sigma, bracket(d, e)) == bracket(conjugate(sigma, d), conjugate(sigma, e)));
        Rational k = s.rational();
        CHECK(conjugate(sigma, k * d) == k * conjugate(sigma, d));
    }
}

TEST_CASE("jacobian chain rule") {
    Sampler s(71);
    for (int t = 0; t < 15; ++t) {
        int n = s.pick(2, 3);
        Automorphism sigma = s.automorphism(n, 2, 2), tau = s.automorphism(n, 2, 2);
        PolyMatrix lhs = jacobian(sigma * tau);
        PolyMatrix js = jacobian(sigma), jt = jacobian(tau);
        auto fwd = sigma.forward_images();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Polynomial sum(n);
                for (int k = 0; k < n; ++k)
                    sum += js[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                           jt[static_cast<size_t>(k)][static_cast<size_t>(j)].compose(fwd);
                CHECK(lhs[static_cast<size_t>(i)][static_cast<size_t>(j)] == sum);
            }
        // multiplicative twisted rule for the determinants
        Polynomial lhs_det = jacobian_det(sigma * tau);
        CHECK(lhs_det == jacobian_det(sigma) * jacobian_det(tau).compose(fwd));
    }
}

TEST_CASE("divergence equivariance") {
    Sampler s(73);
    for (int t = 0; t < 25; ++t) {
        int n = s.pick(1, 3);
        Automorphism sigma = s.automorphism(n, 3, 3);
        Derivation d = s.derivation(n, 3);
        CHECK(check_div_equivariance(sigma, d));
        // the Euler element keeps divergence 1 on both sides
        CHECK(conjugate(sigma, Derivation::euler(n, 1)).divergence() ==
              Derivation::euler(n, 1).divergence().compose(sigma.forward_images()));
    }
    CHECK(check_div_equivariance(Automorphism::identity(2), Derivation::euler(2, 1)));
}

TEST_CASE("divergence class survives conjugation") {
    Sampler s(79);
    for (int t = 0; t < 20; ++t) {
        int n = s.pick(2, 3);
        Automorphism sigma = s.automorphism(n, 3, 2);
        Derivation zd = s.zero_div_derivation(n, 3);
        CHECK(classify(conjugate(sigma, zd)).is_zero());
        Rational c = s.rational();
        Derivation constant_div = zd + c * Derivation::euler(n, 1);
        DivClass before = classify(constant_div), after = classify(conjugate(sigma, constant_div));
        CHECK(before.kind == after.kind);
        if (before.kind == DivClass::Kind::Constant) CHECK(before.value == after.value);
    }
}

TEST_CASE("divergence interacts with determinants of arbitrary tuples") {
    // d(det J(a_1..a_n)) = -det J(a_1..a_n) * div(d) + sum_i det J(a_1,..,d(a_i),..,a_n)
    Sampler s(89);
    for (int t = 0; t < 20; ++t) {
        int n = s.pick(1, 3);
        Derivation d = s.derivation(n, 2, 2);
        std::vector<Polynomial> tuple;
        for (int i = 0; i < n; ++i) tuple.push_back(s.polynomial(n, 2, 3));
        Polynomial jac_det = det(jacobian(tuple));
        Polynomial lhs = d.apply(jac_det);
        Polynomial rhs = -(jac_det * d.divergence());
        for (int i = 0; i < n; ++i) {
            std::vector<Polynomial> replaced = tuple;
            replaced[static_cast<size_t>(i)] = d.apply(tuple[static_cast<size_t>(i)]);
            rhs += det(jacobian(replaced));
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("moved partials are divergence-free with vanishing inverse-jacobian row sums") {
    Sampler s(83);
    for (int t = 0; t < 15; ++t) {
        int n = s.pick(2, 3);
        Automorphism sigma = s.automorphism(n, 3, 2);
        for (int i = 1; i <= n; ++i)
            CHECK(conjugate(sigma, Derivation::partial(n, i)).divergence() == Polynomial(n));
        PolyMatrix J = jacobian(sigma);
        Polynomial jd = det(J);
        PolyMatrix adj = adjugate(J);
        Rational scale = Rational(1) / jd.constant_term();
        for (int i = 0; i < n; ++i) {
            Polynomial sum(n);
            for (int j = 1; j <= n; ++j)
                sum += adj[static_cast<size_t>(i)][static_cast<size_t>(j - 1)].scaled(scale).partial(j);
            CHECK(sum == Polynomial(n));
        }
    }
}
