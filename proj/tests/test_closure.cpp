#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divlie/closure.hpp"
#include "divlie/verify.hpp"
#include "test_support.hpp"

using namespace divlie;
using testsupport::mono;

TEST_CASE("bracket closure of the sl2 triple") {
    Derivation e = Derivation::monomial(mono({1, 0}), 2);  // x1*d2
    Derivation f = Derivation::monomial(mono({0, 1}), 1);  // x2*d1
    // oracle: the three pairwise brackets by hand
    Derivation h = bracket(e, f);
    CHECK(h == Derivation::euler_diff(2, 1, 2));
    CHECK(bracket(h, e) == Rational(2) * e);
    CHECK(bracket(h, f) == Rational(-2) * f);
    ClosureResult r = bracket_closure({e, f}, 1);
    CHECK(r.space.dim() == 3);
    CHECK(r.saturated);
    for (const auto& d : {e, f, h}) CHECK(r.space.contains(d));
}

TEST_CASE("bracket closure of a single commuting element") {
    ClosureResult r = bracket_closure({Derivation::partial(2, 1)}, 5);
    CHECK(r.space.dim() == 1);
    CHECK(r.space.contains(Derivation::partial(2, 1)));
}

TEST_CASE("generators reach the truncated basis one degree down") {
    ClosureResult r = bracket_closure(minimal_generators(2), 4);
    for (const auto& b : enumerate_basis(BasisSpec{2, 3, AlgebraTag::Div0})) CHECK(r.space.contains(b));
    // everything produced is divergence-free
    for (const auto& row : r.space.rows()) CHECK(classify(row).is_zero());
}

TEST_CASE("dropping any generator loses it") {
    auto gens = minimal_generators(2);
    REQUIRE(gens.size() == 3);
    for (size_t k = 0; k < gens.size(); ++k) {
        std::vector<Derivation> rest;
        for (size_t t = 0; t < gens.size(); ++t)
            if (t != k) rest.push_back(gens[t]);
        CHECK_FALSE(bracket_closure(rest, 4).space.contains(gens[k]));
    }
}

TEST_CASE("saturation soundness") {
    Sampler s(87);
    for (int t = 0; t < 6; ++t) {
        std::vector<Derivation> gens = {s.zero_div_derivation(2, 2), s.zero_div_derivation(2, 2)};
        ClosureResult r = bracket_closure(gens, 3);
        REQUIRE(r.saturated);
        auto rows = r.space.rows();
        for (const auto& a : rows)
            for (const auto& b : rows) {
                Derivation br = bracket(a, b);
                auto deg = br.degree();
                if (deg && *deg > r.cutoff) continue;
                CHECK(r.space.contains(br));
            }
    }
}

TEST_CASE("closure grows monotonically in generators and cutoff") {
    Sampler s(91);
    for (int t = 0; t < 5; ++t) {
        std::vector<Derivation> gens = {s.zero_div_derivation(2, 2), s.zero_div_derivation(2, 2)};
        ClosureResult base = bracket_closure(gens, 3);
        std::vector<Derivation> more = gens;
        more.push_back(s.zero_div_derivation(2, 2));
        ClosureResult larger = bracket_closure(more, 3);
        for (const auto& row : base.space.rows()) CHECK(larger.space.contains(row));
        ClosureResult deeper = bracket_closure(gens, 4);
        for (const auto& row : base.space.rows()) CHECK(deeper.space.contains(row));
    }
}

TEST_CASE("ideal closure pulls in the partials") {
    BasisSpec ambient{2, 3, AlgebraTag::Div0};
    ClosureResult r = ideal_closure(Derivation::monomial(mono({0, 1}), 1), ambient, 3);
    CHECK(r.space.contains(Derivation::partial(2, 1)));
    CHECK(r.space.contains(Derivation::partial(2, 2)));

    // oracle: [d1, H1-H2] = d1 directly
    Derivation h12 = Derivation::euler_diff(2, 1, 2);
    CHECK(bracket(Derivation::partial(2, 1), h12) == Derivation::partial(2, 1));
    ClosureResult r2 = ideal_closure(h12, ambient, 3);
    CHECK(r2.space.contains(Derivation::partial(2, 1)));

    ClosureResult r3 = ideal_closure(Derivation::partial(1, 1), BasisSpec{1, 3, AlgebraTag::Div0}, 3);
    CHECK(r3.space.dim() == 1);
}

TEST_CASE("ideal closure input validation") {
    BasisSpec ambient{2, 3, AlgebraTag::Div0};
    CHECK_THROWS_AS(ideal_closure(Derivation(2), ambient, 3), ValueError);
    CHECK_THROWS_AS(ideal_closure(Derivation::euler(2, 1), ambient, 3), ValueError);
    // constant divergence is fine in the constant-divergence ambient
    ClosureResult r = ideal_closure(Derivation::euler(2, 1), BasisSpec{2, 2, AlgebraTag::DivC}, 2);
    CHECK(r.space.dim() >= 1);
}

TEST_CASE("module orbit fills out the polynomials modulo constants") {
    auto gens = enumerate_basis(BasisSpec{2, 3, AlgebraTag::Div0});
    PolySpan orbit = module_orbit(gens, Polynomial::variable(2, 1), 3);
    for (int d = 1; d <= 3; ++d)
        for (const auto& m : monomials_of_degree(2, d)) CHECK(orbit.contains(Polynomial::monomial(m)));

    PolySpan small = module_orbit({Derivation::partial(1, 1)}, Polynomial::variable(1, 1), 3);
    CHECK(small.dim() == 1);
    CHECK(small.contains(Polynomial::variable(1, 1)));
    CHECK_FALSE(small.contains(Polynomial::monomial(mono({2}))));

    PolySpan single = module_orbit({Derivation::monomial(mono({1, 0}), 2)}, Polynomial::variable(2, 2), 1);
    CHECK(single.contains(Polynomial::variable(2, 1)));
    CHECK(single.contains(Polynomial::variable(2, 2)));

    CHECK_THROWS_AS(module_orbit(gens, Polynomial::constant(2, 3), 3), ValueError);
}

TEST_CASE("centralizers of the partial and Euler spans") {
    std::vector<Derivation> partials = {Derivation::partial(2, 1), Derivation::partial(2, 2)};
    SpanSpace cent = centralizer(partials, BasisSpec{2, 3, AlgebraTag::Div0});
    CHECK(cent.dim() == 2);
    for (const auto& p : partials) CHECK(cent.contains(p));

    // centralizer of the trace-zero Euler span is the diagonal tower
    SpanSpace cent_h = centralizer({Derivation::euler_diff(2, 1, 2)}, BasisSpec{2, 4, AlgebraTag::Div0});
    CHECK(cent_h.dim() == 2);
    CHECK(cent_h.contains(Derivation::euler_diff(2, 1, 2)));
    Polynomial diag = Polynomial::monomial(mono({1, 1}));
    CHECK(cent_h.contains(diag * Derivation::euler_diff(2, 1, 2)));
}

TEST_CASE("normalizer of the diagonal tower adds the Euler line") {
    std::vector<Derivation> cn = {Derivation::euler_diff(2, 1, 2),
                                  Polynomial::monomial(mono({1, 1})) * Derivation::euler_diff(2, 1, 2)};
    SpanSpace cn_span = reduce(2, cn);
    SpanSpace norm = normalizer(cn_span, BasisSpec{2, 4, AlgebraTag::DivC});
    CHECK(norm.dim() == 3);
    for (const auto& c : cn) CHECK(norm.contains(c));
    CHECK(norm.contains(Derivation::euler(2, 1)));
    CHECK(norm.contains(Derivation::euler(2, 2)));
    CHECK_FALSE(norm.contains(Derivation::partial(2, 1)));
}

TEST_CASE("Euler span is self-centralizing in the constant-divergence algebra") {
    std::vector<Derivation> eulers = {Derivation::euler(2, 1), Derivation::euler(2, 2)};
    SpanSpace cent = centralizer(eulers, BasisSpec{2, 4, AlgebraTag::DivC});
    CHECK(cent.dim() == 2);
    for (const auto& h : eulers) CHECK(cent.contains(h));
}

TEST_CASE("derived subalgebra drops to the zero-divergence part") {
    SpanSpace derived = derived_subalgebra(BasisSpec{2, 3, AlgebraTag::DivC}, 3);
    for (const auto& b : enumerate_basis(BasisSpec{2, 2, AlgebraTag::Div0})) CHECK(derived.contains(b));
    for (const auto& row : derived.rows()) CHECK(classify(row).is_zero());

    SpanSpace tiny = derived_subalgebra(BasisSpec{1, 4, AlgebraTag::Div0}, 4);
    CHECK(tiny.dim() == 0);
}

TEST_CASE("verification reports carry per-check outcomes") {
    Report rep = verify_theorem("derived", 2, 3, 0);
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() >= 2);
    CHECK_THROWS_AS(verify_theorem("no-such-theorem", 2, 3, 0), ValueError);
    Report failing{"demo", {CheckResult{"a", true, ""}, CheckResult{"b", false, "bad"}}};
    CHECK_FALSE(failing.all_pass());
}
