#include "divlie/verify.hpp"

#include "divlie/autos.hpp"
#include "divlie/closure.hpp"
#include "divlie/identities.hpp"
#include "divlie/sampling.hpp"

namespace divlie {

namespace {

void check(Report& rep, const std::string& name, bool ok, const std::string& witness = "") {
    rep.checks.push_back(CheckResult{name, ok, ok ? "" : witness});
}

// both-ways containment between a span and a list of vectors
bool spans_match(const SpanSpace& space, const std::vector<Derivation>& vecs, std::string& witness) {
    SpanSpace other = reduce(space.n(), vecs);
    if (space.dim() != other.dim()) {
        witness = "dims differ: " + std::to_string(space.dim()) + " vs " + std::to_string(other.dim());
        return false;
    }
    for (const auto& v : vecs)
        if (!space.contains(v)) {
            witness = "missing " + v.str();
            return false;
        }
    for (const auto& r : space.rows())
        if (!other.contains(r)) {
            witness = "extra " + r.str();
            return false;
        }
    return true;
}

bool covers(const SpanSpace& space, const std::vector<Derivation>& target, std::string& witness) {
    for (const auto& t : target)
        if (!space.contains(t)) {
            witness = "missing " + t.str();
            return false;
        }
    return true;
}

/// C_n truncated: the diagonal-monomial multiples of the Euler differences
/// with coefficient degree <= cutoff.
std::vector<Derivation> cartan_truncation(int n, int cutoff) {
    std::vector<Derivation> out;
    for (int m = 0; m * n + 1 <= cutoff; ++m) {
        Polynomial diag = Polynomial::monomial(Monomial(std::vector<int>(static_cast<size_t>(n), m)));
        for (int i = 1; i <= n - 1; ++i) out.push_back(diag * Derivation::euler_diff(n, i, i + 1));
    }
    return out;
}

Report run_basis_lemma(int n, int cutoff) {
    Report rep{"basis-lemma", {}};
    for (int D = 0; D <= cutoff; ++D) {
        auto basis = enumerate_basis(BasisSpec{n, D, AlgebraTag::Div0});
        SpanSpace span = reduce(n, basis);
        check(rep, "independent D=" + std::to_string(D), span.dim() == basis.size(),
              std::to_string(span.dim()) + " of " + std::to_string(basis.size()));
        SpanSpace oracle = divkernel_oracle(n, D);
        check(rep, "kernel-dim D=" + std::to_string(D), span.dim() == oracle.dim(),
              std::to_string(span.dim()) + " vs oracle " + std::to_string(oracle.dim()));
        std::string w;
        bool both = covers(oracle, basis, w) && covers(span, oracle.rows(), w);
        check(rep, "mutual-containment D=" + std::to_string(D), both, w);
        auto basis_c = enumerate_basis(BasisSpec{n, D, AlgebraTag::DivC});
        SpanSpace span_c = reduce(n, basis_c);
        check(rep, "constant-div-extra-dim D=" + std::to_string(D), span_c.dim() == span.dim() + 1,
              std::to_string(span_c.dim()) + " vs " + std::to_string(span.dim()) + "+1");
        std::string offender;
        for (const auto& b : basis)
            if (!classify(b).is_zero()) {
                offender = b.str();
                break;
            }
        check(rep, "divergence-free D=" + std::to_string(D), offender.empty(), offender);
    }
    return rep;
}

Report run_gen_div0(int n, int cutoff) {
    Report rep{"gen-div0", {}};
    if (n < 2) throw ValueError("generation checks need n >= 2");
    if (cutoff < 1) throw ValueError("generation checks need cutoff >= 1");
    ClosureResult closure = bracket_closure(minimal_generators(n), cutoff);
    check(rep, "saturated", closure.saturated, "");
    std::string w;
    bool ok = covers(closure.space, enumerate_basis(BasisSpec{n, cutoff - 1, AlgebraTag::Div0}), w);
    check(rep, "closure-covers-basis", ok, w);
    for (const auto& r : closure.space.rows())
        if (!classify(r).is_zero()) {
            check(rep, "closure-divergence-free", false, r.str());
            return rep;
        }
    check(rep, "closure-divergence-free", true, "");
    return rep;
}

Report run_gen_divc(int n, int cutoff) {
    Report rep{"gen-divc", {}};
    if (n < 2) throw ValueError("generation checks need n >= 2");
    if (cutoff < 1) throw ValueError("generation checks need cutoff >= 1");
    std::vector<Derivation> gens = minimal_generators(n);
    gens.push_back(Derivation::euler(n, 1));
    ClosureResult closure = bracket_closure(gens, cutoff);
    std::string w;
    bool ok = covers(closure.space, enumerate_basis(BasisSpec{n, cutoff - 1, AlgebraTag::DivC}), w);
    check(rep, "closure-covers-basis", ok, w);
    return rep;
}

Report run_minimality(int n, int cutoff) {
    Report rep{"minimality", {}};
    if (n < 2) throw ValueError("minimality checks need n >= 2");
    std::vector<Derivation> gens = minimal_generators(n);
    for (size_t k = 0; k < gens.size(); ++k) {
        std::vector<Derivation> rest;
        for (size_t t = 0; t < gens.size(); ++t)
            if (t != k) rest.push_back(gens[t]);
        ClosureResult closure = bracket_closure(rest, cutoff);
        check(rep, "dropping " + gens[k].str() + " loses it", !closure.space.contains(gens[k]),
              "still reachable from the rest");
    }
    // the Euler element cannot come from the divergence-free generators
    ClosureResult zero_div_closure = bracket_closure(minimal_generators(n), cutoff);
    check(rep, "dropping x1*d1 loses it", !zero_div_closure.space.contains(Derivation::euler(n, 1)),
          "Euler element reachable without it");
    return rep;
}

Report run_simplicity(int n, int cutoff, uint64_t seed) {
    Report rep{"simplicity", {}};
    if (n < 2) throw ValueError("simplicity checks need n >= 2");
    BasisSpec ambient{n, cutoff, AlgebraTag::Div0};
    std::vector<Derivation> partials;
    for (int i = 1; i <= n; ++i) partials.push_back(Derivation::partial(n, i));
    auto contains_all_partials = [&](const Derivation& a, const std::string& label) {
        ClosureResult ideal = ideal_closure(a, ambient, cutoff);
        for (const auto& p : partials)
            if (!ideal.space.contains(p)) {
                check(rep, label, false, "ideal of " + a.str() + " misses " + p.str());
                return;
            }
        check(rep, label, true, "");
    };
    int low_degree = std::min(2, cutoff);
    auto elements = enumerate_basis(BasisSpec{n, low_degree, AlgebraTag::Div0});
    for (const auto& e : elements) contains_all_partials(e, "ideal of basis element " + e.str());
    Sampler sampler(seed);
    for (int t = 0; t < 20; ++t) {
        Derivation d = sampler.zero_div_derivation(n, low_degree);
        while (d.is_zero()) d = sampler.zero_div_derivation(n, low_degree);
        contains_all_partials(d, "ideal of random element " + std::to_string(t));
    }
    return rep;
}

Report run_derived(int n, int cutoff) {
    Report rep{"derived", {}};
    if (cutoff < 1) throw ValueError("derived checks need cutoff >= 1");
    SpanSpace derived = derived_subalgebra(BasisSpec{n, cutoff, AlgebraTag::DivC}, cutoff);
    if (n >= 2) {
        std::string w;
        bool ok = covers(derived, enumerate_basis(BasisSpec{n, cutoff - 1, AlgebraTag::Div0}), w);
        check(rep, "derived-covers-zero-div-basis", ok, w);
    } else {
        // n=1: the derived algebra is exactly the line of d_1
        check(rep, "derived-is-partial-line", derived.dim() == 1 && derived.contains(Derivation::partial(1, 1)),
              "dim " + std::to_string(derived.dim()));
    }
    for (const auto& r : derived.rows())
        if (!classify(r).is_zero()) {
            check(rep, "derived-divergence-free", false, r.str());
            return rep;
        }
    check(rep, "derived-divergence-free", true, "");
    return rep;
}

Report run_cartan(int n, int cutoff) {
    Report rep{"cartan", {}};
    if (n < 2) throw ValueError("cartan checks need n >= 2");
    std::string w;

    std::vector<Derivation> partials;
    for (int i = 1; i <= n; ++i) partials.push_back(Derivation::partial(n, i));
    SpanSpace cent_partials = centralizer(partials, BasisSpec{n, cutoff, AlgebraTag::Div0});
    check(rep, "centralizer-of-partials", spans_match(cent_partials, partials, w), w);

    std::vector<Derivation> euler_diffs;
    for (int i = 1; i <= n - 1; ++i) euler_diffs.push_back(Derivation::euler_diff(n, i, i + 1));
    SpanSpace cent_h = centralizer(euler_diffs, BasisSpec{n, cutoff, AlgebraTag::Div0});
    std::vector<Derivation> cn = cartan_truncation(n, cutoff);
    check(rep, "centralizer-of-euler-diffs", spans_match(cent_h, cn, w), w);

    SpanSpace cn_span = reduce(n, cn);
    SpanSpace norm = normalizer(cn_span, BasisSpec{n, cutoff, AlgebraTag::DivC});
    std::vector<Derivation> cn_plus_h = cn;
    cn_plus_h.push_back(Derivation::euler(n, 1));
    check(rep, "normalizer-adds-euler-span", spans_match(norm, cn_plus_h, w), w);

    std::vector<Derivation> eulers;
    for (int i = 1; i <= n; ++i) eulers.push_back(Derivation::euler(n, i));
    SpanSpace cent_eulers = centralizer(eulers, BasisSpec{n, cutoff, AlgebraTag::DivC});
    check(rep, "euler-span-self-centralizing", spans_match(cent_eulers, eulers, w), w);
    return rep;
}

Report run_equivariance(int n, int cutoff, uint64_t seed) {
    Report rep{"equivariance", {}};
    Sampler sampler(seed);
    const int trials = 200;
    const int max_word = 4, max_el_degree = 3, max_d_degree = 3;
    const int max_image_degree = 20;  // keeps the tail of composite degrees tractable
    bool div_ok = true, tag_ok = true, routes_ok = true, chain_ok = true, det_ok = true;
    bool dual_ok = true, divfree_ok = true, rowsum_ok = true, hom_ok = true, euler_ok = true;
    std::string witness;
    auto sample_auto = [&]() {
        for (int attempt = 0; attempt < 100; ++attempt) {
            Automorphism sigma = sampler.automorphism(n, max_word, max_el_degree);
            int deg = 0;
            for (const auto& img : sigma.forward_images()) deg = std::max(deg, img.total_degree().value_or(0));
            if (deg <= max_image_degree) return sigma;
        }
        return Automorphism::identity(n);
    };
    for (int t = 0; t < trials; ++t) {
        Automorphism sigma = sample_auto();
        Derivation d = sampler.derivation(n, max_d_degree);
        if (t % 3 == 1) d = sampler.zero_div_derivation(n, max_d_degree);
        if (t % 3 == 2) d = sampler.zero_div_derivation(n, max_d_degree) + sampler.rational() * Derivation::euler(n, 1);

        if (div_ok && !check_div_equivariance(sigma, d)) {
            div_ok = false;
            witness = "trial " + std::to_string(t);
        }
        Derivation moved = conjugate(sigma, d);
        DivClass before = classify(d), after = classify(moved);
        if (tag_ok && (before.kind != after.kind ||
                       (before.kind == DivClass::Kind::Constant && before.value != after.value)))
            tag_ok = false;
        if (routes_ok && moved != conjugate_via_jacobian(sigma, d)) routes_ok = false;

        Automorphism tau = sample_auto();
        PolyMatrix lhs = jacobian(sigma * tau);
        PolyMatrix js = jacobian(sigma), jt = jacobian(tau);
        auto fwd = sigma.forward_images();
        bool entry_ok = true;
        for (int i = 0; i < n && entry_ok; ++i)
            for (int j = 0; j < n && entry_ok; ++j) {
                Polynomial sum(n);
                for (int k = 0; k < n; ++k)
                    sum += js[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                           jt[static_cast<size_t>(k)][static_cast<size_t>(j)].compose(fwd);
                if (lhs[static_cast<size_t>(i)][static_cast<size_t>(j)] != sum) entry_ok = false;
            }
        if (chain_ok && !entry_ok) chain_ok = false;

        Polynomial jd = det(js);
        if (det_ok && (!jd.is_constant() || jd.is_zero())) det_ok = false;

        // moved partials stay dual to the moved variables and divergence-free
        std::vector<Derivation> moved_partials;
        for (int i = 1; i <= n; ++i) moved_partials.push_back(conjugate(sigma, Derivation::partial(n, i)));
        for (int i = 1; i <= n && dual_ok; ++i)
            for (int j = 1; j <= n && dual_ok; ++j) {
                Polynomial val = moved_partials[static_cast<size_t>(i - 1)].apply(fwd[static_cast<size_t>(j - 1)]);
                if (val != Polynomial::constant(n, i == j ? 1 : 0)) dual_ok = false;
            }
        for (int i = 1; i <= n && divfree_ok; ++i)
            if (!moved_partials[static_cast<size_t>(i - 1)].divergence().is_zero()) divfree_ok = false;

        // row sums of the inverse Jacobian under the matching partials vanish;
        // the inverse only exists through a nonzero constant determinant
        if (rowsum_ok && jd.is_constant() && !jd.is_zero()) {
            Rational scale = Rational(1) / jd.constant_term();
            PolyMatrix jinv = adjugate(js);
            for (int i = 0; i < n && rowsum_ok; ++i) {
                Polynomial sum(n);
                for (int j = 1; j <= n; ++j)
                    sum += jinv[static_cast<size_t>(i)][static_cast<size_t>(j - 1)].scaled(scale).partial(j);
                if (!sum.is_zero()) rowsum_ok = false;
            }
        }

        Derivation e = sampler.derivation(n, 2, 2);
        if (hom_ok && conjugate(sigma, bracket(d, e)) != bracket(moved, conjugate(sigma, e))) hom_ok = false;
        for (int i = 1; i <= n && euler_ok; ++i) {
            Derivation diff = conjugate(sigma, Derivation::euler(n, i)) - Derivation::euler(n, i);
            if (!diff.divergence().is_zero()) euler_ok = false;
        }
    }
    check(rep, "divergence-equivariance", div_ok, witness);
    check(rep, "class-preserved", tag_ok, "");
    check(rep, "conjugation-routes-agree", routes_ok, "");
    check(rep, "jacobian-chain-rule", chain_ok, "");
    check(rep, "jacobian-det-constant", det_ok, "");
    check(rep, "moved-partials-dual", dual_ok, "");
    check(rep, "moved-partials-divergence-free", divfree_ok, "");
    check(rep, "inverse-jacobian-row-sums", rowsum_ok, "");
    check(rep, "conjugation-is-lie-hom", hom_ok, "");
    check(rep, "euler-shift-divergence-free", euler_ok, "");
    (void)cutoff;
    return rep;
}

Report run_module_simple(int n, int cutoff) {
    Report rep{"module-simple", {}};
    if (n >= 2) {
        auto gens = enumerate_basis(BasisSpec{n, cutoff, AlgebraTag::Div0});
        PolySpan orbit = module_orbit(gens, Polynomial::variable(n, 1), cutoff);
        bool ok = true;
        std::string w;
        for (int d = 1; d <= cutoff && ok; ++d)
            for (const auto& m : monomials_of_degree(n, d))
                if (!orbit.contains(Polynomial::monomial(m))) {
                    ok = false;
                    w = "orbit misses " + m.str();
                    break;
                }
        check(rep, "orbit-reaches-all-monomials", ok, w);
    }
    // one-variable counterexample: the orbit of x1 under d_1 stays one line
    PolySpan small = module_orbit({Derivation::partial(1, 1)}, Polynomial::variable(1, 1), cutoff);
    size_t full = static_cast<size_t>(cutoff);  // monomials x1..x1^cutoff mod constants
    check(rep, "one-variable-orbit-strictly-smaller", small.dim() == 1 && small.dim() < full,
          "dim " + std::to_string(small.dim()));
    return rep;
}

Report run_identities(int n, int cutoff) {
    Report rep{"identities", {}};
    rep.checks = check_all_identities(n, cutoff);
    return rep;
}

}  // namespace

std::vector<std::string> theorem_tags() {
    return {"basis-lemma", "gen-div0", "gen-divc", "minimality", "simplicity",
            "derived",     "cartan",   "equivariance", "module-simple", "identities"};
}

std::vector<Derivation> minimal_generators(int n) {
    if (n < 2) throw ValueError("minimal generators need n >= 2");
    std::vector<Derivation> gens;
    gens.push_back(Derivation::partial(n, 1));
    for (int i = 2; i <= n; ++i) gens.push_back(Derivation::monomial(Monomial::one(n).times_var(i, 2), 1));
    for (int i = 2; i <= n; ++i) gens.push_back(Derivation::monomial(Monomial::one(n).times_var(1, 2), i));
    return gens;
}

Report verify_theorem(const std::string& tag, int n, int cutoff, uint64_t seed) {
    if (n < 1) throw ValueError("verify needs n >= 1");
    if (cutoff < 0) throw ValueError("verify needs cutoff >= 0");
    if (tag == "basis-lemma") return run_basis_lemma(n, cutoff);
    if (tag == "gen-div0") return run_gen_div0(n, cutoff);
    if (tag == "gen-divc") return run_gen_divc(n, cutoff);
    if (tag == "minimality") return run_minimality(n, cutoff);
    if (tag == "simplicity") return run_simplicity(n, cutoff, seed);
    if (tag == "derived") return run_derived(n, cutoff);
    if (tag == "cartan") return run_cartan(n, cutoff);
    if (tag == "equivariance") return run_equivariance(n, cutoff, seed);
    if (tag == "module-simple") return run_module_simple(n, cutoff);
    if (tag == "identities") return run_identities(n, cutoff);
    throw ValueError("unknown theorem tag '" + tag + "'");
}

}  // namespace divlie
