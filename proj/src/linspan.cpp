#include "divlie/linspan.hpp"

#include <algorithm>

namespace divlie {

DerVec to_coords(const Derivation& d) {
    DerVec v;
    for (int i = 1; i <= d.n(); ++i)
        for (const auto& [m, c] : d.coeff(i).terms()) v.emplace(DerCoord{m, i}, c);
    return v;
}

Derivation from_coords(int n, const DerVec& v) {
    Derivation d(n);
    for (const auto& [coord, c] : v) d = d + Derivation::monomial(coord.mono, coord.dir, c);
    return d;
}

bool SpanSpace::insert(const Derivation& d) {
    if (d.n() != n_) throw DimensionError("derivation variable count differs from span");
    if (d.is_zero()) return false;
    return basis_.insert(to_coords(d));
}

bool SpanSpace::contains(const Derivation& d) const {
    if (d.n() != n_) throw DimensionError("derivation variable count differs from span");
    return basis_.reduce(to_coords(d)).empty();
}

DerVec SpanSpace::residual(const Derivation& d) const {
    if (d.n() != n_) throw DimensionError("derivation variable count differs from span");
    return basis_.reduce(to_coords(d));
}

std::optional<std::vector<Rational>> SpanSpace::coordinates(const Derivation& d) const {
    if (d.n() != n_) throw DimensionError("derivation variable count differs from span");
    return basis_.coordinates(to_coords(d));
}

std::vector<Derivation> SpanSpace::rows() const {
    std::vector<Derivation> out;
    out.reserve(basis_.dim());
    for (const auto& row : basis_.rows()) out.push_back(from_coords(n_, row));
    return out;
}

SpanSpace reduce(int n, const std::vector<Derivation>& vectors) {
    SpanSpace s(n);
    for (const auto& d : vectors) s.insert(d);
    return s;
}

namespace {

void collect_monomials(int n, int degree, int var, std::vector<int>& exps, std::vector<Monomial>& out) {
    if (var == n) {
        exps.push_back(degree);
        out.emplace_back(exps);
        exps.pop_back();
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        exps.push_back(e);
        collect_monomials(n, degree - e, var + 1, exps, out);
        exps.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int degree) {
    std::vector<Monomial> out;
    std::vector<int> exps;
    collect_monomials(n, degree, 1, exps, out);
    std::sort(out.begin(), out.end(), grlex_less);
    return out;
}

std::vector<Monomial> monomials_up_to(int n, int degree) {
    std::vector<Monomial> out;
    for (int d = 0; d <= degree; ++d) {
        auto level = monomials_of_degree(n, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Derivation> enumerate_basis(const BasisSpec& spec) {
    if (spec.n < 1) throw ValueError("basis spec needs n >= 1");
    if (spec.cutoff < 0) throw ValueError("basis spec needs cutoff >= 0");
    std::vector<Derivation> out;
    // kernel-coefficient fields x^b*d_j with b_j = 0, |b| <= cutoff
    for (const Monomial& b : monomials_up_to(spec.n, spec.cutoff))
        for (int j = 1; j <= spec.n; ++j)
            if (b.exp(j) == 0) out.push_back(Derivation::monomial(b, j));
    // theta fields, coefficient degree |a| + 1 <= cutoff
    if (spec.cutoff >= 1)
        for (const Monomial& a : monomials_up_to(spec.n, spec.cutoff - 1))
            for (int i = 1; i <= spec.n - 1; ++i) out.push_back(theta(spec.n, i, a));
    if (spec.algebra == AlgebraTag::DivC) out.push_back(Derivation::euler(spec.n, 1));
    return out;
}

SpanSpace divkernel_oracle(int n, int cutoff) {
    if (n < 1 || cutoff < 0) throw ValueError("divergence kernel needs n >= 1, cutoff >= 0");
    KernelAccumulator<Monomial, GrlexLess> acc;
    std::vector<DerCoord> domain;
    for (const Monomial& a : monomials_up_to(n, cutoff))
        for (int i = 1; i <= n; ++i) domain.push_back(DerCoord{a, i});
    for (const auto& coord : domain) {
        std::map<Monomial, Rational, GrlexLess> image;
        Polynomial div = Derivation::monomial(coord.mono, coord.dir).divergence();
        for (const auto& [m, c] : div.terms()) image.emplace(m, c);
        acc.add(std::move(image));
    }
    SpanSpace s(n);
    for (const auto& combo : acc.kernel()) {
        Derivation d(n);
        for (size_t k = 0; k < combo.size(); ++k)
            if (combo[k] != 0) d = d + Derivation::monomial(domain[k].mono, domain[k].dir, combo[k]);
        s.insert(d);
    }
    return s;
}

namespace {

SpanSpace graded_intersection(int n, const std::vector<Derivation>& rows, int k) {
    // kernel of "project away the degree-k part": combinations supported
    // entirely in coefficient degree k
    KernelAccumulator<DerCoord, DerCoordLess> acc;
    for (const auto& row : rows) {
        DerVec off_degree;
        for (const auto& [coord, c] : to_coords(row))
            if (coord.mono.degree() != k) off_degree.emplace(coord, c);
        acc.add(std::move(off_degree));
    }
    SpanSpace s(n);
    for (const auto& combo : acc.kernel()) {
        Derivation d(n);
        for (size_t r = 0; r < combo.size(); ++r)
            if (combo[r] != 0) d = d + combo[r] * rows[r];
        s.insert(d);
    }
    return s;
}

}  // namespace

SpanSpace graded_component(const SpanSpace& space, int k) {
    return graded_intersection(space.n(), space.rows(), k);
}

SpanSpace graded_component(int n, const std::vector<Derivation>& vectors, int k) {
    return graded_component(reduce(n, vectors), k);
}

}  // namespace divlie
