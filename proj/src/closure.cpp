#include "divlie/closure.hpp"

#include <functional>

namespace divlie {

namespace {

bool within_cutoff(const Derivation& d, int cutoff) {
    auto deg = d.degree();
    return !deg || *deg <= cutoff;
}

int require_shared_n(const std::vector<Derivation>& vecs) {
    if (vecs.empty()) throw ValueError("generator list must be nonempty");
    int n = vecs.front().n();
    for (const auto& v : vecs)
        if (v.n() != n) throw DimensionError("generators live in different rings");
    return n;
}

}  // namespace

ClosureResult bracket_closure(const std::vector<Derivation>& generators, int cutoff) {
    int n = require_shared_n(generators);
    SpanSpace space(n);
    std::vector<Derivation> frontier;
    for (const auto& g : generators)
        if (within_cutoff(g, cutoff) && space.insert(g)) frontier.push_back(g);
    int rounds = 0;
    while (!frontier.empty()) {
        ++rounds;
        std::vector<Derivation> all = space.rows();
        std::vector<Derivation> next;
        for (const auto& f : frontier) {
            for (const auto& r : all) {
                Derivation b = bracket(f, r);
                if (!within_cutoff(b, cutoff)) continue;
                if (space.insert(b)) next.push_back(b);
            }
        }
        frontier = std::move(next);
    }
    return ClosureResult{std::move(space), cutoff, rounds, true};
}

ClosureResult ideal_closure(const Derivation& a, const BasisSpec& ambient, int cutoff) {
    if (a.is_zero()) throw ValueError("ideal generator must be nonzero");
    if (a.n() != ambient.n) throw DimensionError("ideal generator has wrong variable count");
    DivClass cls = classify(a);
    if (ambient.algebra == AlgebraTag::Div0 && !cls.is_zero())
        throw ValueError("ideal generator has nonzero divergence");
    if (ambient.algebra == AlgebraTag::DivC && cls.kind == DivClass::Kind::NonConstant)
        throw ValueError("ideal generator has nonconstant divergence");
    std::vector<Derivation> ambient_basis = enumerate_basis(ambient);
    SpanSpace space(a.n());
    std::vector<Derivation> frontier;
    if (within_cutoff(a, cutoff) && space.insert(a)) frontier.push_back(a);
    int rounds = 0;
    while (!frontier.empty()) {
        ++rounds;
        std::vector<Derivation> next;
        for (const auto& f : frontier) {
            for (const auto& b : ambient_basis) {
                Derivation br = bracket(b, f);
                if (!within_cutoff(br, cutoff)) continue;
                if (space.insert(br)) next.push_back(br);
            }
        }
        frontier = std::move(next);
    }
    return ClosureResult{std::move(space), cutoff, rounds, true};
}

bool PolySpan::insert(const Polynomial& p) {
    if (p.n() != n_) throw DimensionError("polynomial variable count differs from span");
    std::map<Monomial, Rational, GrlexLess> v;
    for (const auto& [m, c] : p.terms())
        if (m.degree() > 0) v.emplace(m, c);
    if (v.empty()) return false;
    return basis_.insert(std::move(v));
}

bool PolySpan::contains(const Polynomial& p) const {
    if (p.n() != n_) throw DimensionError("polynomial variable count differs from span");
    std::map<Monomial, Rational, GrlexLess> v;
    for (const auto& [m, c] : p.terms())
        if (m.degree() > 0) v.emplace(m, c);
    return basis_.reduce(std::move(v)).empty();
}

std::vector<Polynomial> PolySpan::rows() const {
    std::vector<Polynomial> out;
    out.reserve(basis_.dim());
    for (const auto& row : basis_.rows()) {
        Polynomial p(n_);
        for (const auto& [m, c] : row) p.add_term(m, c);
        out.push_back(std::move(p));
    }
    return out;
}

PolySpan module_orbit(const std::vector<Derivation>& generators, const Polynomial& seed, int cutoff) {
    int n = require_shared_n(generators);
    if (seed.n() != n) throw DimensionError("seed lives in wrong ring");
    if (seed.is_constant()) throw ValueError("orbit seed must not be constant");
    PolySpan span(n);
    std::vector<Polynomial> frontier;
    auto degree_ok = [cutoff](const Polynomial& p) {
        auto d = p.total_degree();
        return !d || *d <= cutoff;
    };
    if (degree_ok(seed) && span.insert(seed)) frontier.push_back(seed);
    while (!frontier.empty()) {
        std::vector<Polynomial> next;
        for (const auto& p : frontier) {
            for (const auto& g : generators) {
                Polynomial q = g.apply(p);
                if (!degree_ok(q)) continue;
                if (span.insert(q)) next.push_back(q);
            }
        }
        frontier = std::move(next);
    }
    return span;
}

namespace {

// key for stacked linear conditions: (condition index, derivation coordinate)
struct StackedCoord {
    int block;
    DerCoord coord;
};

struct StackedCoordLess {
    bool operator()(const StackedCoord& a, const StackedCoord& b) const {
        if (a.block != b.block) return a.block < b.block;
        return DerCoordLess{}(a.coord, b.coord);
    }
};

using StackedVec = std::map<StackedCoord, Rational, StackedCoordLess>;

SpanSpace solve_conditions(int n, const std::vector<Derivation>& candidates,
                           const std::function<StackedVec(const Derivation&)>& conditions) {
    KernelAccumulator<StackedCoord, StackedCoordLess> acc;
    for (const auto& c : candidates) acc.add(conditions(c));
    SpanSpace out(n);
    for (const auto& combo : acc.kernel()) {
        Derivation d(n);
        for (size_t k = 0; k < combo.size(); ++k)
            if (combo[k] != 0) d = d + combo[k] * candidates[k];
        out.insert(d);
    }
    return out;
}

}  // namespace

SpanSpace centralizer(const std::vector<Derivation>& hs, const BasisSpec& ambient) {
    for (const auto& h : hs)
        if (h.n() != ambient.n) throw DimensionError("centralizer conditions have wrong variable count");
    std::vector<Derivation> basis = enumerate_basis(ambient);
    return solve_conditions(ambient.n, basis, [&](const Derivation& v) {
        StackedVec stacked;
        for (size_t k = 0; k < hs.size(); ++k)
            for (const auto& [coord, c] : to_coords(bracket(v, hs[k])))
                stacked.emplace(StackedCoord{static_cast<int>(k), coord}, c);
        return stacked;
    });
}

SpanSpace normalizer(const SpanSpace& s, const BasisSpec& ambient) {
    if (s.n() != ambient.n) throw DimensionError("normalizer target has wrong variable count");
    std::vector<Derivation> basis = enumerate_basis(ambient);
    std::vector<Derivation> rows = s.rows();
    return solve_conditions(ambient.n, basis, [&](const Derivation& v) {
        StackedVec stacked;
        for (size_t k = 0; k < rows.size(); ++k) {
            // [v, s_k] must land inside the span, i.e. reduce to nothing
            for (const auto& [coord, c] : s.residual(bracket(v, rows[k])))
                stacked.emplace(StackedCoord{static_cast<int>(k), coord}, c);
        }
        return stacked;
    });
}

SpanSpace derived_subalgebra(const BasisSpec& ambient, int cutoff) {
    std::vector<Derivation> basis = enumerate_basis(ambient);
    SpanSpace out(ambient.n);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Derivation b = bracket(basis[i], basis[j]);
            if (!within_cutoff(b, cutoff)) continue;
            out.insert(b);
        }
    }
    return out;
}

}  // namespace divlie
