#pragma once

#include <vector>

#include "divlie/linspan.hpp"

namespace divlie {

/// Outcome of a degree-truncated closure run. When saturated, bracketing any
/// two rows either exceeds the cutoff or stays inside the span.
struct ClosureResult {
    SpanSpace space;
    int cutoff;
    int rounds;
    bool saturated;
};

/// Smallest truncated span containing the generators and closed under the
/// bracket; elements of coefficient degree > cutoff are discarded, not
/// errors. Breadth-first rounds (new x all), deterministic in the input order.
ClosureResult bracket_closure(const std::vector<Derivation>& generators, int cutoff);

/// Truncated ideal generated by a inside the ambient truncated basis:
/// fixpoint of bracketing with every ambient basis element. a must be nonzero
/// and its divergence class consistent with the ambient algebra.
ClosureResult ideal_closure(const Derivation& a, const BasisSpec& ambient, int cutoff);

/// Span of polynomials modulo constants, in reduced echelon form.
class PolySpan {
public:
    explicit PolySpan(int n) : n_(n) {}

    int n() const { return n_; }
    size_t dim() const { return basis_.dim(); }

    /// Inserts p with its constant term stripped; returns true if it grew.
    bool insert(const Polynomial& p);
    bool contains(const Polynomial& p) const;
    std::vector<Polynomial> rows() const;

private:
    int n_;
    EchelonBasis<Monomial, GrlexLess> basis_;
};

/// Orbit span of the seed under repeated application of the generators,
/// modulo constants; results of degree > cutoff are discarded. The seed must
/// not be constant.
PolySpan module_orbit(const std::vector<Derivation>& generators, const Polynomial& seed, int cutoff);

/// Elements of the ambient truncated basis span whose bracket with every
/// element of hs vanishes. The linear conditions are solved exactly, without
/// truncating the brackets themselves.
SpanSpace centralizer(const std::vector<Derivation>& hs, const BasisSpec& ambient);

/// Elements v of the ambient truncated basis span with [v, s] inside the
/// given span for every row s of it.
SpanSpace normalizer(const SpanSpace& s, const BasisSpec& ambient);

/// Span of all pairwise brackets of the ambient truncated basis, discarding
/// brackets of coefficient degree > cutoff.
SpanSpace derived_subalgebra(const BasisSpec& ambient, int cutoff);

}  // namespace divlie
