#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divlie/derivation.hpp"
#include "divlie/linalg.hpp"

namespace divlie {

/// Coordinate of the free module of derivations: the monomial x^a in
/// direction dir, ordered by (grlex a, dir) so graded blocks stay contiguous.
struct DerCoord {
    Monomial mono;
    int dir;
};

struct DerCoordLess {
    bool operator()(const DerCoord& a, const DerCoord& b) const {
        if (a.mono != b.mono) return grlex_less(a.mono, b.mono);
        return a.dir < b.dir;
    }
};

using DerVec = std::map<DerCoord, Rational, DerCoordLess>;

DerVec to_coords(const Derivation& d);
Derivation from_coords(int n, const DerVec& v);

/// Reduced echelon span of derivations; immutable once built up.
class SpanSpace {
public:
    explicit SpanSpace(int n) : n_(n) {}

    int n() const { return n_; }
    size_t dim() const { return basis_.dim(); }

    /// Returns true if d enlarged the span.
    bool insert(const Derivation& d);

    bool contains(const Derivation& d) const;

    /// Reduction residual of d against the span; empty iff contained.
    DerVec residual(const Derivation& d) const;

    /// Exact coordinates of d over rows() (nullopt when outside the span).
    std::optional<std::vector<Rational>> coordinates(const Derivation& d) const;

    std::vector<Derivation> rows() const;

private:
    int n_;
    EchelonBasis<DerCoord, DerCoordLess> basis_;
};

SpanSpace reduce(int n, const std::vector<Derivation>& vectors);

enum class AlgebraTag { Div0, DivC };

/// Truncated basis request: fields with coefficient total degree <= cutoff in
/// the zero-divergence algebra (Div0) or the constant-divergence one (DivC).
struct BasisSpec {
    int n;
    int cutoff;
    AlgebraTag algebra;
};

std::vector<Monomial> monomials_up_to(int n, int degree);
std::vector<Monomial> monomials_of_degree(int n, int degree);

/// The truncated basis: theta fields with coefficient degree <= cutoff plus
/// the kernel-coefficient fields x^b*d_j (b_j = 0, |b| <= cutoff); for DivC
/// additionally the single Euler element x_1*d_1.
std::vector<Derivation> enumerate_basis(const BasisSpec& spec);

/// Brute-force kernel of the divergence map on derivations of coefficient
/// degree <= cutoff. Independent of the theta construction on purpose: this
/// is the oracle the enumerated basis is checked against.
SpanSpace divkernel_oracle(int n, int cutoff);

/// Intersection of the span with the subspace of coefficient-homogeneous
/// derivations of total degree k.
SpanSpace graded_component(const SpanSpace& space, int k);
SpanSpace graded_component(int n, const std::vector<Derivation>& vectors, int k);

}  // namespace divlie
