#pragma once

#include <vector>

#include "divlie/derivation.hpp"

namespace divlie {

/// One invertible building block of a polynomial automorphism:
/// either an invertible affine map x_i -> sum_j A_ij x_j + b_i, or a
/// triangular shear x_i -> x_i + f with f independent of x_i.
class ElementaryMap {
public:
    enum class Kind { Affine, Triangular };

    static ElementaryMap affine(std::vector<std::vector<Rational>> A, std::vector<Rational> b);
    static ElementaryMap triangular(int n, int i, Polynomial f);

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    const std::vector<std::vector<Rational>>& matrix() const { return A_; }
    const std::vector<Rational>& offset() const { return b_; }
    int var() const { return var_; }
    const Polynomial& shift() const { return f_; }

    std::vector<Polynomial> forward_images() const;
    ElementaryMap inverse() const;

private:
    ElementaryMap() = default;

    Kind kind_ = Kind::Triangular;
    int n_ = 0;
    std::vector<std::vector<Rational>> A_;  // affine only
    std::vector<Rational> b_;               // affine only
    int var_ = 0;                           // triangular only
    Polynomial f_{1};                       // triangular only
};

/// A (tame) polynomial automorphism as a word of elementary maps. On points
/// the word acts left to right, so the substitution that computes the images
/// x_i' composes right to left: the last letter's images are substituted
/// first, the first letter's last.
class Automorphism {
public:
    explicit Automorphism(int n) : n_(n) {}
    Automorphism(int n, std::vector<ElementaryMap> word);

    static Automorphism identity(int n) { return Automorphism(n); }

    int n() const { return n_; }
    const std::vector<ElementaryMap>& word() const { return word_; }

    /// x_i' = sigma(x_i).
    std::vector<Polynomial> forward_images() const;
    std::vector<Polynomial> inverse_images() const;
    Automorphism inverse() const;

    /// sigma(p) = p(x_1', ..., x_n').
    Polynomial apply(const Polynomial& p) const;

private:
    int n_;
    std::vector<ElementaryMap> word_;
};

/// Composition as maps: (sigma * tau)(p) = sigma(tau(p)).
Automorphism operator*(const Automorphism& sigma, const Automorphism& tau);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Entry (i, j) is d(images_j)/d(x_i); column j is the gradient of images_j.
PolyMatrix jacobian(const std::vector<Polynomial>& images);
PolyMatrix jacobian(const Automorphism& sigma);

Polynomial det(const PolyMatrix& m);
PolyMatrix adjugate(const PolyMatrix& m);

/// det of the Jacobian; a nonzero constant for every automorphism.
Polynomial jacobian_det(const Automorphism& sigma);

/// sigma d sigma^{-1} by substitution: coefficient k is
/// sigma(d(sigma^{-1}(x_k))).
Derivation conjugate(const Automorphism& sigma, const Derivation& d);

/// The same conjugation through the Jacobian: sum_i sigma(a_i) * d_i' with
/// d_i' = sum_j (J^{-1})_ij d_j. Kept as an independent cross-check of
/// conjugate().
Derivation conjugate_via_jacobian(const Automorphism& sigma, const Derivation& d);

/// divergence(sigma(d)) == sigma(divergence(d)).
bool check_div_equivariance(const Automorphism& sigma, const Derivation& d);

}  // namespace divlie
