#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divlie/monomial.hpp"
#include "divlie/rational.hpp"

namespace divlie {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: the term map never stores a zero coefficient, so equality
/// of polynomials is equality of term maps. Every operation returns a fresh
/// polynomial; nothing is mutated in place except add_term during builds.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    /// The zero polynomial in n variables.
    explicit Polynomial(int n = 1);

    static Polynomial constant(int n, const Rational& c);
    static Polynomial variable(int n, int i);
    static Polynomial monomial(const Monomial& m, const Rational& c = 1);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Max total degree over the terms; nullopt is the -infinity marker of
    /// the zero polynomial (so max-of-degrees algebra stays honest).
    std::optional<int> total_degree() const;

    bool is_constant() const;
    /// Constant term (0 if absent).
    Rational constant_term() const;

    Rational coeff(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& q) const;
    Polynomial operator-(const Polynomial& q) const;
    Polynomial operator*(const Polynomial& q) const;
    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int k) const;

    bool operator==(const Polynomial& q) const { return n_ == q.n_ && terms_ == q.terms_; }
    bool operator!=(const Polynomial& q) const { return !(*this == q); }

    /// d/dx_i.
    Polynomial partial(int i) const;

    /// Substitutes images[i-1] for x_i; an algebra homomorphism in *this.
    Polynomial compose(const std::vector<Polynomial>& images) const;

    /// Scales each term x^a by (a_i + 1); a linear bijection on polynomials.
    Polynomial hmap(int i) const;

    /// Adds c * x^m, dropping the term if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    /// Display form, descending graded-lex: "3*x1^2*x2 - 1/2*x2 + 4".
    std::string str() const;

private:
    void require_same_n(const Polynomial& q) const;

    int n_;
    TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

}  // namespace divlie
