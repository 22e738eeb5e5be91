#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divlie/polynomial.hpp"

namespace divlie {

/// A derivation (polynomial vector field) sum_i a_i * d/dx_i, stored as the
/// coefficient tuple (a_1, ..., a_n).
class Derivation {
public:
    /// The zero derivation in n variables.
    explicit Derivation(int n = 1);
    Derivation(int n, std::vector<Polynomial> coeffs);

    /// d/dx_i.
    static Derivation partial(int n, int i);
    /// The Euler-type element x_i * d/dx_i.
    static Derivation euler(int n, int i);
    /// x_i*d_i - x_j*d_j, i != j; the trace-zero Euler differences.
    static Derivation euler_diff(int n, int i, int j);
    /// c * x^a * d/dx_i.
    static Derivation monomial(const Monomial& a, int i, const Rational& c = 1);

    int n() const { return n_; }
    const Polynomial& coeff(int i) const;
    const std::vector<Polynomial>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    /// Max total degree of the coefficient polynomials; nullopt for zero.
    std::optional<int> degree() const;

    Derivation operator-() const;
    Derivation operator+(const Derivation& e) const;
    Derivation operator-(const Derivation& e) const;
    Derivation scaled(const Rational& c) const;
    /// a * d, coefficientwise multiplication by the polynomial a.
    Derivation scaled(const Polynomial& a) const;

    bool operator==(const Derivation& e) const { return n_ == e.n_ && coeffs_ == e.coeffs_; }
    bool operator!=(const Derivation& e) const { return !(*this == e); }

    /// Action on a polynomial: sum_i a_i * dp/dx_i. Satisfies the Leibniz rule.
    Polynomial apply(const Polynomial& p) const;

    /// sum_i d(a_i)/dx_i.
    Polynomial divergence() const;

    /// Conjugation by the variable swap x_i <-> x_{i+1}: coefficients are
    /// substituted through the swap and the slots i, i+1 exchanged.
    Derivation swap_adjacent_vars(int i) const;

    /// Display form, e.g. "x1*d1 - x2*d2".
    std::string str() const;

private:
    int n_;
    std::vector<Polynomial> coeffs_;
};

Derivation operator*(const Rational& c, const Derivation& d);
Derivation operator*(const Polynomial& a, const Derivation& d);

/// Lie bracket [d, e] = d e - e d; coefficient k is d(e_k) - e(d_k).
Derivation bracket(const Derivation& d, const Derivation& e);

/// Classification of a derivation by its divergence.
struct DivClass {
    enum class Kind { Zero, Constant, NonConstant };
    Kind kind;
    Rational value;          // the constant, when kind == Constant
    Polynomial divergence;   // full divergence polynomial in every case

    bool is_zero() const { return kind == Kind::Zero; }
    std::string str() const;
};

DivClass classify(const Derivation& d);

/// The divergence-free field h_j(a)*x_i*d_i - h_i(a)*x_j*d_j, linear and
/// injective in a.
Derivation phi(int n, int i, int j, const Polynomial& a);

/// phi(i, i+1, x^alpha) = x^alpha*((alpha_{i+1}+1)*x_i*d_i - (alpha_i+1)*x_{i+1}*d_{i+1});
/// together with the x^b*d_j (b_j = 0) these span the zero-divergence fields.
Derivation theta(int n, int i, const Monomial& alpha);

/// Weight of a field under the adjoint action of the trace-zero Euler span:
/// an integer vector modulo the all-ones line, canonicalized so min entry is 0.
class WeightClass {
public:
    explicit WeightClass(std::vector<int> grading);

    const std::vector<int>& rep() const { return rep_; }
    int n() const { return static_cast<int>(rep_.size()); }

    /// <rep, lambda> for a trace-zero lambda; independent of the representative.
    Rational eigenvalue(const std::vector<Rational>& lambda) const;

    bool operator==(const WeightClass& w) const { return rep_ == w.rep_; }
    bool operator<(const WeightClass& w) const { return rep_ < w.rep_; }

    std::string str() const;

private:
    std::vector<int> rep_;
};

/// The weight class of a homogeneous nonzero derivation. Each term x^a*d_i
/// sits in grading a - e_i; all terms must land in one class modulo the
/// all-ones vector, otherwise NotHomogeneousError.
WeightClass weight_of(const Derivation& d);

/// Splits a derivation into its weight components; the summands add back to d
/// and each passes weight_of.
std::map<WeightClass, Derivation> decompose_weights(const Derivation& d);

}  // namespace divlie
