#include "divlie/derivation.hpp"

#include <algorithm>

namespace divlie {

Derivation::Derivation(int n) : n_(n), coeffs_(static_cast<size_t>(n), Polynomial(n)) {
    if (n < 1) throw ValueError("variable count must be >= 1");
}

Derivation::Derivation(int n, std::vector<Polynomial> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    if (n < 1) throw ValueError("variable count must be >= 1");
    if (static_cast<int>(coeffs_.size()) != n) throw DimensionError("derivation needs n coefficients");
    for (const auto& a : coeffs_)
        if (a.n() != n) throw DimensionError("derivation coefficient lives in wrong ring");
}

Derivation Derivation::partial(int n, int i) {
    Monomial::check_index(n, i);
    Derivation d(n);
    d.coeffs_[static_cast<size_t>(i - 1)] = Polynomial::constant(n, 1);
    return d;
}

Derivation Derivation::euler(int n, int i) {
    Monomial::check_index(n, i);
    Derivation d(n);
    d.coeffs_[static_cast<size_t>(i - 1)] = Polynomial::variable(n, i);
    return d;
}

Derivation Derivation::euler_diff(int n, int i, int j) {
    Monomial::check_index(n, i);
    Monomial::check_index(n, j);
    if (i == j) throw IndexError("euler_diff needs distinct indices");
    return euler(n, i) - euler(n, j);
}

Derivation Derivation::monomial(const Monomial& a, int i, const Rational& c) {
    Derivation d(a.n());
    Monomial::check_index(a.n(), i);
    d.coeffs_[static_cast<size_t>(i - 1)] = Polynomial::monomial(a, c);
    return d;
}

const Polynomial& Derivation::coeff(int i) const {
    Monomial::check_index(n_, i);
    return coeffs_[static_cast<size_t>(i - 1)];
}

bool Derivation::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<int> Derivation::degree() const {
    std::optional<int> deg;
    for (const auto& a : coeffs_) {
        auto d = a.total_degree();
        if (d && (!deg || *d > *deg)) deg = d;
    }
    return deg;
}

Derivation Derivation::operator-() const {
    Derivation r(n_);
    for (int i = 0; i < n_; ++i) r.coeffs_[static_cast<size_t>(i)] = -coeffs_[static_cast<size_t>(i)];
    return r;
}

Derivation Derivation::operator+(const Derivation& e) const {
    if (n_ != e.n_) throw DimensionError("derivation variable counts differ");
    Derivation r(n_);
    for (int i = 0; i < n_; ++i)
        r.coeffs_[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)] + e.coeffs_[static_cast<size_t>(i)];
    return r;
}

Derivation Derivation::operator-(const Derivation& e) const { return *this + (-e); }

Derivation Derivation::scaled(const Rational& c) const {
    Derivation r(n_);
    for (int i = 0; i < n_; ++i) r.coeffs_[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)].scaled(c);
    return r;
}

Derivation Derivation::scaled(const Polynomial& a) const {
    Derivation r(n_);
    for (int i = 0; i < n_; ++i) r.coeffs_[static_cast<size_t>(i)] = a * coeffs_[static_cast<size_t>(i)];
    return r;
}

Derivation operator*(const Rational& c, const Derivation& d) { return d.scaled(c); }
Derivation operator*(const Polynomial& a, const Derivation& d) { return d.scaled(a); }

Polynomial Derivation::apply(const Polynomial& p) const {
    if (p.n() != n_) throw DimensionError("derivation and polynomial variable counts differ");
    Polynomial r(n_);
    for (int i = 1; i <= n_; ++i) {
        const Polynomial& a = coeffs_[static_cast<size_t>(i - 1)];
        if (a.is_zero()) continue;
        r += a * p.partial(i);
    }
    return r;
}

Polynomial Derivation::divergence() const {
    Polynomial r(n_);
    for (int i = 1; i <= n_; ++i) r += coeffs_[static_cast<size_t>(i - 1)].partial(i);
    return r;
}

Derivation bracket(const Derivation& d, const Derivation& e) {
    if (d.n() != e.n()) throw DimensionError("derivation variable counts differ");
    int n = d.n();
    std::vector<Polynomial> coeffs;
    coeffs.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) coeffs.push_back(d.apply(e.coeff(k)) - e.apply(d.coeff(k)));
    return Derivation(n, std::move(coeffs));
}

Derivation Derivation::swap_adjacent_vars(int i) const {
    Monomial::check_index(n_, i);
    Monomial::check_index(n_, i + 1);
    std::vector<Polynomial> swap_images;
    swap_images.reserve(static_cast<size_t>(n_));
    for (int k = 1; k <= n_; ++k) {
        int img = k == i ? i + 1 : (k == i + 1 ? i : k);
        swap_images.push_back(Polynomial::variable(n_, img));
    }
    Derivation r(n_);
    for (int k = 1; k <= n_; ++k) {
        int slot = k == i ? i + 1 : (k == i + 1 ? i : k);
        r.coeffs_[static_cast<size_t>(slot - 1)] = coeff(k).compose(swap_images);
    }
    return r;
}

std::string Derivation::str() const {
    std::string out;
    for (int i = 1; i <= n_; ++i) {
        const Polynomial& a = coeffs_[static_cast<size_t>(i - 1)];
        for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
            const Monomial& m = it->first;
            Rational c = it->second;
            bool neg = c < 0;
            if (neg) c = -c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (c != 1) out += to_string(c) + "*";
            if (m.degree() > 0) out += m.str() + "*";
            out += "d" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string DivClass::str() const {
    switch (kind) {
        case Kind::Zero: return "zero";
        case Kind::Constant: return "constant " + to_string(value);
        case Kind::NonConstant: return "nonconstant " + divergence.str();
    }
    return "";
}

DivClass classify(const Derivation& d) {
    Polynomial div = d.divergence();
    if (div.is_zero()) return DivClass{DivClass::Kind::Zero, Rational(0), div};
    if (div.is_constant()) return DivClass{DivClass::Kind::Constant, div.constant_term(), div};
    return DivClass{DivClass::Kind::NonConstant, Rational(0), div};
}

Derivation phi(int n, int i, int j, const Polynomial& a) {
    Monomial::check_index(n, i);
    Monomial::check_index(n, j);
    if (i == j) throw IndexError("phi needs distinct indices");
    if (a.n() != n) throw DimensionError("phi argument lives in wrong ring");
    return a.hmap(j) * Derivation::euler(n, i) - a.hmap(i) * Derivation::euler(n, j);
}

Derivation theta(int n, int i, const Monomial& alpha) {
    if (i < 1 || i > n - 1) throw IndexError("theta index outside 1..n-1");
    if (alpha.n() != n) throw DimensionError("theta exponent lives in wrong ring");
    return phi(n, i, i + 1, Polynomial::monomial(alpha));
}

WeightClass::WeightClass(std::vector<int> grading) : rep_(std::move(grading)) {
    if (rep_.empty()) throw ValueError("empty weight vector");
    int lo = *std::min_element(rep_.begin(), rep_.end());
    for (int& v : rep_) v -= lo;
}

Rational WeightClass::eigenvalue(const std::vector<Rational>& lambda) const {
    if (lambda.size() != rep_.size()) throw DimensionError("weight/eigenvector size mismatch");
    Rational s(0);
    for (size_t k = 0; k < rep_.size(); ++k) s += Rational(rep_[k]) * lambda[k];
    return s;
}

std::string WeightClass::str() const {
    std::string out = "(";
    for (size_t k = 0; k < rep_.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(rep_[k]);
    }
    return out + ")";
}

namespace {

std::vector<int> grading_of_term(const Monomial& a, int dir) {
    std::vector<int> g = a.exps();
    g[static_cast<size_t>(dir - 1)] -= 1;
    return g;
}

}  // namespace

WeightClass weight_of(const Derivation& d) {
    if (d.is_zero()) throw ValueError("weight of the zero derivation is undefined");
    std::optional<WeightClass> found;
    for (int i = 1; i <= d.n(); ++i) {
        for (const auto& [m, c] : d.coeff(i).terms()) {
            WeightClass w(grading_of_term(m, i));
            if (!found)
                found = w;
            else if (!(*found == w))
                throw NotHomogeneousError("derivation mixes weight classes " + found->str() + " and " + w.str());
        }
    }
    // the class must reproduce the adjoint eigenvalues on the trace-zero Euler span
    for (int k = 1; k <= d.n() - 1; ++k) {
        std::vector<Rational> lambda(static_cast<size_t>(d.n()), Rational(0));
        lambda[static_cast<size_t>(k - 1)] = 1;
        lambda[static_cast<size_t>(k)] = -1;
        if (bracket(Derivation::euler_diff(d.n(), k, k + 1), d) != found->eigenvalue(lambda) * d)
            throw Error("adjoint eigenvalue check failed in weight_of");
    }
    return *found;
}

std::map<WeightClass, Derivation> decompose_weights(const Derivation& d) {
    std::map<WeightClass, Derivation> out;
    for (int i = 1; i <= d.n(); ++i) {
        for (const auto& [m, c] : d.coeff(i).terms()) {
            WeightClass w(grading_of_term(m, i));
            auto [it, inserted] = out.emplace(w, Derivation(d.n()));
            it->second = it->second + Derivation::monomial(m, i, c);
        }
    }
    return out;
}

}  // namespace divlie
