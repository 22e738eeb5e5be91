#include "divlie/polynomial.hpp"

#include <algorithm>

namespace divlie {

Polynomial::Polynomial(int n) : n_(n) {
    if (n < 1) throw ValueError("variable count must be >= 1");
}

Polynomial Polynomial::constant(int n, const Rational& c) {
    Polynomial p(n);
    if (c != 0) p.terms_.emplace(Monomial::one(n), c);
    return p;
}

Polynomial Polynomial::variable(int n, int i) {
    Polynomial p(n);
    p.terms_.emplace(Monomial::var(n, i), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
    Polynomial p(m.n());
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

std::optional<int> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // grlex order puts the highest-degree term last
    return terms_.rbegin()->first.degree();
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial::one(n_));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (m.n() != n_) throw DimensionError("monomial variable count differs from polynomial");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::require_same_n(const Polynomial& q) const {
    if (n_ != q.n_) throw DimensionError("polynomial variable counts differ");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    require_same_n(q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    require_same_n(q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
    Polynomial r(*this);
    r += q;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
    Polynomial r(*this);
    r -= q;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
    require_same_n(q);
    Polynomial r(n_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : q.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(n_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, c * k);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw ValueError("negative polynomial power");
    Polynomial r = constant(n_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return r;
}

Polynomial Polynomial::partial(int i) const {
    Monomial::check_index(n_, i);
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) {
        int e = m.exp(i);
        if (e == 0) continue;
        r.add_term(m.div_var(i), c * e);
    }
    return r;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != n_) throw DimensionError("substitution needs one image per variable");
    for (const auto& g : images)
        if (g.n() != images[0].n()) throw DimensionError("substitution images live in different rings");
    int m = images.empty() ? n_ : images[0].n();

    // powers of each image, filled on demand
    std::vector<std::vector<Polynomial>> pows(static_cast<size_t>(n_), {Polynomial::constant(m, 1)});
    auto power = [&](int i, int e) -> const Polynomial& {
        auto& cache = pows[static_cast<size_t>(i)];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[static_cast<size_t>(i)]);
        return cache[static_cast<size_t>(e)];
    };

    Polynomial r(m);
    for (const auto& [mono, c] : terms_) {
        Polynomial term = Polynomial::constant(m, c);
        for (int i = 0; i < n_; ++i) {
            int e = mono.exps()[static_cast<size_t>(i)];
            if (e > 0) term = term * power(i, e);
        }
        r += term;
    }
    return r;
}

Polynomial Polynomial::hmap(int i) const {
    Monomial::check_index(n_, i);
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * (m.exp(i) + 1));
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Rational c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool trivial_mono = m.degree() == 0;
        if (c != 1 || trivial_mono) {
            out += to_string(c);
            if (!trivial_mono) out += "*";
        }
        if (!trivial_mono) out += m.str();
    }
    return out;
}

}  // namespace divlie
