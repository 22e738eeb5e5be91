#pragma once

#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "divlie/errors.hpp"

namespace divlie {

/// Multi-index of exponents; the monomial x1^e1 * ... * xn^en.
/// Variable indices throughout the library are 1-based, matching the
/// x1..xn naming of the text syntax.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
        for (int e : exps_)
            if (e < 0) throw ValueError("negative exponent in monomial");
    }

    static Monomial one(int n) { return Monomial(std::vector<int>(static_cast<size_t>(n), 0)); }

    /// e_i, i.e. the monomial x_i.
    static Monomial var(int n, int i) {
        check_index(n, i);
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i - 1)] = 1;
        return Monomial(std::move(e));
    }

    int n() const { return static_cast<int>(exps_.size()); }
    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    int exp(int i) const { check_index(n(), i); return exps_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& exps() const { return exps_; }

    Monomial times(const Monomial& other) const {
        require_same_n(other);
        std::vector<int> e(exps_);
        for (size_t k = 0; k < e.size(); ++k) e[k] = checked_add(e[k], other.exps_[k]);
        return Monomial(std::move(e));
    }

    Monomial times_var(int i, int power = 1) const {
        check_index(n(), i);
        std::vector<int> e(exps_);
        int& slot = e[static_cast<size_t>(i - 1)];
        slot = checked_add(slot, power);
        if (slot < 0) throw ValueError("negative exponent in monomial");
        return Monomial(std::move(e));
    }

    /// x^alpha / x_i; caller must ensure exp(i) >= 1.
    Monomial div_var(int i) const { return times_var(i, -1); }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    /// "x1^2*x3", or "1" for the empty monomial.
    std::string str() const {
        std::string out;
        for (int i = 1; i <= n(); ++i) {
            int e = exps_[static_cast<size_t>(i - 1)];
            if (e == 0) continue;
            if (!out.empty()) out += "*";
            out += "x" + std::to_string(i);
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out.empty() ? "1" : out;
    }

    static void check_index(int n, int i) {
        if (i < 1 || i > n) throw IndexError("variable index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }

private:
    static int checked_add(int a, int b) {
        long long s = static_cast<long long>(a) + b;
        if (s > std::numeric_limits<int>::max()) throw ValueError("monomial exponent overflow");
        return static_cast<int>(s);
    }

    void require_same_n(const Monomial& other) const {
        if (n() != other.n()) throw DimensionError("monomial variable counts differ");
    }

    std::vector<int> exps_;
};

/// Graded lexicographic order: first by total degree, ties broken
/// lexicographically on the exponent vector. The canonical term order of
/// the whole library (display, pivoting, coordinate indexing).
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps() < b.exps();
}

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

}  // namespace divlie
