#pragma once

#include <cstdint>
#include <random>

#include "divlie/autos.hpp"
#include "divlie/linspan.hpp"

namespace divlie {

/// Seeded draws for the randomized suites. All draws go through pick(), so a
/// fixed seed reproduces the exact same sequence on every run.
class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    /// Uniform integer in [lo, hi].
    int pick(int lo, int hi) {
        if (hi < lo) throw ValueError("empty sampling range");
        return lo + static_cast<int>(rng_() % static_cast<uint64_t>(hi - lo + 1));
    }

    /// Nonzero numerator in [-max, max], denominator in [1, max_den].
    Rational rational(int max_num = 5, int max_den = 3) {
        int num = pick(1, max_num) * (pick(0, 1) ? 1 : -1);
        Rational r(num, pick(1, max_den));
        r.canonicalize();
        return r;
    }

    Monomial monomial(int n, int max_degree) {
        std::vector<int> exps(static_cast<size_t>(n), 0);
        int deg = pick(0, max_degree);
        for (int t = 0; t < deg; ++t) exps[static_cast<size_t>(pick(0, n - 1))] += 1;
        return Monomial(std::move(exps));
    }

    Polynomial polynomial(int n, int max_degree, int max_terms = 4) {
        Polynomial p(n);
        int terms = pick(1, max_terms);
        for (int t = 0; t < terms; ++t) p.add_term(monomial(n, max_degree), rational());
        return p;
    }

    Derivation derivation(int n, int max_degree, int max_terms = 3) {
        Derivation d(n);
        for (int i = 1; i <= n; ++i) {
            int terms = pick(0, max_terms);
            for (int t = 0; t < terms; ++t)
                d = d + Derivation::monomial(monomial(n, max_degree), i, rational());
        }
        return d;
    }

    /// Random combination of the truncated zero-divergence basis.
    Derivation zero_div_derivation(int n, int cutoff, int max_terms = 4) {
        auto basis = enumerate_basis(BasisSpec{n, cutoff, AlgebraTag::Div0});
        Derivation d(n);
        int terms = pick(1, max_terms);
        for (int t = 0; t < terms; ++t)
            d = d + rational() * basis[static_cast<size_t>(pick(0, static_cast<int>(basis.size()) - 1))];
        return d;
    }

    /// Triangular shear with a sparse shift (1..2 terms) of degree <= max_degree,
    /// or an invertible affine map with small integer entries.
    ElementaryMap elementary(int n, int max_degree) {
        if (n >= 2 && pick(0, 1)) {
            int i = pick(1, n);
            Polynomial f(n);
            int terms = pick(1, 2);
            for (int t = 0; t < terms; ++t) {
                std::vector<int> exps(static_cast<size_t>(n), 0);
                int deg = pick(1, max_degree);
                for (int k = 0; k < deg; ++k) {
                    int var = pick(1, n - 1);
                    exps[static_cast<size_t>(var <= i - 1 ? var - 1 : var)] += 1;  // skip variable i
                }
                f.add_term(Monomial(std::move(exps)), rational(3, 2));
            }
            return ElementaryMap::triangular(n, i, f);
        }
        // random invertible affine: unitriangular with a shuffled diagonal sign
        std::vector<std::vector<Rational>> A(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
        for (int i = 0; i < n; ++i) {
            A[static_cast<size_t>(i)][static_cast<size_t>(i)] = rational(3, 2);
            for (int j = i + 1; j < n; ++j)
                if (pick(0, 1)) A[static_cast<size_t>(i)][static_cast<size_t>(j)] = rational(2, 1);
        }
        std::vector<Rational> b(static_cast<size_t>(n), Rational(0));
        for (int i = 0; i < n; ++i)
            if (pick(0, 1)) b[static_cast<size_t>(i)] = rational(3, 1);
        return ElementaryMap::affine(std::move(A), std::move(b));
    }

    Automorphism automorphism(int n, int max_word, int max_degree) {
        int len = pick(1, max_word);
        std::vector<ElementaryMap> word;
        word.reserve(static_cast<size_t>(len));
        for (int t = 0; t < len; ++t) word.push_back(elementary(n, max_degree));
        return Automorphism(n, std::move(word));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace divlie
