#include "divlie/autos.hpp"

namespace divlie {

namespace {

// Gauss-Jordan inverse of an exact rational matrix; throws on singular input.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw ValueError("affine map matrix is singular");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rational lead = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= lead;
            inv[col][j] /= lead;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational c = m[row][col];
            for (size_t j = 0; j < n; ++j) {
                m[row][j] -= c * m[col][j];
                inv[row][j] -= c * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

ElementaryMap ElementaryMap::affine(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    ElementaryMap m;
    m.kind_ = Kind::Affine;
    m.n_ = static_cast<int>(A.size());
    if (m.n_ < 1) throw ValueError("affine map needs n >= 1");
    for (const auto& row : A)
        if (row.size() != A.size()) throw DimensionError("affine matrix must be square");
    if (b.size() != A.size()) throw DimensionError("affine offset size mismatch");
    invert(A);  // rejects singular matrices up front
    m.A_ = std::move(A);
    m.b_ = std::move(b);
    return m;
}

ElementaryMap ElementaryMap::triangular(int n, int i, Polynomial f) {
    Monomial::check_index(n, i);
    if (f.n() != n) throw DimensionError("triangular shift lives in wrong ring");
    if (!f.partial(i).is_zero()) throw ValueError("triangular shift must not depend on its own variable");
    ElementaryMap m;
    m.kind_ = Kind::Triangular;
    m.n_ = n;
    m.var_ = i;
    m.f_ = std::move(f);
    return m;
}

std::vector<Polynomial> ElementaryMap::forward_images() const {
    std::vector<Polynomial> imgs;
    imgs.reserve(static_cast<size_t>(n_));
    if (kind_ == Kind::Affine) {
        for (int i = 0; i < n_; ++i) {
            Polynomial img = Polynomial::constant(n_, b_[static_cast<size_t>(i)]);
            for (int j = 0; j < n_; ++j)
                img += Polynomial::variable(n_, j + 1).scaled(A_[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            imgs.push_back(img);
        }
    } else {
        for (int i = 1; i <= n_; ++i) {
            Polynomial img = Polynomial::variable(n_, i);
            if (i == var_) img += f_;
            imgs.push_back(img);
        }
    }
    return imgs;
}

ElementaryMap ElementaryMap::inverse() const {
    if (kind_ == Kind::Triangular) return triangular(n_, var_, -f_);
    auto Ainv = invert(A_);
    std::vector<Rational> binv(static_cast<size_t>(n_), Rational(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            binv[static_cast<size_t>(i)] -= Ainv[static_cast<size_t>(i)][static_cast<size_t>(j)] * b_[static_cast<size_t>(j)];
    return affine(std::move(Ainv), std::move(binv));
}

Automorphism::Automorphism(int n, std::vector<ElementaryMap> word) : n_(n), word_(std::move(word)) {
    if (n < 1) throw ValueError("automorphism needs n >= 1");
    for (const auto& m : word_)
        if (m.n() != n) throw DimensionError("word letter has wrong variable count");
}

std::vector<Polynomial> Automorphism::forward_images() const {
    std::vector<Polynomial> imgs;
    imgs.reserve(static_cast<size_t>(n_));
    for (int i = 1; i <= n_; ++i) imgs.push_back(Polynomial::variable(n_, i));
    // substitute right to left: the last letter's images go in first
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
        std::vector<Polynomial> letter = it->forward_images();
        for (auto& img : imgs) img = img.compose(letter);
    }
    return imgs;
}

Automorphism Automorphism::inverse() const {
    std::vector<ElementaryMap> inv_word;
    inv_word.reserve(word_.size());
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) inv_word.push_back(it->inverse());
    return Automorphism(n_, std::move(inv_word));
}

std::vector<Polynomial> Automorphism::inverse_images() const { return inverse().forward_images(); }

Polynomial Automorphism::apply(const Polynomial& p) const {
    if (p.n() != n_) throw DimensionError("polynomial variable count differs from automorphism");
    return p.compose(forward_images());
}

Automorphism operator*(const Automorphism& sigma, const Automorphism& tau) {
    if (sigma.n() != tau.n()) throw DimensionError("automorphism variable counts differ");
    std::vector<ElementaryMap> word = sigma.word();
    word.insert(word.end(), tau.word().begin(), tau.word().end());
    return Automorphism(sigma.n(), std::move(word));
}

PolyMatrix jacobian(const std::vector<Polynomial>& images) {
    int n = static_cast<int>(images.size());
    if (n < 1) throw ValueError("jacobian needs at least one image");
    for (const auto& img : images)
        if (img.n() != n) throw DimensionError("jacobian needs n images in n variables");
    PolyMatrix J(static_cast<size_t>(n), std::vector<Polynomial>(static_cast<size_t>(n), Polynomial(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            J[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = images[static_cast<size_t>(j - 1)].partial(i);
    return J;
}

PolyMatrix jacobian(const Automorphism& sigma) { return jacobian(sigma.forward_images()); }

Polynomial det(const PolyMatrix& m) {
    size_t n = m.size();
    if (n == 0) throw ValueError("empty matrix");
    if (n == 1) return m[0][0];
    int vars = m[0][0].n();
    Polynomial result(vars);
    // Laplace expansion along the first row; matrices here stay small
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * det(minor);
        if (j % 2 == 1) term = -term;
        result += term;
    }
    return result;
}

PolyMatrix adjugate(const PolyMatrix& m) {
    size_t n = m.size();
    int vars = m[0][0].n();
    PolyMatrix adj(n, std::vector<Polynomial>(n, Polynomial(vars)));
    if (n == 1) {
        adj[0][0] = Polynomial::constant(vars, 1);
        return adj;
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            PolyMatrix minor;
            minor.reserve(n - 1);
            for (size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<Polynomial> row;
                row.reserve(n - 1);
                for (size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Polynomial cof = det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[j][i] = cof;  // transpose of the cofactor matrix
        }
    }
    return adj;
}

Polynomial jacobian_det(const Automorphism& sigma) { return det(jacobian(sigma)); }

Derivation conjugate(const Automorphism& sigma, const Derivation& d) {
    if (sigma.n() != d.n()) throw DimensionError("automorphism and derivation variable counts differ");
    int n = d.n();
    auto fwd = sigma.forward_images();
    auto inv = sigma.inverse_images();
    std::vector<Polynomial> coeffs;
    coeffs.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) coeffs.push_back(d.apply(inv[static_cast<size_t>(k - 1)]).compose(fwd));
    return Derivation(n, std::move(coeffs));
}

Derivation conjugate_via_jacobian(const Automorphism& sigma, const Derivation& d) {
    if (sigma.n() != d.n()) throw DimensionError("automorphism and derivation variable counts differ");
    int n = d.n();
    auto fwd = sigma.forward_images();
    PolyMatrix J = jacobian(sigma);
    Polynomial jd = det(J);
    if (!jd.is_constant() || jd.is_zero()) throw ValueError("Jacobian determinant is not a nonzero constant");
    Rational scale = Rational(1) / jd.constant_term();
    PolyMatrix Jinv = adjugate(J);  // J^{-1} = adj(J) / det(J)
    std::vector<Polynomial> coeffs(static_cast<size_t>(n), Polynomial(n));
    for (int i = 1; i <= n; ++i) {
        Polynomial moved = d.coeff(i).compose(fwd);  // sigma(a_i)
        if (moved.is_zero()) continue;
        for (int j = 1; j <= n; ++j) {
            const Polynomial& entry = Jinv[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            if (entry.is_zero()) continue;
            coeffs[static_cast<size_t>(j - 1)] += (moved * entry).scaled(scale);
        }
    }
    return Derivation(n, std::move(coeffs));
}

bool check_div_equivariance(const Automorphism& sigma, const Derivation& d) {
    Polynomial lhs = conjugate(sigma, d).divergence();
    Polynomial rhs = d.divergence().compose(sigma.forward_images());
    return lhs == rhs;
}

}  // namespace divlie
