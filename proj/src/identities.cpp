#include "divlie/identities.hpp"

#include <functional>
#include <map>

#include "divlie/linspan.hpp"

namespace divlie {

namespace {

// c * x^g * d_k, skipped entirely when c == 0 so exponents never go negative
Derivation term_or_zero(int n, const Rational& c, std::vector<int> g, int k) {
    if (c == 0) return Derivation(n);
    return Derivation::monomial(Monomial(std::move(g)), k, c);
}

std::vector<int> plus(std::vector<int> a, const std::vector<int>& b) {
    for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

std::vector<int> shift(std::vector<int> a, int i, int delta) {
    a[static_cast<size_t>(i - 1)] += delta;
    return a;
}

// x^g * (sum_k lambda_k H_k)
Derivation euler_combo(int n, const std::vector<int>& g, const std::vector<Rational>& lambda) {
    Derivation d(n);
    for (int k = 1; k <= n; ++k)
        if (lambda[static_cast<size_t>(k - 1)] != 0)
            d = d + Derivation::monomial(Monomial(shift(g, k, 1)), k, lambda[static_cast<size_t>(k - 1)]);
    return d;
}

Rational dot(const std::vector<Rational>& lambda, const std::vector<int>& v) {
    Rational s(0);
    for (size_t k = 0; k < lambda.size(); ++k) s += lambda[k] * v[k];
    return s;
}

// coefficient vectors lambda with x^a * (lambda . H) divergence-free:
// (lambda, a + ones) = 0, spanned by (a_j+1) e_i - (a_i+1) e_j over pairs i < j
std::vector<std::vector<Rational>> divfree_euler_coeffs(int n, const std::vector<int>& a) {
    std::vector<std::vector<Rational>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<Rational> lambda(static_cast<size_t>(n), Rational(0));
            lambda[static_cast<size_t>(i - 1)] = a[static_cast<size_t>(j - 1)] + 1;
            lambda[static_cast<size_t>(j - 1)] = -(a[static_cast<size_t>(i - 1)] + 1);
            out.push_back(std::move(lambda));
        }
    return out;
}

struct Family {
    std::string name;
    std::function<CheckResult(int n, int max_degree)> run;
};

CheckResult pass(const std::string& name) { return CheckResult{name, true, ""}; }
CheckResult fail(const std::string& name, const std::string& witness) { return CheckResult{name, false, witness}; }

CheckResult run_mono_bracket(int n, int D) {
    const std::string name = "mono-bracket";
    auto monos = monomials_up_to(n, D);
    for (const auto& a : monos)
        for (const auto& b : monos)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    Derivation lhs = bracket(Derivation::monomial(a, i), Derivation::monomial(b, j));
                    auto ab = plus(a.exps(), b.exps());
                    Derivation rhs = term_or_zero(n, b.exp(i), shift(ab, i, -1), j) -
                                     term_or_zero(n, a.exp(j), shift(ab, j, -1), i);
                    if (lhs != rhs)
                        return fail(name, "[x^" + a.str() + "*d" + std::to_string(i) + ", x^" + b.str() + "*d" +
                                              std::to_string(j) + "] = " + lhs.str() + " != " + rhs.str());
                }
    return pass(name);
}

CheckResult run_euler_action(int n, int D) {
    const std::string name = "euler-action";
    for (const auto& a : monomials_up_to(n, D))
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Derivation lhs = bracket(Derivation::euler(n, j), Derivation::monomial(a, i));
                Rational c = j == i ? Rational(a.exp(i) - 1) : Rational(a.exp(j));
                Derivation rhs = term_or_zero(n, c, a.exps(), i);
                if (lhs != rhs)
                    return fail(name, "[H" + std::to_string(j) + ", " + a.str() + "*d" + std::to_string(i) +
                                          "]: " + lhs.str() + " != " + rhs.str());
            }
    return pass(name);
}

CheckResult run_partial_action(int n, int D) {
    const std::string name = "partial-action";
    for (const auto& a : monomials_up_to(n, D))
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Derivation lhs = bracket(Derivation::partial(n, j), Derivation::monomial(a, i));
                Derivation rhs = a.exp(j) == 0 ? Derivation(n)
                                               : term_or_zero(n, a.exp(j), shift(a.exps(), j, -1), i);
                if (lhs != rhs)
                    return fail(name, "[d" + std::to_string(j) + ", " + a.str() + "*d" + std::to_string(i) +
                                          "]: " + lhs.str() + " != " + rhs.str());
            }
    return pass(name);
}

CheckResult run_kernel_bracket(int n, int D) {
    const std::string name = "kernel-bracket";
    auto monos = monomials_up_to(n, D);
    for (const auto& a : monos)
        for (const auto& b : monos)
            for (int i = 1; i <= n; ++i) {
                if (a.exp(i) != 0) continue;
                for (int j = 1; j <= n; ++j) {
                    if (b.exp(j) != 0) continue;
                    Derivation lhs = bracket(Derivation::monomial(a, i), Derivation::monomial(b, j));
                    Derivation rhs(n);
                    int bi = b.exp(i), aj = a.exp(j);
                    auto ab = plus(a.exps(), b.exps());
                    if (bi != 0 && aj != 0) {
                        // phi_{ji} of x^(a+b-e_i-e_j) = x^(a+b-e_i-e_j)*(b_i H_j - a_j H_i)
                        auto g = shift(shift(ab, i, -1), j, -1);
                        std::vector<Rational> lambda(static_cast<size_t>(n), Rational(0));
                        lambda[static_cast<size_t>(j - 1)] = bi;
                        lambda[static_cast<size_t>(i - 1)] = -aj;
                        rhs = euler_combo(n, g, lambda);
                    } else if (bi != 0) {
                        rhs = term_or_zero(n, bi, shift(ab, i, -1), j);
                    } else if (aj != 0) {
                        rhs = term_or_zero(n, -aj, shift(ab, j, -1), i);
                    }
                    if (lhs != rhs)
                        return fail(name, "kernel pair " + a.str() + "*d" + std::to_string(i) + ", " + b.str() +
                                              "*d" + std::to_string(j) + ": " + lhs.str() + " != " + rhs.str());
                }
            }
    return pass(name);
}

CheckResult run_euler_pair_bracket(int n, int D) {
    const std::string name = "euler-pair-bracket";
    if (n < 2) return pass(name);
    auto monos = monomials_up_to(n, D);
    for (const auto& a : monos)
        for (const auto& b : monos)
            for (const auto& la : divfree_euler_coeffs(n, a.exps()))
                for (const auto& lb : divfree_euler_coeffs(n, b.exps())) {
                    Derivation lhs = bracket(euler_combo(n, a.exps(), la), euler_combo(n, b.exps(), lb));
                    // x^(a+b) * ((H,b) H' - (H',a) H)
                    std::vector<Rational> mix(static_cast<size_t>(n), Rational(0));
                    Rational ca = dot(la, b.exps()), cb = dot(lb, a.exps());
                    for (int k = 0; k < n; ++k)
                        mix[static_cast<size_t>(k)] = ca * lb[static_cast<size_t>(k)] - cb * la[static_cast<size_t>(k)];
                    Derivation rhs = euler_combo(n, plus(a.exps(), b.exps()), mix);
                    if (lhs != rhs)
                        return fail(name, "euler pair at " + a.str() + ", " + b.str() + ": " + lhs.str() +
                                              " != " + rhs.str());
                }
    return pass(name);
}

CheckResult run_mixed_bracket(int n, int D) {
    const std::string name = "mixed-bracket";
    if (n < 2) return pass(name);
    auto monos = monomials_up_to(n, D);
    for (const auto& b : monos)
        for (int i = 1; i <= n; ++i) {
            if (b.exp(i) != 0) continue;
            for (const auto& a : monos)
                for (const auto& lambda : divfree_euler_coeffs(n, a.exps())) {
                    Derivation lhs = bracket(Derivation::monomial(b, i), euler_combo(n, a.exps(), lambda));
                    Rational cross = dot(lambda, shift(b.exps(), i, -1));
                    Derivation rhs(n);
                    if (a.exp(i) != 0) {
                        std::vector<Rational> scaled(lambda);
                        for (auto& v : scaled) v *= a.exp(i);
                        rhs = euler_combo(n, shift(plus(a.exps(), b.exps()), i, -1), scaled);
                    }
                    rhs = rhs - term_or_zero(n, cross, plus(a.exps(), b.exps()), i);
                    if (lhs != rhs)
                        return fail(name, "mixed pair " + b.str() + "*d" + std::to_string(i) + " vs " + a.str() +
                                              ": " + lhs.str() + " != " + rhs.str());
                    if (a.exp(i) != 0 && !classify(lhs).is_zero())
                        return fail(name, "in-part bracket left the divergence kernel at " + a.str());
                }
        }
    return pass(name);
}

CheckResult run_phi_divergence(int n, int D) {
    const std::string name = "phi-divergence";
    if (n < 2) return pass(name);
    for (const auto& a : monomials_up_to(n, D))
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                if (!classify(phi(n, i, j, Polynomial::monomial(a))).is_zero())
                    return fail(name, "phi(" + std::to_string(i) + "," + std::to_string(j) + ", " + a.str() +
                                          ") has nonzero divergence");
            }
    for (int i = 1; i <= n - 1; ++i)
        for (const auto& a : monomials_up_to(n, D))
            if (!classify(theta(n, i, a)).is_zero())
                return fail(name, "theta(" + std::to_string(i) + ", " + a.str() + ") has nonzero divergence");
    return pass(name);
}

CheckResult run_theta_pair(int n, int D) {
    const std::string name = "theta-pair";
    if (n < 2) return pass(name);
    for (const auto& a : monomials_up_to(n, D))
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                int ai = a.exp(i);
                Derivation left = Derivation::monomial(Monomial::one(n).times_var(i, ai + 1), j);
                Derivation right = Derivation::monomial(Monomial(shift(shift(a.exps(), i, -ai), j, 1)), i);
                Derivation lhs = bracket(left, right);
                Derivation rhs = phi(n, i, j, Polynomial::monomial(a));
                if (lhs != rhs)
                    return fail(name, "pair form of theta at " + a.str() + " (i=" + std::to_string(i) +
                                          ", j=" + std::to_string(j) + "): " + lhs.str() + " != " + rhs.str());
            }
    return pass(name);
}

CheckResult run_theta_swap(int n, int D) {
    const std::string name = "theta-swap";
    if (n < 2) return pass(name);
    for (int i = 1; i <= n - 1; ++i)
        for (const auto& a : monomials_up_to(n, D)) {
            auto swapped = a.exps();
            std::swap(swapped[static_cast<size_t>(i - 1)], swapped[static_cast<size_t>(i)]);
            Derivation lhs = theta(n, i, a).swap_adjacent_vars(i);
            Derivation rhs = -theta(n, i, Monomial(std::move(swapped)));
            if (lhs != rhs)
                return fail(name, "swap of theta(" + std::to_string(i) + ", " + a.str() + ")");
        }
    return pass(name);
}

CheckResult run_theta_raise(int n, int D) {
    const std::string name = "theta-raise";
    if (n < 2) return pass(name);
    for (int i = 1; i <= n - 1; ++i)
        for (const auto& a : monomials_up_to(n, D)) {
            if (a.exp(i) < 1) continue;
            for (int j = 0; j <= 3; ++j) {
                Derivation lhs = bracket(Derivation::monomial(Monomial::one(n).times_var(i + 1, j), i), theta(n, i, a));
                Derivation rhs = Rational(a.exp(i) + 1) * theta(n, i, Monomial(shift(shift(a.exps(), i, -1), i + 1, j)));
                if (lhs != rhs)
                    return fail(name, "raising theta(" + std::to_string(i) + ", " + a.str() + ") by j=" +
                                          std::to_string(j));
            }
        }
    return pass(name);
}

CheckResult run_theta_raise_rev(int n, int D) {
    const std::string name = "theta-raise-rev";
    if (n < 2) return pass(name);
    for (int i = 1; i <= n - 1; ++i)
        for (const auto& a : monomials_up_to(n, D)) {
            if (a.exp(i + 1) < 1) continue;
            for (int j = 0; j <= 3; ++j) {
                Derivation lhs = bracket(Derivation::monomial(Monomial::one(n).times_var(i, j), i + 1), theta(n, i, a));
                Derivation rhs = Rational(a.exp(i + 1) + 1) * theta(n, i, Monomial(shift(shift(a.exps(), i, j), i + 1, -1)));
                if (lhs != rhs)
                    return fail(name, "reverse raising theta(" + std::to_string(i) + ", " + a.str() + ") by j=" +
                                          std::to_string(j));
            }
        }
    return pass(name);
}

CheckResult run_theta_seed(int n, int) {
    const std::string name = "theta-seed";
    if (n < 2) return pass(name);
    for (int i = 1; i <= n - 1; ++i) {
        Derivation first = bracket(Derivation::monomial(Monomial::one(n).times_var(i, 2), i + 1),
                                   Derivation::monomial(Monomial::var(n, i + 1), i));
        if (first != theta(n, i, Monomial::var(n, i)))
            return fail(name, "seed bracket for theta at e_" + std::to_string(i));
        Derivation second = bracket(Derivation::monomial(Monomial::one(n).times_var(i + 1, 2), i),
                                    Derivation::monomial(Monomial::var(n, i), i + 1));
        if (second != -theta(n, i, Monomial::var(n, i + 1)))
            return fail(name, "seed bracket for theta at e_" + std::to_string(i + 1));
    }
    return pass(name);
}

CheckResult run_theta_partial(int n, int D) {
    const std::string name = "theta-partial";
    if (n < 2) return pass(name);
    for (int i = 1; i <= n - 1; ++i)
        for (const auto& a : monomials_up_to(n, D))
            for (int j = 1; j <= n; ++j) {
                Derivation lhs = bracket(Derivation::partial(n, j), theta(n, i, a));
                Derivation rhs(n);
                int aj = a.exp(j);
                if ((j == i || j == i + 1) && aj >= 1)
                    rhs = Rational(aj + 1) * theta(n, i, Monomial(shift(a.exps(), j, -1)));
                else if (j == i && a.exp(i) == 0)
                    rhs = Derivation::monomial(a, i, a.exp(i + 1) + 1);
                else if (j == i + 1 && a.exp(i + 1) == 0)
                    rhs = Derivation::monomial(a, i + 1, -(a.exp(i) + 1));
                else if (j != i && j != i + 1 && aj >= 1)
                    rhs = Rational(aj) * theta(n, i, Monomial(shift(a.exps(), j, -1)));
                if (lhs != rhs)
                    return fail(name, "[d" + std::to_string(j) + ", theta(" + std::to_string(i) + ", " + a.str() +
                                          ")]: " + lhs.str() + " != " + rhs.str());
            }
    return pass(name);
}

CheckResult run_theta_weight(int n, int D) {
    const std::string name = "theta-weight";
    if (n < 2) return pass(name);
    for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
            if (s == t) continue;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    for (const auto& a : monomials_up_to(n, D)) {
                        Derivation field = phi(n, i, j, Polynomial::monomial(a));
                        Derivation lhs = bracket(Derivation::euler_diff(n, s, t), field);
                        Derivation rhs = Rational(a.exp(s) - a.exp(t)) * field;
                        if (lhs != rhs)
                            return fail(name, "weight action on phi(" + std::to_string(i) + "," + std::to_string(j) +
                                                  ", " + a.str() + ") under H" + std::to_string(s) + "-H" +
                                                  std::to_string(t));
                    }
                }
        }
    return pass(name);
}

CheckResult run_theta_diag_raise(int n, int) {
    const std::string name = "theta-diag-raise";
    if (n < 2) return pass(name);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int p = 1; p <= 3; ++p) {
                // exponent p*ones + e_i - e_j
                std::vector<int> g(static_cast<size_t>(n), p);
                g = shift(shift(std::move(g), i, 1), j, -1);
                Derivation lhs = bracket(Derivation::monomial(Monomial::var(n, j), i),
                                         phi(n, i, j, Polynomial::monomial(Monomial(std::move(g)))));
                Polynomial diag = Polynomial::monomial(Monomial(std::vector<int>(static_cast<size_t>(n), p)));
                Derivation rhs = Rational(p + 2) * phi(n, i, j, diag);
                if (lhs != rhs)
                    return fail(name, "diagonal raising at p=" + std::to_string(p) + " (i=" + std::to_string(i) +
                                          ", j=" + std::to_string(j) + ")");
            }
        }
    return pass(name);
}

const std::vector<Family>& families() {
    static const std::vector<Family> fams = {
        {"mono-bracket", run_mono_bracket},
        {"euler-action", run_euler_action},
        {"partial-action", run_partial_action},
        {"kernel-bracket", run_kernel_bracket},
        {"euler-pair-bracket", run_euler_pair_bracket},
        {"mixed-bracket", run_mixed_bracket},
        {"phi-divergence", run_phi_divergence},
        {"theta-pair", run_theta_pair},
        {"theta-swap", run_theta_swap},
        {"theta-raise", run_theta_raise},
        {"theta-raise-rev", run_theta_raise_rev},
        {"theta-seed", run_theta_seed},
        {"theta-partial", run_theta_partial},
        {"theta-weight", run_theta_weight},
        {"theta-diag-raise", run_theta_diag_raise},
    };
    return fams;
}

}  // namespace

std::vector<std::string> identity_names() {
    std::vector<std::string> names;
    names.reserve(families().size());
    for (const auto& f : families()) names.push_back(f.name);
    return names;
}

CheckResult check_identity(const std::string& name, int n, int max_degree) {
    for (const auto& f : families())
        if (f.name == name) return f.run(n, max_degree);
    throw ValueError("unknown identity '" + name + "'");
}

std::vector<CheckResult> check_all_identities(int n, int max_degree) {
    std::vector<CheckResult> out;
    out.reserve(families().size());
    for (const auto& f : families()) out.push_back(f.run(n, max_degree));
    return out;
}

}  // namespace divlie
