// Acceptance suite: runs every criterion exactly, one pass/fail line each.
// Usage: acceptance --cli /path/to/divlie

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "divlie/closure.hpp"
#include "divlie/identities.hpp"
#include "divlie/sampling.hpp"
#include "divlie/verify.hpp"

using namespace divlie;

namespace {

int failures = 0;

void report_line(int number, const std::string& name, bool pass, double seconds, const std::string& note = "") {
    std::printf("[%s] %2d %-28s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(), seconds,
                note.empty() ? "" : " ", note.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

template <class Fn>
void criterion(int number, const std::string& name, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
        pass = fn(note);
    } catch (const std::exception& e) {
        pass = false;
        note = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_line(number, name, pass, secs, note);
}

bool report_ok(const Report& rep, std::string& note) {
    for (const auto& c : rep.checks)
        if (!c.pass) {
            note = rep.suite + ": " + c.check + " [" + c.witness + "]";
            return false;
        }
    return true;
}

// 1. coefficient-formula bracket == operator commutator, 1000 random triples
bool bracket_oracle(std::string& note) {
    Sampler s(1001);
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + t % 3;
        Derivation d = s.derivation(n, 4), e = s.derivation(n, 4);
        Polynomial p = s.polynomial(n, 4);
        if (bracket(d, e).apply(p) != d.apply(e.apply(p)) - e.apply(d.apply(p))) {
            note = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

// 2. divergence identities for products and brackets, 500 instances each
bool divergence_identities(std::string& note) {
    Sampler s(2002);
    for (int t = 0; t < 500; ++t) {
        int n = 1 + t % 3;
        Derivation d = s.derivation(n, 3);
        Polynomial a = s.polynomial(n, 3);
        if ((a * d).divergence() != a * d.divergence() + d.apply(a)) {
            note = "product rule, trial " + std::to_string(t);
            return false;
        }
    }
    for (int t = 0; t < 500; ++t) {
        int n = 1 + t % 3;
        Derivation d = s.derivation(n, 3), e = s.derivation(n, 3);
        if (bracket(d, e).divergence() != d.apply(e.divergence()) - e.apply(d.divergence())) {
            note = "bracket rule, trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

// 3. exhaustive closed-form identities, n <= 3, exponents <= 4
bool identity_suite(std::string& note) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& r : check_all_identities(n, 4))
            if (!r.pass) {
                note = "n=" + std::to_string(n) + " " + r.check + " [" + r.witness + "]";
                return false;
            }
    return true;
}

// 4. truncated basis matches the divergence kernel, n in {1,2,3}, D <= 5
bool basis_lemma(std::string& note) {
    for (int n = 1; n <= 3; ++n) {
        Report rep = verify_theorem("basis-lemma", n, 5, 0);
        if (!report_ok(rep, note)) return false;
    }
    if (divkernel_oracle(2, 1).dim() != 5 || enumerate_basis(BasisSpec{2, 1, AlgebraTag::Div0}).size() != 5) {
        note = "n=2 D=1 dimension is not 5";
        return false;
    }
    if (divkernel_oracle(2, 2).dim() != 9 || enumerate_basis(BasisSpec{2, 2, AlgebraTag::Div0}).size() != 9) {
        note = "n=2 D=2 dimension is not 9";
        return false;
    }
    return true;
}

// 5. the 2n-1 generators (plus the Euler element) generate at truncation, minimally
bool generation(std::string& note) {
    for (int n = 2; n <= 3; ++n) {
        for (const char* tag : {"gen-div0", "gen-divc", "minimality"}) {
            Report rep = verify_theorem(tag, n, 4, 0);
            if (!report_ok(rep, note)) {
                note = "n=" + std::to_string(n) + " " + note;
                return false;
            }
        }
    }
    return true;
}

// 6. ideals of low-degree and random elements exhaust the algebra at truncation
bool simplicity(std::string& note) {
    Report rep = verify_theorem("simplicity", 2, 4, 606);
    return report_ok(rep, note);
}

// 7. pairwise brackets of the constant-divergence basis cover the zero-divergence one
bool derived_subalgebra_check(std::string& note) {
    for (int n = 2; n <= 3; ++n) {
        Report rep = verify_theorem("derived", n, 4, 0);
        if (!report_ok(rep, note)) {
            note = "n=" + std::to_string(n) + " " + note;
            return false;
        }
    }
    return true;
}

// 8. centralizer and normalizer shapes around the diagonal tower
bool cartan_suite(std::string& note) {
    for (int n = 2; n <= 3; ++n) {
        Report rep = verify_theorem("cartan", n, 4, 0);
        if (!report_ok(rep, note)) {
            note = "n=" + std::to_string(n) + " " + note;
            return false;
        }
    }
    return true;
}

// 9. conjugation respects divergence, classes, both routes, and the chain rule
bool equivariance(std::string& note) {
    for (int n = 1; n <= 3; ++n) {
        Report rep = verify_theorem("equivariance", n, 3, 909 + static_cast<uint64_t>(n));
        if (!report_ok(rep, note)) {
            note = "n=" + std::to_string(n) + " " + note;
            return false;
        }
    }
    return true;
}

// 10. the orbit of x1 reaches every monomial mod constants; n=1 stays small
bool module_simplicity(std::string& note) {
    Report rep = verify_theorem("module-simple", 2, 4, 0);
    return report_ok(rep, note);
}

// 11. weight decomposition reconstructs and matches the adjoint eigenvalues
bool weight_decomposition(std::string& note) {
    Sampler s(1111);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + t % 2;
        Derivation d = s.derivation(n, 4);
        Derivation sum(n);
        for (const auto& [w, comp] : decompose_weights(d)) {
            sum = sum + comp;
            if (weight_of(comp) != w) {
                note = "component weight mismatch, trial " + std::to_string(t);
                return false;
            }
            for (int k = 1; k <= n - 1; ++k) {
                std::vector<Rational> lambda(static_cast<size_t>(n), Rational(0));
                lambda[static_cast<size_t>(k - 1)] = 1;
                lambda[static_cast<size_t>(k)] = -1;
                if (bracket(Derivation::euler_diff(n, k, k + 1), comp) != w.eigenvalue(lambda) * comp) {
                    note = "adjoint eigenvalue mismatch, trial " + std::to_string(t);
                    return false;
                }
            }
        }
        if (sum != d) {
            note = "reconstruction failed, trial " + std::to_string(t);
            return false;
        }
    }
    for (const auto& b : enumerate_basis(BasisSpec{2, 4, AlgebraTag::Div0})) {
        WeightClass w = weight_of(b);
        bool has_zero = false;
        for (int v : w.rep()) {
            if (v < 0) {
                note = "negative canonical coordinate on " + b.str();
                return false;
            }
            if (v == 0) has_zero = true;
        }
        if (!has_zero) {
            note = "canonical representative of " + b.str() + " has no zero coordinate";
            return false;
        }
    }
    return true;
}

std::string capture(const std::string& cmd, int& exit_code) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

// 12. fixed seed means byte-identical JSON across runs, and exit codes hold
bool cli_determinism(const std::string& cli, std::string& note) {
    if (cli.empty()) {
        note = "no --cli path given";
        return false;
    }
    std::string base = "'" + cli + "' verify --theorem simplicity --n 2 --cutoff 3 --seed 42 --format json";
    int code1 = 0, code2 = 0;
    std::string first = capture(base, code1);
    std::string second = capture(base, code2);
    if (code1 != 0 || code2 != 0) {
        note = "verify exited with " + std::to_string(code1) + "/" + std::to_string(code2);
        return false;
    }
    if (first.empty() || first != second) {
        note = "JSON output differs across runs";
        return false;
    }
    int code3 = 0;
    capture("'" + cli + "' verify --theorem identities --n 2 --cutoff 2 --seed 7 --format json", code3);
    if (code3 != 0) {
        note = "identities suite exited with " + std::to_string(code3);
        return false;
    }
    int bad = 0;
    capture("'" + cli + "' bracket 'x1*(' 'x2*d1' --n 2 2>/dev/null", bad);
    if (bad != 2) {
        note = "parse error exit code was " + std::to_string(bad) + ", want 2";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    criterion(1, "bracket-oracle", bracket_oracle);
    criterion(2, "divergence-identities", divergence_identities);
    criterion(3, "identity-suite", identity_suite);
    criterion(4, "basis-lemma", basis_lemma);
    criterion(5, "generation", generation);
    criterion(6, "simplicity", simplicity);
    criterion(7, "derived-subalgebra", derived_subalgebra_check);
    criterion(8, "cartan-centralizers", cartan_suite);
    criterion(9, "equivariance", equivariance);
    criterion(10, "module-simplicity", module_simplicity);
    criterion(11, "weight-decomposition", weight_decomposition);
    criterion(12, "cli-determinism", [&](std::string& note) { return cli_determinism(cli, note); });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
