#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "divlie/expr.hpp"
#include "divlie/json_io.hpp"
#include "divlie/verify.hpp"
#include "divlie/identities.hpp"

namespace {

using namespace divlie;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValueError("cannot open file '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void emit(const Json& j, const std::string& format, const std::string& text) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

Json weights_json(const std::map<WeightClass, Derivation>& parts) {
    Json out = Json::array();
    for (const auto& [w, comp] : parts)
        out.push_back(Json{{"weight", w.rep()}, {"component", derivation_to_json(comp)}});
    return out;
}

struct Options {
    int n = 2;
    std::string format = "text";
    uint64_t seed = 0;
    std::string arg_a, arg_b;
    std::string file;
    int cutoff = 3;
    std::string algebra = "div0";
    std::string tag, name;
    bool want_det = false;
};

int run_command(const CLI::App& app, Options& opt) {
    const std::string& fmt = opt.format;

    if (app.got_subcommand("bracket")) {
        Derivation r = bracket(lower_derivation(opt.arg_a, opt.n), lower_derivation(opt.arg_b, opt.n));
        emit(derivation_to_json(r), fmt, r.str() + "\n");
        return kExitPass;
    }
    if (app.got_subcommand("div")) {
        Polynomial r = lower_derivation(opt.arg_a, opt.n).divergence();
        emit(poly_to_json(r), fmt, r.str() + "\n");
        return kExitPass;
    }
    if (app.got_subcommand("classify")) {
        DivClass c = classify(lower_derivation(opt.arg_a, opt.n));
        Json j{{"kind", c.kind == DivClass::Kind::Zero ? "zero"
                        : c.kind == DivClass::Kind::Constant ? "constant" : "nonconstant"}};
        if (c.kind == DivClass::Kind::Constant) j["value"] = to_string(c.value);
        if (c.kind == DivClass::Kind::NonConstant) j["divergence"] = poly_to_json(c.divergence);
        emit(j, fmt, c.str() + "\n");
        return kExitPass;
    }
    if (app.got_subcommand("apply")) {
        Polynomial r = lower_derivation(opt.arg_a, opt.n).apply(lower_polynomial(opt.arg_b, opt.n));
        emit(poly_to_json(r), fmt, r.str() + "\n");
        return kExitPass;
    }
    if (app.got_subcommand("basis")) {
        AlgebraTag tag = opt.algebra == "divc" ? AlgebraTag::DivC : AlgebraTag::Div0;
        auto basis = enumerate_basis(BasisSpec{opt.n, opt.cutoff, tag});
        Json elements = Json::array();
        std::string text = "dim " + std::to_string(basis.size()) + "\n";
        for (const auto& b : basis) {
            elements.push_back(derivation_to_json(b));
            text += b.str() + "\n";
        }
        emit(Json{{"dim", basis.size()}, {"elements", std::move(elements)}}, fmt, text);
        return kExitPass;
    }
    if (app.got_subcommand("weights")) {
        auto parts = decompose_weights(lower_derivation(opt.arg_a, opt.n));
        std::string text;
        for (const auto& [w, comp] : parts) text += w.str() + ": " + comp.str() + "\n";
        emit(weights_json(parts), fmt, text);
        return kExitPass;
    }
    if (app.got_subcommand("act")) {
        Automorphism sigma = automorphism_from_json(load_json_file(opt.file));
        Derivation r = conjugate(sigma, lower_derivation(opt.arg_a, sigma.n()));
        emit(derivation_to_json(r), fmt, r.str() + "\n");
        return kExitPass;
    }
    if (app.got_subcommand("jacobian")) {
        Automorphism sigma = automorphism_from_json(load_json_file(opt.file));
        if (opt.want_det) {
            Polynomial d = jacobian_det(sigma);
            emit(poly_to_json(d), fmt, d.str() + "\n");
            return kExitPass;
        }
        PolyMatrix J = jacobian(sigma);
        Json rows = Json::array();
        std::string text;
        for (const auto& row : J) {
            Json jrow = Json::array();
            for (size_t c = 0; c < row.size(); ++c) {
                jrow.push_back(poly_to_json(row[c]));
                text += (c ? ", " : "") + row[c].str();
            }
            text += "\n";
            rows.push_back(std::move(jrow));
        }
        emit(rows, fmt, text);
        return kExitPass;
    }
    if (app.got_subcommand("closure")) {
        auto gens = derivation_list_from_json(load_json_file(opt.file));
        ClosureResult r = bracket_closure(gens, opt.cutoff);
        Json rows = Json::array();
        std::string text = "dim " + std::to_string(r.space.dim()) + " rounds " + std::to_string(r.rounds) +
                           (r.saturated ? " saturated\n" : " unsaturated\n");
        for (const auto& row : r.space.rows()) {
            rows.push_back(derivation_to_json(row));
            text += row.str() + "\n";
        }
        emit(Json{{"dim", r.space.dim()}, {"cutoff", r.cutoff}, {"rounds", r.rounds},
                  {"saturated", r.saturated}, {"rows", std::move(rows)}},
             fmt, text);
        return kExitPass;
    }
    if (app.got_subcommand("verify")) {
        Report rep = verify_theorem(opt.tag, opt.n, opt.cutoff, opt.seed);
        emit(report_to_json(rep), fmt, report_to_text(rep));
        return rep.all_pass() ? kExitPass : kExitVerifyFail;
    }
    if (app.got_subcommand("identity")) {
        Report rep{"identity " + opt.name, {check_identity(opt.name, opt.n, opt.cutoff)}};
        emit(report_to_json(rep), fmt, report_to_text(rep));
        return rep.all_pass() ? kExitPass : kExitVerifyFail;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the Lie algebras of divergence-free and constant-divergence polynomial vector fields"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--n", opt.n, "ambient variable count")->capture_default_str();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized suites")->capture_default_str();

    auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two derivations");
    bracket_cmd->add_option("A", opt.arg_a, "first derivation")->required();
    bracket_cmd->add_option("B", opt.arg_b, "second derivation")->required();

    auto* div_cmd = app.add_subcommand("div", "divergence of a derivation");
    div_cmd->add_option("A", opt.arg_a, "derivation")->required();

    auto* classify_cmd = app.add_subcommand("classify", "divergence class: zero, constant or nonconstant");
    classify_cmd->add_option("A", opt.arg_a, "derivation")->required();

    auto* apply_cmd = app.add_subcommand("apply", "apply a derivation to a polynomial");
    apply_cmd->add_option("A", opt.arg_a, "derivation")->required();
    apply_cmd->add_option("P", opt.arg_b, "polynomial")->required();

    auto* basis_cmd = app.add_subcommand("basis", "truncated basis of div0/divc");
    basis_cmd->add_option("--cutoff", opt.cutoff, "max coefficient degree")->required();
    basis_cmd->add_option("--algebra", opt.algebra, "div0 or divc")
        ->check(CLI::IsMember({"div0", "divc"}))
        ->capture_default_str();

    auto* weights_cmd = app.add_subcommand("weights", "weight decomposition of a derivation");
    weights_cmd->add_option("A", opt.arg_a, "derivation")->required();

    auto* act_cmd = app.add_subcommand("act", "conjugate a derivation by an automorphism");
    act_cmd->add_option("--auto", opt.file, "automorphism JSON file")->required();
    act_cmd->add_option("A", opt.arg_a, "derivation")->required();

    auto* jac_cmd = app.add_subcommand("jacobian", "Jacobian matrix of an automorphism");
    jac_cmd->add_option("--auto", opt.file, "automorphism JSON file")->required();
    jac_cmd->add_flag("--det", opt.want_det, "print the determinant instead");

    auto* closure_cmd = app.add_subcommand("closure", "bracket closure of a generator list");
    closure_cmd->add_option("--gens", opt.file, "JSON array of derivations")->required();
    closure_cmd->add_option("--cutoff", opt.cutoff, "degree cutoff")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--theorem", opt.tag, "suite tag")
        ->check(CLI::IsMember(divlie::theorem_tags()))
        ->required();
    verify_cmd->add_option("--cutoff", opt.cutoff, "degree cutoff")->capture_default_str();

    auto* identity_cmd = app.add_subcommand("identity", "check one closed-form identity family");
    identity_cmd->add_option("--name", opt.name, "identity name")
        ->check(CLI::IsMember(divlie::identity_names()))
        ->required();
    identity_cmd->add_option("--cutoff", opt.cutoff, "max exponent degree")->capture_default_str();

    for (auto* sub : {bracket_cmd, div_cmd, classify_cmd, apply_cmd, basis_cmd, weights_cmd, act_cmd,
                      jac_cmd, closure_cmd, verify_cmd, identity_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return run_command(app, opt);
    } catch (const divlie::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << "\n";
        return kExitUsage;
    }
}
