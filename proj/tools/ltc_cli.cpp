// Command-line front end: solution spaces, properness, decompositions,
// hypothesis reports and the worked-example reproduction.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ltc/audit.hpp"
#include "ltc/derivations.hpp"
#include "ltc/io.hpp"

using namespace ltc;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInvalidInput = 2 };

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch:
        case ErrorKind::NotAssociative:
        case ErrorKind::InvalidDocument:
        case ErrorKind::HashMismatch:
        case ErrorKind::NotGMA:
            return kInvalidInput;
        default:
            return kCheckFailed;
    }
}

struct Run {
    Json doc = Json::object();
    std::ostringstream text;
};

std::string operator_text(const StructureConstants& alg, const LinearOperator& op, const std::string& indent) {
    std::string out;
    for (std::size_t j = 0; j < op.cols(); ++j) {
        Vector col = op.column(j);
        if (!is_zero(col)) out += indent + alg.label(j) + " -> " + format_element(alg, col) + "\n";
    }
    return out.empty() ? indent + "0\n" : out;
}

std::string span_text(const StructureConstants& alg, const Subspace& s) {
    std::string out = "span{";
    for (std::size_t i = 0; i < s.dim(); ++i) out += (i ? ", " : "") + format_element(alg, s.basis_vector(i));
    return out + "}";
}

std::string corner_vector_text(const Vector& v) { return to_string(v); }

Json checks_json(const CheckReport& r) {
    Json arr = Json::array();
    for (const auto& c : r.checks) arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return arr;
}

void checks_text(std::ostream& os, const CheckReport& r, const std::string& indent = "  ") {
    for (const auto& c : r.checks)
        os << indent << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
}

void header(Run& run, const CatalogEntry& e) {
    run.doc["algebra"] = e.name;
    run.doc["algebra_hash"] = e.algebra.content_hash();
    run.doc["dim"] = e.algebra.dim();
    run.text << "algebra " << e.name << " (dim " << e.algebra.dim() << ")\n"
             << "hash " << e.algebra.content_hash() << "\n";
}

const Gma& require_gma(const CatalogEntry& e, const char* command) {
    if (!e.gma) throw Error(ErrorKind::NotGMA, std::string(command) + " needs an algebra with block structure");
    return *e.gma;
}

int cmd_solve(Run& run, const std::string& algebra, const std::string& kind_name) {
    CatalogEntry e = catalog_entry(algebra);
    auto kind = parse_identity_kind(kind_name);
    if (!kind) throw Error(ErrorKind::InvalidDocument, "unknown identity " + kind_name);
    header(run, e);
    Subspace space = kind == IdentityKind::SingularJordanDerivation ? solve_identity_space(require_gma(e, "sjder"), *kind)
                                                                    : solve_identity_space(e.algebra, *kind);
    std::vector<LinearOperator> ops = operators_of(space, e.algebra.dim());
    run.doc["identity"] = short_name(*kind);
    run.doc["solution_dim"] = space.dim();
    Json basis = Json::array();
    for (const auto& op : ops) basis.push_back(operator_to_json(e.algebra, op)["matrix"]);
    run.doc["basis"] = std::move(basis);
    run.text << "identity " << short_name(*kind) << " (" << to_string(*kind) << ")\n"
             << "dim " << space.dim() << "\n";
    for (std::size_t i = 0; i < ops.size(); ++i)
        run.text << "basis " << i + 1 << ":\n" << operator_text(e.algebra, ops[i], "    ");
    return kOk;
}

Json failure_json(const StructureConstants& alg, const PropernessFailure& f) {
    Json j{{"note", f.note}, {"witness", vector_to_json(f.witness)}};
    if (f.side) j["side"] = to_string(*f.side);
    if (f.input) j["input"] = format_element(alg, *f.input);
    return j;
}

int cmd_proper(Run& run, const std::string& algebra, const std::string& op_file) {
    CatalogEntry e = catalog_entry(algebra);
    header(run, e);
    const LinearOperator phi = operator_from_json(e.algebra, read_json_file(op_file));
    const StructureConstants& alg = e.algebra;

    Membership ltc = is_identity_member(alg, IdentityKind::LieTripleCentralizer, phi);
    if (!ltc.holds) {
        const auto& w = *ltc.witness;
        std::string t;
        for (std::size_t i = 0; i < w.tuple.size(); ++i) t += (i ? "," : "") + alg.label(w.tuple[i]);
        run.doc["verdict"] = "NOT LTC";
        run.doc["witness"] = Json{{"triple", t}, {"lhs", format_element(alg, w.lhs)}, {"rhs", format_element(alg, w.rhs)}};
        run.text << "NOT LTC at (" << t << "): " << format_element(alg, w.lhs) << " vs " << format_element(alg, w.rhs) << "\n";
        return kCheckFailed;
    }

    const bool unit_route = e.gma && e.gma->is_unital() && check_annihilating_conditions(*e.gma).holds();
    PropernessResult direct = is_proper_direct(alg, phi, e.probe);
    PropernessResult result = unit_route ? is_proper_thm33(*e.gma, phi) : direct;
    run.doc["method"] = unit_route ? "unit criterion" : "direct feasibility";
    run.text << "method " << (unit_route ? "unit criterion" : "direct feasibility") << "\n";
    if (unit_route && is_proper(result) != is_proper(direct)) {
        run.doc["verdict"] = "DISAGREEMENT";
        run.text << "DISAGREEMENT between the unit criterion and direct feasibility\n";
        return kCheckFailed;
    }

    if (const auto* cert = std::get_if<PropernessCertificate>(&result)) {
        bool chi_zero = cert->chi.is_zero();
        run.doc["verdict"] = "PROPER";
        run.doc["lambda"] = format_element(alg, cert->lambda);
        run.doc["chi"] = operator_to_json(alg, cert->chi)["matrix"];
        run.doc["transcript"] = checks_json(cert->transcript);
        run.text << "PROPER lambda=" << format_element(alg, cert->lambda) << " chi=" << (chi_zero ? "0" : "see below")
                 << "\n";
        if (!chi_zero) run.text << "chi:\n" << operator_text(alg, cert->chi, "    ");
        run.text << "transcript:\n";
        checks_text(run.text, cert->transcript);
        return cert->transcript.passed() ? kOk : kCheckFailed;
    }
    const auto& f = std::get<PropernessFailure>(result);
    run.doc["verdict"] = "NOT PROPER";
    run.doc["failure"] = failure_json(alg, f);
    run.text << "NOT PROPER\n" << "  " << f.note << "\n";
    if (f.side) {
        const Gma& u = *e.gma;
        StructureConstants corner = u.corner_algebra(*f.side == Block::A ? Block::B : Block::A);
        run.text << "  witness " << (*f.side == Block::A ? "alpha4(1_A) = " : "beta1(1_B) = ")
                 << format_element(corner, f.witness) << " outside " << span_text(corner, f.target) << "\n";
    } else if (f.input) {
        run.text << "  X = " << format_element(alg, *f.input) << (e.probe && *e.probe == *f.input ? " (A0)" : "") << "\n"
                 << "  phi(X) = " << format_element(alg, f.witness) << " outside " << span_text(alg, f.target) << "\n";
    }
    return kOk;
}

const char* corner_name(Block from, Block to) {
    static const char* names[4][4] = {{"alpha1", "alpha2", "alpha3", "alpha4"},
                                      {"tau1", "tau2", "tau3", "tau4"},
                                      {"gamma1", "gamma2", "gamma3", "gamma4"},
                                      {"beta1", "beta2", "beta3", "beta4"}};
    return names[static_cast<int>(from)][static_cast<int>(to)];
}

int cmd_decompose_blocks(Run& run, const CatalogEntry& e, const LinearOperator& phi) {
    const Gma& u = require_gma(e, "decompose");
    BlockDecomposition d = block_decompose(u, phi);
    Json corners = Json::object();
    run.text << "nonzero corner maps:\n";
    for (Block from : {Block::A, Block::M, Block::N, Block::B})
        for (Block to : {Block::A, Block::M, Block::N, Block::B}) {
            const Matrix& m = d.map(from, to);
            if (m.is_zero()) continue;
            Json cols = Json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(vector_to_json(m.column(c)));
            corners[corner_name(from, to)] = std::move(cols);
            run.text << "  " << corner_name(from, to) << " : " << to_string(from) << " -> " << to_string(to) << "\n";
        }
    run.doc["corners"] = std::move(corners);

    const bool is_ltc = is_identity_member(e.algebra, IdentityKind::LieTripleCentralizer, phi).holds;
    run.doc["ltc"] = is_ltc;
    run.text << "Lie triple centralizer: " << (is_ltc ? "yes" : "no") << "\n";
    if (!u.is_unital()) {
        run.text << "no unit: block conditions not evaluated\n";
        return kOk;
    }
    CheckReport conditions = verify_thm31_conditions(u, d);
    run.doc["block_conditions"] = checks_json(conditions);
    run.text << "block conditions:\n";
    checks_text(run.text, conditions);
    int status = conditions.passed() == is_ltc ? kOk : kCheckFailed;
    if (check_annihilating_conditions(u).holds()) {
        CheckReport strong = corollary32_strengthen(u, d);
        run.doc["center_conditions"] = checks_json(strong);
        run.text << "center conditions:\n";
        checks_text(run.text, strong);
        if (is_ltc && !strong.passed()) status = kCheckFailed;
    }
    if (status != kOk) run.text << "MISMATCH between membership and block conditions\n";
    return status;
}

int cmd_decompose(Run& run, const std::string& algebra, const std::string& op_file, const std::string& xi_file) {
    CatalogEntry e = catalog_entry(algebra);
    header(run, e);
    const LinearOperator op = operator_from_json(e.algebra, read_json_file(op_file));
    if (xi_file.empty()) return cmd_decompose_blocks(run, e, op);

    const Gma& u = require_gma(e, "decompose --xi");
    const LinearOperator xi = operator_from_json(e.algebra, read_json_file(xi_file));
    auto result = decompose_generalized_ltd(u, op, xi);
    if (const auto* inf = std::get_if<Infeasible>(&result)) {
        run.doc["verdict"] = "INFEASIBLE";
        run.doc["reason"] = inf->reason;
        run.text << "INFEASIBLE " << inf->reason << "\n";
        return kCheckFailed;
    }
    const auto& g = std::get<GltdDecomposition>(result);
    const StructureConstants& alg = e.algebra;
    run.doc["verdict"] = "DECOMPOSED";
    run.doc["within_hypotheses"] = g.within_hypotheses;
    run.doc["delta"] = operator_to_json(alg, g.delta)["matrix"];
    run.doc["d"] = operator_to_json(alg, g.d)["matrix"];
    run.doc["psi"] = operator_to_json(alg, g.psi)["matrix"];
    run.doc["lambda"] = format_element(alg, g.lambda);
    run.doc["transcript"] = checks_json(g.transcript);
    run.text << "DECOMPOSED Lambda = delta + d + psi + lambda X"
             << (g.within_hypotheses ? "" : " (outside certified hypotheses)") << "\n"
             << "delta:\n" << operator_text(alg, g.delta, "    ") << "d:\n" << operator_text(alg, g.d, "    ")
             << "psi:\n" << operator_text(alg, g.psi, "    ") << "lambda = " << format_element(alg, g.lambda) << "\n"
             << "transcript:\n";
    checks_text(run.text, g.transcript);
    return kOk;
}

std::vector<Vector> read_candidates(const std::string& file) {
    if (file.empty()) return {};
    Json j = read_json_file(file);
    if (!j.is_array()) throw Error(ErrorKind::InvalidDocument, file + " must hold an array of vectors");
    std::vector<Vector> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector_from_json(j[i], "candidate " + std::to_string(i)));
    return out;
}

int cmd_hypotheses(Run& run, const std::string& algebra, const std::string& m0_file, const std::string& n0_file) {
    CatalogEntry e = catalog_entry(algebra);
    header(run, e);
    const Gma& u = require_gma(e, "hypotheses");
    if (!u.is_unital()) throw Error(ErrorKind::NotUnital, "the GMA has no unit");
    AnnihilatorReport ann = check_annihilating_conditions(u);
    run.doc["annihilating"] = Json{{"A", ann.a_holds()}, {"B", ann.b_holds()}};
    run.text << "annihilating conditions: A " << (ann.a_holds() ? "hold" : "fail") << ", B "
             << (ann.b_holds() ? "hold" : "fail") << "\n";
    if (!ann.holds()) {
        run.text << "remaining hypotheses need the annihilating conditions\n";
        return kOk;
    }
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    Cor36Report cor = check_cor36_hypotheses(u);
    run.doc["properness_hypotheses"] = Json{{"pi_B(Z(U)) = Z(B)", cor.pi_b_is_center_b},
                                            {"[[A,A],A] = A", cor.a_is_triple_span},
                                            {"pi_A(Z(U)) = Z(A)", cor.pi_a_is_center_a},
                                            {"[[B,B],B] = B", cor.b_is_triple_span},
                                            {"all LTCs proper", cor.holds()}};
    run.text << "properness hypotheses:\n"
             << "  (i)  pi_B(Z(U)) = Z(B): " << yn(cor.pi_b_is_center_b) << ", [[A,A],A] = A: " << yn(cor.a_is_triple_span)
             << "\n"
             << "  (ii) pi_A(Z(U)) = Z(A): " << yn(cor.pi_a_is_center_a) << ", [[B,B],B] = B: " << yn(cor.b_is_triple_span)
             << "\n"
             << "  every Lie triple centralizer is proper: " << yn(cor.holds()) << "\n";

    Thm41HypothesisReport h = check_thm41_hypotheses(u, read_candidates(m0_file), read_candidates(n0_file));
    Json dj{{"i", h.i()}, {"ii", h.ii()}, {"iii", h.iii()}, {"iv", h.iv()},
            {"a", h.a_no_central_ideal}, {"b", h.b_no_central_ideal}, {"c", to_string(h.c)}, {"d", to_string(h.d)},
            {"m0_tested", h.m0_tested}, {"n0_tested", h.n0_tested}, {"two_torsion_free", h.two_torsion_free},
            {"satisfied", h.satisfied()}};
    if (h.m0) dj["m0"] = vector_to_json(*h.m0);
    if (h.n0) dj["n0"] = vector_to_json(*h.n0);
    run.doc["derivation_hypotheses"] = std::move(dj);
    run.text << "derivation hypotheses:\n"
             << "  (i) " << yn(h.i()) << "  (ii) " << yn(h.ii()) << "  (iii) " << yn(h.iii()) << "  (iv) " << yn(h.iv())
             << "\n"
             << "  (a) " << yn(h.a_no_central_ideal) << "  (b) " << yn(h.b_no_central_ideal) << "  (c) " << to_string(h.c)
             << (h.m0 ? " with m0 = " + corner_vector_text(*h.m0) : "") << " [" << h.m0_tested << " tested]"
             << "  (d) " << to_string(h.d) << (h.n0 ? " with n0 = " + corner_vector_text(*h.n0) : "") << " ["
             << h.n0_tested << " tested]\n"
             << "  2-torsion free: yes (rational coefficients)\n"
             << "  satisfied: " << yn(h.satisfied()) << "\n";
    return kOk;
}

int cmd_verify_paper(Run& run) {
    CheckReport r = verify_paper();
    run.doc["checks"] = checks_json(r);
    std::size_t failed = 0;
    for (const auto& c : r.checks) failed += c.passed ? 0 : 1;
    checks_text(run.text, r, "");
    run.text << r.checks.size() - failed << "/" << r.checks.size() << " checks passed\n";
    run.doc["passed"] = r.checks.size() - failed;
    run.doc["total"] = r.checks.size();
    return failed == 0 ? kOk : kCheckFailed;
}

int cmd_export_operator(Run& run, const std::string& algebra, const std::string& which, const std::string& out) {
    CatalogEntry e = catalog_entry(algebra);
    const std::size_t n = e.algebra.dim();
    LinearOperator op(n, n);
    if (which == "identity") {
        op = Matrix::identity(n);
    } else if (which == "zero") {
    } else if (which == "phi") {
        if (e.name != "example_1_2") throw Error(ErrorKind::InvalidDocument, "phi is only defined for example_1_2");
        op = example_1_2().phi;
    } else {
        auto colon = which.find(':');
        auto kind = colon == std::string::npos ? std::nullopt : parse_identity_kind(which.substr(0, colon));
        if (!kind) throw Error(ErrorKind::InvalidDocument, "operator must be identity, zero, phi or <kind>:<index>");
        std::size_t index = 0;
        try {
            index = std::stoul(which.substr(colon + 1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidDocument, "bad basis index in " + which);
        }
        Subspace s = kind == IdentityKind::SingularJordanDerivation ? solve_identity_space(require_gma(e, "sjder"), *kind)
                                                                    : solve_identity_space(e.algebra, *kind);
        if (index < 1 || index > s.dim())
            throw Error(ErrorKind::InvalidDocument, "basis index out of range 1.." + std::to_string(s.dim()));
        op = operator_from_vector(s.basis_vector(index - 1), n);
    }
    Json doc = operator_to_json(e.algebra, op);
    if (out.empty()) {
        run.doc = std::move(doc);
    } else {
        std::ofstream f(out);
        if (!f) throw Error(ErrorKind::InvalidDocument, "cannot write " + out);
        f << doc.dump(2) << "\n";
        run.doc["written"] = out;
        run.text << "wrote " << out << "\n";
    }
    return kOk;
}

int cmd_export_algebra(Run& run, const std::string& algebra) {
    CatalogEntry e = catalog_entry(algebra);
    run.doc = e.gma ? to_json(e.gma->to_context()) : to_json(e.algebra);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lie triple centralizer toolkit for generalized matrix algebras"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string algebra, op_file, xi_file, kind, m0_file, n0_file, which, out;
    std::vector<std::string> kinds;
    for (auto k : {IdentityKind::LieCentralizer, IdentityKind::LieTripleCentralizer, IdentityKind::JordanCentralizer,
                   IdentityKind::Derivation, IdentityKind::LieDerivation, IdentityKind::JordanDerivation,
                   IdentityKind::LieTripleDerivation, IdentityKind::SingularJordanDerivation})
        kinds.push_back(short_name(k));

    auto* solve = app.add_subcommand("solve", "Dimension and canonical basis of an identity's solution space");
    solve->add_option("algebra", algebra, "Catalog name or document")->required();
    solve->add_option("--identity", kind, "Identity kind")->required()->check(CLI::IsMember(kinds));

    auto* proper = app.add_subcommand("proper", "Decide whether a Lie triple centralizer is proper");
    proper->add_option("algebra", algebra)->required();
    proper->add_option("operator", op_file, "Operator file")->required();

    auto* decompose = app.add_subcommand("decompose", "Block decomposition, or generalized LTD decomposition with --xi");
    decompose->add_option("algebra", algebra)->required();
    decompose->add_option("operator", op_file, "Operator file")->required();
    decompose->add_option("--xi", xi_file, "Associated Lie triple derivation");

    auto* hyp = app.add_subcommand("hypotheses", "Hypothesis reports for properness and derivation decompositions");
    hyp->add_option("algebra", algebra)->required();
    hyp->add_option("--candidates-m0", m0_file, "JSON array of M vectors to try for m0");
    hyp->add_option("--candidates-n0", n0_file, "JSON array of N vectors to try for n0");

    auto* verify = app.add_subcommand("verify-paper", "Reproduce the worked example and run the structural audits");

    auto* exop = app.add_subcommand("export-operator", "Write an operator file: identity, zero, phi or <kind>:<index>");
    exop->add_option("algebra", algebra)->required();
    exop->add_option("which", which)->required();
    exop->add_option("-o,--output", out, "Destination file (stdout when omitted)");

    auto* exalg = app.add_subcommand("export-algebra", "Print the algebra or Morita context document");
    exalg->add_option("algebra", algebra)->required();

    for (auto* sub : {solve, proper, decompose, hyp, verify, exop, exalg}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalidInput;
    }

    std::string command;
    for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
    Run run;
    run.doc["command"] = command;
    int status = kOk;
    try {
        if (solve->parsed()) status = cmd_solve(run, algebra, kind);
        else if (proper->parsed()) status = cmd_proper(run, algebra, op_file);
        else if (decompose->parsed()) status = cmd_decompose(run, algebra, op_file, xi_file);
        else if (hyp->parsed()) status = cmd_hypotheses(run, algebra, m0_file, n0_file);
        else if (verify->parsed()) status = cmd_verify_paper(run);
        else if (exop->parsed()) status = cmd_export_operator(run, algebra, which, out);
        else if (exalg->parsed()) status = cmd_export_algebra(run, algebra);
    } catch (const Error& e) {
        status = exit_code(e.kind());
        std::cerr << "error: " << e.what() << "\n";
        if (format == "json") std::cout << Json{{"command", command}, {"error", e.what()}, {"exit_status", status}}.dump(2) << "\n";
        return status;
    }

    const bool raw_doc = exop->parsed() || exalg->parsed();
    if (format == "json" || (raw_doc && run.text.str().empty())) {
        if (!raw_doc) run.doc["exit_status"] = status;
        std::cout << run.doc.dump(2) << "\n";
    } else {
        std::cout << run.text.str();
    }
    return status;
}
