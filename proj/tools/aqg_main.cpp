// aqg: build, verify and explore finite-dimensional quantum groups.
//
// Exit codes: 0 success / all checks pass, 1 parse or shape error,
// 2 axiom violation, 3 no positive invariant functional, 4 verification
// residual above tolerance, 64 usage error.

#include <cstdio>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "aqg/builtins.hpp"
#include "aqg/compact.hpp"
#include "aqg/io.hpp"
#include "aqg/verify.hpp"

namespace {

using namespace aqg;

void print_report(const Report& rep, double tol) {
    for (const auto& c : rep.checks)
        std::printf("[%s] %-42s residual=%.3e tol=%.1e\n", c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.residual, c.tol);
    const int failures =
        static_cast<int>(std::count_if(rep.checks.begin(), rep.checks.end(),
                                       [](const Check& c) { return !c.pass; }));
    std::printf("%zu checks, %d failures (tolerance %.1e)\n", rep.checks.size(), failures, tol);
}

int cmd_builtin(const std::string& name, const std::string& out) {
    const QuantumGroup q = builtin(name);
    const std::string text = serialize_document(document_of(q));
    if (out.empty()) {
        std::cout << text << "\n";
    } else {
        save_document(out, document_of(q));
        std::printf("wrote %s (dim %ld)\n", out.c_str(), static_cast<long>(q.dim()));
    }
    return 0;
}

void print_row(const char* name, const Covector& v) {
    std::printf("%s [", name);
    for (Eigen::Index i = 0; i < v.size(); ++i)
        std::printf("%s(%.6g,%.6g)", i ? " " : "", v(i).real(), v(i).imag());
    std::printf("]\n");
}

int cmd_verify(const std::string& path, double tol, const std::string& suite) {
    const QuantumGroup q = load_quantum_group(path, tol);
    const Report rep = run_suite(q, suite, tol);
    print_report(rep, tol);
    const DerivedSummary s = derived_summary(q);
    std::printf("derived: tracial=%s  mu=(%g,%g)  min Gram eigenvalue=%.3e\n",
                s.tracial ? "true" : "false", s.mu.real(), s.mu.imag(), s.gram_min_eig);
    print_row("derived: haar =", s.haar);
    print_row("derived: modular element =", Covector(s.delta_elt.transpose()));
    std::printf("blocks (n, d, q=n/d):");
    for (const auto& [n, d] : s.qdim_rows)
        std::printf(" (%ld, %.6g, %.6g)", static_cast<long>(n), d,
                    static_cast<double>(n) / d);
    std::printf("\n");
    if (!rep.all_pass()) {
        const Check* c = rep.first_failure();
        std::printf("FAILED: %s (residual %.3e > tol %.1e)\n", c->name.c_str(), c->residual,
                    c->tol);
        return 4;
    }
    return 0;
}

int cmd_dualize(const std::string& path, const std::string& out, double tol) {
    const QuantumGroup q = load_quantum_group(path, tol);
    const QuantumGroup dual = dual_aqg(q);
    if (out.empty()) {
        std::cout << serialize_document(document_of(dual)) << "\n";
    } else {
        save_document(out, document_of(dual));
        std::printf("wrote %s (dim %ld)\n", out.c_str(), static_cast<long>(dual.dim()));
    }
    return 0;
}

int cmd_generator(const std::string& path, const std::string& rep_kind, std::uint64_t seed,
                  double tol) {
    const QuantumGroup q = load_quantum_group(path, tol);
    GeneratorContext ctx = make_generator_context(q);
    Representation rep;
    if (rep_kind == "regular")
        rep = regular_representation(ctx);
    else if (rep_kind == "counit")
        rep = counit_representation(q);
    else if (rep_kind == "random")
        rep = random_representation(ctx, seed);
    else
        throw Error(Error::Kind::parse, "unknown representation kind '" + rep_kind + "'");

    const Generator gen = generator_of_rep(ctx, rep);
    Report out;
    out.suite = "generator";
    out.add("generator-unitary", residual(gen.u * gen.u.adjoint(), eye(gen.u.rows())), tol);
    const CorepResiduals cr = corep_residuals(ctx, gen, rep.dim);
    out.add("corepresentation-identity", cr.corepresentation, tol);
    out.add("exchange-relation", cr.exchange, tol);
    const Representation back = rep_of_generator(ctx, gen);
    double worst = 0.0;
    for (size_t i = 0; i < rep.images.size(); ++i)
        worst = std::max(worst, residual(back.images[i], rep.images[i]));
    out.add("round-trip", worst, tol);
    if (rep_kind == "regular")
        out.add("generator-equals-dual-unitary", residual(gen.u, ctx.mu.w_hat), tol);
    if (rep_kind == "counit")
        out.add("generator-equals-identity", residual(gen.u, eye(q.dim())), tol);
    std::printf("representation '%s': dim K = %ld\n", rep_kind.c_str(),
                static_cast<long>(rep.dim));
    print_report(out, tol);
    return out.all_pass() ? 0 : 4;
}

int cmd_report_qdim(const std::string& path, bool csv, double tol) {
    const QuantumGroup q = load_quantum_group(path, tol);
    GeneratorContext ctx = make_generator_context(q);
    const PeterWeylData pw = decompose_corepresentations(ctx);
    const auto rows = coamenability_gap_report(pw);
    if (csv) {
        std::printf("alpha,n,d,q\n");
        for (const auto& r : rows)
            std::printf("%s,%ld,%.17g,%.17g\n", r.label.c_str(), static_cast<long>(r.n), r.d,
                        r.gap);
    } else {
        std::printf("%-8s %6s %14s %14s\n", "alpha", "n", "d", "q=n/d");
        for (const auto& r : rows)
            std::printf("%-8s %6ld %14.8g %14.8g\n", r.label.c_str(), static_cast<long>(r.n),
                        r.d, r.gap);
    }
    return 0;
}

int cmd_suq2(double q, double max_spin, bool csv) {
    const PeterWeylData pw = suq2_data(q, max_spin);
    const auto rows = coamenability_gap_report(pw);
    if (csv) {
        std::printf("alpha,n,d,q\n");
        for (const auto& r : rows)
            std::printf("%s,%ld,%.17g,%.17g\n", r.label.c_str(), static_cast<long>(r.n), r.d,
                        r.gap);
    } else {
        std::printf("%-8s %6s %16s %16s %16s\n", "spin", "n", "d", "q=n/d", "ratio to prev");
        for (size_t t = 0; t < rows.size(); ++t)
            std::printf("%-8s %6ld %16.8g %16.8g %16.8g\n", rows[t].label.c_str(),
                        static_cast<long>(rows[t].n), rows[t].d, rows[t].gap,
                        t ? rows[t].gap / rows[t - 1].gap : 1.0);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"aqg: finite-dimensional quantum-group toolkit"};
    app.require_subcommand(1);

    std::string name, path, out, suite = "all", rep_kind = "regular";
    double tol = 1e-9, qpar = 0.5, max_spin = 2.0;
    std::uint64_t seed = 1;
    bool csv = false;

    auto* c_builtin = app.add_subcommand("builtin", "emit a builtin quantum group as JSON");
    c_builtin->add_option("name", name, "z2|z4|s3-group|s3-function|kac-paljutkin|tensor:<a>,<b>")
        ->required();
    c_builtin->add_option("-o,--output", out, "output file (stdout if omitted)");

    auto* c_verify = app.add_subcommand("verify", "run verification suites on a JSON file");
    c_verify->add_option("file", path, "quantum-group JSON file")->required();
    c_verify->add_option("--tol", tol, "comparison tolerance");
    c_verify->add_option("--suite", suite, "axioms|lemmas|gns|generator|compact|all");

    auto* c_dual = app.add_subcommand("dualize", "emit the dual quantum group as JSON");
    c_dual->add_option("file", path, "quantum-group JSON file")->required();
    c_dual->add_option("-o,--output", out, "output file (stdout if omitted)");
    c_dual->add_option("--tol", tol, "comparison tolerance");

    auto* c_gen = app.add_subcommand("generator", "build a unitary generator and report residuals");
    c_gen->add_option("file", path, "quantum-group JSON file")->required();
    c_gen->add_option("--rep", rep_kind, "regular|counit|random");
    c_gen->add_option("--seed", seed, "seed for random representations");
    c_gen->add_option("--tol", tol, "comparison tolerance");

    auto* c_report = app.add_subcommand("report", "tabulated reports");
    auto* c_qdim = c_report->add_subcommand("qdim", "quantum-dimension table of a JSON file");
    c_qdim->add_option("file", path, "quantum-group JSON file")->required();
    c_qdim->add_flag("--csv", csv, "CSV output");
    c_qdim->add_option("--tol", tol, "comparison tolerance");
    c_report->require_subcommand(1);

    auto* c_suq2 = app.add_subcommand("suq2", "quantum SU(2) dimension table");
    c_suq2->add_option("--q", qpar, "deformation parameter in (0,1)")->required();
    c_suq2->add_option("--max-spin", max_spin, "largest spin (half-integer)");
    c_suq2->add_flag("--csv", csv, "CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (*c_builtin) return cmd_builtin(name, out);
        if (*c_verify) return cmd_verify(path, tol, suite);
        if (*c_dual) return cmd_dualize(path, out, tol);
        if (*c_gen) return cmd_generator(path, rep_kind, seed, tol);
        if (*c_report) return cmd_report_qdim(path, csv, tol);
        if (*c_suq2) return cmd_suq2(qpar, max_spin, csv);
    } catch (const aqg::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return static_cast<int>(e.kind);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 64;
}
