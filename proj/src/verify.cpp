#include "aqg/verify.hpp"

#include "aqg/compact.hpp"
#include "aqg/haar.hpp"

namespace aqg {

namespace {

Report generator_suite(const QuantumGroup& q, double tol, std::uint64_t seed, int n_random) {
    Report rep;
    rep.suite = "generator";
    GeneratorContext ctx = make_generator_context(q);
    rep.merge(q_functional_report(ctx, tol));

    // Named generators: the regular representation generates the dual
    // unitary, the counit generates the identity.
    {
        const Generator gw = generator_of_rep(ctx, regular_representation(ctx));
        rep.add("generator-of-regular-is-dual-unitary", residual(gw.u, ctx.mu.w_hat), tol);
        const Generator ge = generator_of_rep(ctx, counit_representation(q));
        rep.add("generator-of-counit-is-identity", residual(ge.u, eye(q.dim())), tol);
        const Representation back = rep_of_generator(ctx, Generator{ctx.mu.w_hat});
        double worst = 0.0;
        for (Eigen::Index i = 0; i < q.dim(); ++i)
            worst = std::max(worst, residual(back.images[i], ctx.pi[i]));
        rep.add("rep-of-dual-unitary-is-regular", worst, tol);
    }
    // Random block-diagonal representations: round trip, corepresentation
    // and exchange identities.
    double worst_round = 0.0, worst_corep = 0.0, worst_exch = 0.0, worst_unitary = 0.0;
    for (int t = 0; t < n_random; ++t) {
        const Representation r = random_representation(ctx, seed + static_cast<std::uint64_t>(t));
        const Generator gen = generator_of_rep(ctx, r);
        worst_unitary =
            std::max(worst_unitary, residual(gen.u * gen.u.adjoint(), eye(gen.u.rows())));
        const Representation back = rep_of_generator(ctx, gen);
        for (size_t i = 0; i < r.images.size(); ++i)
            worst_round = std::max(worst_round, residual(back.images[i], r.images[i]));
        const CorepResiduals cr = corep_residuals(ctx, gen, r.dim);
        worst_corep = std::max(worst_corep, cr.corepresentation);
        worst_exch = std::max(worst_exch, cr.exchange);
    }
    rep.add("random-generators-unitary", worst_unitary, tol);
    rep.add("random-generators-round-trip", worst_round, tol);
    rep.add("random-generators-corepresentation", worst_corep, tol);
    rep.add("random-generators-exchange-relation", worst_exch, tol);

    // Slice identity for the regular representation.
    {
        const Representation r = regular_representation(ctx);
        const Generator gen = generator_of_rep(ctx, r);
        rep.add("slice-identity-regular", slice_identity_residual(ctx, r, gen), tol);
        rep.add("intertwining-regular", intertwining_residual(ctx, r, gen), tol);
    }
    rep.merge(invariant_mean_report(ctx, tol));
    rep.merge(conditional_expectation_report(ctx, regular_representation(ctx), tol));
    return rep;
}

Report compact_suite(const QuantumGroup& q, double tol) {
    Report rep;
    rep.suite = "compact";
    GeneratorContext ctx = make_generator_context(q);
    const PeterWeylData pw = decompose_corepresentations(ctx);
    rep.merge(decompose_report(ctx, pw, tol));
    rep.add("orthogonality-relations", orthogonality_residual(ctx, pw), tol);
    rep.merge(f_z_report(ctx, pw, tol));
    rep.merge(epsilon_report(ctx, pw, tol));
    rep.merge(adjoint_rep_report(ctx, pw, tol));
    if (q.mod.tracial) rep.merge(q0_report(ctx, tol));
    rep.merge(phi_z_report(ctx, pw, tol));
    for (const auto& row : coamenability_gap_report(pw))
        rep.add("quantum-dimension-gap-in-unit-interval-" + row.label,
                (row.gap > 0.0 && row.gap <= 1.0 + tol) ? 0.0 : 1.0, 0.5);
    return rep;
}

}  // namespace

Report run_suite(const QuantumGroup& q, const std::string& suite, double tol, std::uint64_t seed,
                 int n_random) {
    Report rep;
    rep.suite = suite;
    if (suite == "axioms" || suite == "all") {
        rep.merge(check_hopf_axioms(q.alg, q.hopf, tol));
        rep.merge(haar_modular_report(q, tol));
    }
    if (suite == "lemmas" || suite == "all") rep.merge(lemma_suite(q, tol));
    if (suite == "gns" || suite == "all") rep.merge(gns_report(q, tol));
    if (suite == "generator" || suite == "all") rep.merge(generator_suite(q, tol, seed, n_random));
    if (suite == "compact" || suite == "all") rep.merge(compact_suite(q, tol));
    if (rep.checks.empty())
        throw Error(Error::Kind::parse, "unknown suite '" + suite + "'");
    return rep;
}

DerivedSummary derived_summary(const QuantumGroup& q) {
    DerivedSummary s;
    s.haar = q.mod.haar;
    s.delta_elt = q.mod.delta_elt;
    s.mu = q.mod.mu;
    s.tracial = q.mod.tracial;
    s.gram_min_eig = q.mod.gram_min_eig;
    GeneratorContext ctx = make_generator_context(q);
    const PeterWeylData pw = decompose_corepresentations(ctx);
    for (const auto& blk : pw.blocks) s.qdim_rows.push_back({blk.n, blk.d});
    return s;
}

}  // namespace aqg
