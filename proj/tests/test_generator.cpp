#include <doctest.h>

#include <random>

#include "aqg/builtins.hpp"
#include "aqg/generator.hpp"

using namespace aqg;

TEST_CASE("Q-map special values on C[Z2]") {
    auto ctx = make_generator_context(builtin("z2"));
    const QuantumGroup& q = ctx.q;
    // Q(1)[pihat(b^)] = phi(b).
    const Covector q1 = q_functional(ctx, q.alg.unit);
    for (int j = 0; j < 2; ++j)
        CHECK(std::abs(q1(j) - q.haar_of(q.basis(j))) < 1e-14);
    // Q(g)[pihat(b^)] = phi(g b).
    const Covector qg = q_functional(ctx, q.basis(1));
    for (int j = 0; j < 2; ++j)
        CHECK(std::abs(qg(j) - q.haar_of(q.alg.mul(q.basis(1), q.basis(j)))) < 1e-14);
}

TEST_CASE("Q-map report is green") {
    for (const char* name : {"z2", "s3-group", "kac-paljutkin"}) {
        auto ctx = make_generator_context(builtin(name));
        const Report rep = q_functional_report(ctx, 1e-9);
        INFO(name);
        for (const auto& c : rep.checks) {
            INFO(c.name << " residual " << c.residual);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("generator of the counit is the identity") {
    auto ctx = make_generator_context(builtin("s3-function"));
    const Generator gen = generator_of_rep(ctx, counit_representation(ctx.q));
    CHECK(residual(gen.u, eye(ctx.q.dim())) < 1e-10);
}

TEST_CASE("generator of the regular representation is the dual unitary") {
    for (const char* name : {"z2", "s3-group", "kac-paljutkin"}) {
        auto ctx = make_generator_context(builtin(name));
        const Generator gen = generator_of_rep(ctx, regular_representation(ctx));
        INFO(name);
        CHECK(residual(gen.u, ctx.mu.w_hat) < 1e-9);
    }
}

TEST_CASE("generator is unitary and satisfies the corepresentation identities") {
    auto ctx = make_generator_context(builtin("kac-paljutkin"));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Representation rep = random_representation(ctx, seed);
        REQUIRE(representation_residual(ctx.q, rep) < 1e-10);
        const Generator gen = generator_of_rep(ctx, rep);
        CHECK(residual(gen.u * gen.u.adjoint(), eye(gen.u.rows())) < 1e-9);
        const CorepResiduals cr = corep_residuals(ctx, gen, rep.dim);
        CHECK(cr.corepresentation < 1e-9);
        CHECK(cr.exchange < 1e-9);
        CHECK(intertwining_residual(ctx, rep, gen) < 1e-9);
    }
}

TEST_CASE("blockwise corepresentation residual matches the literal route") {
    auto ctx = make_generator_context(builtin("s3-group"));
    const Representation rep = random_representation(ctx, 11);
    const Generator gen = generator_of_rep(ctx, rep);
    const CorepResiduals fast = corep_residuals(ctx, gen, rep.dim);
    const CorepResiduals lit = corep_residuals_literal(ctx, gen, rep.dim);
    CHECK(std::abs(fast.corepresentation - lit.corepresentation) < 1e-11);
    CHECK(std::abs(fast.exchange - lit.exchange) < 1e-11);
    // And on a deliberately broken unitary the residual is large both ways.
    Generator bad = gen;
    bad.u(0, 0) += 0.05;
    const CorepResiduals fast_bad = corep_residuals(ctx, bad, rep.dim);
    const CorepResiduals lit_bad = corep_residuals_literal(ctx, bad, rep.dim);
    CHECK(fast_bad.corepresentation > 1e-3);
    CHECK(std::abs(fast_bad.corepresentation - lit_bad.corepresentation) <
          0.02 * lit_bad.corepresentation + 1e-9);
}

TEST_CASE("round trips between representations and generators") {
    auto ctx = make_generator_context(builtin("kac-paljutkin"));
    // pi_{U(phi)} = phi for random representations.
    for (std::uint64_t seed : {5u, 6u}) {
        const Representation rep = random_representation(ctx, seed);
        const Generator gen = generator_of_rep(ctx, rep);
        const Representation back = rep_of_generator(ctx, gen);
        double worst = 0.0;
        for (size_t i = 0; i < rep.images.size(); ++i)
            worst = std::max(worst, residual(back.images[i], rep.images[i]));
        CHECK(worst < 1e-9);
    }
    // U(pi_{U'}) = U' for the regular-representation corepresentation.
    const Generator w{ctx.mu.w_hat};
    const Representation back = rep_of_generator(ctx, w);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < ctx.q.dim(); ++i)
        worst = std::max(worst, residual(back.images[i], ctx.pi[i]));
    CHECK(worst < 1e-9);
    const Generator again = generator_of_rep(ctx, back);
    CHECK(residual(again.u, ctx.mu.w_hat) < 1e-9);
}

TEST_CASE("generator of pi (+) counit is block diagonal") {
    auto ctx = make_generator_context(builtin("kac-paljutkin"));
    const Representation rep = direct_sum(regular_representation(ctx), counit_representation(ctx.q));
    const Generator gen = generator_of_rep(ctx, rep);
    const Eigen::Index n = ctx.q.dim(), k = rep.dim;
    // Expected: What on the K1 block, identity on the K2 block.
    Matrix expect = Matrix::Zero(n * k, n * k);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) {
            expect.block(a * k, b * k, n, n) = ctx.mu.w_hat.block(a * n, b * n, n, n);
            if (a == b) expect(a * k + n, b * k + n) = 1.0;
        }
    CHECK(residual(gen.u, expect) < 1e-9);
}

TEST_CASE("slice identity holds for regular and random representations") {
    auto ctx6 = make_generator_context(builtin("s3-function"));
    {
        const Representation rep = regular_representation(ctx6);
        const Generator gen = generator_of_rep(ctx6, rep);
        CHECK(slice_identity_residual(ctx6, rep, gen) < 1e-10);
    }
    auto ctx8 = make_generator_context(builtin("kac-paljutkin"));
    {
        const Representation rep = random_representation(ctx8, 17);
        const Generator gen = generator_of_rep(ctx8, rep);
        CHECK(slice_identity_residual(ctx8, rep, gen) < 1e-9);
    }
}

TEST_CASE("action basics and action property") {
    auto ctx = make_generator_context(builtin("z2"));
    // U = identity generator (counit representation extended): alpha(x) = 1 (x) x.
    const Representation eps = counit_representation(ctx.q);
    const Generator id_gen = generator_of_rep(ctx, eps);
    const Matrix a = action_alpha(id_gen, Matrix::Constant(1, 1, 2.5), 1);
    CHECK(residual(a, 2.5 * eye(2)) < 1e-12);
    // alpha is an action for What and for a random small representation.
    const Generator w{ctx.mu.w_hat};
    CHECK(action_property_residual(ctx, w, 2) < 1e-9);
    auto ctx8 = make_generator_context(builtin("kac-paljutkin"));
    const Representation rep = random_representation(ctx8, 23);
    const Generator gen = generator_of_rep(ctx8, rep);
    CHECK(action_property_residual(ctx8, gen, rep.dim) < 1e-9);
    // alpha on matrix units agrees with the direct conjugation.
    for (Eigen::Index r = 0; r < rep.dim; ++r)
        for (Eigen::Index s = 0; s < rep.dim; ++s) {
            Matrix e = Matrix::Zero(rep.dim, rep.dim);
            e(r, s) = 1.0;
            CHECK(residual(action_alpha_unit(gen, r, s, rep.dim),
                           action_alpha(gen, e, rep.dim)) < 1e-11);
        }
}

TEST_CASE("fixed points match the commutant") {
    auto ctx = make_generator_context(builtin("z2"));
    const Representation rep = regular_representation(ctx);
    const Generator gen = generator_of_rep(ctx, rep);
    const auto fixed = fixed_points(gen, rep.dim);
    CHECK(fixed.size() == 2);  // commutant of the regular representation of C[Z2]
    const auto comm = commutant_basis(rep.images);
    CHECK(comm.size() == 2);
    // pi (+) pi has a commutant of dimension 4 x (number of blocks) = 8.
    const Representation dbl = direct_sum(rep, rep);
    const Generator gen2 = generator_of_rep(ctx, dbl);
    CHECK(fixed_points(gen2, dbl.dim).size() == 8);
    CHECK(commutant_basis(dbl.images).size() == 8);
}

TEST_CASE("invariant mean on the dual") {
    auto ctx = make_generator_context(builtin("z2"));
    // Dual of C[Z2] is C(Z2); the mean is the uniform average.
    const Covector m = invariant_mean(ctx);
    CHECK(std::abs(m(0) - 0.5) < 1e-12);
    CHECK(std::abs(m(1) - 0.5) < 1e-12);
    for (const char* name : {"s3-function", "kac-paljutkin"}) {
        auto c = make_generator_context(builtin(name));
        const Report rep = invariant_mean_report(c, 1e-9);
        INFO(name);
        for (const auto& ch : rep.checks) {
            INFO(ch.name << " residual " << ch.residual);
            CHECK(ch.pass);
        }
    }
}

TEST_CASE("conditional expectation onto the commutant") {
    auto ctx = make_generator_context(builtin("z2"));
    const Representation rep = regular_representation(ctx);
    const Report r = conditional_expectation_report(ctx, rep, 1e-9);
    for (const auto& c : r.checks) {
        INFO(c.name << " residual " << c.residual);
        CHECK(c.pass);
    }
    // Hand oracle: E(x) = (x + pi(g) x pi(g)) / 2, the average over the dual
    // group action.
    const Generator gen = generator_of_rep(ctx, rep);
    const Matrix emat = conditional_expectation(ctx, gen, rep.dim);
    const Matrix pg = ctx.pi[1];
    std::mt19937_64 rng(3);
    std::normal_distribution<double> d(0.0, 1.0);
    for (int t = 0; t < 5; ++t) {
        Matrix x(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) x(i, j) = Complex(d(rng), d(rng));
        const Matrix ex = unvec(Vector(emat * vec(x)), 2, 2);
        CHECK(residual(ex, 0.5 * (x + pg * x * pg)) < 1e-10);
    }
}

TEST_CASE("conditional expectation report holds on Kac-Paljutkin regular rep") {
    auto ctx = make_generator_context(builtin("kac-paljutkin"));
    const Report r = conditional_expectation_report(ctx, regular_representation(ctx), 1e-9);
    for (const auto& c : r.checks) {
        INFO(c.name << " residual " << c.residual);
        CHECK(c.pass);
    }
}

TEST_CASE("counit generator induces the scalar representation") {
    auto ctx = make_generator_context(builtin("s3-group"));
    const Generator id_gen{eye(ctx.q.dim())};
    const Representation rep = rep_of_generator(ctx, id_gen);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < ctx.q.dim(); ++i)
        worst = std::max(worst,
                         std::abs(rep.images[i](0, 0) - ctx.q.apply_counit(ctx.q.basis(i))));
    CHECK(worst < 1e-10);
}

TEST_CASE("degenerate representation is rejected") {
    auto ctx = make_generator_context(builtin("z2"));
    Representation bad;
    bad.dim = 2;
    bad.images = {Matrix::Zero(2, 2), Matrix::Zero(2, 2)};  // not unital
    CHECK_THROWS_AS(generator_of_rep(ctx, bad), const Error&);
}
