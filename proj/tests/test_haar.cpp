#include <doctest.h>

#include "aqg/builtins.hpp"
#include "aqg/haar.hpp"

using namespace aqg;

TEST_CASE("Haar on C[Z2] is the point mass at the identity") {
    auto q = builtin("z2");
    Covector expect(2);
    expect << 1.0, 0.0;
    CHECK(residual(Matrix(q.mod.haar), Matrix(expect)) < 1e-14);
    CHECK(residual(q.mod.gram, eye(2)) < 1e-14);  // group elements orthonormal
}

TEST_CASE("Haar on C(S3) is the uniform measure") {
    auto q = builtin("s3-function");
    Covector expect = Covector::Constant(6, 1.0 / 6.0);
    CHECK(residual(Matrix(q.mod.haar), Matrix(expect)) < 1e-14);
    CHECK(residual(q.mod.gram, (1.0 / 6.0) * eye(6)) < 1e-14);
}

TEST_CASE("Haar re-substitution oracle on Kac-Paljutkin") {
    auto q = builtin("kac-paljutkin");
    const Eigen::Index n = q.dim();
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Matrix d = unvec(q.hopf.comult.col(i), n, n);
        worst = std::max(worst, residual_vec(Vector(d * q.mod.haar.transpose()),
                                             Vector(q.mod.haar(i) * q.alg.unit)));
    }
    CHECK(worst < 1e-10);
    CHECK(q.mod.gram_min_eig > 0.0);
}

TEST_CASE("right Haar equals phi on unimodular builtins and is right invariant") {
    for (const char* name : {"z2", "s3-function", "kac-paljutkin"}) {
        auto q = builtin(name);
        INFO(name);
        CHECK(residual(Matrix(q.mod.haar_right), Matrix(q.mod.haar)) < 1e-10);
        const Eigen::Index n = q.dim();
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const Matrix d = unvec(q.hopf.comult.col(i), n, n);
            worst = std::max(worst,
                             residual_vec(Vector(d.transpose() * q.mod.haar_right.transpose()),
                                          Vector(q.mod.haar_right(i) * q.alg.unit)));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("modular element and twist are trivial on all builtins") {
    for (const char* name : {"z2", "z4", "s3-group", "s3-function", "kac-paljutkin",
                             "tensor:z2,s3-function"}) {
        auto q = builtin(name);
        INFO(name);
        CHECK(residual_vec(q.mod.delta_elt, q.alg.unit) < 1e-10);
        CHECK(std::abs(q.mod.mu - 1.0) < 1e-10);
        CHECK(residual(q.mod.rho, eye(q.dim())) < 1e-10);
        CHECK(q.mod.tracial);
    }
}

TEST_CASE("non-tracial reference functional produces a nontrivial modular map") {
    // phi'(x) = Tr(D x) on M_2 with D = diag(2,1)/3 is faithful and positive
    // but not tracial; the associated map solving phi'(ab) = phi'(b rho(a))
    // is conjugation by D.  This exercises the solver logic outside the
    // Haar pipeline (phi' is not invariant; only the pairing is used).
    Algebra alg;
    alg.dim = 4;  // M_2 with matrix-unit basis E00,E01,E10,E11
    alg.mult = Matrix::Zero(4, 16);
    auto idx = [](int i, int j) { return 2 * i + j; };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if (j == k) alg.mult(idx(i, l), idx(i, j) * 4 + idx(k, l)) = 1.0;
    alg.star = Matrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) alg.star(idx(j, i), idx(i, j)) = 1.0;
    alg.unit = Vector::Zero(4);
    alg.unit(idx(0, 0)) = alg.unit(idx(1, 1)) = 1.0;

    Covector phi(4);
    phi << 2.0 / 3.0, 0.0, 0.0, 1.0 / 3.0;  // Tr(diag(2,1)/3 x)
    // Pairing matrix B_ij = phi(e_i e_j) and rho = B^{-1} B^T.
    Matrix b(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            b(i, j) = (phi * alg.mul(Vector::Unit(4, i), Vector::Unit(4, j)))(0);
    const Matrix rho = b.partialPivLu().solve(b.transpose());
    CHECK(residual(rho, eye(4)) > 0.1);
    // Oracle: Tr(Dab) = Tr(b rho(a) D) forces rho(a) = D a D^{-1}, so the
    // matrix units scale by the weight ratios: E01 -> 2 E01, E10 -> E10 / 2.
    Matrix expect = Matrix::Zero(4, 4);
    expect(idx(0, 0), idx(0, 0)) = 1.0;
    expect(idx(1, 1), idx(1, 1)) = 1.0;
    expect(idx(0, 1), idx(0, 1)) = 2.0;
    expect(idx(1, 0), idx(1, 0)) = 0.5;
    CHECK(residual(rho, expect) < 1e-12);
}

TEST_CASE("strong left invariance holds on builtins") {
    CHECK(strong_left_invariance_residual(builtin("z2")) < 1e-12);
    CHECK(strong_left_invariance_residual(builtin("s3-function")) < 1e-10);
    CHECK(strong_left_invariance_residual(builtin("kac-paljutkin")) < 1e-9);
}

TEST_CASE("haar-modular report is all green on builtins") {
    for (const char* name : {"z2", "z4", "s3-group", "s3-function", "kac-paljutkin"}) {
        auto q = builtin(name);
        const Report rep = haar_modular_report(q, 1e-9);
        INFO(name);
        for (const auto& c : rep.checks) {
            INFO(c.name << " residual " << c.residual);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("degenerate input is rejected") {
    // An algebra whose comultiplication admits no one-dimensional invariant
    // functional space: break Delta so the solver sees a 2-dim nullspace.
    auto [alg, h] = group_algebra(GroupTable::cyclic(2));
    // Delta(g) = g (x) e makes both coordinate functionals invariant-ish;
    // the strict pipeline must refuse (axioms fail first, so use solver direct).
    QuantumGroup q;
    q.alg = alg;
    q.hopf = h;
    q.hopf.comult = Matrix::Zero(4, 2);
    q.hopf.comult.col(0)(0) = 1.0;  // Delta(e) = e (x) e
    q.hopf.comult.col(1)(1) = 1.0;  // Delta(g) = e (x) g
    CHECK_THROWS_AS(solve_haar_and_derive(q, 1e-9, true), const Error&);
}
