#include <doctest.h>

#include "aqg/builtins.hpp"
#include "aqg/haar.hpp"

using namespace aqg;

TEST_CASE("group tables validate") {
    GroupTable::cyclic(2).validate();
    GroupTable::cyclic(4).validate();
    GroupTable::symmetric3().validate();
    GroupTable::dihedral4().validate();
    GroupTable bad = GroupTable::cyclic(3);
    bad.table[1][1] = 1;  // breaks associativity/inverses
    CHECK_THROWS(bad.validate());
    CHECK_THROWS(group_algebra(bad));
    CHECK_THROWS(function_algebra(bad));
}

TEST_CASE("element operations on C[Z2]") {
    auto [alg, h] = group_algebra(GroupTable::cyclic(2));
    const Vector e = Vector::Unit(2, 0), g = Vector::Unit(2, 1);
    CHECK(residual_vec(alg.mul(alg.unit, g), g) == 0.0);               // unit law
    CHECK(residual_vec(alg.star_of(alg.star_of(g + 2.0 * e)), g + 2.0 * e) == 0.0);
    CHECK(residual_vec(h.comult * g, kron_vec(g, g)) == 0.0);          // group-like
}

TEST_CASE("axiom suite passes on builtin group and function algebras") {
    for (const char* name : {"z2", "z4", "s3-group", "s3-function"}) {
        auto q = builtin(name);
        const Report rep = check_hopf_axioms(q.alg, q.hopf, 1e-12);
        INFO(name);
        for (const auto& c : rep.checks) {
            INFO(c.name << " residual " << c.residual);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("antipode of C[Z4] inverts group elements") {
    auto q = builtin("z4");
    // S(g) = g^3.
    CHECK(residual_vec(q.apply_antipode(q.basis(1)), q.basis(3)) == 0.0);
    CHECK(residual_vec(q.apply_antipode(q.basis(2)), q.basis(2)) == 0.0);
}

TEST_CASE("function algebra of Z2 has convolution coproduct") {
    auto q = builtin("tensor:z2,z2");  // exercises tensor path too
    auto z2f = function_algebra(GroupTable::cyclic(2));
    // Delta(d_e) = d_e (x) d_e + d_g (x) d_g.
    Vector expect = Vector::Zero(4);
    expect(0) = 1.0;
    expect(3) = 1.0;
    CHECK(residual_vec(z2f.second.comult.col(0), expect) == 0.0);
}

TEST_CASE("counit of C(Z3) is evaluation at the identity") {
    auto [alg, h] = function_algebra(GroupTable::cyclic(3));
    Covector expect = Covector::Zero(3);
    expect(0) = 1.0;
    CHECK(residual(Matrix(h.counit), Matrix(expect)) == 0.0);
}

TEST_CASE("C(S3) is commutative but not cocommutative") {
    auto q = builtin("s3-function");
    const Eigen::Index n = q.dim();
    double comm = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            comm = std::max(comm, residual_vec(q.alg.mul(q.basis(i), q.basis(j)),
                                               q.alg.mul(q.basis(j), q.basis(i))));
    CHECK(comm < 1e-15);
    CHECK(residual(flip(n, n) * q.hopf.comult, q.hopf.comult) > 0.1);
}

TEST_CASE("Kac-Paljutkin passes axioms, non-commutative, non-cocommutative") {
    auto q = builtin("kac-paljutkin");
    CHECK(q.dim() == 8);
    const Report rep = check_hopf_axioms(q.alg, q.hopf, 1e-9);
    for (const auto& c : rep.checks) {
        INFO(c.name << " residual " << c.residual);
        CHECK(c.pass);
    }
    const Eigen::Index n = 8;
    double comm = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            comm = std::max(comm, residual_vec(q.alg.mul(q.basis(i), q.basis(j)),
                                               q.alg.mul(q.basis(j), q.basis(i))));
    CHECK(comm > 0.1);
    CHECK(residual(flip(n, n) * q.hopf.comult, q.hopf.comult) > 0.1);
}

TEST_CASE("tensor product of group algebras matches the product group") {
    auto [a1, h1] = group_algebra(GroupTable::cyclic(2));
    auto [at, ht] = tensor_product(a1, h1, a1, h1);
    auto [ap, hp] = group_algebra(GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2)));
    // With elements of the product group ordered as (g,h) -> 2g+h, the
    // structure tensors agree entry by entry.
    CHECK(residual(at.mult, ap.mult) == 0.0);
    CHECK(residual(at.star, ap.star) == 0.0);
    CHECK(residual(ht.comult, hp.comult) == 0.0);
    CHECK(residual(ht.antipode, hp.antipode) == 0.0);
    CHECK(residual(Matrix(ht.counit), Matrix(hp.counit)) == 0.0);
}

TEST_CASE("tensor with the trivial algebra is the identity construction") {
    auto q = builtin("tensor:z2,z2");
    CHECK(q.dim() == 4);
    auto q12 = builtin("tensor:z2,s3-function");
    CHECK(q12.dim() == 12);
    const Report rep = check_hopf_axioms(q12.alg, q12.hopf, 1e-9);
    CHECK(rep.all_pass());
}

TEST_CASE("perturbed comultiplication is detected") {
    auto [alg, h] = group_algebra(GroupTable::cyclic(2));
    h.comult(1, 0) += 1e-3;  // Delta(e) picks up a spurious e (x) g component
    const Report rep = check_hopf_axioms(alg, h, 1e-9);
    double coassoc = -1.0;
    for (const auto& c : rep.checks)
        if (c.name == "coassociativity") coassoc = c.residual;
    CHECK(coassoc >= 1e-4);
    CHECK_THROWS_AS(make_quantum_group(alg, h), const Error&);
}
