#include <doctest.h>

#include <random>

#include "aqg/builtins.hpp"
#include "aqg/dual.hpp"

using namespace aqg;

namespace {

Vector random_element(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(d(rng), d(rng));
    return v;
}

}  // namespace

TEST_CASE("Fourier transform on C[Z2]") {
    auto q = builtin("z2");
    // g^ takes value 0 on e and 1 on g (phi picks the e-coefficient of x g).
    const Covector gh = fourier(q, q.basis(1));
    CHECK(std::abs(gh(0)) < 1e-14);
    CHECK(std::abs(gh(1) - 1.0) < 1e-14);
    // 1^ = phi.
    CHECK(residual(Matrix(fourier(q, q.alg.unit)), Matrix(q.mod.haar)) < 1e-14);
}

TEST_CASE("Fourier round trip on Kac-Paljutkin") {
    auto q = builtin("kac-paljutkin");
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        const Vector a = random_element(q.dim(), rng);
        CHECK(residual_vec(fourier_inv(q, fourier(q, a)), a) < 1e-10);
    }
}

TEST_CASE("dual of C[Z2] is C(Z2) on the nose") {
    auto q = builtin("z2");
    const QuantumGroup dual = dual_aqg(q);
    auto [falg, fhopf] = function_algebra(GroupTable::cyclic(2));
    // With phi(g) = delta_{g,e}, the dual basis element h^ is the indicator
    // of h^{-1}; for Z2 every element is its own inverse, so the structure
    // constants agree without any reindexing.
    CHECK(residual(dual.alg.mult, falg.mult) < 1e-12);
    CHECK(residual(dual.alg.star, falg.star) < 1e-12);
    CHECK(residual_vec(dual.alg.unit, falg.unit) < 1e-12);
    CHECK(residual(dual.hopf.comult, fhopf.comult) < 1e-12);
    CHECK(residual(Matrix(dual.hopf.counit), Matrix(fhopf.counit)) < 1e-12);
    CHECK(residual(dual.hopf.antipode, fhopf.antipode) < 1e-12);
}

TEST_CASE("dual of C[S3] is C(S3) after inverting the labels") {
    auto q = builtin("s3-group");
    const QuantumGroup dual = dual_aqg(q);
    auto [falg, fhopf] = function_algebra(GroupTable::symmetric3());
    // Relabelling intertwiner T e_h = d_{h^{-1}}.
    const GroupTable g = GroupTable::symmetric3();
    Matrix t = Matrix::Zero(6, 6);
    for (int h = 0; h < 6; ++h) t(g.inverse(h), h) = 1.0;
    // T intertwines the full structure.
    double worst = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            worst = std::max(worst,
                             residual_vec(Vector(t * dual.alg.mul(q.basis(i), q.basis(j))),
                                          falg.mul(Vector(t * q.basis(i)), Vector(t * q.basis(j)))));
    CHECK(worst < 1e-12);
    CHECK(residual(fhopf.comult * t, kron(t, t) * dual.hopf.comult) < 1e-12);
    CHECK(residual(t * dual.hopf.antipode, fhopf.antipode * t) < 1e-12);
    CHECK(residual(Matrix(fhopf.counit * t), Matrix(dual.hopf.counit)) < 1e-12);
    CHECK(residual_vec(Vector(t * dual.alg.unit), falg.unit) < 1e-12);
    double worst_star = 0.0;
    for (int i = 0; i < 6; ++i)
        worst_star = std::max(worst_star,
                              residual_vec(Vector(t * dual.alg.star_of(q.basis(i))),
                                           falg.star_of(Vector(t * q.basis(i)))));
    CHECK(worst_star < 1e-12);
}

TEST_CASE("dual of Kac-Paljutkin is an 8-dimensional quantum group") {
    auto q = builtin("kac-paljutkin");
    const QuantumGroup dual = dual_aqg(q);  // strict construction re-checks axioms
    CHECK(dual.dim() == 8);
    CHECK(dual.mod.tracial);
    // Neither commutative nor cocommutative (self-dual up to iso).
    double comm = 0.0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            comm = std::max(comm, residual_vec(dual.alg.mul(q.basis(i), q.basis(j)),
                                               dual.alg.mul(q.basis(j), q.basis(i))));
    CHECK(comm > 0.1);
    CHECK(residual(flip(8, 8) * dual.hopf.comult, dual.hopf.comult) > 0.1);
}

TEST_CASE("double dual is canonically isomorphic to the original") {
    for (const char* name : {"z2", "s3-function", "kac-paljutkin"}) {
        INFO(name);
        const Report rep = double_dual_report(builtin(name), 1e-9);
        for (const auto& c : rep.checks) {
            INFO(c.name << " residual " << c.residual);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("conjugation map special values") {
    auto q = builtin("z2");
    const Matrix f = conj_map_matrix(q);
    // F fixes 1^ = phi and g^ (g self-inverse and S(g) = g).
    CHECK(residual_vec(Vector(f * q.alg.unit.conjugate()), q.alg.unit) < 1e-14);
    CHECK(residual_vec(Vector(f * q.basis(1).conjugate()), q.basis(1)) < 1e-14);
}

TEST_CASE("support companion acts as the dual unit") {
    for (const char* name : {"z2", "s3-function", "kac-paljutkin"}) {
        auto q = builtin(name);
        const QuantumGroup dual = dual_aqg(q);
        const Element c = support_companion(q, dual);
        double worst = 0.0;
        for (Eigen::Index i = 0; i < q.dim(); ++i) {
            // c^ (S(a*))^ = (S(a*))^ in dual coordinates.
            const Element t = q.hopf.antipode * q.alg.star_of(q.basis(i));
            worst = std::max(worst, residual_vec(dual.alg.mul(c, t), t));
        }
        INFO(name);
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("duality identity suite is green on builtins") {
    for (const char* name : {"z2", "s3-function", "kac-paljutkin"}) {
        auto q = builtin(name);
        const Report rep = lemma_suite(q, 1e-9);
        INFO(name);
        for (const auto& c : rep.checks) {
            INFO(c.name << " residual " << c.residual);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("fault injection trips the identity suite") {
    auto [alg, h] = group_algebra(GroupTable::cyclic(2));
    h.comult(1, 0) += 1e-3;
    const QuantumGroup q = make_quantum_group(alg, h, 1e-9, /*strict=*/false);
    const Report rep = lemma_suite(q, 1e-9);
    double worst = 0.0;
    for (const auto& c : rep.checks) worst = std::max(worst, c.residual);
    CHECK(worst >= 1e-4);
}
