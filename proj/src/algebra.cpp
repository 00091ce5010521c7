#include "aqg/algebra.hpp"

#include <Eigen/SVD>

#include "aqg/haar.hpp"

namespace aqg {

void Algebra::check_shapes() const {
    if (mult.rows() != dim || mult.cols() != dim * dim)
        throw Error(Error::Kind::parse, "algebra: bad multiplication tensor shape");
    if (star.rows() != dim || star.cols() != dim)
        throw Error(Error::Kind::parse, "algebra: bad star shape");
    if (unit.size() != dim) throw Error(Error::Kind::parse, "algebra: bad unit shape");
    if (!mult.allFinite() || !star.allFinite() || !unit.allFinite())
        throw Error(Error::Kind::parse, "algebra: non-finite entries");
}

Element Algebra::mul(const Element& a, const Element& b) const {
    return mult * kron_vec(a, b);
}

Element Algebra::star_of(const Element& a) const { return star * a.conjugate(); }

Matrix Algebra::lmul(const Element& a) const {
    Matrix out = Matrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i)
            if (a(i) != 0.0) out.col(j) += a(i) * mult.col(i * dim + j);
    return out;
}

Matrix Algebra::rmul(const Element& a) const {
    Matrix out = Matrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i)
            if (a(i) != 0.0) out.col(j) += a(i) * mult.col(j * dim + i);
    return out;
}

Vector Algebra::mul2(const Vector& u, const Vector& v) const {
    // (sum u_pq e_p (x) e_q)(sum v_rs e_r (x) e_s), legwise products.
    const Eigen::Index n = dim;
    Matrix U = unvec(u, n, n), V = unvec(v, n, n);
    Matrix out = Matrix::Zero(n, n);
    std::vector<Matrix> lm(n);
    for (Eigen::Index p = 0; p < n; ++p) lm[p] = lmul(Vector::Unit(n, p));
    for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q) {
            if (U(p, q) == 0.0) continue;
            out += U(p, q) * (lm[p] * V * lm[q].transpose());
        }
    return vec(out);
}

HopfMaps build_hopf_maps(const Algebra& alg, const HopfStructure& hopf) {
    const Eigen::Index n = alg.dim;
    HopfMaps maps;
    maps.t1.resize(n * n, n * n);
    maps.t2.resize(n * n, n * n);
    maps.t3.resize(n * n, n * n);
    maps.t4.resize(n * n, n * n);
    std::vector<Matrix> lm(n), rm(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        lm[j] = alg.lmul(Vector::Unit(n, j));
        rm[j] = alg.rmul(Vector::Unit(n, j));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        const Matrix D = unvec(hopf.comult.col(i), n, n);  // Delta(e_i) as n x n array
        for (Eigen::Index j = 0; j < n; ++j) {
            maps.t1.col(i * n + j) = vec(rm[j] * D);              // Delta(e_i)(e_j (x) 1)
            maps.t2.col(i * n + j) = vec(D * rm[j].transpose());  // Delta(e_i)(1 (x) e_j)
            maps.t3.col(i * n + j) = vec(lm[j] * D);              // (e_j (x) 1) Delta(e_i)
            maps.t4.col(i * n + j) = vec(D * lm[j].transpose());  // (1 (x) e_j) Delta(e_i)
        }
    }
    maps.t1_lu.compute(maps.t1);
    maps.t2_lu.compute(maps.t2);
    return maps;
}

namespace {

double rank_ratio_residual(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& s = svd.singularValues();
    const double smax = s(0), smin = s(s.size() - 1);
    if (smax == 0.0) return 1.0;
    // 0 when comfortably full rank, >= 1 when at/below the 1e-9 rank floor.
    return std::min(1.0, 1e-9 * smax / std::max(smin, 1e-300));
}

}  // namespace

Report check_hopf_axioms(const Algebra& alg, const HopfStructure& hopf, double tol) {
    const Eigen::Index n = alg.dim;
    Report rep;
    rep.suite = "axioms";

    std::vector<Vector> e(n);
    for (Eigen::Index i = 0; i < n; ++i) e[i] = Vector::Unit(n, i);

    // Associativity: mult(mult (x) I) = mult(I (x) mult) on all basis triples.
    {
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                const Vector ij = alg.mul(e[i], e[j]);
                for (Eigen::Index k = 0; k < n; ++k)
                    worst = std::max(worst,
                                     residual_vec(alg.mul(ij, e[k]), alg.mul(e[i], alg.mul(e[j], e[k]))));
            }
        rep.add("associativity", worst, tol);
    }
    // Unit is a two-sided identity.
    rep.add("unit", std::max(residual(alg.lmul(alg.unit), eye(n)),
                             residual(alg.rmul(alg.unit), eye(n))),
            tol);
    // Star: involutive, antimultiplicative, fixes the unit.
    rep.add("star-involution", residual(alg.star * alg.star.conjugate(), eye(n)), tol);
    {
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                worst = std::max(worst, residual_vec(alg.star_of(alg.mul(e[i], e[j])),
                                                     alg.mul(alg.star_of(e[j]), alg.star_of(e[i]))));
        rep.add("star-antimultiplicative", worst, tol);
    }
    rep.add("star-unit", residual_vec(alg.star_of(alg.unit), alg.unit), tol);

    // Coassociativity.
    {
        const Matrix lhs = kron(hopf.comult, eye(n)) * hopf.comult;
        const Matrix rhs = kron(eye(n), hopf.comult) * hopf.comult;
        rep.add("coassociativity", residual(lhs, rhs), tol);
    }
    // Comultiplication is a *-homomorphism.
    {
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                const Vector lhs = hopf.comult * alg.mul(e[i], e[j]);
                const Vector rhs = alg.mul2(hopf.comult.col(i), hopf.comult.col(j));
                worst = std::max(worst, residual_vec(lhs, rhs));
            }
        rep.add("comult-multiplicative", worst, tol);
        const Matrix star2 = kron(alg.star, alg.star);
        double worst_star = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            worst_star = std::max(
                worst_star, residual_vec(hopf.comult * alg.star_of(e[i]),
                                         star2 * (hopf.comult.col(i)).conjugate()));
        rep.add("comult-star", worst_star, tol);
    }

    HopfMaps maps = build_hopf_maps(alg, hopf);
    rep.add("t1-invertible", rank_ratio_residual(maps.t1), 0.5);
    rep.add("t2-invertible", rank_ratio_residual(maps.t2), 0.5);

    // Counit laws and counit *-homomorphism.
    rep.add("counit-left", residual(kron(Matrix(hopf.counit), eye(n)) * hopf.comult, eye(n)), tol);
    rep.add("counit-right", residual(kron(eye(n), Matrix(hopf.counit)) * hopf.comult, eye(n)), tol);
    rep.add("counit-multiplicative",
            residual(Matrix(hopf.counit * alg.mult), Matrix(kron_cov(hopf.counit, hopf.counit))),
            tol);
    rep.add("counit-star",
            residual(Matrix(hopf.counit * alg.star), Matrix(hopf.counit.conjugate())), tol);
    rep.add("counit-unit",
            std::abs((hopf.counit * alg.unit)(0) - 1.0), tol);

    // Antipode identities m(S (x) i)(Delta(a)(1 (x) b)) = eps(a) b and
    // m(i (x) S)((b (x) 1) Delta(a)) = eps(a) b.
    {
        const Matrix rhs = kron(Matrix(hopf.counit), eye(n));  // a (x) b -> eps(a) b
        const Matrix lhs1 = alg.mult * kron(hopf.antipode, eye(n)) * maps.t2;
        const Matrix lhs2 = alg.mult * kron(eye(n), hopf.antipode) * maps.t3;
        rep.add("antipode-left", residual(lhs1, rhs), tol);
        rep.add("antipode-right", residual(lhs2, rhs), tol);
    }
    // S(S(a*)*) = a.
    rep.add("antipode-star-identity",
            residual(hopf.antipode * alg.star * hopf.antipode.conjugate() * alg.star.conjugate(),
                     eye(n)),
            tol);
    // S antimultiplicative.
    {
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                worst = std::max(worst,
                                 residual_vec(hopf.antipode * alg.mul(e[i], e[j]),
                                              alg.mul(hopf.antipode * e[j], hopf.antipode * e[i])));
        rep.add("antipode-antimultiplicative", worst, tol);
    }
    // Consequences used downstream: eps . S = eps and (S (x) S) Delta = flip Delta S.
    rep.add("counit-antipode", residual(Matrix(hopf.counit * hopf.antipode), Matrix(hopf.counit)),
            tol);
    rep.add("antipode-comult-flip",
            residual(kron(hopf.antipode, hopf.antipode) * hopf.comult,
                     flip(n, n) * hopf.comult * hopf.antipode),
            tol);
    return rep;
}

Element QuantumGroup::apply_antipode_inv(const Element& a) const {
    return hopf.antipode.partialPivLu().solve(a);
}

namespace {

QuantumGroup assemble(const Algebra& alg, const HopfStructure& hopf, double tol, bool strict,
                      std::vector<std::string> labels,
                      const std::optional<Functional>& haar_candidate) {
    alg.check_shapes();
    const Eigen::Index n = alg.dim;
    if (hopf.comult.rows() != n * n || hopf.comult.cols() != n || hopf.counit.size() != n ||
        hopf.antipode.rows() != n || hopf.antipode.cols() != n)
        throw Error(Error::Kind::parse, "hopf structure: bad shape");
    if (!hopf.comult.allFinite() || !hopf.counit.allFinite() || !hopf.antipode.allFinite())
        throw Error(Error::Kind::parse, "hopf structure: non-finite entries");

    Report axioms = check_hopf_axioms(alg, hopf, tol);
    if (strict && !axioms.all_pass()) {
        const Check* c = axioms.first_failure();
        throw Error(Error::Kind::axiom,
                    "hopf axiom violated: " + c->name + " (residual " + std::to_string(c->residual) + ")");
    }

    QuantumGroup q;
    q.alg = alg;
    q.hopf = hopf;
    q.maps = build_hopf_maps(alg, hopf);
    q.basis_labels = std::move(labels);
    q.tol = tol;
    q.mod = haar_candidate ? verify_haar_and_derive(q, *haar_candidate, tol)
                           : solve_haar_and_derive(q, tol, strict);
    return q;
}

}  // namespace

QuantumGroup make_quantum_group(const Algebra& alg, const HopfStructure& hopf, double tol,
                                bool strict, std::vector<std::string> labels) {
    return assemble(alg, hopf, tol, strict, std::move(labels), std::nullopt);
}

QuantumGroup make_quantum_group_with_haar(const Algebra& alg, const HopfStructure& hopf,
                                          const Functional& haar_candidate, double tol,
                                          std::vector<std::string> labels) {
    return assemble(alg, hopf, tol, true, std::move(labels), haar_candidate);
}

}  // namespace aqg
