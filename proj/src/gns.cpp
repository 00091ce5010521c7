#include "aqg/gns.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace aqg {

GnsSpace gns(const QuantumGroup& q) {
    const Matrix g = 0.5 * (q.mod.gram + q.mod.gram.adjoint());
    Eigen::LLT<Matrix> llt(g);
    if (llt.info() != Eigen::Success)
        throw Error(Error::Kind::haar, "Gram matrix is not positive definite");
    GnsSpace out;
    out.orthonormalizer = Matrix(llt.matrixL()).adjoint();
    out.orthonormalizer_inv =
        out.orthonormalizer.triangularView<Eigen::Upper>().solve(eye(q.dim()));
    Eigen::SelfAdjointEigenSolver<Matrix> es(g);
    out.gram_min_eig = es.eigenvalues().minCoeff();
    return out;
}

Matrix left_rep(const QuantumGroup& q, const GnsSpace& g, const Element& a) {
    return g.orthonormalizer * q.alg.lmul(a) * g.orthonormalizer_inv;
}

Matrix dual_rep(const QuantumGroup& q, const QuantumGroup& dual, const GnsSpace& g,
                const Element& omega_coords) {
    (void)q;
    return g.orthonormalizer * dual.alg.lmul(omega_coords) * g.orthonormalizer_inv;
}

MultiplicativeUnitary multiplicative_unitary(const QuantumGroup& q, const GnsSpace& g) {
    const Eigen::Index n = q.dim();
    const Matrix cc = kron(g.orthonormalizer, g.orthonormalizer);
    const Matrix cc_inv = kron(g.orthonormalizer_inv, g.orthonormalizer_inv);
    MultiplicativeUnitary out;
    // W (C (x) C) T1 = (C (x) C) flip, solving the defining relation on the
    // spanning family Delta(b)(a (x) 1).
    out.w = cc * flip(n, n) * q.maps.t1_lu.solve(cc_inv);
    const Matrix sigma = flip(n, n);
    out.w_hat = sigma * out.w.adjoint() * sigma;
    return out;
}

TomitaData tomita(const QuantumGroup& q, const GnsSpace& g) {
    // The conjugate-linear map Lambda(a) -> Lambda(a*) acts on frame
    // coordinates as v -> T conj(v) with T = C star conj(C^{-1}).
    const Matrix t = g.orthonormalizer * q.alg.star * g.orthonormalizer_inv.conjugate();
    TomitaData out;
    out.nabla = t.transpose() * t.conjugate();
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (out.nabla + out.nabla.adjoint()));
    if (es.eigenvalues().minCoeff() <= 0)
        throw Error(Error::Kind::haar, "Tomita operator is not positive definite");
    const Matrix nabla_inv_half =
        es.eigenvectors() *
        es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
        es.eigenvectors().adjoint();
    out.j = t * nabla_inv_half.conjugate();
    return out;
}

namespace {

// Orthonormal column basis of the span of a set of vectorised operators.
Matrix span_basis(const Matrix& columns, double rel_tol) {
    Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > rel_tol * s(0)) ++rank;
    return svd.matrixU().leftCols(rank);
}

double span_equality_residual(const Matrix& a, const Matrix& b, double rel_tol) {
    const Matrix qa = span_basis(a, rel_tol), qb = span_basis(b, rel_tol);
    if (qa.cols() != qb.cols()) return 1.0;
    // Projector difference in Frobenius norm, scaled by the dimension.
    return (qa * qa.adjoint() - qb * qb.adjoint()).norm() /
           std::max(1.0, std::sqrt(static_cast<double>(qa.cols())));
}

}  // namespace

Report gns_report(const QuantumGroup& q, double tol) {
    const Eigen::Index n = q.dim();
    Report rep;
    rep.suite = "gns";
    const GnsSpace g = gns(q);
    const QuantumGroup dual = dual_aqg(q);
    const MultiplicativeUnitary mu = multiplicative_unitary(q, g);
    const LegSpace h3({n, n, n});

    // Frame reproduces the GNS inner product: <Lambda(a), Lambda(b)> = phi(b* a).
    {
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                const Complex ip = g.lambda(q.basis(j)).dot(g.lambda(q.basis(i)));
                const Complex expect =
                    q.haar_of(q.alg.mul(q.alg.star_of(q.basis(j)), q.basis(i)));
                worst = std::max(worst, std::abs(ip - expect));
            }
        rep.add("gns-inner-product", worst, tol);
    }
    // Representations are unital *-homomorphisms.
    {
        std::vector<Matrix> pi(n), pihat(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            pi[i] = left_rep(q, g, q.basis(i));
            pihat[i] = dual_rep(q, dual, g, q.basis(i));
        }
        rep.add("left-rep-unital", residual(left_rep(q, g, q.alg.unit), eye(n)), tol);
        rep.add("dual-rep-unital", residual(dual_rep(q, dual, g, dual.alg.unit), eye(n)), tol);
        double worst_star = 0.0, worst_star_hat = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            worst_star = std::max(
                worst_star, residual(pi[i].adjoint(), left_rep(q, g, q.alg.star_of(q.basis(i)))));
            worst_star_hat = std::max(
                worst_star_hat,
                residual(pihat[i].adjoint(), dual_rep(q, dual, g, dual.alg.star_of(q.basis(i)))));
        }
        rep.add("left-rep-star", worst_star, tol);
        rep.add("dual-rep-star", worst_star_hat, tol);

        // Unitarity and pentagon for W.
        rep.add("w-unitary", residual(mu.w * mu.w.adjoint(), eye(n * n)), tol);
        {
            const Matrix lhs = rmul_leg23(leg12_times_leg13(mu.w, mu.w, h3), mu.w, h3);
            const Matrix rhs = leg23_times_leg12(mu.w, mu.w, h3);
            rep.add("pentagon", residual(lhs, rhs), tol);
        }
        // Coproduct conjugation: W^*(1 (x) pi(a)) W = (pi (x) pi) Delta(a).
        {
            double worst = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                const Matrix lhs = mu.w.adjoint() * kron(eye(n), pi[i]) * mu.w;
                Matrix rhs = Matrix::Zero(n * n, n * n);
                const Matrix d = unvec(q.hopf.comult.col(i), n, n);
                for (Eigen::Index p = 0; p < n; ++p)
                    for (Eigen::Index s = 0; s < n; ++s)
                        if (d(p, s) != 0.0) rhs += d(p, s) * kron(pi[p], pi[s]);
                worst = std::max(worst, residual(lhs, rhs));
            }
            rep.add("coproduct-conjugation", worst, tol);
        }
        // Dual coproduct conjugations:
        //   W^hat^*(1 (x) pi^(w)) W^hat = (pi^ (x) pi^) Delta^_op(w)
        //   W (pi^(w) (x) 1) W^* = (pi^ (x) pi^) Delta^(w).
        {
            double worst_op = 0.0, worst_plain = 0.0;
            const Matrix fl = flip(n, n);
            for (Eigen::Index i = 0; i < n; ++i) {
                const Matrix dhat = unvec(dual.hopf.comult.col(i), n, n);
                Matrix rhs_plain = Matrix::Zero(n * n, n * n);
                Matrix rhs_op = Matrix::Zero(n * n, n * n);
                for (Eigen::Index p = 0; p < n; ++p)
                    for (Eigen::Index s = 0; s < n; ++s)
                        if (dhat(p, s) != 0.0) {
                            rhs_plain += dhat(p, s) * kron(pihat[p], pihat[s]);
                            rhs_op += dhat(p, s) * kron(pihat[s], pihat[p]);
                        }
                const Matrix lhs_op =
                    mu.w_hat.adjoint() * kron(eye(n), pihat[i]) * mu.w_hat;
                const Matrix lhs_plain = mu.w * kron(pihat[i], eye(n)) * mu.w.adjoint();
                worst_op = std::max(worst_op, residual(lhs_op, rhs_op));
                worst_plain = std::max(worst_plain, residual(lhs_plain, rhs_plain));
            }
            rep.add("dual-coproduct-conjugation-op", worst_op, tol);
            rep.add("dual-coproduct-conjugation", worst_plain, tol);
        }
        // Slice spans: {(i (x) w_{u,v})(W)} spans pi(A) and
        // {(w_{u,v} (x) i)(W)} spans pi^(A^).
        {
            Matrix pspan(n * n, n), slices(n * n, n * n);
            Matrix pspan_hat(n * n, n), slices_hat(n * n, n * n);
            for (Eigen::Index i = 0; i < n; ++i) {
                pspan.col(i) = vec(pi[i]);
                pspan_hat.col(i) = vec(pihat[i]);
            }
            for (Eigen::Index u = 0; u < n; ++u)
                for (Eigen::Index v = 0; v < n; ++v) {
                    // (i (x) w_{e_u, e_v})(W)[r,s] = W[(r,v),(s,u)]
                    Matrix sl(n, n), slh(n, n);
                    for (Eigen::Index r = 0; r < n; ++r)
                        for (Eigen::Index s = 0; s < n; ++s) {
                            sl(r, s) = mu.w(r * n + v, s * n + u);
                            slh(r, s) = mu.w(v * n + r, u * n + s);
                        }
                    slices.col(u * n + v) = vec(sl);
                    slices_hat.col(u * n + v) = vec(slh);
                }
            rep.add("slice-span-left", span_equality_residual(pspan, slices, 1e-9), tol);
            rep.add("slice-span-dual", span_equality_residual(pspan_hat, slices_hat, 1e-9), tol);
        }
        // Membership: W lies in span(pi(A)) (x) span(pi^(A^)).
        {
            Matrix basis(n * n * n * n, n * n);
            for (Eigen::Index i = 0; i < n; ++i)
                for (Eigen::Index j = 0; j < n; ++j)
                    basis.col(i * n + j) = vec(kron(pi[i], pihat[j]));
            const Vector wvec = vec(mu.w);
            const Vector coeff = basis.colPivHouseholderQr().solve(wvec);
            rep.add("w-membership", (basis * coeff - wvec).norm() / std::max(1.0, wvec.norm()),
                    tol);
        }
    }
    // Tomita data.
    {
        const TomitaData td = tomita(q, g);
        rep.add("tomita-j-antiunitary", residual(td.j * td.j.adjoint(), eye(n)), tol);
        rep.add("tomita-j-involutive", residual(td.j * td.j.conjugate(), eye(n)), tol);
        Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (td.nabla + td.nabla.adjoint()));
        rep.add_flag("tomita-nabla-positive", es.eigenvalues().minCoeff() > 0.0);
        const Matrix nabla_half = es.eigenvectors() *
                                  es.eigenvalues().cwiseSqrt().asDiagonal() *
                                  es.eigenvectors().adjoint();
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const Vector lhs = td.j * (nabla_half * g.lambda(q.basis(i))).conjugate();
            const Vector rhs = g.lambda(q.alg.star_of(q.basis(i)));
            worst = std::max(worst, residual_vec(lhs, rhs));
        }
        rep.add("tomita-polar-identity", worst, tol);
        if (q.mod.tracial)
            rep.add("tomita-nabla-tracial", residual(td.nabla, eye(n)), tol);
    }
    return rep;
}

}  // namespace aqg
