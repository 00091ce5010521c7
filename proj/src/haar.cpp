#include "aqg/haar.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace aqg {

namespace {

// Gram form G_ij = phi(e_i* e_j) and pairing B_ij = phi(e_i e_j).
Matrix gram_of(const Algebra& alg, const Functional& phi) {
    const Eigen::Index n = alg.dim;
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Vector si = alg.star_of(Vector::Unit(n, i));
        const Matrix l = alg.lmul(si);
        for (Eigen::Index j = 0; j < n; ++j) g(i, j) = (phi * l.col(j))(0);
    }
    return g;
}

Matrix pairing_of(const Algebra& alg, const Functional& phi) {
    // B_ij = phi(e_i e_j) = (phi * mult) reshaped.
    return unvec(Vector((phi * alg.mult).transpose()), alg.dim, alg.dim);
}

double left_invariance_residual(const QuantumGroup& q, const Functional& phi) {
    const Eigen::Index n = q.dim();
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Matrix d = unvec(q.hopf.comult.col(i), n, n);
        const Vector lhs = d * phi.transpose();
        const Vector rhs = phi(i) * q.alg.unit;
        worst = std::max(worst, residual_vec(lhs, rhs));
    }
    return worst;
}

double right_invariance_residual(const QuantumGroup& q, const Functional& psi) {
    const Eigen::Index n = q.dim();
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Matrix d = unvec(q.hopf.comult.col(i), n, n);
        const Vector lhs = d.transpose() * psi.transpose();
        const Vector rhs = psi(i) * q.alg.unit;
        worst = std::max(worst, residual_vec(lhs, rhs));
    }
    return worst;
}

struct GramCheck {
    bool hermitian_ok = false;
    bool positive = false;
    double min_eig = 0.0;
    double max_eig = 0.0;
};

GramCheck check_gram(const Matrix& g) {
    GramCheck out;
    out.hermitian_ok = residual(g, g.adjoint()) < 1e-10;
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (g + g.adjoint()));
    out.min_eig = es.eigenvalues().minCoeff();
    out.max_eig = es.eigenvalues().maxCoeff();
    out.positive = out.hermitian_ok && out.min_eig > 1e-10 * std::max(out.max_eig, 1e-300);
    return out;
}

// Shared tail: given a verified phi, fill in psi, delta, mu, rho, Gram data.
ModularData derive_from_haar(const QuantumGroup& q, const Functional& phi, double tol,
                             bool strict) {
    const Eigen::Index n = q.dim();
    const Algebra& alg = q.alg;
    ModularData m;
    m.haar = phi;
    m.haar_right = phi * q.hopf.antipode;
    m.gram = gram_of(alg, phi);
    const GramCheck gc = check_gram(m.gram);
    m.gram_min_eig = gc.min_eig;
    if (strict && !gc.positive)
        throw Error(Error::Kind::haar, "haar functional is not positive definite (min Gram eigenvalue " +
                                           std::to_string(gc.min_eig) + ")");
    m.hat = pairing_of(alg, phi);
    m.hat_lu.compute(m.hat);

    // delta solves phi(S(e_i)) = phi(e_i delta) columnwise in the pairing form.
    const Vector rhs = (phi * q.hopf.antipode).transpose();
    m.delta_elt = m.hat_lu.solve(rhs);

    // mu as the least-squares scalar in phi(S(a)) = mu phi(delta a), snapped
    // to the unit circle when within tolerance.
    {
        const Covector w = phi * alg.lmul(m.delta_elt);
        const Covector v = phi * q.hopf.antipode;
        Complex num = 0.0;
        double den = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            num += std::conj(w(i)) * v(i);
            den += std::norm(w(i));
        }
        m.mu = den > 0 ? num / den : Complex(1.0);
        if (std::abs(std::abs(m.mu) - 1.0) < tol)
            m.mu /= std::abs(m.mu);
        else if (strict)
            throw Error(Error::Kind::haar, "modular twist is not unimodular");
    }

    // rho from phi(e_i e_j) = phi(e_j rho(e_i)): B rho = B^T.
    m.rho = m.hat_lu.solve(m.hat.transpose());
    m.tracial = residual(m.rho, eye(n)) < tol;
    return m;
}

}  // namespace

ModularData solve_haar_and_derive(const QuantumGroup& q, double tol, bool strict) {
    const Eigen::Index n = q.dim();
    // Stack (i (x) phi) Delta(e_i) - phi(e_i) unit = 0 into K phi^T = 0.
    Matrix k = Matrix::Zero(n * n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Matrix d = unvec(q.hopf.comult.col(i), n, n);
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index c = 0; c < n; ++c) k(i * n + j, c) = d(j, c);
            k(i * n + j, i) -= q.alg.unit(j);
        }
    }
    Eigen::JacobiSVD<Matrix> svd(k, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double smax = s(0);
    const bool null_1d = n >= 2 && s(n - 1) < 1e-10 * smax && s(n - 2) >= 1e-10 * smax;
    if (strict && !(null_1d || (n == 1 && s(0) < 1e-10)))
        throw Error(Error::Kind::haar,
                    "left-invariant functional space is not one-dimensional (degenerate input)");

    Functional phi = svd.matrixV().col(n - 1).transpose();
    const Complex at_unit = (phi * q.alg.unit)(0);
    if (std::abs(at_unit) < 1e-12) {
        if (strict) throw Error(Error::Kind::haar, "invariant functional vanishes on the unit");
    } else {
        phi /= at_unit;
    }
    return derive_from_haar(q, phi, tol, strict);
}

ModularData verify_haar_and_derive(const QuantumGroup& q, const Functional& candidate, double tol) {
    if (candidate.size() != q.dim())
        throw Error(Error::Kind::parse, "haar candidate: wrong length");
    const Complex at_unit = (candidate * q.alg.unit)(0);
    if (std::abs(at_unit) < 1e-12)
        throw Error(Error::Kind::haar, "haar candidate vanishes on the unit");
    Functional phi = candidate / at_unit;
    const double inv = left_invariance_residual(q, phi);
    if (inv > tol)
        throw Error(Error::Kind::haar,
                    "haar candidate is not left invariant (residual " + std::to_string(inv) + ")");
    return derive_from_haar(q, phi, tol, true);
}

double strong_left_invariance_residual(const QuantumGroup& q) {
    const Eigen::Index n = q.dim();
    const Vector phi_t = q.mod.haar.transpose();
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            // (i (.) phi)((1 (x) e_i) Delta(e_j))
            const Vector lhs = unvec(q.maps.t4.col(j * n + i), n, n) * phi_t;
            // S((i (.) phi)(Delta(e_i)(1 (x) e_j)))
            const Vector rhs =
                q.hopf.antipode * (unvec(q.maps.t2.col(i * n + j), n, n) * phi_t);
            worst = std::max(worst, residual_vec(lhs, rhs));
        }
    return worst;
}

Report haar_modular_report(const QuantumGroup& q, double tol) {
    const Eigen::Index n = q.dim();
    const Algebra& alg = q.alg;
    const ModularData& m = q.mod;
    Report rep;
    rep.suite = "haar-modular";

    rep.add("haar-left-invariance", left_invariance_residual(q, m.haar), tol);
    rep.add("haar-normalisation", std::abs((m.haar * alg.unit)(0) - 1.0), tol);
    const GramCheck gc = check_gram(m.gram);
    rep.add_flag("haar-positive-definite", gc.positive);
    rep.add("right-haar-invariance", right_invariance_residual(q, m.haar_right), tol);

    // delta: group-like, self-adjoint, eps(delta) = 1, S(delta) delta = 1.
    rep.add("delta-group-like",
            residual_vec(q.apply_comult(m.delta_elt), kron_vec(m.delta_elt, m.delta_elt)), tol);
    rep.add("delta-self-adjoint", residual_vec(alg.star_of(m.delta_elt), m.delta_elt), tol);
    rep.add("delta-counit", std::abs(q.apply_counit(m.delta_elt) - 1.0), tol);
    rep.add("delta-antipode-inverse",
            residual_vec(alg.mul(q.apply_antipode(m.delta_elt), m.delta_elt), alg.unit), tol);
    // Defining identity for delta and mu: phi(S(a)) = phi(a delta) = mu phi(delta a).
    {
        double worst_d = 0.0, worst_mu = 0.0;
        const Covector phiS = m.haar * q.hopf.antipode;
        const Covector phi_ad = m.haar * alg.rmul(m.delta_elt);
        const Covector phi_da = m.haar * alg.lmul(m.delta_elt);
        for (Eigen::Index i = 0; i < n; ++i) {
            worst_d = std::max(worst_d, std::abs(phiS(i) - phi_ad(i)));
            worst_mu = std::max(worst_mu, std::abs(phiS(i) - m.mu * phi_da(i)));
        }
        rep.add("delta-defining-identity", worst_d, tol);
        rep.add("mu-defining-identity", worst_mu, tol);
        rep.add("mu-unimodular", std::abs(std::abs(m.mu) - 1.0), tol);
    }

    // rho: phi(ab) = phi(b rho(a)), rho(rho(a*)*) = a, multiplicative.
    {
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const Vector ri = m.rho.col(i);
            const Covector via_rho = m.haar * alg.rmul(ri);  // phi(e_j rho(e_i)) over j
            for (Eigen::Index j = 0; j < n; ++j)
                worst = std::max(worst, std::abs(m.hat(i, j) - via_rho(j)));
        }
        rep.add("rho-defining-identity", worst, tol);
        rep.add("rho-star-involution",
                residual(m.rho * alg.star * m.rho.conjugate() * alg.star.conjugate(), eye(n)), tol);
        double worst_mult = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                worst_mult = std::max(
                    worst_mult,
                    residual_vec(m.rho * alg.mul(Vector::Unit(n, i), Vector::Unit(n, j)),
                                 alg.mul(m.rho.col(i), m.rho.col(j))));
        rep.add("rho-multiplicative", worst_mult, tol);
    }
    rep.add("strong-left-invariance", strong_left_invariance_residual(q), tol);
    return rep;
}

}  // namespace aqg
