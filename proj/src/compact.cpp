#include "aqg/compact.hpp"

#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace aqg {

Eigen::Index PeterWeylData::total_dim() const {
    Eigen::Index t = 0;
    for (const auto& b : blocks) t += b.n * b.n;
    return t;
}

Matrix PeterWeylData::coefficient_matrix() const {
    const Eigen::Index t = total_dim();
    if (blocks.empty() || blocks[0].coeffs.empty())
        throw Error(Error::Kind::verification, "coefficient matrix needs decomposed data");
    const Eigen::Index n = blocks[0].coeffs[0].size();
    Matrix out(n, t);
    Eigen::Index at = 0;
    for (const auto& b : blocks)
        for (const auto& c : b.coeffs) out.col(at++) = c;
    return out;
}

PeterWeylData decompose_corepresentations(const GeneratorContext& ctx) {
    const QuantumGroup& q = ctx.q;
    const Eigen::Index n = q.dim();
    // Blocks of the dual, realised as the matrix algebra pihat(A^).
    const StarAlgebraDecomposition dec = decompose_star_algebra(ctx.pihat, 0xC0DE);

    // Change of basis: columns are the dual coordinates of the matrix units.
    const auto units = dec.all_units();
    const Eigen::Index t = static_cast<Eigen::Index>(units.size());
    if (t != n) throw Error(Error::Kind::verification, "block extraction rank failure");
    Matrix mu(n, t);  // dual coordinates of each unit (pull back through pihat)
    {
        Matrix phat(n * n, n);
        for (Eigen::Index j = 0; j < n; ++j) phat.col(j) = vec(ctx.pihat[j]);
        const Eigen::ColPivHouseholderQR<Matrix> qr(phat);
        for (Eigen::Index u = 0; u < t; ++u) {
            const Vector c = qr.solve(vec(*units[u]));
            if ((phat * c - vec(*units[u])).norm() > 1e-8)
                throw Error(Error::Kind::verification, "block extraction rank failure");
            mu.col(u) = c;
        }
    }
    // Coefficients: Bhat^T u_t = row_t of MU^{-1} (pairing against the dual
    // basis), i.e. u_t = B^{-T} (MU^{-1})^T e_t.
    const Matrix mu_inv = mu.partialPivLu().inverse();
    const Matrix umat =
        q.mod.hat.transpose().partialPivLu().solve(Matrix(mu_inv.transpose()));

    PeterWeylData pw;
    pw.source = PeterWeylData::Source::decomposed;
    Eigen::Index at = 0;
    for (size_t b = 0; b < dec.blocks.size(); ++b) {
        IrrepBlock blk;
        blk.n = dec.blocks[b].block_dim;
        blk.label = "b" + std::to_string(b);
        for (Eigen::Index i = 0; i < blk.n * blk.n; ++i) blk.coeffs.push_back(umat.col(at + i));
        at += blk.n * blk.n;
        pw.blocks.push_back(std::move(blk));
    }
    // F-matrix per block from the orthogonality relations:
    // X_sk = mean_i phi(u_ik u_is^*), F = d X with d = sqrt(Tr X^{-1}).
    for (auto& blk : pw.blocks) {
        const Eigen::Index m = blk.n;
        Matrix x = Matrix::Zero(m, m);
        for (Eigen::Index s = 0; s < m; ++s)
            for (Eigen::Index k = 0; k < m; ++k) {
                Complex acc = 0.0;
                for (Eigen::Index i = 0; i < m; ++i)
                    acc += q.haar_of(q.alg.mul(blk.coeffs[i * m + k],
                                               q.alg.star_of(blk.coeffs[i * m + s])));
                x(s, k) = acc / static_cast<double>(m);
            }
        Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (x + x.adjoint()));
        if (es.eigenvalues().minCoeff() <= 0)
            throw Error(Error::Kind::verification, "block extraction rank failure");
        const double d = std::sqrt(x.inverse().trace().real());
        blk.f = d * x;
        blk.d = blk.f.trace().real();
    }
    return pw;
}

Report decompose_report(const GeneratorContext& ctx, const PeterWeylData& pw, double tol) {
    const QuantumGroup& q = ctx.q;
    const Eigen::Index n = q.dim();
    Report rep;
    rep.suite = "peter-weyl";
    rep.add_flag("completeness", pw.total_dim() == n);

    // Coproduct, counit and unitarity of each coefficient matrix.
    double worst_cop = 0.0, worst_eps = 0.0, worst_unit = 0.0;
    for (const auto& blk : pw.blocks) {
        const Eigen::Index m = blk.n;
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < m; ++j) {
                Vector expect = Vector::Zero(n * n);
                for (Eigen::Index k = 0; k < m; ++k)
                    expect += kron_vec(blk.coeffs[i * m + k], blk.coeffs[k * m + j]);
                worst_cop = std::max(
                    worst_cop, residual_vec(q.apply_comult(blk.coeffs[i * m + j]), expect));
                worst_eps = std::max(worst_eps,
                                     std::abs(q.apply_counit(blk.coeffs[i * m + j]) -
                                              (i == j ? 1.0 : 0.0)));
            }
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < m; ++j) {
                Vector row = Vector::Zero(n), col = Vector::Zero(n);
                for (Eigen::Index k = 0; k < m; ++k) {
                    row += q.alg.mul(blk.coeffs[i * m + k],
                                     q.alg.star_of(blk.coeffs[j * m + k]));
                    col += q.alg.mul(q.alg.star_of(blk.coeffs[k * m + i]),
                                     blk.coeffs[k * m + j]);
                }
                const Vector expect = (i == j) ? Vector(q.alg.unit) : Vector(Vector::Zero(n));
                worst_unit = std::max(worst_unit, residual_vec(row, expect));
                worst_unit = std::max(worst_unit, residual_vec(col, expect));
            }
    }
    rep.add("coefficient-coproduct", worst_cop, tol);
    rep.add("coefficient-counit", worst_eps, tol);
    rep.add("coefficient-unitarity", worst_unit, tol);

    // Pairwise inequivalence: no nonzero intertwiner between distinct blocks.
    {
        bool ok = true;
        for (size_t a = 0; a < pw.blocks.size() && ok; ++a)
            for (size_t b = a + 1; b < pw.blocks.size() && ok; ++b) {
                const auto& ba = pw.blocks[a];
                const auto& bb = pw.blocks[b];
                // T intertwines when sum_j u^b_ij T_jk = sum_j T_ij u^a_jk in A.
                Matrix sys(n * ba.n * bb.n, ba.n * bb.n);
                for (Eigen::Index i = 0; i < bb.n; ++i)
                    for (Eigen::Index k = 0; k < ba.n; ++k)
                        for (Eigen::Index j2 = 0; j2 < bb.n; ++j2)
                            for (Eigen::Index j1 = 0; j1 < ba.n; ++j1) {
                                Vector entry = Vector::Zero(n);
                                if (j1 == k) entry += bb.coeffs[i * bb.n + j2];
                                if (j2 == i) entry -= ba.coeffs[j1 * ba.n + k];
                                sys.block((i * ba.n + k) * n, j2 * ba.n + j1, n, 1) =
                                    (j1 == k || j2 == i) ? entry : Vector(Vector::Zero(n));
                            }
                Eigen::JacobiSVD<Matrix> svd(sys);
                const auto& s = svd.singularValues();
                if (s(s.size() - 1) < 1e-9 * s(0)) ok = false;
            }
        rep.add_flag("blocks-pairwise-inequivalent", ok);
    }
    // F matrices: positive, balanced trace; Kac case means F = I.
    double worst_bal = 0.0;
    for (const auto& blk : pw.blocks)
        worst_bal = std::max(worst_bal,
                             std::abs(blk.f.trace().real() - blk.f.inverse().trace().real()));
    rep.add("f-matrix-balanced-trace", worst_bal, tol);
    if (ctx.q.mod.tracial) {
        double worst_f = 0.0;
        for (const auto& blk : pw.blocks) worst_f = std::max(worst_f, residual(blk.f, eye(blk.n)));
        rep.add("f-matrix-identity-in-kac-case", worst_f, tol);
    }
    return rep;
}

Matrix f_z_block(const IrrepBlock& block, Complex z) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (block.f + block.f.adjoint()));
    Vector powered(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < powered.size(); ++i)
        powered(i) = std::exp(z * std::log(es.eigenvalues()(i)));
    return es.eigenvectors() * powered.asDiagonal() * es.eigenvectors().adjoint();
}

Covector f_z_functional(const PeterWeylData& pw, Complex z) {
    // Values (F^z)_ij on the coefficient basis, pulled back to A-coordinates.
    const Matrix umat = pw.coefficient_matrix();
    Covector values(umat.cols());
    Eigen::Index at = 0;
    for (const auto& blk : pw.blocks) {
        const Matrix fz = f_z_block(blk, z);
        for (Eigen::Index i = 0; i < blk.n; ++i)
            for (Eigen::Index j = 0; j < blk.n; ++j) values(at++) = fz(i, j);
    }
    return values * umat.partialPivLu().inverse();
}

Report f_z_report(const GeneratorContext& ctx, const PeterWeylData& pw, double tol) {
    const QuantumGroup& q = ctx.q;
    const Eigen::Index n = q.dim();
    Report rep;
    rep.suite = "f-z";
    // f_0 = counit.
    rep.add("f0-is-counit",
            residual(Matrix(f_z_functional(pw, 0.0)), Matrix(q.hopf.counit)), tol);
    // Convolution group law on a grid of exponents.
    {
        const std::vector<Complex> grid = {1.0, -1.0, Complex(0.0, 1.0), Complex(0.5, -0.5), 2.0};
        double worst = 0.0;
        for (const Complex& z1 : grid)
            for (const Complex& z2 : grid) {
                const Covector conv =
                    kron_cov(f_z_functional(pw, z1), f_z_functional(pw, z2)) *
                    q.hopf.comult;
                worst = std::max(
                    worst, residual(Matrix(conv), Matrix(f_z_functional(pw, z1 + z2))));
            }
        rep.add("f-z-convolution-group-law", worst, tol);
    }
    // phi(a b) = phi(b (f1 * a * f1)) and S^2(a) = f_{-1} * a * f_1.
    {
        const Covector f1 = f_z_functional(pw, 1.0);
        const Covector fm1 = f_z_functional(pw, -1.0);
        // x * f = (f (x) i) Delta(x), f * x = (i (x) f) Delta(x).
        const Matrix right_by_f1 = kron(Matrix(f1), eye(n)) * q.hopf.comult;
        const Matrix left_by_f1 = kron(eye(n), Matrix(f1)) * q.hopf.comult;
        const Matrix left_by_fm1 = kron(eye(n), Matrix(fm1)) * q.hopf.comult;
        const Matrix sandwich = left_by_f1 * right_by_f1;
        double worst_tr = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                const Complex lhs = q.haar_of(q.alg.mul(q.basis(i), q.basis(j)));
                const Complex rhs =
                    q.haar_of(q.alg.mul(q.basis(j), Vector(sandwich * q.basis(i))));
                worst_tr = std::max(worst_tr, std::abs(lhs - rhs));
            }
        rep.add("haar-twisted-trace-identity", worst_tr, tol);
        rep.add("antipode-square-identity",
                residual(left_by_fm1 * right_by_f1, q.hopf.antipode * q.hopf.antipode), tol);
    }
    return rep;
}

double quantum_dimension(const IrrepBlock& block) { return block.f.trace().real(); }

double orthogonality_residual(const GeneratorContext& ctx, const PeterWeylData& pw) {
    const QuantumGroup& q = ctx.q;
    double worst = 0.0;
    for (size_t a = 0; a < pw.blocks.size(); ++a)
        for (size_t b = 0; b < pw.blocks.size(); ++b) {
            const auto& ba = pw.blocks[a];
            const auto& bb = pw.blocks[b];
            for (Eigen::Index i = 0; i < ba.n; ++i)
                for (Eigen::Index k = 0; k < ba.n; ++k)
                    for (Eigen::Index j = 0; j < bb.n; ++j)
                        for (Eigen::Index s = 0; s < bb.n; ++s) {
                            const Complex val = q.haar_of(
                                q.alg.mul(ba.coeffs[i * ba.n + k],
                                          q.alg.star_of(bb.coeffs[j * bb.n + s])));
                            const Complex expect =
                                (a == b && i == j) ? ba.f(s, k) / ba.d : Complex(0.0);
                            worst = std::max(worst, std::abs(val - expect));
                        }
        }
    return worst;
}

Matrix twisted_antipode(const GeneratorContext& ctx, const PeterWeylData& pw) {
    const Eigen::Index n = ctx.q.dim();
    const Covector f1 = f_z_functional(pw, 1.0);
    return kron(eye(n), Matrix(f1)) * ctx.q.hopf.comult * ctx.q.hopf.antipode;
}

Vector twisted_antipode_coefficients(const IrrepBlock& block, Eigen::Index i, Eigen::Index j) {
    // S~(u_ij) = f_1 * S(u_ij) = f_1 * u_ji^* = sum_s u_js^* f_1(u_si^*)
    // and f_1(u_si^*) = f_{-1}(u_is) = (F^{-1})_{is}.
    (void)j;
    const Matrix finv = f_z_block(block, -1.0);
    return finv.row(i).transpose();
}

namespace {

// State a -> < P((i (x) Ad(u))(pi (x) pi) Delta(a)) Lambda(1), Lambda(1) >
// with P the multiplication map; computed on Lambda coordinates.
Covector counit_state_via_unitary(const GeneratorContext& ctx, const Matrix& u_frame) {
    const QuantumGroup& q = ctx.q;
    const Eigen::Index n = q.dim();
    const Vector l1 = ctx.gns.lambda(q.alg.unit);
    Covector out(n);
    std::vector<Matrix> pis(n), ad(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        pis[i] = ctx.pi[i];
        ad[i] = u_frame * pis[i] * u_frame;  // u is a self-adjoint involution
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        const Matrix d = unvec(q.hopf.comult.col(i), n, n);
        Matrix op = Matrix::Zero(n, n);
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index s = 0; s < n; ++s)
                if (d(p, s) != 0.0) op += d(p, s) * (pis[p] * ad[s]);
        out(i) = l1.dot(op * l1);
    }
    return out;
}

}  // namespace

Covector epsilon0(const GeneratorContext& ctx) {
    if (!ctx.q.mod.tracial)
        throw Error(Error::Kind::verification,
                    "counit state from the plain antipode needs a tracial Haar functional");
    const Matrix v =
        ctx.gns.orthonormalizer * ctx.q.hopf.antipode * ctx.gns.orthonormalizer_inv;
    return counit_state_via_unitary(ctx, v);
}

Covector epsilon1(const GeneratorContext& ctx, const PeterWeylData& pw) {
    const Matrix st = twisted_antipode(ctx, pw);
    const Matrix u = ctx.gns.orthonormalizer * st * ctx.gns.orthonormalizer_inv;
    return counit_state_via_unitary(ctx, u);
}

Report epsilon_report(const GeneratorContext& ctx, const PeterWeylData& pw, double tol,
                      std::uint64_t seed) {
    const QuantumGroup& q = ctx.q;
    const Eigen::Index n = q.dim();
    Report rep;
    rep.suite = "counit-states";

    // The antipode unitaries are self-adjoint involutions on the frame.
    const Matrix v = ctx.gns.orthonormalizer * q.hopf.antipode * ctx.gns.orthonormalizer_inv;
    const Matrix st = twisted_antipode(ctx, pw);
    const Matrix u = ctx.gns.orthonormalizer * st * ctx.gns.orthonormalizer_inv;
    rep.add("antipode-unitary-self-adjoint", residual(v, v.adjoint()), tol);
    rep.add("antipode-unitary-involution", residual(v * v, eye(n)), tol);
    rep.add("twisted-antipode-unitary-self-adjoint", residual(u, u.adjoint()), tol);
    rep.add("twisted-antipode-unitary-involution", residual(u * u, eye(n)), tol);
    rep.add("twisted-antipode-involutive", residual(st * st, eye(n)), tol);
    {
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                worst = std::max(worst,
                                 residual_vec(st * q.alg.mul(q.basis(i), q.basis(j)),
                                              q.alg.mul(Vector(st * q.basis(j)),
                                                        Vector(st * q.basis(i)))));
        rep.add("twisted-antipode-antimultiplicative", worst, tol);
    }
    if (q.mod.tracial)
        rep.add("twisted-antipode-equals-antipode", residual(st, q.hopf.antipode), tol);

    // Exchange relation V pi(a) V pi(b) = pi(b) V pi(a) V.
    {
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const Matrix vi = v * ctx.pi[i] * v;
            for (Eigen::Index j = 0; j < n; ++j)
                worst = std::max(worst, residual(vi * ctx.pi[j], ctx.pi[j] * vi));
        }
        rep.add("antipode-unitary-commutation", worst, tol);
    }

    const Covector e0 = epsilon0(ctx);
    const Covector e1 = epsilon1(ctx, pw);
    rep.add("eps0-equals-counit", residual(Matrix(e0), Matrix(q.hopf.counit)), tol);
    rep.add("eps1-coefficient-values", [&] {
        double worst = 0.0;
        for (const auto& blk : pw.blocks)
            for (Eigen::Index i = 0; i < blk.n; ++i)
                for (Eigen::Index j = 0; j < blk.n; ++j) {
                    const Complex val = (e1 * blk.coeffs[i * blk.n + j])(0);
                    const Complex expect =
                        (i == j) ? Complex(static_cast<double>(blk.n) / blk.d) : Complex(0.0);
                    worst = std::max(worst, std::abs(val - expect));
                }
        return worst;
    }(), tol);
    if (q.mod.tracial)
        rep.add("eps1-equals-counit", residual(Matrix(e1), Matrix(q.hopf.counit)), tol);

    // Both functionals are states: value 1 at the unit, positive on a
    // sample of elements a* a.
    rep.add("eps0-unital", std::abs((e0 * q.alg.unit)(0) - 1.0), tol);
    rep.add("eps1-unital", std::abs((e1 * q.alg.unit)(0) - 1.0), tol);
    {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> dist(0.0, 1.0);
        double worst0 = 0.0, worst1 = 0.0;
        for (int t = 0; t < 100; ++t) {
            Vector a(n);
            for (Eigen::Index i = 0; i < n; ++i) a(i) = Complex(dist(rng), dist(rng));
            const Vector pos = q.alg.mul(q.alg.star_of(a), a);
            const double scale = std::max(1.0, pos.norm());
            worst0 = std::max(worst0, -((e0 * pos)(0).real()) / scale);
            worst0 = std::max(worst0, std::abs((e0 * pos)(0).imag()) / scale);
            worst1 = std::max(worst1, -((e1 * pos)(0).real()) / scale);
            worst1 = std::max(worst1, std::abs((e1 * pos)(0).imag()) / scale);
        }
        rep.add("eps0-positive", std::max(0.0, worst0), tol);
        rep.add("eps1-positive", std::max(0.0, worst1), tol);
    }
    return rep;
}

Matrix adjoint_rep(const GeneratorContext& ctx, const PeterWeylData& pw, const Element& a) {
    const QuantumGroup& q = ctx.q;
    const Eigen::Index n = q.dim();
    const Matrix st = twisted_antipode(ctx, pw);
    Matrix op = Matrix::Zero(n, n);  // on Lambda coordinates
    const Matrix d = unvec(Vector(q.hopf.comult * a), n, n);
    for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index s = 0; s < n; ++s)
            if (d(p, s) != 0.0)
                op += d(p, s) * (q.alg.lmul(q.basis(p)) * q.alg.rmul(Vector(st * q.basis(s))));
    return ctx.gns.orthonormalizer * op * ctx.gns.orthonormalizer_inv;
}

Report adjoint_rep_report(const GeneratorContext& ctx, const PeterWeylData& pw, double tol) {
    const QuantumGroup& q = ctx.q;
    const Eigen::Index n = q.dim();
    Report rep;
    rep.suite = "adjoint-rep";
    rep.add("adjoint-unit", residual(adjoint_rep(ctx, pw, q.alg.unit), eye(n)), tol);
    {
        double worst = 0.0;
        std::vector<Matrix> c(n);
        for (Eigen::Index i = 0; i < n; ++i) c[i] = adjoint_rep(ctx, pw, q.basis(i));
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                const Matrix direct = adjoint_rep(ctx, pw, q.alg.mul(q.basis(i), q.basis(j)));
                worst = std::max(worst, residual(direct, c[i] * c[j]));
            }
        rep.add("adjoint-multiplicative", worst, tol);
        // <C(a) Lambda(1), Lambda(1)> = eps1(a).
        const Covector e1 = epsilon1(ctx, pw);
        const Vector l1 = ctx.gns.lambda(q.alg.unit);
        double worst_e = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            worst_e = std::max(worst_e, std::abs(l1.dot(c[i] * l1) - (e1 * q.basis(i))(0)));
        rep.add("adjoint-matches-eps1", worst_e, tol);
    }
    return rep;
}

Matrix q0_map(const GeneratorContext& ctx, const Element& a) {
    if (!ctx.q.mod.tracial)
        throw Error(Error::Kind::verification, "q0 map needs a tracial Haar functional");
    // Q0(pi(a)) = J R(pi(a)*) J with R(pi(b)) = pi(S(b)); for the antilinear
    // conjugation J: v -> Jm conj(v) this reads Jm conj(pi(S(a*))) conj(Jm).
    const TomitaData td = tomita(ctx.q, ctx.gns);
    const Matrix x = left_rep(ctx.q, ctx.gns,
                              ctx.q.apply_antipode(ctx.q.alg.star_of(a)));
    return td.j * x.conjugate() * td.j.conjugate();
}

Report q0_report(const GeneratorContext& ctx, double tol) {
    Report rep;
    rep.suite = "q0";
    const QuantumGroup& q = ctx.q;
    const Eigen::Index n = q.dim();
    std::vector<Matrix> q0(n);
    for (Eigen::Index i = 0; i < n; ++i) q0[i] = q0_map(ctx, q.basis(i));
    rep.add("q0-unital", residual(q0_map(ctx, q.alg.unit), eye(n)), tol);
    double worst_mult = 0.0, worst_comm = 0.0, worst_ad = 0.0;
    const Matrix v = ctx.gns.orthonormalizer * q.hopf.antipode * ctx.gns.orthonormalizer_inv;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            worst_mult = std::max(
                worst_mult, residual(q0_map(ctx, q.alg.mul(q.basis(i), q.basis(j))),
                                     q0[i] * q0[j]));
            worst_comm = std::max(worst_comm, residual(q0[i] * ctx.pi[j], ctx.pi[j] * q0[i]));
        }
        worst_ad = std::max(worst_ad, residual(q0[i], v * ctx.pi[i] * v));
    }
    rep.add("q0-multiplicative", worst_mult, tol);
    rep.add("q0-into-commutant", worst_comm, tol);
    rep.add("q0-matches-antipode-conjugation", worst_ad, tol);
    return rep;
}

std::vector<Matrix> phi_z(const GeneratorContext* ctx, const PeterWeylData& pw, Complex z) {
    const Complex i_unit(0.0, 1.0);
    const Complex w1 = 1.0 + i_unit * (z - std::conj(z));
    const Complex w2 = -i_unit * (z + std::conj(z));
    std::vector<Matrix> out;
    if (pw.source == PeterWeylData::Source::decomposed) {
        if (!ctx) throw Error(Error::Kind::verification, "phi_z: decomposed data needs context");
        const QuantumGroup& q = ctx->q;
        const Eigen::Index n = q.dim();
        const Covector fw1 = f_z_functional(pw, w1);
        const Covector fw2 = f_z_functional(pw, w2);
        const Matrix left_w1 = kron(eye(n), Matrix(fw1)) * q.hopf.comult;   // f * x
        const Matrix right_w2 = kron(Matrix(fw2), eye(n)) * q.hopf.comult;  // x * f
        for (const auto& blk : pw.blocks) {
            Matrix vals(blk.n, blk.n);
            for (Eigen::Index l = 0; l < blk.n; ++l)
                for (Eigen::Index j = 0; j < blk.n; ++j) {
                    Complex acc = 0.0;
                    for (Eigen::Index k = 0; k < blk.n; ++k) {
                        const Vector inner =
                            left_w1 *
                            (right_w2 * q.alg.star_of(blk.coeffs[j * blk.n + k]));
                        acc += q.haar_of(q.alg.mul(blk.coeffs[l * blk.n + k], inner));
                    }
                    vals(l, j) = acc;
                }
            out.push_back(vals);
        }
    } else {
        // Analytic mode: evaluate through the orthogonality relations,
        // phi(u_lk u_ts^*) = (1/d) delta_lt F_sk, with
        // f_w * u_jk^* = sum_s (F^{-w})_ks u_js^* and
        // u_js^* * f_w = sum_t (F^{-w})_tj u_ts^*.
        for (const auto& blk : pw.blocks) {
            const Matrix fmw1 = f_z_block(blk, -w1);
            const Matrix fmw2 = f_z_block(blk, -w2);
            Matrix vals(blk.n, blk.n);
            for (Eigen::Index l = 0; l < blk.n; ++l)
                for (Eigen::Index j = 0; j < blk.n; ++j) {
                    Complex acc = 0.0;
                    for (Eigen::Index k = 0; k < blk.n; ++k)
                        for (Eigen::Index s = 0; s < blk.n; ++s)
                            for (Eigen::Index t = 0; t < blk.n; ++t)
                                acc += fmw1(k, s) * fmw2(t, j) *
                                       ((l == t) ? blk.f(s, k) / blk.d : Complex(0.0));
                    vals(l, j) = acc;
                }
            out.push_back(vals);
        }
    }
    return out;
}

Report phi_z_report(const GeneratorContext& ctx, const PeterWeylData& pw, double tol) {
    Report rep;
    rep.suite = "phi-z";
    const Complex i_half(0.0, 0.5);
    // phi_{i/2} on coefficients is the counit.
    {
        const auto vals = phi_z(&ctx, pw, i_half);
        double worst = 0.0;
        for (size_t b = 0; b < pw.blocks.size(); ++b)
            worst = std::max(worst, residual(vals[b], eye(pw.blocks[b].n)));
        rep.add("phi-at-i-half-is-counit", worst, tol);
    }
    // phi_0 equals the twisted counit state on coefficients.
    {
        const auto vals = phi_z(&ctx, pw, 0.0);
        const Covector e1 = epsilon1(ctx, pw);
        double worst = 0.0;
        for (size_t b = 0; b < pw.blocks.size(); ++b) {
            const auto& blk = pw.blocks[b];
            for (Eigen::Index l = 0; l < blk.n; ++l)
                for (Eigen::Index j = 0; j < blk.n; ++j)
                    worst = std::max(worst, std::abs(vals[b](l, j) -
                                                     (e1 * blk.coeffs[l * blk.n + j])(0)));
        }
        rep.add("phi-at-zero-is-twisted-counit-state", worst, tol);
    }
    return rep;
}

double q_integer(int m, double q) {
    return (std::pow(q, -m) - std::pow(q, m)) / (1.0 / q - q);
}

PeterWeylData suq2_data(double q, double max_spin) {
    if (!(q > 0.0 && q < 1.0))
        throw Error(Error::Kind::parse, "suq2: q must lie in (0,1)");
    const long twice = std::lround(2.0 * max_spin);
    if (twice < 0 || std::abs(2.0 * max_spin - static_cast<double>(twice)) > 1e-12)
        throw Error(Error::Kind::parse, "suq2: max spin must be a half-integer");
    PeterWeylData pw;
    pw.source = PeterWeylData::Source::analytic;
    for (long t = 0; t <= twice; ++t) {  // t = 2l
        IrrepBlock blk;
        const double l = 0.5 * static_cast<double>(t);
        blk.n = t + 1;
        char label[32];
        std::snprintf(label, sizeof label, "%g", l);
        blk.label = label;
        blk.f = Matrix::Zero(blk.n, blk.n);
        for (Eigen::Index i = 0; i < blk.n; ++i)
            blk.f(i, i) = std::pow(q, -2.0 * l + 2.0 * static_cast<double>(i));
        blk.d = blk.f.trace().real();
        pw.blocks.push_back(std::move(blk));
    }
    return pw;
}

std::vector<GapRow> coamenability_gap_report(const PeterWeylData& pw) {
    std::vector<GapRow> out;
    for (const auto& blk : pw.blocks) {
        GapRow row;
        row.label = blk.label;
        row.n = blk.n;
        row.d = blk.d;
        row.gap = static_cast<double>(blk.n) / blk.d;
        out.push_back(row);
    }
    return out;
}

}  // namespace aqg
