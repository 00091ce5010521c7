#include "aqg/generator.hpp"

#include <random>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace aqg {

Matrix Representation::apply(const Element& a) const {
    Matrix out = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != 0.0) out += a(i) * images[i];
    return out;
}

GeneratorContext make_generator_context(const QuantumGroup& q) {
    GeneratorContext ctx;
    ctx.q = q;
    ctx.dual = dual_aqg(q);
    ctx.gns = gns(q);
    ctx.mu = multiplicative_unitary(q, ctx.gns);
    for (Eigen::Index i = 0; i < q.dim(); ++i) {
        ctx.pi.push_back(left_rep(q, ctx.gns, q.basis(i)));
        ctx.pihat.push_back(dual_rep(q, ctx.dual, ctx.gns, q.basis(i)));
    }
    ctx.companion = support_companion(q, ctx.dual);
    ctx.regular_blocks = decompose_star_algebra(ctx.pi);
    return ctx;
}

Representation regular_representation(const GeneratorContext& ctx) {
    Representation rep;
    rep.dim = ctx.q.dim();
    rep.images = ctx.pi;
    return rep;
}

Representation counit_representation(const QuantumGroup& q) {
    Representation rep;
    rep.dim = 1;
    for (Eigen::Index i = 0; i < q.dim(); ++i)
        rep.images.push_back(Matrix::Constant(1, 1, q.apply_counit(q.basis(i))));
    return rep;
}

Representation block_representation(const GeneratorContext& ctx, Eigen::Index block) {
    const auto& blk = ctx.regular_blocks.blocks[block];
    const Eigen::Index d = blk.block_dim;
    // Offset of this block's units in the flattened unit list.
    Eigen::Index offset = 0;
    for (Eigen::Index b = 0; b < block; ++b)
        offset += ctx.regular_blocks.blocks[b].block_dim * ctx.regular_blocks.blocks[b].block_dim;
    Representation rep;
    rep.dim = d;
    for (Eigen::Index i = 0; i < ctx.q.dim(); ++i) {
        const UnitExpansion e = expand_in_units(ctx.regular_blocks, ctx.pi[i]);
        rep.images.push_back(unvec(e.coefficients.segment(offset, d * d), d, d));
    }
    return rep;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    Representation out;
    out.dim = a.dim + b.dim;
    for (size_t i = 0; i < a.images.size(); ++i) {
        Matrix m = Matrix::Zero(out.dim, out.dim);
        m.topLeftCorner(a.dim, a.dim) = a.images[i];
        m.bottomRightCorner(b.dim, b.dim) = b.images[i];
        out.images.push_back(m);
    }
    return out;
}

namespace {

Matrix haar_random_unitary(Eigen::Index k, std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    Matrix g(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) g(i, j) = Complex(d(rng), d(rng));
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < k; ++i) {
        const Complex rc = r(i, i);
        q.col(i) *= (rc == 0.0) ? 1.0 : rc / std::abs(rc);
    }
    return q;
}

}  // namespace

Representation random_representation(const GeneratorContext& ctx, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Eigen::Index nb = ctx.regular_blocks.n_blocks();
    std::uniform_int_distribution<int> mdist(0, 3);
    std::vector<int> mult(nb, 0);
    Eigen::Index k = 0;
    while (k == 0)
        for (Eigen::Index b = 0; b < nb; ++b) {
            mult[b] = mdist(rng);
            k += mult[b] * ctx.regular_blocks.blocks[b].block_dim;
        }
    Representation rep;
    rep.dim = k;
    std::vector<Representation> blocks;
    for (Eigen::Index b = 0; b < nb; ++b)
        if (mult[b] > 0) blocks.push_back(block_representation(ctx, b));
    rep.images.assign(ctx.q.dim(), Matrix());
    for (Eigen::Index i = 0; i < ctx.q.dim(); ++i) {
        Matrix m = Matrix::Zero(k, k);
        Eigen::Index at = 0;
        Eigen::Index bi = 0;
        for (Eigen::Index b = 0; b < nb; ++b) {
            if (mult[b] == 0) continue;
            const Eigen::Index d = ctx.regular_blocks.blocks[b].block_dim;
            const Matrix piece = kron(blocks[bi].images[i], eye(mult[b]));
            m.block(at, at, d * mult[b], d * mult[b]) = piece;
            at += d * mult[b];
            ++bi;
        }
        rep.images[i] = m;
    }
    const Matrix u = haar_random_unitary(k, rng);
    for (auto& m : rep.images) m = u.adjoint() * m * u;
    return rep;
}

double representation_residual(const QuantumGroup& q, const Representation& rep) {
    const Eigen::Index n = q.dim();
    double worst = residual(rep.apply(q.alg.unit), eye(rep.dim));
    for (Eigen::Index i = 0; i < n; ++i) {
        worst = std::max(worst, residual(rep.images[i].adjoint(),
                                         rep.apply(q.alg.star_of(q.basis(i)))));
        for (Eigen::Index j = 0; j < n; ++j)
            worst = std::max(worst, residual(rep.images[i] * rep.images[j],
                                             rep.apply(q.alg.mul(q.basis(i), q.basis(j)))));
    }
    return worst;
}

Covector q_functional(const GeneratorContext& ctx, const Element& a) {
    return ctx.q.mod.haar * ctx.q.alg.lmul(ctx.q.apply_antipode_inv(a));
}

Report q_functional_report(const GeneratorContext& ctx, double tol) {
    const QuantumGroup& q = ctx.q;
    const Eigen::Index n = q.dim();
    Report rep;
    rep.suite = "q-functional";

    Matrix qmat(n, n);  // row i = Q(e_i) in dual coordinates
    for (Eigen::Index i = 0; i < n; ++i) qmat.row(i) = q_functional(ctx, q.basis(i));

    // Vector-functional form: Q(a) = omega_{Lambda(a), Lambda(c)} on pihat.
    {
        const Vector lc = ctx.gns.lambda(ctx.companion);
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const Vector la = ctx.gns.lambda(q.basis(i));
            for (Eigen::Index j = 0; j < n; ++j) {
                const Complex via_vector = lc.dot(ctx.pihat[j] * la);
                worst = std::max(worst, std::abs(qmat(i, j) - via_vector));
            }
        }
        rep.add("q-map-vector-functional", worst, tol);
    }
    // Convolution homomorphism with respect to the opposite dual coproduct.
    {
        const Matrix dop = flip(n, n) * ctx.dual.hopf.comult;
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                const Covector conv = kron_cov(Covector(qmat.row(i)), Covector(qmat.row(j))) * dop;
                const Covector direct =
                    q_functional(ctx, q.alg.mul(q.basis(i), q.basis(j)));
                worst = std::max(worst, residual(Matrix(conv), Matrix(direct)));
            }
        rep.add("q-map-convolution-homomorphism", worst, tol);
    }
    // Injectivity (and density in the finite-dimensional dual space).
    {
        Eigen::JacobiSVD<Matrix> svd(qmat);
        rep.add_flag("q-map-full-rank",
                     svd.singularValues()(n - 1) > 1e-9 * svd.singularValues()(0));
    }
    // Composition with the dual representation recovers the double-dual map:
    // Q(a)[pihat(b^)] = Theta(S^{-1}(a))(b^) = b^(S^{-1}(a)).
    {
        double worst = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const Covector via_pairing =
                Covector((q.mod.hat * q.apply_antipode_inv(q.basis(i))).transpose());
            worst = std::max(worst, residual(Matrix(Covector(qmat.row(i))), Matrix(via_pairing)));
        }
        rep.add("q-map-double-dual-composition", worst, tol);
    }
    return rep;
}

Generator generator_of_rep(const GeneratorContext& ctx, const Representation& rep) {
    const QuantumGroup& q = ctx.q;
    const Eigen::Index n = q.dim(), k = rep.dim;
    if (representation_residual(q, rep) > 1e-6 ||
        residual(rep.apply(q.alg.unit), eye(k)) > 1e-6)
        throw Error(Error::Kind::verification,
                    "degenerate or invalid representation rejected");
    // U (Lambda(e_p) (x) v) = sum_{r,s} Delta(e_p)_{r,s} Lambda(e_s) (x) phi(e_r) v.
    Matrix kmat(n * k, n * k);
    for (Eigen::Index p = 0; p < n; ++p) {
        const Matrix d = unvec(q.hopf.comult.col(p), n, n);
        Matrix block = Matrix::Zero(n * k, k);
        for (Eigen::Index s = 0; s < n; ++s) {
            Matrix ms = Matrix::Zero(k, k);
            for (Eigen::Index r = 0; r < n; ++r)
                if (d(r, s) != 0.0) ms += d(r, s) * rep.images[r];
            if (ms.isZero(0.0)) continue;
            const Vector col = ctx.gns.orthonormalizer.col(s);
            for (Eigen::Index h = 0; h < n; ++h)
                if (col(h) != 0.0) block.middleRows(h * k, k) += col(h) * ms;
        }
        kmat.middleCols(p * k, k) = block;
    }
    // U = kmat (C^{-1} (x) I): mix column blocks by C^{-1}.
    Generator gen;
    gen.u = Matrix::Zero(n * k, n * k);
    const Matrix& cinv = ctx.gns.orthonormalizer_inv;
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index p = 0; p < n; ++p)
            if (cinv(p, j) != 0.0)
                gen.u.middleCols(j * k, k) += cinv(p, j) * kmat.middleCols(p * k, k);
    return gen;
}

Representation rep_of_generator(const GeneratorContext& ctx, const Generator& gen) {
    const QuantumGroup& q = ctx.q;
    const Eigen::Index n = q.dim();
    const Eigen::Index k = gen.u.rows() / n;
    const Vector lc = ctx.gns.lambda(ctx.companion);
    Representation rep;
    rep.dim = k;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Vector la = ctx.gns.lambda(q.basis(i));
        // (omega_{Lambda(a), Lambda(c)} (x) i) U = (v^H (x) I) U (u (x) I).
        Matrix out = Matrix::Zero(k, k);
        for (Eigen::Index h1 = 0; h1 < n; ++h1)
            for (Eigen::Index h2 = 0; h2 < n; ++h2) {
                const Complex w = std::conj(lc(h1)) * la(h2);
                if (w == 0.0) continue;
                out += w * gen.u.block(h1 * k, h2 * k, k, k);
            }
        rep.images.push_back(out);
    }
    return rep;
}

namespace {

// U as an n x n array of k x k blocks: blk[m][a'](c,c') = U[(m,c),(a',c')].
std::vector<std::vector<Matrix>> block_view(const Matrix& u, Eigen::Index n, Eigen::Index k) {
    std::vector<std::vector<Matrix>> blk(n, std::vector<Matrix>(n));
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) blk[a][b] = u.block(a * k, b * k, k, k);
    return blk;
}

}  // namespace

CorepResiduals corep_residuals(const GeneratorContext& ctx, const Generator& gen,
                               Eigen::Index rep_dim) {
    const Eigen::Index n = ctx.q.dim(), k = rep_dim;
    const Matrix& w = ctx.mu.w_hat;
    const auto ublk = block_view(gen.u, n, k);

    // Z = What_12 U_13 U_23 - U_23 What_12, accumulated per column block
    // (a', b'); both stated residuals are unitarily equivalent to |Z|.
    double z2 = 0.0, x2 = 0.0, y2 = 0.0;
    Matrix pcol(n * n, k * k), xcol(n * n, k * k), ycol(n * n, k * k);
    for (Eigen::Index ap = 0; ap < n; ++ap)
        for (Eigen::Index bp = 0; bp < n; ++bp) {
            for (Eigen::Index m = 0; m < n; ++m)
                for (Eigen::Index mp = 0; mp < n; ++mp) {
                    const Matrix prod = ublk[m][ap] * ublk[mp][bp];
                    for (Eigen::Index c = 0; c < k; ++c)
                        pcol.row(m * n + mp).segment(c * k, k) = prod.row(c);
                }
            // X column block: (What (x) I_k) P.
            for (Eigen::Index row = 0; row < n * n; ++row) {
                Eigen::RowVectorXcd acc = Eigen::RowVectorXcd::Zero(k * k);
                for (Eigen::Index colm = 0; colm < n * n; ++colm)
                    if (w(row, colm) != 0.0) acc += w(row, colm) * pcol.row(colm);
                xcol.row(row) = acc;
            }
            // Y column block: Y[(a,b,c),(c')] = sum_m What[(a,m),(a',b')] U[(b,c),(m,c')].
            for (Eigen::Index a = 0; a < n; ++a)
                for (Eigen::Index b = 0; b < n; ++b) {
                    Matrix acc = Matrix::Zero(k, k);
                    for (Eigen::Index m = 0; m < n; ++m) {
                        const Complex wv = w(a * n + m, ap * n + bp);
                        if (wv != 0.0) acc += wv * ublk[b][m];
                    }
                    for (Eigen::Index c = 0; c < k; ++c)
                        ycol.row(a * n + b).segment(c * k, k) = acc.row(c);
                }
            z2 += (xcol - ycol).squaredNorm();
            x2 += xcol.squaredNorm();
            y2 += ycol.squaredNorm();
        }
    const double znorm = std::sqrt(z2);
    const double scale = std::max({1.0, std::sqrt(x2), std::sqrt(y2)});
    CorepResiduals out;
    out.corepresentation = znorm / scale;
    out.exchange = znorm / scale;
    return out;
}

CorepResiduals corep_residuals_literal(const GeneratorContext& ctx, const Generator& gen,
                                       Eigen::Index rep_dim) {
    const Eigen::Index n = ctx.q.dim(), k = rep_dim;
    const LegSpace s({n, n, k});
    const Matrix w12 = leg_embed(ctx.mu.w_hat, {0, 1}, s);
    const Matrix u13 = leg_embed(gen.u, {0, 2}, s);
    const Matrix u23 = leg_embed(gen.u, {1, 2}, s);
    CorepResiduals out;
    out.corepresentation = residual(w12.adjoint() * u23 * w12, u13 * u23);
    out.exchange = residual(w12 * u13, u23 * w12 * u23.adjoint());
    return out;
}

double intertwining_residual(const GeneratorContext& ctx, const Representation& rep,
                             const Generator& gen) {
    const QuantumGroup& q = ctx.q;
    const Eigen::Index n = q.dim(), k = rep.dim;
    const auto ublk = block_view(gen.u, n, k);
    double worst = 0.0;
    for (Eigen::Index ib = 0; ib < n; ++ib)
        for (Eigen::Index ia = 0; ia < n; ++ia) {
            // LHS = U (pihat(e_ib^) (x) phi(e_ia)) computed blockwise.
            Matrix lhs(n * k, n * k), rhs = Matrix::Zero(n * k, n * k);
            const Matrix& ph = ctx.pihat[ib];
            const Matrix& fi = rep.images[ia];
            for (Eigen::Index a = 0; a < n; ++a)
                for (Eigen::Index b = 0; b < n; ++b) {
                    Matrix acc = Matrix::Zero(k, k);
                    for (Eigen::Index m = 0; m < n; ++m)
                        if (ph(m, b) != 0.0) acc += ph(m, b) * ublk[a][m];
                    lhs.block(a * k, b * k, k, k) = acc * fi;
                }
            const Matrix v = unvec(q.maps.t1.col(ib * n + ia), n, n);
            for (Eigen::Index p = 0; p < n; ++p)
                for (Eigen::Index qq = 0; qq < n; ++qq) {
                    if (v(p, qq) == 0.0) continue;
                    const Matrix& ph2 = ctx.pihat[qq];
                    const Matrix& fp = rep.images[p];
                    for (Eigen::Index a = 0; a < n; ++a)
                        for (Eigen::Index b = 0; b < n; ++b)
                            if (ph2(a, b) != 0.0)
                                rhs.block(a * k, b * k, k, k) += v(p, qq) * ph2(a, b) * fp;
                }
            worst = std::max(worst, residual(lhs, rhs));
        }
    return worst;
}

double slice_identity_residual(const GeneratorContext& ctx, const Representation& rep,
                               const Generator& gen) {
    const QuantumGroup& q = ctx.q;
    const Eigen::Index n = q.dim(), k = rep.dim;
    double worst = 0.0;
    for (Eigen::Index ia = 0; ia < n; ++ia) {
        const Vector la = ctx.gns.lambda(q.basis(ia));
        for (Eigen::Index ib = 0; ib < n; ++ib) {
            const Vector lb = ctx.gns.lambda(q.basis(ib));
            Matrix lhs = Matrix::Zero(k, k);
            for (Eigen::Index h1 = 0; h1 < n; ++h1)
                for (Eigen::Index h2 = 0; h2 < n; ++h2) {
                    const Complex wgt = std::conj(lb(h1)) * la(h2);
                    if (wgt != 0.0) lhs += wgt * gen.u.block(h1 * k, h2 * k, k, k);
                }
            // (i (x) phi)((1 (x) b*) Delta(a))
            const Matrix lbs = q.alg.lmul(q.alg.star_of(q.basis(ib)));
            const Vector t = (unvec(q.hopf.comult.col(ia), n, n) * lbs.transpose()) *
                             q.mod.haar.transpose();
            worst = std::max(worst, residual(lhs, rep.apply(t)));
        }
    }
    return worst;
}

Matrix action_alpha(const Generator& gen, const Matrix& x, Eigen::Index rep_dim) {
    const Eigen::Index nk = gen.u.rows();
    const Eigen::Index n = nk / rep_dim;
    return gen.u.adjoint() * kron(eye(n), x) * gen.u;
}

Matrix action_alpha_unit(const Generator& gen, Eigen::Index r, Eigen::Index s,
                         Eigen::Index rep_dim) {
    const Eigen::Index k = rep_dim;
    const Eigen::Index n = gen.u.rows() / k;
    // alpha(E_rs) = (rows of U with K-index r)^H (rows with K-index s).
    Matrix ur(n, n * k), us(n, n * k);
    for (Eigen::Index a = 0; a < n; ++a) {
        ur.row(a) = gen.u.row(a * k + r);
        us.row(a) = gen.u.row(a * k + s);
    }
    return ur.adjoint() * us;
}

double action_property_residual(const GeneratorContext& ctx, const Generator& gen,
                                Eigen::Index rep_dim) {
    const Eigen::Index n = ctx.q.dim(), k = rep_dim;
    const LegSpace s3({n, n, k});
    const Matrix u13 = leg_embed(gen.u, {0, 2}, s3);
    const Matrix u23 = leg_embed(gen.u, {1, 2}, s3);
    const Matrix w12 = leg_embed(ctx.mu.w_hat, {0, 1}, s3);
    const Matrix v1 = u13 * u23, v2 = u23 * w12;
    // Both sides conjugate 1 (x) 1 (x) E_rs; slice the third leg instead of
    // forming the sparse middle factor.
    const Eigen::Index nn = n * n;
    auto leg3_rows = [&](const Matrix& v, Eigen::Index c) {
        Matrix out(nn, nn * k);
        for (Eigen::Index b = 0; b < nn; ++b) out.row(b) = v.row(b * k + c);
        return out;
    };
    double worst = 0.0;
    for (Eigen::Index r = 0; r < k; ++r) {
        const Matrix v1r = leg3_rows(v1, r), v2r = leg3_rows(v2, r);
        for (Eigen::Index s = 0; s < k; ++s) {
            const Matrix v1s = leg3_rows(v1, s), v2s = leg3_rows(v2, s);
            worst = std::max(worst, residual(v1r.adjoint() * v1s, v2r.adjoint() * v2s));
        }
    }
    return worst;
}

std::vector<Matrix> fixed_points(const Generator& gen, Eigen::Index rep_dim) {
    const Eigen::Index k = rep_dim;
    const Eigen::Index n = gen.u.rows() / k;
    Matrix map(n * n * k * k, k * k);
    for (Eigen::Index r = 0; r < k; ++r)
        for (Eigen::Index s = 0; s < k; ++s) {
            Matrix d = action_alpha_unit(gen, r, s, k);
            // subtract 1 (x) E_rs
            for (Eigen::Index a = 0; a < n; ++a) d(a * k + r, a * k + s) -= 1.0;
            map.col(r * k + s) = vec(d);
        }
    Eigen::JacobiSVD<Matrix> svd(map, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = std::max(sv(0), 1e-300);
    std::vector<Matrix> out;
    for (Eigen::Index i = 0; i < k * k; ++i) {
        const double v = i < sv.size() ? sv(i) : 0.0;
        if (v < 1e-9 * smax) out.push_back(unvec(svd.matrixV().col(i), k, k));
    }
    return out;
}

Covector invariant_mean(const GeneratorContext& ctx) { return ctx.dual.mod.haar; }

Report invariant_mean_report(const GeneratorContext& ctx, double tol) {
    Report rep;
    rep.suite = "invariant-mean";
    const Eigen::Index n = ctx.q.dim();
    const Covector m = invariant_mean(ctx);
    rep.add("mean-normalised", std::abs((m * ctx.dual.alg.unit)(0) - 1.0), tol);
    rep.add_flag("mean-positive", ctx.dual.mod.gram_min_eig > 0.0);
    // Right invariance for the opposite coproduct:
    // m((i (x) w) Dhat_op(x)) = w(1) m(x) for all coordinate functionals w.
    const Matrix dop = flip(n, n) * ctx.dual.hopf.comult;
    double worst = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        const Matrix z = unvec(dop.col(j), n, n);
        const Covector lhs = m * z;  // row: m applied to the first leg
        const Covector rhs = m(j) * Covector(ctx.dual.alg.unit.transpose());
        worst = std::max(worst, residual(Matrix(lhs), Matrix(rhs)));
    }
    rep.add("mean-right-invariance", worst, tol);
    return rep;
}

Matrix conditional_expectation(const GeneratorContext& ctx, const Generator& gen,
                               Eigen::Index rep_dim) {
    const Eigen::Index n = ctx.q.dim(), k = rep_dim;
    // Decompose alpha(x) = sum_j pihat(e_j^) (x) Y_j and contract with m.
    Matrix phat(n * n, n);
    for (Eigen::Index j = 0; j < n; ++j) phat.col(j) = vec(ctx.pihat[j]);
    const Eigen::ColPivHouseholderQR<Matrix> qr(phat);
    const Covector m = invariant_mean(ctx);

    Matrix emat(k * k, k * k);
    Matrix z(n * n, k * k);
    for (Eigen::Index r = 0; r < k; ++r)
        for (Eigen::Index s = 0; s < k; ++s) {
            const Matrix ax = action_alpha_unit(gen, r, s, k);
            for (Eigen::Index h1 = 0; h1 < n; ++h1)
                for (Eigen::Index h2 = 0; h2 < n; ++h2)
                    for (Eigen::Index c1 = 0; c1 < k; ++c1)
                        for (Eigen::Index c2 = 0; c2 < k; ++c2)
                            z(h1 * n + h2, c1 * k + c2) = ax(h1 * k + c1, h2 * k + c2);
            const Matrix y = qr.solve(z);          // rows: Y_j vectorised
            emat.col(r * k + s) = (m * y).transpose();  // vec E(E_rs)
        }
    return emat;
}

Report conditional_expectation_report(const GeneratorContext& ctx, const Representation& rep,
                                      double tol, std::uint64_t seed) {
    Report out;
    out.suite = "conditional-expectation";
    const Eigen::Index k = rep.dim;
    const Generator gen = generator_of_rep(ctx, rep);
    const Matrix emat = conditional_expectation(ctx, gen, k);

    out.add("expectation-idempotent", residual(emat * emat, emat), 1e-8);
    // Range = fixed points = commutant of the representation.
    const std::vector<Matrix> fixed = fixed_points(gen, k);
    const std::vector<Matrix> comm = commutant_basis(rep.images);
    {
        Matrix fcols(k * k, static_cast<Eigen::Index>(fixed.size()));
        for (size_t i = 0; i < fixed.size(); ++i)
            fcols.col(static_cast<Eigen::Index>(i)) = vec(fixed[i]);
        Matrix ccols(k * k, static_cast<Eigen::Index>(comm.size()));
        for (size_t i = 0; i < comm.size(); ++i)
            ccols.col(static_cast<Eigen::Index>(i)) = vec(comm[i]);
        auto onb = [](const Matrix& cols) {
            Eigen::JacobiSVD<Matrix> svd(cols, Eigen::ComputeThinU);
            Eigen::Index rank = 0;
            for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
                if (svd.singularValues()(i) > 1e-9 * svd.singularValues()(0)) ++rank;
            return Matrix(svd.matrixU().leftCols(rank));
        };
        const Matrix qf = onb(fcols), qc = onb(ccols), qe = onb(emat);
        out.add_flag("fixed-points-equal-commutant",
                     qf.cols() == qc.cols() &&
                         (qf * qf.adjoint() - qc * qc.adjoint()).norm() < 1e-8 * qf.cols());
        out.add_flag("expectation-range-is-commutant",
                     qe.cols() == qc.cols() &&
                         (qe * qe.adjoint() - qc * qc.adjoint()).norm() < 1e-8 * qc.cols());
        // E acts as the identity on the commutant.
        double worst = 0.0;
        for (const auto& x : comm) {
            const Vector ex = emat * vec(x);
            worst = std::max(worst, residual_vec(ex, vec(x)));
        }
        out.add("expectation-fixes-commutant", worst, std::min(tol, 1e-8));
    }
    // Unital, positive and contractive on samples.
    {
        out.add("expectation-unital",
                residual(unvec(Vector(emat * vec(eye(k))), k, k), eye(k)), std::min(tol, 1e-8));
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> d(0.0, 1.0);
        double worst_norm = 0.0, worst_pos = 0.0;
        for (int t = 0; t < 100; ++t) {
            Matrix x(k, k);
            for (Eigen::Index i = 0; i < k; ++i)
                for (Eigen::Index j = 0; j < k; ++j) x(i, j) = Complex(d(rng), d(rng));
            const Matrix ex = unvec(Vector(emat * vec(x)), k, k);
            const double nx = x.jacobiSvd().singularValues()(0);
            const double ne = ex.jacobiSvd().singularValues()(0);
            worst_norm = std::max(worst_norm, ne / nx - 1.0);
            const Matrix pos = x.adjoint() * x;
            const Matrix epos = unvec(Vector(emat * vec(pos)), k, k);
            Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (epos + epos.adjoint()));
            worst_pos = std::max(worst_pos,
                                 -es.eigenvalues().minCoeff() / std::max(1.0, pos.norm()));
        }
        out.add("expectation-contractive", std::max(0.0, worst_norm), 1e-8);
        out.add("expectation-positive", std::max(0.0, worst_pos), std::min(tol, 1e-8));
    }
    return out;
}

}  // namespace aqg
