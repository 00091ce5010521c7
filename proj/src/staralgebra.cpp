#include "aqg/staralgebra.hpp"

#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace aqg {

namespace {

constexpr double kRankTol = 1e-9;
constexpr double kClusterTol = 1e-7;

Matrix columns_of(const std::vector<Matrix>& mats) {
    const Eigen::Index n2 = mats[0].rows() * mats[0].cols();
    Matrix out(n2, static_cast<Eigen::Index>(mats.size()));
    for (size_t i = 0; i < mats.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = vec(mats[i]);
    return out;
}

Matrix orthonormal_span(const Matrix& columns) {
    Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > kRankTol * s(0)) ++rank;
    return svd.matrixU().leftCols(rank);
}

// Distance of vec(x) from a span given by an orthonormal column basis.
double span_distance(const Matrix& onb, const Matrix& x) {
    const Vector v = vec(x);
    const Vector proj = onb * (onb.adjoint() * v);
    return (v - proj).norm() / std::max(1.0, v.norm());
}

Matrix random_in_span(const Matrix& onb, std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> d(0.0, 1.0);
    Vector c(onb.cols());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = Complex(d(rng), d(rng));
    return unvec(onb * c, n, n);
}

// Eigenvalue clusters of a Hermitian matrix, ignoring an (expected) zero
// cluster when drop_zero is set.  Returns the list of spectral projections.
std::vector<Matrix> spectral_clusters(const Matrix& herm, bool drop_zero) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (herm + herm.adjoint()));
    const Eigen::VectorXd ev = es.eigenvalues();
    const Matrix v = es.eigenvectors();
    const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
    std::vector<Matrix> out;
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= ev.size(); ++i) {
        if (i == ev.size() || ev(i) - ev(i - 1) > kClusterTol * scale) {
            const double value = ev.segment(start, i - start).mean();
            if (!(drop_zero && std::abs(value) < kClusterTol * scale)) {
                const Matrix block = v.middleCols(start, i - start);
                out.push_back(block * block.adjoint());
            }
            start = i;
        }
    }
    return out;
}

bool is_perfect_square(Eigen::Index x, Eigen::Index& root) {
    root = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(x))));
    return root * root == x;
}

}  // namespace

std::vector<const Matrix*> StarAlgebraDecomposition::all_units() const {
    std::vector<const Matrix*> out;
    for (const auto& b : blocks)
        for (const auto& u : b.units) out.push_back(&u);
    return out;
}

std::vector<Matrix> commutant_basis(const std::vector<Matrix>& spanning, double rel_tol) {
    const Eigen::Index n = spanning[0].rows();
    Matrix stacked(static_cast<Eigen::Index>(spanning.size()) * n * n, n * n);
    for (size_t i = 0; i < spanning.size(); ++i) {
        const Matrix& a = spanning[i];
        stacked.middleRows(static_cast<Eigen::Index>(i) * n * n, n * n) =
            kron(a, eye(n)) - kron(eye(n), a.transpose());
    }
    Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double smax = std::max(s(0), 1e-300);
    // Right singular vectors with negligible singular value span the commutant.
    std::vector<Matrix> out;
    for (Eigen::Index i = 0; i < n * n; ++i) {
        const double sv = i < s.size() ? s(i) : 0.0;
        if (sv < rel_tol * smax) out.push_back(unvec(svd.matrixV().col(i), n, n));
    }
    return out;
}

StarAlgebraDecomposition decompose_star_algebra(const std::vector<Matrix>& spanning,
                                                std::uint64_t seed) {
    if (spanning.empty()) throw Error(Error::Kind::verification, "block extraction rank failure");
    const Eigen::Index n = spanning[0].rows();
    std::mt19937_64 rng(seed);

    const Matrix alg_onb = orthonormal_span(columns_of(spanning));
    const Eigen::Index alg_dim = alg_onb.cols();

    // Center = algebra  intersect  commutant.
    const std::vector<Matrix> comm = commutant_basis(spanning);
    Matrix center_onb;
    {
        const Matrix comm_onb = orthonormal_span(columns_of(comm));
        Matrix joint(n * n, alg_onb.cols() + comm_onb.cols());
        joint << alg_onb, -comm_onb;
        Eigen::JacobiSVD<Matrix> svd(joint, Eigen::ComputeFullV);
        const auto& s = svd.singularValues();
        std::vector<Matrix> center;
        for (Eigen::Index i = 0; i < s.size(); ++i)
            if (s(i) < kRankTol * s(0)) {
                const Vector u = svd.matrixV().col(i).head(alg_onb.cols());
                center.push_back(unvec(alg_onb * u, n, n));
            }
        if (center.empty()) throw Error(Error::Kind::verification, "block extraction rank failure");
        center_onb = orthonormal_span(columns_of(center));
    }
    const Eigen::Index n_blocks = center_onb.cols();

    for (int attempt = 0; attempt < 8; ++attempt) {
        // Minimal central projections from a generic Hermitian central element.
        Matrix z = random_in_span(center_onb, rng, n);
        z = Matrix(0.5 * (z + z.adjoint()));
        std::vector<Matrix> projections = spectral_clusters(z, /*drop_zero=*/false);
        if (static_cast<Eigen::Index>(projections.size()) != n_blocks) continue;

        StarAlgebraDecomposition dec;
        dec.ambient_dim = n;
        dec.algebra_dim = alg_dim;
        bool ok = true;
        Eigen::Index dim_accum = 0;

        for (const Matrix& p : projections) {
            if (span_distance(alg_onb, p) > 1e-8) {
                ok = false;
                break;
            }
            // Compressed block p A p: dimension must be a perfect square.
            std::vector<Matrix> compressed;
            for (const Matrix& a : spanning) compressed.push_back(p * a * p);
            const Matrix block_onb = orthonormal_span(columns_of(compressed));
            Eigen::Index block_dim = 0;
            if (!is_perfect_square(block_onb.cols(), block_dim)) {
                ok = false;
                break;
            }
            const Eigen::Index rank_p = static_cast<Eigen::Index>(std::llround(p.trace().real()));
            if (block_dim == 0 || rank_p % block_dim != 0) {
                ok = false;
                break;
            }
            const Eigen::Index mult = rank_p / block_dim;

            // Diagonal units from a generic Hermitian element of the block.
            std::vector<Matrix> diag_units;
            bool block_ok = false;
            for (int tries = 0; tries < 8 && !block_ok; ++tries) {
                Matrix y = random_in_span(block_onb, rng, n);
                y = Matrix(0.5 * (y + y.adjoint()));
                diag_units = spectral_clusters(y, /*drop_zero=*/true);
                if (static_cast<Eigen::Index>(diag_units.size()) != block_dim) continue;
                block_ok = true;
                for (const Matrix& e : diag_units) {
                    const Eigen::Index r =
                        static_cast<Eigen::Index>(std::llround(e.trace().real()));
                    if (r != mult || span_distance(alg_onb, e) > 1e-8) block_ok = false;
                }
            }
            if (!block_ok) {
                ok = false;
                break;
            }
            // Partial isometries e_i1 and the full unit system.
            MatrixUnitBlock blk;
            blk.block_dim = block_dim;
            blk.multiplicity = mult;
            blk.central_projection = p;
            std::vector<Matrix> col1(block_dim);
            col1[0] = diag_units[0];
            for (Eigen::Index i = 1; i < block_dim; ++i) {
                bool got = false;
                for (int tries = 0; tries < 8 && !got; ++tries) {
                    const Matrix t = random_in_span(block_onb, rng, n);
                    const Matrix w = diag_units[i] * t * diag_units[0];
                    const double lambda = (w.adjoint() * w).trace().real() /
                                          static_cast<double>(mult);
                    if (lambda < 1e-10) continue;
                    col1[i] = w / std::sqrt(lambda);
                    got = true;
                }
                if (!got) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
            blk.units.resize(block_dim * block_dim);
            for (Eigen::Index i = 0; i < block_dim; ++i)
                for (Eigen::Index j = 0; j < block_dim; ++j)
                    blk.units[i * block_dim + j] =
                        (i == j && i == 0) ? diag_units[0] : Matrix(col1[i] * col1[j].adjoint());
            // Verify the matrix-unit relations and membership.
            double worst = 0.0;
            for (Eigen::Index i = 0; i < block_dim && worst < 1e-8; ++i)
                for (Eigen::Index j = 0; j < block_dim; ++j) {
                    worst = std::max(worst, span_distance(alg_onb, blk.units[i * block_dim + j]));
                    worst = std::max(
                        worst, residual(blk.units[i * block_dim + j].adjoint(),
                                        blk.units[j * block_dim + i]));
                    for (Eigen::Index k = 0; k < block_dim; ++k)
                        for (Eigen::Index l = 0; l < block_dim; ++l) {
                            const Matrix prod = blk.units[i * block_dim + j] *
                                                blk.units[k * block_dim + l];
                            const Matrix expect = (j == k)
                                                      ? blk.units[i * block_dim + l]
                                                      : Matrix(Matrix::Zero(n, n));
                            worst = std::max(worst, (prod - expect).norm());
                        }
                }
            Matrix unit_sum = Matrix::Zero(n, n);
            for (Eigen::Index i = 0; i < block_dim; ++i)
                unit_sum += blk.units[i * block_dim + i];
            worst = std::max(worst, residual(unit_sum, p));
            if (worst > 1e-8) {
                ok = false;
                break;
            }
            dim_accum += block_dim * block_dim;
            dec.blocks.push_back(std::move(blk));
        }
        if (!ok || dim_accum != alg_dim) continue;
        std::stable_sort(dec.blocks.begin(), dec.blocks.end(),
                         [](const MatrixUnitBlock& a, const MatrixUnitBlock& b) {
                             return a.block_dim < b.block_dim;
                         });
        return dec;
    }
    throw Error(Error::Kind::verification, "block extraction rank failure");
}

UnitExpansion expand_in_units(const StarAlgebraDecomposition& dec, const Matrix& x) {
    const auto units = dec.all_units();
    Matrix basis(x.rows() * x.cols(), static_cast<Eigen::Index>(units.size()));
    for (size_t i = 0; i < units.size(); ++i) basis.col(static_cast<Eigen::Index>(i)) = vec(*units[i]);
    const Vector rhs = vec(x);
    UnitExpansion out;
    out.coefficients = basis.colPivHouseholderQr().solve(rhs);
    out.residual = (basis * out.coefficients - rhs).norm() / std::max(1.0, rhs.norm());
    return out;
}

}  // namespace aqg
