#pragma once

// Dense complex kernel with tensor-leg bookkeeping.
//
// Conventions (fixed project-wide):
//  * Scalars are double-precision complex.
//  * Tensor factors are flattened row-major with the LEFTMOST factor
//    slowest-varying: the basis vector e_i (x) e_j of C^m (x) C^n sits at
//    flat index i*n + j.  Under this convention
//        (X (x) Y) vec(V) = vec(X V Y^T)
//    for V stored row-major, and kron() below agrees entrywise with the
//    operator tensor product.

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace aqg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Covector = Eigen::RowVectorXcd;
using RealMatrix = Eigen::MatrixXd;

// Ordered list of tensor-factor dimensions, all >= 1.
struct LegSpace {
    std::vector<Eigen::Index> factor_dims;

    explicit LegSpace(std::vector<Eigen::Index> dims);
    Eigen::Index total_dim() const;
    Eigen::Index n_legs() const { return static_cast<Eigen::Index>(factor_dims.size()); }
};

// Kronecker product; dimensions multiply.
Matrix kron(const Matrix& x, const Matrix& y);
Vector kron_vec(const Vector& x, const Vector& y);
Covector kron_cov(const Covector& x, const Covector& y);

// Unitary flip: flip(m,n)(v (x) w) = w (x) v for v in C^m, w in C^n.
Matrix flip(Eigen::Index m, Eigen::Index n);

// Operator acting as X on the two named legs (0-based indices into `space`,
// distinct, in increasing order not required) and as identity elsewhere.
// X must act on the product of the two named factors, ordered as given.
Matrix leg_embed(const Matrix& x, std::pair<int, int> legs, const LegSpace& space);

// Relative Frobenius deviation: |X-Y|_F / max(1, |X|_F, |Y|_F).
// Zero iff X == Y.  Throws on shape mismatch.
double residual(const Matrix& x, const Matrix& y);
double residual_vec(const Vector& x, const Vector& y);

// Identity of size n.
inline Matrix eye(Eigen::Index n) { return Matrix::Identity(n, n); }

// vec/unvec between C^{m*n} and row-major m x n arrays.
Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);
Vector vec(const Matrix& m);

// Efficient structured products of leg-embedded operators on a 3-factor
// space [d1,d2,d3].  Each returns the dense product matrix but avoids
// materialising the embedded factors; used where full leg_embed() matrices
// would dominate the runtime.  They agree entrywise with the leg_embed()
// route (see the tensor tests).
Matrix lmul_leg12(const Matrix& x, const Matrix& big, const LegSpace& space);
Matrix lmul_leg23(const Matrix& x, const Matrix& big, const LegSpace& space);
Matrix lmul_leg13(const Matrix& x, const Matrix& big, const LegSpace& space);
Matrix rmul_leg23(const Matrix& big, const Matrix& x, const LegSpace& space);
Matrix leg12_times_leg13(const Matrix& x, const Matrix& y, const LegSpace& space);
Matrix leg23_times_leg12(const Matrix& x, const Matrix& y, const LegSpace& space);

}  // namespace aqg
