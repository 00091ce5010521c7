#include "aqg/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace aqg {

LegSpace::LegSpace(std::vector<Eigen::Index> dims) : factor_dims(std::move(dims)) {
    if (factor_dims.empty())
        throw std::invalid_argument("LegSpace: need at least one factor");
    for (auto d : factor_dims)
        if (d < 1) throw std::invalid_argument("LegSpace: factor dimensions must be >= 1");
}

Eigen::Index LegSpace::total_dim() const {
    Eigen::Index t = 1;
    for (auto d : factor_dims) t *= d;
    return t;
}

Matrix kron(const Matrix& x, const Matrix& y) {
    Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
}

Vector kron_vec(const Vector& x, const Vector& y) {
    Vector out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        out.segment(i * y.size(), y.size()) = x(i) * y;
    return out;
}

Covector kron_cov(const Covector& x, const Covector& y) {
    Covector out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        out.segment(i * y.size(), y.size()) = x(i) * y;
    return out;
}

Matrix flip(Eigen::Index m, Eigen::Index n) {
    Matrix out = Matrix::Zero(m * n, m * n);
    // e_i (x) e_j  (index i*n+j)  ->  e_j (x) e_i  (index j*m+i)
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out(j * m + i, i * n + j) = 1.0;
    return out;
}

Matrix leg_embed(const Matrix& x, std::pair<int, int> legs, const LegSpace& space) {
    const int p = legs.first, q = legs.second;
    const int L = static_cast<int>(space.n_legs());
    if (p == q || p < 0 || q < 0 || p >= L || q >= L)
        throw std::invalid_argument("leg_embed: legs must be distinct indices into the space");
    const Eigen::Index dp = space.factor_dims[p], dq = space.factor_dims[q];
    if (x.rows() != dp * dq || x.cols() != dp * dq)
        throw std::invalid_argument("leg_embed: operator size does not match the named factors");

    const Eigen::Index N = space.total_dim();
    // Strides of each leg in the flat row-major index.
    std::vector<Eigen::Index> stride(L, 1);
    for (int l = L - 2; l >= 0; --l) stride[l] = stride[l + 1] * space.factor_dims[l + 1];

    Matrix out = Matrix::Zero(N, N);
    // Enumerate the complement of {p,q} once, then fill the (p,q) block.
    std::vector<int> rest;
    for (int l = 0; l < L; ++l)
        if (l != p && l != q) rest.push_back(l);
    Eigen::Index rest_total = 1;
    for (int l : rest) rest_total *= space.factor_dims[l];

    for (Eigen::Index r = 0; r < rest_total; ++r) {
        // Decode the multi-index of the untouched legs.
        Eigen::Index base = 0, rr = r;
        for (int idx = static_cast<int>(rest.size()) - 1; idx >= 0; --idx) {
            const int l = rest[idx];
            base += (rr % space.factor_dims[l]) * stride[l];
            rr /= space.factor_dims[l];
        }
        for (Eigen::Index a = 0; a < dp; ++a)
            for (Eigen::Index b = 0; b < dq; ++b)
                for (Eigen::Index c = 0; c < dp; ++c)
                    for (Eigen::Index d = 0; d < dq; ++d)
                        out(base + a * stride[p] + b * stride[q],
                            base + c * stride[p] + d * stride[q]) += x(a * dq + b, c * dq + d);
    }
    return out;
}

double residual(const Matrix& x, const Matrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("residual: shape mismatch");
    const double scale = std::max({1.0, x.norm(), y.norm()});
    return (x - y).norm() / scale;
}

double residual_vec(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("residual: shape mismatch");
    const double scale = std::max({1.0, x.norm(), y.norm()});
    return (x - y).norm() / scale;
}

Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("unvec: size mismatch");
    Matrix out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = v(i * cols + j);
    return out;
}

Vector vec(const Matrix& m) {
    Vector out(m.rows() * m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i * m.cols() + j) = m(i, j);
    return out;
}

namespace {

void check3(const LegSpace& s) {
    if (s.n_legs() != 3)
        throw std::invalid_argument("structured leg product: expected a 3-factor space");
}

}  // namespace

Matrix lmul_leg12(const Matrix& x, const Matrix& big, const LegSpace& space) {
    check3(space);
    const Eigen::Index d1 = space.factor_dims[0], d2 = space.factor_dims[1],
                       d3 = space.factor_dims[2];
    const Eigen::Index N = d1 * d2 * d3;
    if (x.rows() != d1 * d2 || big.rows() != N)
        throw std::invalid_argument("lmul_leg12: size mismatch");
    // Rows of `big` grouped as (leg12, leg3); contract leg12 with x.
    Matrix out(N, big.cols());
    for (Eigen::Index r = 0; r < d1 * d2; ++r) {
        out.middleRows(r * d3, d3).setZero();
        for (Eigen::Index c = 0; c < d1 * d2; ++c)
            if (x(r, c) != 0.0) out.middleRows(r * d3, d3) += x(r, c) * big.middleRows(c * d3, d3);
    }
    return out;
}

Matrix lmul_leg23(const Matrix& x, const Matrix& big, const LegSpace& space) {
    check3(space);
    const Eigen::Index d1 = space.factor_dims[0], d2 = space.factor_dims[1],
                       d3 = space.factor_dims[2];
    const Eigen::Index N = d1 * d2 * d3;
    if (x.rows() != d2 * d3 || big.rows() != N)
        throw std::invalid_argument("lmul_leg23: size mismatch");
    Matrix out(N, big.cols());
    for (Eigen::Index a = 0; a < d1; ++a)
        out.middleRows(a * d2 * d3, d2 * d3) = x * big.middleRows(a * d2 * d3, d2 * d3);
    return out;
}

Matrix lmul_leg13(const Matrix& x, const Matrix& big, const LegSpace& space) {
    check3(space);
    const Eigen::Index d1 = space.factor_dims[0], d2 = space.factor_dims[1],
                       d3 = space.factor_dims[2];
    const Eigen::Index N = d1 * d2 * d3;
    if (x.rows() != d1 * d3 || big.rows() != N)
        throw std::invalid_argument("lmul_leg13: size mismatch");
    Matrix out = Matrix::Zero(N, big.cols());
    // out[(a,b,c),:] = sum_{a',c'} x[(a,c),(a',c')] big[(a',b,c'),:]
    for (Eigen::Index a = 0; a < d1; ++a)
        for (Eigen::Index c = 0; c < d3; ++c)
            for (Eigen::Index ap = 0; ap < d1; ++ap)
                for (Eigen::Index cp = 0; cp < d3; ++cp) {
                    const Complex w = x(a * d3 + c, ap * d3 + cp);
                    if (w == 0.0) continue;
                    for (Eigen::Index b = 0; b < d2; ++b)
                        out.row((a * d2 + b) * d3 + c) +=
                            w * big.row((ap * d2 + b) * d3 + cp);
                }
    return out;
}

Matrix rmul_leg23(const Matrix& big, const Matrix& x, const LegSpace& space) {
    check3(space);
    const Eigen::Index d1 = space.factor_dims[0], d2 = space.factor_dims[1],
                       d3 = space.factor_dims[2];
    const Eigen::Index N = d1 * d2 * d3;
    if (x.rows() != d2 * d3 || big.cols() != N)
        throw std::invalid_argument("rmul_leg23: size mismatch");
    Matrix out(big.rows(), N);
    for (Eigen::Index a = 0; a < d1; ++a)
        out.middleCols(a * d2 * d3, d2 * d3) = big.middleCols(a * d2 * d3, d2 * d3) * x;
    return out;
}

Matrix leg12_times_leg13(const Matrix& x, const Matrix& y, const LegSpace& space) {
    check3(space);
    const Eigen::Index d1 = space.factor_dims[0], d2 = space.factor_dims[1],
                       d3 = space.factor_dims[2];
    const Eigen::Index N = d1 * d2 * d3;
    if (x.rows() != d1 * d2 || y.rows() != d1 * d3)
        throw std::invalid_argument("leg12_times_leg13: size mismatch");
    // (X_12 Y_13)[(a,b,c),(a',b',c')] = sum_m X[(a,b),(m,b')] Y[(m,c),(a',c')]
    Matrix out(N, N);
    for (Eigen::Index a = 0; a < d1; ++a)
        for (Eigen::Index b = 0; b < d2; ++b)
            for (Eigen::Index c = 0; c < d3; ++c) {
                const Eigen::Index row = (a * d2 + b) * d3 + c;
                for (Eigen::Index ap = 0; ap < d1; ++ap)
                    for (Eigen::Index bp = 0; bp < d2; ++bp)
                        for (Eigen::Index cp = 0; cp < d3; ++cp) {
                            Complex acc = 0.0;
                            for (Eigen::Index m = 0; m < d1; ++m)
                                acc += x(a * d2 + b, m * d2 + bp) * y(m * d3 + c, ap * d3 + cp);
                            out(row, (ap * d2 + bp) * d3 + cp) = acc;
                        }
            }
    return out;
}

Matrix leg23_times_leg12(const Matrix& x, const Matrix& y, const LegSpace& space) {
    check3(space);
    const Eigen::Index d1 = space.factor_dims[0], d2 = space.factor_dims[1],
                       d3 = space.factor_dims[2];
    const Eigen::Index N = d1 * d2 * d3;
    if (x.rows() != d2 * d3 || y.rows() != d1 * d2)
        throw std::invalid_argument("leg23_times_leg12: size mismatch");
    // (X_23 Y_12)[(a,b,c),(a',b',c')] = sum_m X[(b,c),(m,c')] Y[(a,m),(a',b')]
    Matrix out(N, N);
    for (Eigen::Index a = 0; a < d1; ++a)
        for (Eigen::Index b = 0; b < d2; ++b)
            for (Eigen::Index c = 0; c < d3; ++c) {
                const Eigen::Index row = (a * d2 + b) * d3 + c;
                for (Eigen::Index ap = 0; ap < d1; ++ap)
                    for (Eigen::Index bp = 0; bp < d2; ++bp)
                        for (Eigen::Index cp = 0; cp < d3; ++cp) {
                            Complex acc = 0.0;
                            for (Eigen::Index m = 0; m < d2; ++m)
                                acc += x(b * d3 + c, m * d3 + cp) * y(a * d2 + m, ap * d2 + bp);
                            out(row, (ap * d2 + bp) * d3 + cp) = acc;
                        }
            }
    return out;
}

}  // namespace aqg
