#pragma once

// Numerical block decomposition of a concrete matrix *-algebra
// (a subalgebra of M_N(C) closed under the conjugate transpose), given by a
// spanning set of matrices.  Produces minimal central projections and a
// complete system of matrix units, from which irreducible representations
// and Peter-Weyl data are read off.
//
// The algorithm is the standard randomised one: spectral projections of a
// generic Hermitian central element give the minimal central projections;
// within each block, spectral projections of a generic Hermitian element
// give diagonal matrix units, completed to a full system through partial
// isometries.  Randomness is seeded and every step is verified, with a
// bounded number of retries; failure throws Error{verification} with
// message "block extraction rank failure".

#include <cstdint>
#include <vector>

#include "aqg/report.hpp"
#include "aqg/tensor.hpp"

namespace aqg {

struct MatrixUnitBlock {
    Eigen::Index block_dim = 0;     // n_alpha
    Eigen::Index multiplicity = 0;  // copies of the block in the ambient space
    Matrix central_projection;      // minimal central projection
    std::vector<Matrix> units;      // units[i * block_dim + j] ~ e_ij
};

struct StarAlgebraDecomposition {
    Eigen::Index ambient_dim = 0;
    Eigen::Index algebra_dim = 0;
    std::vector<MatrixUnitBlock> blocks;  // sorted by block_dim, then found order

    Eigen::Index n_blocks() const { return static_cast<Eigen::Index>(blocks.size()); }
    // All matrix units flattened in block order; a basis of the algebra.
    std::vector<const Matrix*> all_units() const;
};

StarAlgebraDecomposition decompose_star_algebra(const std::vector<Matrix>& spanning,
                                                std::uint64_t seed = 0x5EED);

// Coefficients of x in the matrix-unit basis (least squares; residual is the
// distance of x from the algebra).
struct UnitExpansion {
    Vector coefficients;  // ordered as all_units()
    double residual = 0.0;
};
UnitExpansion expand_in_units(const StarAlgebraDecomposition& dec, const Matrix& x);

// Orthonormal basis of the commutant {x : x a = a x for all a in spanning}.
std::vector<Matrix> commutant_basis(const std::vector<Matrix>& spanning, double rel_tol = 1e-9);

}  // namespace aqg
