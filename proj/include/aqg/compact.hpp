#pragma once

// Compact-type constructions: irreducible unitary corepresentations,
// Woronowicz characters f_z, quantum dimensions, the twisted antipode, the
// counit states built from the (twisted) antipode unitaries, the adjoint
// representation, the phi_z family, and the SU_q(2) coefficient calculus.
//
// In the decomposed case the blocks are read off the matrix decomposition
// of the dual: each matrix-unit block e^a_ij of A^ dualises to coefficients
// u^a_ij in A with Delta(u_ij) = sum_k u_ik (x) u_kj, and the F-matrix of a
// block is solved from the orthogonality relations
//     phi(u_ik u_js^*) = (1/d) delta_ij F_sk,   d = Tr F = Tr F^{-1},
// rather than assumed to be the identity.  SU_q(2) data is provided as an
// analytic coefficient calculus (F-matrices only): every formula evaluated
// there consumes nothing but orthogonality relations and F-powers.

#include <cstdint>
#include <optional>

#include "aqg/generator.hpp"

namespace aqg {

struct IrrepBlock {
    std::string label;
    Eigen::Index n = 0;      // ordinary dimension
    Matrix f;                // positive F-matrix, Tr F = Tr F^{-1}
    double d = 0.0;          // quantum dimension Tr F
    // Decomposed case only: coefficients u_ij as elements of A (columns),
    // flattened row-major (i * n + j).
    std::vector<Element> coeffs;
};

struct PeterWeylData {
    enum class Source { decomposed, analytic };
    Source source = Source::decomposed;
    std::vector<IrrepBlock> blocks;
    Eigen::Index total_dim() const;  // sum of n^2

    // Decomposed case: all coefficients as the columns of a basis-change
    // matrix from coefficient coordinates to A-coordinates.
    Matrix coefficient_matrix() const;
};

// Blocks of the dual dualised to matrix coefficients of A; verifies
// unitarity, completeness and pairwise inequivalence.
PeterWeylData decompose_corepresentations(const GeneratorContext& ctx);
Report decompose_report(const GeneratorContext& ctx, const PeterWeylData& pw, double tol);

// f_z(u^a_ij) = (F_a^z)_ij via principal powers; in the decomposed case the
// functional is returned as a covector on A.
Matrix f_z_block(const IrrepBlock& block, Complex z);
Covector f_z_functional(const PeterWeylData& pw, Complex z);
Report f_z_report(const GeneratorContext& ctx, const PeterWeylData& pw, double tol);

double quantum_dimension(const IrrepBlock& block);

// Orthogonality residual over all index tuples, including vanishing
// cross-block integrals.
double orthogonality_residual(const GeneratorContext& ctx, const PeterWeylData& pw);

// Twisted antipode S~ = (i (x) f_1) Delta S as a coordinate matrix.
Matrix twisted_antipode(const GeneratorContext& ctx, const PeterWeylData& pw);

// Coefficient calculus of the twisted antipode on a single block:
// S~(u_ij) = sum_s c_s u_js^* with c_s = (F^{-1})_{is}.  Needs only the
// F-matrix, so it is available in analytic mode; the decomposed tests
// cross-check it against the coordinate route.
Vector twisted_antipode_coefficients(const IrrepBlock& block, Eigen::Index i, Eigen::Index j);

// Counit states via the antipode unitaries on the GNS space:
//   epsilon0 uses V Lambda(a) = Lambda(S(a))      (tracial case only),
//   epsilon1 uses U Lambda(a) = Lambda(S~(a)).
// Both return the functional a -> <P((i (x) Ad)(pi (x) pi)Delta(a)) L(1), L(1)>
// as a covector on A.
Covector epsilon0(const GeneratorContext& ctx);
Covector epsilon1(const GeneratorContext& ctx, const PeterWeylData& pw);
Report epsilon_report(const GeneratorContext& ctx, const PeterWeylData& pw, double tol,
                      std::uint64_t seed = 0xE0);

// Adjoint representation C(a) Lambda(b) = sum Lambda(a_(1) b S~(a_(2))) on
// the orthonormal frame.
Matrix adjoint_rep(const GeneratorContext& ctx, const PeterWeylData& pw, const Element& a);
Report adjoint_rep_report(const GeneratorContext& ctx, const PeterWeylData& pw, double tol);

// Tracial-case map Q0(x) = J R(x*) J into the commutant of pi(A), with R
// the antipode on regular images and J the modular conjugation.  It is
// unital, multiplicative and coincides with conjugation by the antipode
// unitary; q0_report checks all three.  Throws for non-tracial input.
Matrix q0_map(const GeneratorContext& ctx, const Element& a);
Report q0_report(const GeneratorContext& ctx, double tol);

// phi_z on coefficients.  Decomposed case: evaluated inside A; analytic
// case: evaluated through the orthogonality relations.  Returns the matrix
// of values phi_z(u^a_{lj}) per block.
std::vector<Matrix> phi_z(const GeneratorContext* ctx, const PeterWeylData& pw, Complex z);
Report phi_z_report(const GeneratorContext& ctx, const PeterWeylData& pw, double tol);

// Analytic SU_q(2) data for spins 0, 1/2, ..., max_spin:
// F = diag(q^{-2l}, q^{-2l+2}, ..., q^{2l}).
PeterWeylData suq2_data(double q, double max_spin);

// q-integer [m]_q = (q^{-m} - q^m) / (q^{-1} - q).
double q_integer(int m, double q);

struct GapRow {
    std::string label;
    Eigen::Index n = 0;
    double d = 0.0;
    double gap = 0.0;  // n / d in (0, 1]
};
std::vector<GapRow> coamenability_gap_report(const PeterWeylData& pw);

}  // namespace aqg
