#pragma once

// Unitary generators of non-degenerate *-representations.
//
// A unitary U on H (x) K is a corepresentation of the dual (with the
// opposite coproduct) when (Dhat_op (x) i) U = U_13 U_23, equivalently
// What_12^* U_23 What_12 = U_13 U_23.  Every non-degenerate
// *-representation phi of A has a unique such generator, assembled here
// from
//     U (Lambda(a) (x) v) = sum Lambda(a_(2)) (x) phi(a_(1)) v,
// and conversely every corepresentation U induces the representation
//     pi_U(a) = (omega_{Lambda(a), Lambda(c)} (x) i) U
// with c the support companion.  The two constructions are mutually
// inverse; the report functions verify every identity numerically.

#include <cstdint>

#include "aqg/dual.hpp"
#include "aqg/gns.hpp"
#include "aqg/staralgebra.hpp"

namespace aqg {

struct Representation {
    Eigen::Index dim = 0;        // dim K
    std::vector<Matrix> images;  // images of the coordinate basis

    Matrix apply(const Element& a) const;
};

struct Generator {
    Matrix u;  // unitary on H (x) K
};

// Shared context: dual, GNS frame, multiplicative unitary, representation
// images and the block decomposition of the regular representation.
struct GeneratorContext {
    QuantumGroup q;
    QuantumGroup dual;
    GnsSpace gns;
    MultiplicativeUnitary mu;
    std::vector<Matrix> pi;      // left regular images
    std::vector<Matrix> pihat;   // dual regular images
    Element companion;           // c with c^ the dual unit
    StarAlgebraDecomposition regular_blocks;
};

GeneratorContext make_generator_context(const QuantumGroup& q);

// Representations.
Representation regular_representation(const GeneratorContext& ctx);
Representation counit_representation(const QuantumGroup& q);
Representation block_representation(const GeneratorContext& ctx, Eigen::Index block);
Representation direct_sum(const Representation& a, const Representation& b);
// Random direct sum of irreducible blocks with multiplicities <= 3,
// conjugated by a Haar-random unitary.
Representation random_representation(const GeneratorContext& ctx, std::uint64_t seed);
// Linearity/multiplicativity/star/unitality residual.
double representation_residual(const QuantumGroup& q, const Representation& rep);

// The functional a -> Q(a) on the dual coordinates: Q(a)[pihat(b^)] =
// phi(S^{-1}(a) b).
Covector q_functional(const GeneratorContext& ctx, const Element& a);
Report q_functional_report(const GeneratorContext& ctx, double tol);

// Generator of a representation; throws Error{verification} for degenerate
// (non-unital) input.
Generator generator_of_rep(const GeneratorContext& ctx, const Representation& rep);

// Representation induced by a corepresentation via the Q-map slices.
Representation rep_of_generator(const GeneratorContext& ctx, const Generator& gen);

// Corepresentation and exchange-relation residuals, computed blockwise in a
// unitarily equivalent form (validated against the literal route in tests).
struct CorepResiduals {
    double corepresentation = 0.0;  // What_12^* U_23 What_12 = U_13 U_23
    double exchange = 0.0;          // What_12 U_13 = U_23 What_12 U_23^*
};
CorepResiduals corep_residuals(const GeneratorContext& ctx, const Generator& gen,
                               Eigen::Index rep_dim);
CorepResiduals corep_residuals_literal(const GeneratorContext& ctx, const Generator& gen,
                                       Eigen::Index rep_dim);

// Intertwining residual of U (pihat(b^) (x) phi(a)) = sum pihat(b_k^) (x) phi(a_k).
double intertwining_residual(const GeneratorContext& ctx, const Representation& rep,
                             const Generator& gen);

// Slice identity residual over all basis pairs (a, b):
// (omega_{Lambda(a),Lambda(b)} (x) i) U = phi((i (x) phi_haar)((1 (x) b*) Delta(a))).
double slice_identity_residual(const GeneratorContext& ctx, const Representation& rep,
                               const Generator& gen);

// Action alpha(x) = U^*(1 (x) x)U on B(K).
Matrix action_alpha(const Generator& gen, const Matrix& x, Eigen::Index rep_dim);
// alpha on the matrix unit E_rs without forming 1 (x) x.
Matrix action_alpha_unit(const Generator& gen, Eigen::Index r, Eigen::Index s,
                         Eigen::Index rep_dim);
// Residual of (i (x) alpha) alpha = (Dhat_op (x) i) alpha over a basis of B(K).
double action_property_residual(const GeneratorContext& ctx, const Generator& gen,
                                Eigen::Index rep_dim);

// Orthonormal basis of the fixed-point space {x : alpha(x) = 1 (x) x}.
std::vector<Matrix> fixed_points(const Generator& gen, Eigen::Index rep_dim);

// Right-invariant mean on the dual with the opposite coproduct: the dual
// Haar state in dual coordinates.
Covector invariant_mean(const GeneratorContext& ctx);
Report invariant_mean_report(const GeneratorContext& ctx, double tol);

// Conditional expectation onto the fixed points, as a matrix on vectorised
// B(K): column vec(E(E_rs)).
Matrix conditional_expectation(const GeneratorContext& ctx, const Generator& gen,
                               Eigen::Index rep_dim);
Report conditional_expectation_report(const GeneratorContext& ctx, const Representation& rep,
                                      double tol, std::uint64_t seed = 0xE);

}  // namespace aqg
